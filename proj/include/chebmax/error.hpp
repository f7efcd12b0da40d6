#pragma once

#include <stdexcept>
#include <string>

namespace chebmax {

enum class Errc {
  domain,                  // argument outside the admissible parameter set
  unsupported_parameters,  // admissible point, but the requested route refuses it
  tolerance_unreachable,   // work limits hit before the tolerance was met
};

/// Single exception type for the library. The code drives CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[nodiscard]] const char* to_string(Errc code) noexcept;

}  // namespace chebmax
