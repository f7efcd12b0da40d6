#pragma once

#include <cstdint>
#include <string_view>

namespace chebmax {

/// Requested absolute accuracy. Must be finite and positive.
class Tolerance {
 public:
  explicit Tolerance(double abs);

  [[nodiscard]] double abs() const noexcept { return abs_; }
  [[nodiscard]] Tolerance scaled(double factor) const { return Tolerance(abs_ * factor); }

 private:
  double abs_;
};

/// A point (x, r) with r in (0, 1] and x in (-1, 1].
class EvalPoint {
 public:
  EvalPoint(double x, double r);

  [[nodiscard]] double x() const noexcept { return x_; }
  [[nodiscard]] double r() const noexcept { return r_; }

 private:
  double x_;
  double r_;
};

/// A point (phi, r) with phi in [0, pi) and r in (0, 1].
class AnglePoint {
 public:
  AnglePoint(double phi, double r);

  [[nodiscard]] double phi() const noexcept { return phi_; }
  [[nodiscard]] double r() const noexcept { return r_; }

  /// x = cos(phi). Throws if phi rounds so close to pi that cos(phi) == -1.
  [[nodiscard]] EvalPoint to_eval_point() const;

 private:
  double phi_;
  double r_;
};

enum class Route { series, quadrature, closed_form };

[[nodiscard]] std::string_view to_string(Route route) noexcept;

struct EvalResult {
  double value = 0.0;
  double error_bound = 0.0;
  Route route = Route::series;
  std::uint64_t work = 0;  // terms summed or panels used
  bool rigorous = true;    // false for the closed form's floating-point budget
};

}  // namespace chebmax
