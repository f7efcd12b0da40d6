#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace chebmax {

inline constexpr std::int64_t kMaxChebyshevDegree = 1'000'000;

/// Non-empty list of finite coefficients c_0..c_N of a Chebyshev sum.
class CoefficientList {
 public:
  explicit CoefficientList(std::vector<double> coeffs);

  [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }

 private:
  std::vector<double> coeffs_;
};

/// T_k(x) by the ascending three-term recurrence.
[[nodiscard]] double cheb_t(std::int64_t k, double x);

/// cos(k arccos x). Test oracle for cheb_t only; loses accuracy near |x| = 1.
[[nodiscard]] double cheb_t_trig(std::int64_t k, double x);

/// sum_k c_k T_k(x) by Clenshaw's backward recurrence.
[[nodiscard]] double clenshaw_sum(const CoefficientList& c, double x);

}  // namespace chebmax
