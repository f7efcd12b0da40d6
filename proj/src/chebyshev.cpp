#include "chebmax/chebyshev.hpp"

#include <cmath>
#include <string>

#include "chebmax/error.hpp"

namespace chebmax {

namespace {

void check_args(std::int64_t k, double x) {
  if (k < 0 || k > kMaxChebyshevDegree)
    throw Error(Errc::domain, "Chebyshev degree must lie in [0, 1e6], got " + std::to_string(k));
  if (!(std::abs(x) <= 1.0))
    throw Error(Errc::domain, "Chebyshev argument must satisfy |x| <= 1");
}

}  // namespace

CoefficientList::CoefficientList(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(Errc::domain, "coefficient list must be non-empty");
  for (double c : coeffs_)
    if (!std::isfinite(c)) throw Error(Errc::domain, "coefficients must be finite");
}

double cheb_t(std::int64_t k, double x) {
  check_args(k, x);
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (std::int64_t n = 1; n < k; ++n) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double cheb_t_trig(std::int64_t k, double x) {
  check_args(k, x);
  return std::cos(static_cast<double>(k) * std::acos(x));
}

double clenshaw_sum(const CoefficientList& c, double x) {
  if (!(std::abs(x) <= 1.0))
    throw Error(Errc::domain, "Chebyshev argument must satisfy |x| <= 1");
  const auto coeffs = c.coeffs();
  // b_k = c_k + 2x b_{k+1} - b_{k+2}; sum = c_0 + x b_1 - b_2
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t k = coeffs.size() - 1; k >= 1; --k) {
    const double b0 = coeffs[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coeffs[0] + x * b1 - b2;
}

}  // namespace chebmax
