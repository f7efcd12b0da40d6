#include "chebmax/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chebmax/error.hpp"

namespace chebmax {

namespace {

void check_series_radius(double r) {
  if (r > kSeriesMaxRadius)
    throw Error(Errc::unsupported_parameters,
                "series route requires r <= 1 - 1e-9 (no tail bound at r = 1); use the "
                "quadrature or closed-form route");
}

}  // namespace

double series_tail_bound(double r, std::int64_t terms) {
  return std::pow(r, static_cast<double>(terms + 1)) /
         (static_cast<double>(terms + 3) * (1.0 - r));
}

std::int64_t series_terms_needed(double r, Tolerance tol) {
  check_series_radius(r);
  const double target = std::clamp(tol.abs(), kSeriesTolFloor, kSeriesTolCeiling);
  const double one_minus_r = 1.0 - r;
  std::int64_t n = 0;
  double power = r;  // r^{n+1}
  while (power / (static_cast<double>(n + 3) * one_minus_r) > target) {
    if (++n > kSeriesMaxTerms)
      throw Error(Errc::tolerance_unreachable,
                  "series route needs more than 1e7 terms at r = " + std::to_string(r));
    power *= r;
  }
  return n;
}

double f_partial_sum(const EvalPoint& p, std::int64_t terms) {
  const double x = p.x();
  const double r = p.r();
  double sum = 0.0;
  double t_prev = 1.0;  // T_{k-1}
  double t_cur = x;     // T_k
  double signed_power = r;  // (-1)^{k+1} r^k
  for (std::int64_t k = 1; k <= terms; ++k) {
    sum += signed_power * t_cur / static_cast<double>(k + 2);
    const double t_next = 2.0 * x * t_cur - t_prev;
    t_prev = t_cur;
    t_cur = t_next;
    signed_power *= -r;
  }
  return sum;
}

EvalResult f_series(const EvalPoint& p, Tolerance tol) {
  const std::int64_t n = series_terms_needed(p.r(), tol);
  return {.value = f_partial_sum(p, n),
          .error_bound = series_tail_bound(p.r(), n),
          .route = Route::series,
          .work = static_cast<std::uint64_t>(n)};
}

EvalResult fourier_series(const AnglePoint& a, Tolerance tol) {
  const double r = a.r();
  const std::int64_t n = series_terms_needed(r, tol);
  double sum = 0.0;
  double signed_power = r;
  for (std::int64_t k = 1; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    sum += signed_power * std::cos(kd * a.phi()) / (kd + 2.0);
    signed_power *= -r;
  }
  return {.value = sum,
          .error_bound = series_tail_bound(r, n),
          .route = Route::series,
          .work = static_cast<std::uint64_t>(n)};
}

double generating_lhs(const EvalPoint& p) {
  const double x = p.x();
  const double r = p.r();
  return r * (r + x) / (r * r + 2.0 * x * r + 1.0);
}

double generating_partial_sum(const EvalPoint& p, std::int64_t terms) {
  const double x = p.x();
  const double r = p.r();
  double sum = 0.0;
  double t_prev = 1.0;
  double t_cur = x;
  double signed_power = r;
  for (std::int64_t k = 1; k <= terms; ++k) {
    sum += signed_power * t_cur;
    const double t_next = 2.0 * x * t_cur - t_prev;
    t_prev = t_cur;
    t_cur = t_next;
    signed_power *= -r;
  }
  return sum;
}

}  // namespace chebmax
