#include "chebmax/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chebmax/error.hpp"
#include "chebmax/series.hpp"

namespace chebmax {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_radius(double r) {
  if (!(r > 0.0 && r <= 1.0)) throw Error(Errc::domain, "r must lie in (0, 1]");
}

}  // namespace

double f_at_one(double r) {
  check_radius(r);
  if (r < kSmallRadius) {
    // r/3 - r^2/4 + r^3/5 - r^4/6 + r^5/7, remainder below r^6/8
    return r * (1.0 / 3.0 + r * (-1.0 / 4.0 + r * (1.0 / 5.0 + r * (-1.0 / 6.0 + r / 7.0))));
  }
  return ((std::log1p(r) - r) + 0.5 * r * r) / (r * r);
}

double f_at_one_error_bound(double r) {
  check_radius(r);
  if (r < kSmallRadius) return std::pow(r, 6) / 8.0 + 4.0 * kEps * r;
  return 10.0 * kEps * (std::log1p(r) + r + 0.5 * r * r) / (r * r);
}

ClosedFormParts closed_form_parts(const EvalPoint& p) {
  const double x = p.x();
  const double r = p.r();
  ClosedFormParts parts;
  parts.w = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
  parts.poly_part = 0.5 * r * r - x * r;
  // log(r^2 + 2xr + 1) via log1p keeps full relative accuracy as r -> 0.
  parts.log_part = (x * x - 0.5) * std::log1p(r * (r + 2.0 * x));
  parts.atan_part = 2.0 * x * parts.w * std::atan(parts.w * r / (1.0 + x * r));
  return parts;
}

EvalResult closed_form_result(const ClosedFormParts& parts, double r) {
  const double r2 = r * r;
  const double magnitude =
      std::abs(parts.poly_part) + std::abs(parts.log_part) + std::abs(parts.atan_part);
  return {.value = parts.sum() / r2,
          .error_bound = 10.0 * kEps * magnitude / r2,
          .route = Route::closed_form,
          .work = 0,
          .rigorous = false};
}

EvalResult f_closed(const EvalPoint& p) {
  const double r = p.r();
  if (p.x() == 1.0) {
    return {.value = f_at_one(r),
            .error_bound = f_at_one_error_bound(r),
            .route = Route::closed_form,
            .work = 0,
            .rigorous = false};
  }
  if (r < kSmallRadius) return f_series(p, Tolerance(kSeriesTolFloor));
  return closed_form_result(closed_form_parts(p), r);
}

double margin(const AnglePoint& a) {
  if (!(a.phi() > 0.0)) throw Error(Errc::domain, "margin requires phi in (0, pi)");
  return f_at_one(a.r()) - f_closed(a.to_eval_point()).value;
}

}  // namespace chebmax
