#pragma once

#include "chebmax/types.hpp"

namespace chebmax {

/// Below this radius the closed forms cancel catastrophically and are replaced
/// by series evaluations.
inline constexpr double kSmallRadius = 1e-3;

/// The three bracketed pieces of r^2 f(x, r), kept separate so callers can
/// budget rounding error (and tests can corrupt a single piece).
struct ClosedFormParts {
  double poly_part = 0.0;  // r^2/2 - x r
  double log_part = 0.0;   // (x^2 - 1/2) log(r^2 + 2xr + 1)
  double atan_part = 0.0;  // 2 x w atan(w r / (1 + x r))
  double w = 0.0;          // sqrt(1 - x^2)

  [[nodiscard]] double sum() const noexcept { return poly_part + log_part + atan_part; }
};

/// f(1, r) = (log(1+r) - r + r^2/2) / r^2. Uses the Taylor polynomial
/// r/3 - r^2/4 + r^3/5 - r^4/6 + r^5/7 for r < 1e-3.
[[nodiscard]] double f_at_one(double r);

/// Floating-point budget for f_at_one. Heuristic on the main branch,
/// the truncation remainder r^6/8 on the Taylor branch.
[[nodiscard]] double f_at_one_error_bound(double r);

[[nodiscard]] ClosedFormParts closed_form_parts(const EvalPoint& p);

/// Assembles an EvalResult from precomputed parts; the error budget is
/// 10 eps (|poly| + |log| + |atan|) / r^2.
[[nodiscard]] EvalResult closed_form_result(const ClosedFormParts& parts, double r);

/// f(x, r) by the antiderivative in closed form. Delegates to f_at_one at
/// x = 1 and to the series route for r < 1e-3. The reported bound is not
/// rigorous (EvalResult::rigorous == false) on the closed-form branch.
[[nodiscard]] EvalResult f_closed(const EvalPoint& p);

/// f(1, r) - f(cos phi, r). Positive for phi in (0, pi).
[[nodiscard]] double margin(const AnglePoint& a);

}  // namespace chebmax
