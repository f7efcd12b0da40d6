#pragma once

#include <cstdint>
#include <functional>

#include "chebmax/types.hpp"

namespace chebmax {

inline constexpr int kQuadMaxDepth = 60;
inline constexpr std::int64_t kQuadMaxPanels = 1'000'000;

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t panels = 0;
};

/// t^2 (t+x) / (t^2 + 2xt + 1), the integrand of r^2 f(x, r) over [0, r].
[[nodiscard]] double integrand_f(double t, double x);

/// t^2 (1-t^2) / (t^2 + 2xt + 1)^2, the integrand of r^2 df/dx over [0, r].
[[nodiscard]] double integrand_dfdx(double t, double x);

/// Adaptive Simpson quadrature on [a, b].
///
/// Each panel is bisected until |S_fine - S_coarse| <= 15 tol_panel, with the
/// tolerance halved per split. Accepted panels contribute the Richardson
/// extrapolant S_fine + (S_fine - S_coarse)/15 and an error estimate
/// |S_fine - S_coarse|/15. The bisection tree is walked left to right, so the
/// result is a deterministic function of the inputs.
[[nodiscard]] QuadResult integrate(const std::function<double(double)>& g, double a, double b,
                                   Tolerance tol);

/// f(x, r) through its integral representation. r = 1 is admitted.
[[nodiscard]] EvalResult f_quad(const EvalPoint& p, Tolerance tol);

/// df/dx(x, r) through the differentiated integral. Strictly positive.
[[nodiscard]] EvalResult dfdx_quad(const EvalPoint& p, Tolerance tol);

}  // namespace chebmax
