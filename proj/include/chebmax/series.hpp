#pragma once

#include <cstdint>

#include "chebmax/types.hpp"

namespace chebmax {

/// Largest r the series route accepts; at r = 1 there is no elementary tail bound.
inline constexpr double kSeriesMaxRadius = 1.0 - 1e-9;
inline constexpr double kSeriesTolFloor = 1e-15;
inline constexpr double kSeriesTolCeiling = 1e-2;
inline constexpr std::int64_t kSeriesMaxTerms = 10'000'000;

/// r^{N+1} / ((N+3)(1-r)): bounds sum_{k>N} r^k/(k+2), hence the truncation
/// error of f since |T_k(x)| <= 1.
[[nodiscard]] double series_tail_bound(double r, std::int64_t terms);

/// Smallest N whose tail bound is <= tol (tol clamped to [floor, ceiling]).
[[nodiscard]] std::int64_t series_terms_needed(double r, Tolerance tol);

/// Partial sum sum_{k=1}^{N} (-1)^{k+1} r^k T_k(x)/(k+2), ascending k.
[[nodiscard]] double f_partial_sum(const EvalPoint& p, std::int64_t terms);

/// f(x, r) by truncated summation. Refuses r > 1 - 1e-9.
[[nodiscard]] EvalResult f_series(const EvalPoint& p, Tolerance tol);

/// sum (-1)^{k+1} r^k cos(k phi)/(k+2), the cosine-series form of f(cos phi, r).
[[nodiscard]] EvalResult fourier_series(const AnglePoint& a, Tolerance tol);

/// r(r+x)/(r^2+2xr+1) = sum_{k>=1} (-1)^{k+1} T_k(x) r^k.
[[nodiscard]] double generating_lhs(const EvalPoint& p);

/// Partial sum sum_{k=1}^{N} (-1)^{k+1} T_k(x) r^k of the generating series.
[[nodiscard]] double generating_partial_sum(const EvalPoint& p, std::int64_t terms);

}  // namespace chebmax
