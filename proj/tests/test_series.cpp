#include <doctest.h>

#include <cmath>
#include <numbers>

#include "chebmax/analytic.hpp"
#include "chebmax/error.hpp"
#include "chebmax/series.hpp"
#include "oracles.hpp"

using namespace chebmax;

TEST_CASE("EvalPoint and AnglePoint validation") {
  CHECK_THROWS_AS(EvalPoint(-1.0, 0.5), Error);
  CHECK_THROWS_AS(EvalPoint(1.0000001, 0.5), Error);
  CHECK_THROWS_AS(EvalPoint(0.0, 0.0), Error);
  CHECK_THROWS_AS(EvalPoint(0.0, 1.5), Error);
  CHECK_THROWS_AS(EvalPoint(std::nan(""), 0.5), Error);
  CHECK_NOTHROW(EvalPoint(1.0, 1.0));
  CHECK_THROWS_AS(AnglePoint(-0.1, 0.5), Error);
  CHECK_THROWS_AS(AnglePoint(std::numbers::pi, 0.5), Error);
  CHECK_NOTHROW(AnglePoint(0.0, 1.0));
  CHECK_THROWS_AS(Tolerance(0.0), Error);
  CHECK_THROWS_AS(Tolerance(-1e-3), Error);
  CHECK_THROWS_AS(Tolerance{INFINITY}, Error);
}

TEST_CASE("f_series: anchored values") {
  const EvalResult one = f_series(EvalPoint(1.0, 0.5), Tolerance(1e-12));
  CHECK(one.route == Route::series);
  CHECK(std::abs(one.value - oracle::kF_1_half) <= 1e-12);
  CHECK(one.error_bound <= 1e-12);
  CHECK(one.work > 0);

  const EvalResult zero = f_series(EvalPoint(0.0, 0.5), Tolerance(1e-12));
  CHECK(std::abs(zero.value - oracle::kF_0_half) <= 1e-12);

  const EvalResult mid = f_series(EvalPoint(0.3, 0.7), Tolerance(1e-12));
  CHECK(std::abs(mid.value - oracle::kF_03_07) <= mid.error_bound + 1e-14);
}

TEST_CASE("f_series: tiny r reduces to the leading term") {
  const double r = 1e-8;
  for (double x : {-0.9, -0.2, 0.0, 0.4, 1.0}) {
    const EvalResult res = f_series(EvalPoint(x, r), Tolerance(1e-20));
    CHECK(std::abs(res.value - r * x / 3.0) <= r * r / 4.0);
  }
  // a requested tolerance below the floor is clipped, not rejected
  const EvalResult clipped = f_series(EvalPoint(0.5, r), Tolerance(1e-20));
  const EvalResult floor = f_series(EvalPoint(0.5, r), Tolerance(kSeriesTolFloor));
  CHECK(clipped.value == floor.value);
  CHECK(clipped.work == floor.work);
}

TEST_CASE("f_series: term count follows the tail bound") {
  for (double r : {0.1, 0.5, 0.9, 0.99}) {
    for (double tol : {1e-6, 1e-10, 1e-14}) {
      const std::int64_t n = series_terms_needed(r, Tolerance(tol));
      CHECK(series_tail_bound(r, n) <= tol);
      if (n > 0) CHECK(series_tail_bound(r, n - 1) > tol);
    }
  }
}

TEST_CASE("f_series: errors") {
  CHECK_THROWS_AS((void)f_series(EvalPoint(0.5, 1.0), Tolerance(1e-12)), Error);
  try {
    (void)f_series(EvalPoint(0.5, 1.0), Tolerance(1e-12));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported_parameters);
  }
  try {
    (void)f_series(EvalPoint(0.5, 1.0 - 1e-9), Tolerance(1e-15));
    FAIL("expected ToleranceUnreachable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::tolerance_unreachable);
  }
}

TEST_CASE("f_series agrees with brute-force long double summation") {
  for (double x : {-0.95, -0.3, 0.0, 0.6, 1.0}) {
    for (double r : {0.05, 0.4, 0.8, 0.95}) {
      const EvalResult res = f_series(EvalPoint(x, r), Tolerance(1e-13));
      const long double ref = oracle::brute_series(x, r, 3000);
      CHECK(std::abs(static_cast<long double>(res.value) - ref) <= res.error_bound + 1e-14);
    }
  }
}

TEST_CASE("fourier_series matches f_series at x = cos(phi)") {
  const Tolerance tol(1e-12);
  auto check_pair = [&](double phi, double r, double x) {
    const EvalResult a = fourier_series(AnglePoint(phi, r), tol);
    const EvalResult b = f_series(EvalPoint(x, r), tol);
    CHECK(std::abs(a.value - b.value) <= 2e-12);
  };
  check_pair(0.0, 0.5, 1.0);
  check_pair(std::numbers::pi / 2, 0.5, 0.0);
  check_pair(1.0, 0.9, std::cos(1.0));
  const EvalResult at1 = fourier_series(AnglePoint(1.0, 0.9), tol);
  CHECK(std::abs(at1.value - oracle::kF_cos1_09) <= at1.error_bound + 1e-13);
}

TEST_CASE("fourier/Chebyshev equivalence on a 50 x 20 grid") {
  const Tolerance tol(1e-12);
  int failures = 0;
  for (int i = 0; i < 50; ++i) {
    const double phi = 0.01 + (std::numbers::pi - 0.02) * i / 49.0;
    for (int j = 0; j < 20; ++j) {
      const double r = 0.05 + 0.94 * j / 19.0;
      const EvalResult a = fourier_series(AnglePoint(phi, r), tol);
      const EvalResult b = f_series(EvalPoint(std::cos(phi), r), tol);
      if (!(std::abs(a.value - b.value) <= a.error_bound + b.error_bound)) ++failures;
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("generating_lhs: direct values and partial sums") {
  CHECK(generating_lhs(EvalPoint(1.0, 0.5)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(generating_lhs(EvalPoint(0.0, 1.0)) == 0.5);
  const EvalPoint p(0.3, 0.7);
  for (std::int64_t n : {5, 20, 40, 80}) {
    const double residual = std::abs(generating_lhs(p) - generating_partial_sum(p, n));
    CHECK(residual <= std::pow(0.7, n + 1) / 0.3 + 1e-14);
  }
}

TEST_CASE("generating-function identity on a grid (r <= 0.95)") {
  for (double x = -0.9; x <= 1.0; x += 0.1) {
    for (double r = 0.05; r <= 0.95 + 1e-12; r += 0.1) {
      const EvalPoint p(std::min(x, 1.0), r);
      for (std::int64_t n : {5, 20, 80}) {
        const double residual = std::abs(generating_lhs(p) - generating_partial_sum(p, n));
        CHECK(residual <= std::pow(r, n + 1) / (1.0 - r) + 1e-13);
      }
    }
  }
}

TEST_CASE("partial sums at x = 1 bracket the limit") {
  for (double r : {0.05, 0.3, 0.6, 0.9, 0.99}) {
    const EvalPoint p(1.0, r);
    const double limit = f_at_one(r);
    for (std::int64_t n = 1; n < 60; ++n) {
      const double lo = f_partial_sum(p, n);
      const double hi = f_partial_sum(p, n + 1);
      // terms below rounding level cannot be resolved
      if (std::pow(r, n + 1) / (n + 3) < 1e-13) break;
      CHECK((lo - limit) * (hi - limit) < 0.0);
    }
  }
}

TEST_CASE("tail bound is sound against a tighter evaluation") {
  for (double x : {-0.7, 0.0, 0.5, 1.0}) {
    for (double r : {0.2, 0.7, 0.99}) {
      const EvalPoint p(x, r);
      const EvalResult coarse = f_series(p, Tolerance(1e-8));
      const EvalResult fine = f_series(p, Tolerance(1e-11));
      CHECK(std::abs(coarse.value - fine.value) <= coarse.error_bound);
    }
  }
}

TEST_CASE("tail bound covers the distance to the closed form on a 20 x 20 grid") {
  int failures = 0;
  for (int i = 0; i < 20; ++i) {
    const double x = i == 19 ? 1.0 : -0.99 + 1.99 * i / 19.0;
    for (int j = 0; j < 20; ++j) {
      const double r = 0.01 + 0.98 * j / 19.0;
      const EvalPoint p(x, r);
      const EvalResult s = f_series(p, Tolerance(1e-10));
      const EvalResult reference = f_series(p, Tolerance(1e-13));
      const EvalResult closed = f_closed(p);
      if (!(std::abs(s.value - reference.value) <= s.error_bound)) ++failures;
      if (!(std::abs(s.value - closed.value) <= s.error_bound + closed.error_bound)) ++failures;
    }
  }
  CHECK(failures == 0);
}
