#include <doctest.h>

#include <cmath>

#include "chebmax/error.hpp"
#include "chebmax/quadrature.hpp"
#include "chebmax/series.hpp"
#include "oracles.hpp"

using namespace chebmax;

TEST_CASE("integrand_f: direct values") {
  for (double x : {-0.9, 0.0, 0.7, 1.0}) CHECK(integrand_f(0.0, x) == 0.0);
  CHECK(integrand_f(1.0, 0.0) == 0.5);
  CHECK(integrand_f(0.5, 0.5) == doctest::Approx(1.0 / 7.0).epsilon(1e-15));
  CHECK_THROWS_AS((void)integrand_f(1.1, 0.0), Error);
  CHECK_THROWS_AS((void)integrand_f(0.5, -1.0), Error);
}

TEST_CASE("integrand_dfdx: direct values and sign") {
  for (double x : {-0.99, 0.0, 1.0}) {
    CHECK(integrand_dfdx(0.0, x) == 0.0);
    CHECK(integrand_dfdx(1.0, x) == 0.0);
  }
  CHECK(integrand_dfdx(0.5, 0.0) == doctest::Approx(0.12).epsilon(1e-15));
  CHECK(integrand_dfdx(0.5, 0.5) == doctest::Approx(0.0612244897959183673).epsilon(1e-15));
  for (double x = -0.999; x <= 1.0; x += 0.037)
    for (double t = 0.01; t < 1.0; t += 0.01) {
      CHECK(integrand_dfdx(t, x) > 0.0);
      CHECK(std::isfinite(integrand_f(t, x)));
    }
}

TEST_CASE("integrate: exact and known integrals") {
  const Tolerance tol(1e-12);
  CHECK(integrate([](double) { return 1.0; }, 0.0, 1.0, tol).value == 1.0);
  const QuadResult sq = integrate([](double t) { return t * t; }, 0.0, 0.5, tol);
  CHECK(std::abs(sq.value - 1.0 / 24.0) <= 1e-12);
  const QuadResult log_case =
      integrate([](double t) { return t * t * t / (t * t + 1.0); }, 0.0, 1.0, tol);
  CHECK(std::abs(log_case.value - (0.5 - std::log(2.0) / 2.0)) <= 1e-12);
  CHECK(log_case.error_estimate <= 1e-12);
  CHECK(log_case.panels >= 1);
  CHECK(integrate([](double) { return 3.0; }, 0.2, 0.2, tol).value == 0.0);
}

TEST_CASE("integrate: cubic polynomials are integrated exactly") {
  const Tolerance tol(1e-10);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      auto poly = [a, b](double t) { return 1.0 + a * t + b * t * t - 0.5 * t * t * t; };
      const double exact = 1.0 + a / 2.0 + b / 3.0 - 0.125;
      CHECK(std::abs(integrate(poly, 0.0, 1.0, tol).value - exact) <= 1e-14);
    }
}

TEST_CASE("integrate: error estimate stays within tolerance and is deterministic") {
  auto g = [](double t) { return std::exp(-t) * std::sin(5.0 * t); };
  for (double tol : {1e-6, 1e-9, 1e-12}) {
    const QuadResult a = integrate(g, 0.0, 2.0, Tolerance(tol));
    const QuadResult b = integrate(g, 0.0, 2.0, Tolerance(tol));
    CHECK(a.error_estimate <= tol);
    CHECK(a.value == b.value);
    CHECK(a.panels == b.panels);
    const long double ref =
        oracle::gauss_legendre([](long double t) { return std::exp(-t) * std::sin(5.0L * t); },
                               0.0L, 2.0L, 200);
    CHECK(std::abs(static_cast<long double>(a.value) - ref) <= tol);
  }
}

TEST_CASE("integrate: failure modes") {
  CHECK_THROWS_AS((void)integrate([](double t) { return t; }, 1.0, 0.0, Tolerance(1e-8)), Error);
  // a kink on a long interval needs ~80 bisections for 1e-12; the depth cap stops it at 60
  try {
    (void)integrate([](double t) { return std::abs(t - 0.3); }, 0.0, 1048576.0,
                    Tolerance(1e-12));
    FAIL("expected ToleranceUnreachable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::tolerance_unreachable);
  }
  CHECK_THROWS_AS(
      (void)integrate([](double t) { return 1.0 / (t - 0.5); }, 0.0, 1.0, Tolerance(1e-8)),
      Error);
}

TEST_CASE("f_quad: anchored values") {
  const Tolerance tol(1e-12);
  const EvalResult a = f_quad(EvalPoint(0.0, 1.0), tol);
  CHECK(a.route == Route::quadrature);
  CHECK(std::abs(a.value - oracle::kF_0_1) <= 1e-12);
  CHECK(std::abs(f_quad(EvalPoint(1.0, 1.0), tol).value - oracle::kF_1_1) <= 1e-12);
  const EvalResult mid = f_quad(EvalPoint(0.3, 0.7), tol);
  const EvalResult ser = f_series(EvalPoint(0.3, 0.7), tol);
  CHECK(std::abs(mid.value - ser.value) <= mid.error_bound + ser.error_bound + 1e-14);
  CHECK(std::abs(mid.value - oracle::kF_03_07) <= 1e-12);
  CHECK(std::abs(f_quad(EvalPoint(-0.99, 1.0), tol).value - oracle::kF_m099_1) <= 1e-12);
}

TEST_CASE("dfdx_quad: anchored values and positivity") {
  const Tolerance tol(1e-12);
  CHECK(std::abs(dfdx_quad(EvalPoint(0.0, 1.0), tol).value - oracle::kDfdx_0_1) <= 1e-12);
  CHECK(std::abs(dfdx_quad(EvalPoint(0.3, 0.7), tol).value - oracle::kDfdx_03_07) <= 1e-12);
  for (double x : {0.0, 0.5, 1.0}) {
    const EvalResult small = dfdx_quad(EvalPoint(x, 1e-3), tol);
    CHECK(small.value > 0.0);
    CHECK(small.value <= 1e-3 / 3.0);
  }
  int nonpositive = 0;
  for (int i = 0; i < 40; ++i) {
    const double x = -0.99 + (0.999 + 0.99) * i / 39.0;
    for (int j = 0; j < 20; ++j) {
      const double r = 0.01 + 0.99 * j / 19.0;
      if (!(dfdx_quad(EvalPoint(x, r), tol).value > 0.0)) ++nonpositive;
    }
  }
  CHECK(nonpositive == 0);
}

TEST_CASE("f_quad agrees with a Gauss-Legendre reference") {
  for (double x : {-0.999, -0.5, 0.1, 0.9}) {
    for (double r : {0.01, 0.3, 1.0}) {
      const EvalResult q = f_quad(EvalPoint(x, r), Tolerance(1e-12));
      const long double ref = oracle::f_reference(x, r);
      CHECK(std::abs(static_cast<long double>(q.value) - ref) <= q.error_bound + 1e-13);
    }
  }
}
