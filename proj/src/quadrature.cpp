#include "chebmax/quadrature.hpp"

#include <cmath>

#include "chebmax/error.hpp"

namespace chebmax {

namespace {

// Panels are always split this many times before the acceptance test runs, so
// that a smooth peak cannot hide between the first five samples.
constexpr int kMinDepth = 4;

void check_integrand_args(double t, double x) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(Errc::domain, "integration variable must lie in [0, 1]");
  if (!(x > -1.0 && x <= 1.0)) throw Error(Errc::domain, "x must lie in (-1, 1]");
}

// t^2 + 2xt + 1 written as (t+x)^2 + (1-x)(1+x); both pieces are >= 0.
double denominator(double t, double x) {
  const double s = t + x;
  return s * s + (1.0 - x) * (1.0 + x);
}

class AdaptiveSimpson {
 public:
  explicit AdaptiveSimpson(const std::function<double(double)>& g) : g_(g) {}

  // The coarse estimate is recomputed from this panel's own width rather than
  // inherited from the parent: the rounded midpoint makes the two widths
  // differ by up to an ulp, which would leave an f * ulp(t) floor on |delta|.
  double panel(double a, double b, double fa, double fm, double fb, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double h = b - a;
    const double whole = h / 6.0 * (fa + 4.0 * fm + fb);
    const double left = h / 12.0 * (fa + 4.0 * flm + fm);
    const double right = h / 12.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth >= kMinDepth && std::abs(delta) <= 15.0 * tol) {
      if (++panels_ > kQuadMaxPanels)
        throw Error(Errc::tolerance_unreachable, "quadrature exceeded 1e6 panels");
      error_ += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    if (depth + 1 > kQuadMaxDepth)
      throw Error(Errc::tolerance_unreachable, "quadrature exceeded recursion depth 60");
    return panel(a, m, fa, flm, fm, 0.5 * tol, depth + 1) +
           panel(m, b, fm, frm, fb, 0.5 * tol, depth + 1);
  }

  double eval(double t) const {
    const double v = g_(t);
    if (!std::isfinite(v)) throw Error(Errc::domain, "integrand is not finite");
    return v;
  }

  [[nodiscard]] std::int64_t panels() const noexcept { return panels_; }
  [[nodiscard]] double error() const noexcept { return error_; }

 private:
  const std::function<double(double)>& g_;
  std::int64_t panels_ = 0;
  double error_ = 0.0;
};

EvalResult scaled_integral(double (*integrand)(double, double), const EvalPoint& p,
                           Tolerance tol) {
  const double x = p.x();
  const double r = p.r();
  const double r2 = r * r;
  const QuadResult q =
      integrate([x, integrand](double t) { return integrand(t, x); }, 0.0, r, tol.scaled(r2));
  return {.value = q.value / r2,
          .error_bound = q.error_estimate / r2,
          .route = Route::quadrature,
          .work = static_cast<std::uint64_t>(q.panels)};
}

}  // namespace

double integrand_f(double t, double x) {
  check_integrand_args(t, x);
  return t * t * (t + x) / denominator(t, x);
}

double integrand_dfdx(double t, double x) {
  check_integrand_args(t, x);
  const double d = denominator(t, x);
  return t * t * (1.0 - t) * (1.0 + t) / (d * d);
}

QuadResult integrate(const std::function<double(double)>& g, double a, double b, Tolerance tol) {
  if (!(std::isfinite(a) && std::isfinite(b) && a <= b))
    throw Error(Errc::domain, "integration bounds must be finite with a <= b");
  if (a == b) return {.value = 0.0, .error_estimate = 0.0, .panels = 1};
  AdaptiveSimpson simpson(g);
  const double fa = simpson.eval(a);
  const double fb = simpson.eval(b);
  const double fm = simpson.eval(0.5 * (a + b));
  const double value = simpson.panel(a, b, fa, fm, fb, tol.abs(), 0);
  return {.value = value, .error_estimate = simpson.error(), .panels = simpson.panels()};
}

EvalResult f_quad(const EvalPoint& p, Tolerance tol) {
  return scaled_integral(&integrand_f, p, tol);
}

EvalResult dfdx_quad(const EvalPoint& p, Tolerance tol) {
  return scaled_integral(&integrand_dfdx, p, tol);
}

}  // namespace chebmax
