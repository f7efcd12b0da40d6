#include "chebmax/types.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "chebmax/error.hpp"

namespace chebmax {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::domain: return "domain error";
    case Errc::unsupported_parameters: return "unsupported parameters";
    case Errc::tolerance_unreachable: return "tolerance unreachable";
  }
  return "unknown error";
}

namespace {

[[noreturn]] void domain_fail(const std::string& what, double value) {
  std::ostringstream os;
  os.precision(17);
  os << what << " (got " << value << ")";
  throw Error(Errc::domain, os.str());
}

void check_radius(double r) {
  if (!(r > 0.0 && r <= 1.0)) domain_fail("r must lie in (0, 1]", r);
}

}  // namespace

Tolerance::Tolerance(double abs) : abs_(abs) {
  if (!(std::isfinite(abs) && abs > 0.0)) domain_fail("tolerance must be finite and > 0", abs);
}

EvalPoint::EvalPoint(double x, double r) : x_(x), r_(r) {
  if (!(x > -1.0 && x <= 1.0)) domain_fail("x must lie in (-1, 1]", x);
  check_radius(r);
}

AnglePoint::AnglePoint(double phi, double r) : phi_(phi), r_(r) {
  if (!(phi >= 0.0 && phi < std::numbers::pi)) domain_fail("phi must lie in [0, pi)", phi);
  check_radius(r);
}

EvalPoint AnglePoint::to_eval_point() const {
  const double x = std::cos(phi_);
  if (x <= -1.0) domain_fail("cos(phi) rounds to -1; x must lie in (-1, 1]", phi_);
  return {x, r_};
}

std::string_view to_string(Route route) noexcept {
  switch (route) {
    case Route::series: return "series";
    case Route::quadrature: return "quadrature";
    case Route::closed_form: return "closed_form";
  }
  return "unknown";
}

}  // namespace chebmax
