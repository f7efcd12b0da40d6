#include <numbers>

#include <pybind11/chrono.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chebmax/analytic.hpp"
#include "chebmax/chebyshev.hpp"
#include "chebmax/error.hpp"
#include "chebmax/quadrature.hpp"
#include "chebmax/series.hpp"
#include "chebmax/verify.hpp"

namespace py = pybind11;
using namespace chebmax;

namespace {

ScanGrid make_grid(const std::string& kind, double var_min, double var_max,
                   std::int64_t var_count, double r_min, double r_max, std::int64_t r_count,
                   double inset) {
  VarKind k;
  if (kind == "x") {
    k = VarKind::x_grid;
  } else if (kind == "phi") {
    k = VarKind::phi_grid;
  } else {
    throw Error(Errc::domain, "grid kind must be 'x' or 'phi'");
  }
  return {k, var_min, var_max, var_count, r_min, r_max, r_count, inset};
}

}  // namespace

PYBIND11_MODULE(_chebmax, m) {
  m.doc() = "Alternating Chebyshev series f(x, r): evaluation routes and verification scans";

  static py::exception<Error> tolerance_error(m, "ToleranceUnreachable", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      if (e.code() == Errc::tolerance_unreachable) {
        py::set_error(tolerance_error, e.what());
      } else {
        py::set_error(PyExc_ValueError, e.what());
      }
    }
  });

  py::enum_<Route>(m, "Route")
      .value("series", Route::series)
      .value("quadrature", Route::quadrature)
      .value("closed_form", Route::closed_form);

  py::class_<EvalResult>(m, "EvalResult")
      .def_readonly("value", &EvalResult::value)
      .def_readonly("error_bound", &EvalResult::error_bound)
      .def_readonly("route", &EvalResult::route)
      .def_readonly("work", &EvalResult::work)
      .def_readonly("rigorous", &EvalResult::rigorous)
      .def("__repr__", [](const EvalResult& r) {
        return "EvalResult(value=" + std::to_string(r.value) +
               ", error_bound=" + std::to_string(r.error_bound) + ", route=" +
               std::string(to_string(r.route)) + ")";
      });

  py::class_<Violation>(m, "Violation")
      .def_readonly("var", &Violation::var)
      .def_readonly("r", &Violation::r)
      .def_readonly("observed", &Violation::observed)
      .def_readonly("bound", &Violation::bound)
      .def_readonly("check", &Violation::check);

  py::class_<Report>(m, "Report")
      .def_property_readonly("kind", [](const Report& r) { return std::string(to_string(r.kind)); })
      .def_readonly("points_checked", &Report::points_checked)
      .def_readonly("violations", &Report::violations)
      .def_readonly("min_margin", &Report::min_margin)
      .def_property_readonly("worst_point",
                             [](const Report& r) { return py::make_tuple(r.worst_var, r.worst_r); })
      .def_readonly("elapsed", &Report::elapsed)
      .def_property_readonly("passed", &Report::passed);

  m.def("cheb_t", &cheb_t, py::arg("k"), py::arg("x"));
  m.def(
      "clenshaw_sum",
      [](std::vector<double> c, double x) { return clenshaw_sum(CoefficientList(std::move(c)), x); },
      py::arg("coeffs"), py::arg("x"));

  m.def(
      "f_series", [](double x, double r, double tol) { return f_series({x, r}, Tolerance(tol)); },
      py::arg("x"), py::arg("r"), py::arg("tol") = 1e-12);
  m.def(
      "fourier_series",
      [](double phi, double r, double tol) { return fourier_series({phi, r}, Tolerance(tol)); },
      py::arg("phi"), py::arg("r"), py::arg("tol") = 1e-12);
  m.def(
      "generating_lhs", [](double x, double r) { return generating_lhs({x, r}); }, py::arg("x"),
      py::arg("r"));
  m.def(
      "f_quad", [](double x, double r, double tol) { return f_quad({x, r}, Tolerance(tol)); },
      py::arg("x"), py::arg("r"), py::arg("tol") = 1e-12);
  m.def(
      "dfdx_quad", [](double x, double r, double tol) { return dfdx_quad({x, r}, Tolerance(tol)); },
      py::arg("x"), py::arg("r"), py::arg("tol") = 1e-12);
  m.def(
      "f_closed", [](double x, double r) { return f_closed({x, r}); }, py::arg("x"), py::arg("r"));
  m.def("f_at_one", &f_at_one, py::arg("r"));
  m.def(
      "margin", [](double phi, double r) { return margin({phi, r}); }, py::arg("phi"),
      py::arg("r"));
  m.def(
      "dispatch_eval",
      [](double x, double r, double tol) { return dispatch_eval({x, r}, Tolerance(tol)); },
      py::arg("x"), py::arg("r"), py::arg("tol") = 1e-12);

  m.def(
      "consistency_scan",
      [](double x_min, double x_max, std::int64_t x_count, double r_min, double r_max,
         std::int64_t r_count, double tol) {
        py::gil_scoped_release release;
        return consistency_scan(make_grid("x", x_min, x_max, x_count, r_min, r_max, r_count,
                                          kDefaultInset),
                                Tolerance(tol));
      },
      py::arg("x_min") = -0.999, py::arg("x_max") = 1.0, py::arg("x_count") = 40,
      py::arg("r_min") = 0.01, py::arg("r_max") = 1.0, py::arg("r_count") = 20,
      py::arg("tol") = 1e-10);
  m.def(
      "monotonicity_scan",
      [](double x_min, double x_max, std::int64_t x_count, double r_min, double r_max,
         std::int64_t r_count, double tol) {
        py::gil_scoped_release release;
        return monotonicity_scan(make_grid("x", x_min, x_max, x_count, r_min, r_max, r_count,
                                           kDefaultInset),
                                 Tolerance(tol));
      },
      py::arg("x_min") = -0.99, py::arg("x_max") = 0.999, py::arg("x_count") = 40,
      py::arg("r_min") = 0.01, py::arg("r_max") = 1.0, py::arg("r_count") = 20,
      py::arg("tol") = 1e-10);
  m.def(
      "inequality_scan",
      [](double inset, std::int64_t phi_count, std::int64_t r_count, double tol) {
        py::gil_scoped_release release;
        const ScanGrid g = make_grid("phi", inset, std::numbers::pi - inset, phi_count, inset,
                                     1.0, r_count, inset);
        return inequality_scan(g, Tolerance(tol));
      },
      py::arg("inset") = kDefaultInset, py::arg("phi_count") = 100, py::arg("r_count") = 100,
      py::arg("tol") = 1e-10);
  m.def(
      "identity_scan", [](double tol) { return identity_scan(Tolerance(tol)); },
      py::arg("tol") = 1e-12);
}
