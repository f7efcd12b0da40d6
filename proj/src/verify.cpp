#include "chebmax/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include "chebmax/analytic.hpp"
#include "chebmax/error.hpp"
#include "chebmax/quadrature.hpp"
#include "chebmax/series.hpp"

namespace chebmax {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

[[noreturn]] void grid_fail(const std::string& what) {
  throw Error(Errc::domain, "invalid scan grid: " + what);
}

double linspace_at(double lo, double hi, std::int64_t count, std::int64_t i) {
  if (count == 1) return lo;
  if (i == count - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

// Evaluates fn(i) for i in [0, n) on a small thread pool. Results land in
// index order; if any call throws, the exception with the lowest index is
// rethrown, so failures do not depend on scheduling.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::int64_t n, unsigned threads, Fn fn) {
  std::vector<T> out(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (std::int64_t i = next++; i < n; i = next++) {
      try {
        out[static_cast<std::size_t>(i)] = fn(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, std::max<std::int64_t>(n, 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

template <typename Fn>
auto at_point(double var, double r, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    std::ostringstream os;
    os.precision(17);
    os << e.what() << " [at var=" << var << ", r=" << r << "]";
    throw Error(e.code(), os.str());
  }
}

// Running minimum with first-occurrence tie-break.
class MarginTracker {
 public:
  void offer(double margin, double var, double r) {
    if (margin < min_) {
      min_ = margin;
      var_ = var;
      r_ = r;
    }
  }
  void store(Report& report) const {
    report.min_margin = min_;
    report.worst_var = var_;
    report.worst_r = r_;
  }

 private:
  double min_ = std::numeric_limits<double>::infinity();
  double var_ = 0.0;
  double r_ = 0.0;
};

void require_kind(const ScanGrid& g, VarKind kind, const char* scan) {
  if (g.kind() != kind)
    grid_fail(std::string(scan) +
              (kind == VarKind::x_grid ? " scan needs an x grid" : " scan needs a phi grid"));
}

using Clock = std::chrono::steady_clock;

Report empty_report(ReportKind kind, std::int64_t points) {
  Report report;
  report.kind = kind;
  report.points_checked = points;
  return report;
}

}  // namespace

ScanGrid::ScanGrid(VarKind kind, double var_min, double var_max, std::int64_t var_count,
                   double r_min, double r_max, std::int64_t r_count, double inset)
    : kind_(kind),
      var_min_(var_min),
      var_max_(var_max),
      var_count_(var_count),
      r_min_(r_min),
      r_max_(r_max),
      r_count_(r_count),
      inset_(inset) {
  if (!(inset > 0.0 && inset < 0.5)) grid_fail("inset must lie in (0, 0.5)");
  if (var_count < 1 || r_count < 1) grid_fail("counts must be >= 1");
  if (!(std::isfinite(var_min) && std::isfinite(var_max) && var_min <= var_max))
    grid_fail("variable range must be finite with min <= max");
  if (!(std::isfinite(r_min) && std::isfinite(r_max) && r_min <= r_max))
    grid_fail("r range must be finite with min <= max");
  // Slack of a few ulps so that typed-in endpoints like -0.999 pass.
  const double slack = 4.0 * kEps;
  if (kind == VarKind::x_grid) {
    if (var_min < -1.0 + inset - slack) grid_fail("x grid must start at or above -1 + inset");
    if (var_max > 1.0) grid_fail("x grid must end at or below 1");
  } else {
    if (var_min < inset - slack) grid_fail("phi grid must start at or above inset (phi > 0)");
    if (var_max > std::numbers::pi - inset + slack * std::numbers::pi)
      grid_fail("phi grid must end at or below pi - inset");
  }
  if (r_min < inset - slack || r_max > 1.0) grid_fail("r grid must lie in [inset, 1]");
}

ScanGrid ScanGrid::default_consistency() {
  return {VarKind::x_grid, -0.999, 1.0, 40, 0.01, 1.0, 20};
}

ScanGrid ScanGrid::default_monotonicity() {
  return {VarKind::x_grid, -0.99, 0.999, 40, 0.01, 1.0, 20};
}

ScanGrid ScanGrid::default_inequality(double inset) {
  return {VarKind::phi_grid, inset, std::numbers::pi - inset, 100, inset, 1.0, 100, inset};
}

double ScanGrid::var_at(std::int64_t i) const {
  return linspace_at(var_min_, var_max_, var_count_, i);
}

double ScanGrid::r_at(std::int64_t j) const { return linspace_at(r_min_, r_max_, r_count_, j); }

std::string_view to_string(ReportKind kind) noexcept {
  switch (kind) {
    case ReportKind::consistency: return "consistency";
    case ReportKind::monotonicity: return "monotonicity";
    case ReportKind::inequality: return "inequality";
    case ReportKind::identity: return "identity";
  }
  return "unknown";
}

RouteSet RouteSet::standard() {
  RouteSet routes;
  routes.series = &chebmax::f_series;
  routes.quadrature = &chebmax::f_quad;
  routes.closed_form = &chebmax::f_closed;
  routes.dfdx = &chebmax::dfdx_quad;
  routes.f_at_one = &chebmax::f_at_one;
  routes.generating_lhs = &chebmax::generating_lhs;
  return routes;
}

EvalResult dispatch_eval(const EvalPoint& p, Tolerance tol, const RouteSet& routes) {
  try {
    if (p.r() < kSmallRadius) return routes.series(p, tol);
    return routes.closed_form(p);
  } catch (const Error&) {
    return routes.quadrature(p, tol);
  }
}

Report consistency_scan(const ScanGrid& g, Tolerance tol, const RouteSet& routes,
                        ScanOptions opts) {
  require_kind(g, VarKind::x_grid, "consistency");
  const auto start = Clock::now();

  struct Sample {
    std::optional<EvalResult> series;
    EvalResult quadrature;
    EvalResult closed_form;
  };
  const std::int64_t rc = g.r_count();
  const auto samples = parallel_map<Sample>(g.size(), opts.threads, [&](std::int64_t idx) {
    const double x = g.var_at(idx / rc);
    const double r = g.r_at(idx % rc);
    return at_point(x, r, [&] {
      const EvalPoint p(x, r);
      Sample s;
      if (r <= kSeriesMaxRadius) s.series = routes.series(p, tol);
      s.quadrature = routes.quadrature(p, tol);
      s.closed_form = routes.closed_form(p);
      return s;
    });
  });

  Report report = empty_report(ReportKind::consistency, g.size());
  MarginTracker tracker;
  for (std::int64_t idx = 0; idx < g.size(); ++idx) {
    const double x = g.var_at(idx / rc);
    const double r = g.r_at(idx % rc);
    const Sample& s = samples[static_cast<std::size_t>(idx)];
    auto compare = [&](const EvalResult& a, const EvalResult& b) {
      const double diff = std::abs(a.value - b.value);
      const double allowed = a.error_bound + b.error_bound + kAgreementSlack;
      tracker.offer(allowed - diff, x, r);
      if (!(diff <= allowed)) {
        report.violations.push_back({x, r, diff, allowed,
                                     std::string(to_string(a.route)) + "/" +
                                         std::string(to_string(b.route))});
      }
    };
    if (s.series) {
      compare(*s.series, s.quadrature);
      compare(*s.series, s.closed_form);
    }
    compare(s.quadrature, s.closed_form);
  }
  tracker.store(report);
  report.elapsed = Clock::now() - start;
  return report;
}

Report monotonicity_scan(const ScanGrid& g, Tolerance tol, const RouteSet& routes,
                         ScanOptions opts) {
  require_kind(g, VarKind::x_grid, "monotonicity");
  if (g.var_count() < 3) grid_fail("monotonicity scan needs at least 3 x points");
  const auto start = Clock::now();

  struct Sample {
    EvalResult f;
    EvalResult dfdx;
  };
  const std::int64_t rc = g.r_count();
  const auto samples = parallel_map<Sample>(g.size(), opts.threads, [&](std::int64_t idx) {
    const double x = g.var_at(idx / rc);
    const double r = g.r_at(idx % rc);
    return at_point(x, r, [&] {
      const EvalPoint p(x, r);
      return Sample{dispatch_eval(p, tol, routes), routes.dfdx(p, tol)};
    });
  });
  auto at = [&](std::int64_t i, std::int64_t j) -> const Sample& {
    return samples[static_cast<std::size_t>(i * rc + j)];
  };

  Report report = empty_report(ReportKind::monotonicity, g.size());
  MarginTracker tracker;
  for (std::int64_t i = 0; i < g.var_count(); ++i) {
    const double x = g.var_at(i);
    for (std::int64_t j = 0; j < rc; ++j) {
      const double r = g.r_at(j);
      const EvalResult& d = at(i, j).dfdx;
      if (!(d.value > d.error_bound))
        report.violations.push_back({x, r, d.value, d.error_bound, "dfdx"});
      if (i + 1 == g.var_count() || g.var_at(i + 1) - x < kMinForwardStep) continue;
      const EvalResult& lo = at(i, j).f;
      const EvalResult& hi = at(i + 1, j).f;
      const double diff = hi.value - lo.value;
      const double bound = lo.error_bound + hi.error_bound;
      tracker.offer(diff, x, r);
      if (!(diff > bound)) report.violations.push_back({x, r, diff, bound, "forward_difference"});
    }
  }
  tracker.store(report);
  report.elapsed = Clock::now() - start;
  return report;
}

Report inequality_scan(const ScanGrid& g, Tolerance tol, const RouteSet& routes,
                       ScanOptions opts) {
  require_kind(g, VarKind::phi_grid, "inequality");
  const auto start = Clock::now();

  struct Sample {
    double margin = 0.0;
    double bound = 0.0;
  };
  const std::int64_t rc = g.r_count();
  const auto samples = parallel_map<Sample>(g.size(), opts.threads, [&](std::int64_t idx) {
    const double phi = g.var_at(idx / rc);
    const double r = g.r_at(idx % rc);
    return at_point(phi, r, [&] {
      const EvalPoint p = AnglePoint(phi, r).to_eval_point();
      const EvalResult f = dispatch_eval(p, tol, routes);
      return Sample{routes.f_at_one(r) - f.value, f_at_one_error_bound(r) + f.error_bound};
    });
  });

  Report report = empty_report(ReportKind::inequality, g.size());
  MarginTracker tracker;
  for (std::int64_t idx = 0; idx < g.size(); ++idx) {
    const double phi = g.var_at(idx / rc);
    const double r = g.r_at(idx % rc);
    const Sample& s = samples[static_cast<std::size_t>(idx)];
    tracker.offer(s.margin, phi, r);
    if (!(s.margin > s.bound)) report.violations.push_back({phi, r, s.margin, s.bound, "margin"});
  }
  tracker.store(report);
  report.elapsed = Clock::now() - start;
  return report;
}

Report identity_scan(Tolerance tol, const RouteSet& routes) {
  const auto start = Clock::now();
  constexpr std::int64_t kXCount = 15;
  constexpr std::int64_t kRCount = 10;
  constexpr std::array<std::int64_t, 3> kTerms{5, 20, 80};

  Report report = empty_report(ReportKind::identity, kXCount * kRCount);
  MarginTracker tracker;
  for (std::int64_t i = 0; i < kXCount; ++i) {
    const double x = linspace_at(-0.9, 1.0, kXCount, i);
    for (std::int64_t j = 0; j < kRCount; ++j) {
      const double r = linspace_at(0.05, 0.95, kRCount, j);
      const EvalPoint p(x, r);
      const double lhs = routes.generating_lhs(p);
      for (const std::int64_t n : kTerms) {
        const double residual = std::abs(lhs - generating_partial_sum(p, n));
        // Rounding allowance: the recurrence for T_k can drift by O(k^2) ulps.
        const double nd = static_cast<double>(n + 1);
        const double allowed =
            std::pow(r, nd) / (1.0 - r) + nd * nd * kEps / (1.0 - r);
        tracker.offer(allowed - residual, x, r);
        if (!(residual <= allowed))
          report.violations.push_back(
              {x, r, residual, allowed, "partial_sum_N" + std::to_string(n)});
      }
      // sum_{k>=0} T_k(x) z^k at z = -r, with the constant term moved across.
      const double z = -r;
      const double full = (1.0 - x * z) / (1.0 - 2.0 * x * z + z * z);
      const double residual = std::abs(full - (1.0 - lhs));
      tracker.offer(tol.abs() - residual, x, r);
      if (!(residual <= tol.abs()))
        report.violations.push_back({x, r, residual, tol.abs(), "constant_term"});
    }
  }
  tracker.store(report);
  report.elapsed = Clock::now() - start;
  return report;
}

}  // namespace chebmax
