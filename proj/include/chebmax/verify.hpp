#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chebmax/types.hpp"

namespace chebmax {

inline constexpr double kDefaultInset = 1e-3;
/// Absolute slack added to combined error bounds when comparing routes.
inline constexpr double kAgreementSlack = 1e-12;
/// Forward differences are only checked across at least this much x.
inline constexpr double kMinForwardStep = 1e-2;

enum class VarKind { x_grid, phi_grid };

/// Rectangular grid over (x or phi) x r, linearly spaced, endpoints included.
///
/// Construction enforces the insets x in [-1+d, 1], phi in [d, pi-d],
/// r in [d, 1], counts >= 1 and min <= max (min == max when count == 1).
class ScanGrid {
 public:
  ScanGrid(VarKind kind, double var_min, double var_max, std::int64_t var_count, double r_min,
           double r_max, std::int64_t r_count, double inset = kDefaultInset);

  /// 40 x 20, x in [-0.999, 1], r in [0.01, 1].
  [[nodiscard]] static ScanGrid default_consistency();
  /// 40 x 20, x in [-0.99, 0.999], r in [0.01, 1].
  [[nodiscard]] static ScanGrid default_monotonicity();
  /// 100 x 100, phi in [d, pi-d], r in [d, 1].
  [[nodiscard]] static ScanGrid default_inequality(double inset = kDefaultInset);

  [[nodiscard]] VarKind kind() const noexcept { return kind_; }
  [[nodiscard]] double var_min() const noexcept { return var_min_; }
  [[nodiscard]] double var_max() const noexcept { return var_max_; }
  [[nodiscard]] std::int64_t var_count() const noexcept { return var_count_; }
  [[nodiscard]] double r_min() const noexcept { return r_min_; }
  [[nodiscard]] double r_max() const noexcept { return r_max_; }
  [[nodiscard]] std::int64_t r_count() const noexcept { return r_count_; }
  [[nodiscard]] double inset() const noexcept { return inset_; }
  [[nodiscard]] std::int64_t size() const noexcept { return var_count_ * r_count_; }

  [[nodiscard]] double var_at(std::int64_t i) const;
  [[nodiscard]] double r_at(std::int64_t j) const;

 private:
  VarKind kind_;
  double var_min_, var_max_;
  std::int64_t var_count_;
  double r_min_, r_max_;
  std::int64_t r_count_;
  double inset_;
};

enum class ReportKind { consistency, monotonicity, inequality, identity };

[[nodiscard]] std::string_view to_string(ReportKind kind) noexcept;

struct Violation {
  double var = 0.0;
  double r = 0.0;
  double observed = 0.0;
  double bound = 0.0;
  std::string check;  // which comparison failed, e.g. "series/closed_form"
};

struct Report {
  ReportKind kind = ReportKind::consistency;
  std::int64_t points_checked = 0;
  std::vector<Violation> violations;
  double min_margin = 0.0;
  double worst_var = 0.0;
  double worst_r = 0.0;
  std::chrono::duration<double> elapsed{0.0};

  [[nodiscard]] bool passed() const noexcept { return violations.empty(); }
};

/// The evaluation routes a scan draws on. Scans take these by value so tests
/// can inject corrupted routes and check that the scans notice.
struct RouteSet {
  std::function<EvalResult(const EvalPoint&, Tolerance)> series;
  std::function<EvalResult(const EvalPoint&, Tolerance)> quadrature;
  std::function<EvalResult(const EvalPoint&)> closed_form;
  std::function<EvalResult(const EvalPoint&, Tolerance)> dfdx;
  std::function<double(double)> f_at_one;
  std::function<double(const EvalPoint&)> generating_lhs;

  [[nodiscard]] static RouteSet standard();
};

struct ScanOptions {
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Series for r < 1e-3, closed form otherwise, quadrature if the chosen
/// route throws.
[[nodiscard]] EvalResult dispatch_eval(const EvalPoint& p, Tolerance tol,
                                       const RouteSet& routes = RouteSet::standard());

[[nodiscard]] Report consistency_scan(const ScanGrid& g, Tolerance tol,
                                      const RouteSet& routes = RouteSet::standard(),
                                      ScanOptions opts = {});

[[nodiscard]] Report monotonicity_scan(const ScanGrid& g, Tolerance tol,
                                       const RouteSet& routes = RouteSet::standard(),
                                       ScanOptions opts = {});

[[nodiscard]] Report inequality_scan(const ScanGrid& g, Tolerance tol,
                                     const RouteSet& routes = RouteSet::standard(),
                                     ScanOptions opts = {});

/// Checks the Chebyshev generating function on a fixed 15 x 10 grid
/// (x in [-0.9, 1], r in [0.05, 0.95]): partial sums for N in {5, 20, 80}
/// against r^{N+1}/(1-r), and the constant-term rearrangement within tol.
[[nodiscard]] Report identity_scan(Tolerance tol, const RouteSet& routes = RouteSet::standard());

}  // namespace chebmax
