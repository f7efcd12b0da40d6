#include "chebmax/cli.hpp"

#include <algorithm>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chebmax/analytic.hpp"
#include "chebmax/error.hpp"
#include "chebmax/quadrature.hpp"
#include "chebmax/report_io.hpp"
#include "chebmax/series.hpp"
#include "chebmax/verify.hpp"

namespace chebmax::cli {

namespace {

enum class Format { csv, json, plain };

struct OutputSpec {
  Format format = Format::plain;
  std::string path;  // empty: standard output
  int precision = kDefaultPrecision;
};

struct GridFlags {
  std::optional<double> var_min, var_max, r_min, r_max;
  std::optional<std::int64_t> var_count, r_count;
  double inset = kDefaultInset;

  ScanGrid build(VarKind kind, std::int64_t default_var_count, double default_r_min,
                 std::int64_t default_r_count) const {
    const bool is_x = kind == VarKind::x_grid;
    const double lo = is_x ? -1.0 + inset : inset;
    const double hi = is_x ? 1.0 : std::numbers::pi - inset;
    return {kind,
            var_min.value_or(lo),
            var_max.value_or(hi),
            var_count.value_or(default_var_count),
            r_min.value_or(std::max(default_r_min, inset)),
            r_max.value_or(1.0),
            r_count.value_or(default_r_count),
            inset};
  }
};

void add_output_flags(CLI::App& cmd, OutputSpec& spec) {
  const std::map<std::string, Format> formats{
      {"csv", Format::csv}, {"json", Format::json}, {"plain", Format::plain}};
  cmd.add_option("--format", spec.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd.add_option("--out", spec.path, "Write output to this file instead of stdout");
  cmd.add_option("--precision", spec.precision, "Significant digits in numeric output")
      ->check(CLI::Range(1, 17));
}

void add_grid_flags(CLI::App& cmd, GridFlags& g) {
  cmd.add_option("--var-min", g.var_min, "Lower end of the x or phi range");
  cmd.add_option("--var-max", g.var_max, "Upper end of the x or phi range");
  cmd.add_option("--var-count", g.var_count, "Number of x or phi points");
  cmd.add_option("--r-min", g.r_min, "Lower end of the r range");
  cmd.add_option("--r-max", g.r_max, "Upper end of the r range");
  cmd.add_option("--r-count", g.r_count, "Number of r points");
  cmd.add_option("--inset", g.inset, "Distance kept from the open ends of the domain");
}

int emit(const OutputSpec& spec, const std::string& text, std::ostream& out, std::ostream& err) {
  if (spec.path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(spec.path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << spec.path << " for writing\n";
    return kExitUsage;
  }
  file << text;
  return kExitOk;
}

std::string render_eval(const EvalResult& r, const OutputSpec& spec) {
  const int p = spec.precision;
  std::ostringstream os;
  switch (spec.format) {
    case Format::plain:
      os << "value        " << format_number(r.value, p) << '\n'
         << "error_bound  " << format_number(r.error_bound, p) << '\n'
         << "route        " << to_string(r.route) << '\n'
         << "work         " << r.work << '\n'
         << "rigorous     " << (r.rigorous ? "yes" : "no") << '\n';
      break;
    case Format::csv:
      os << "value,error_bound,route,work\n"
         << format_number(r.value, p) << ',' << format_number(r.error_bound, p) << ','
         << to_string(r.route) << ',' << r.work << '\n';
      break;
    case Format::json: {
      const nlohmann::ordered_json j = {{"value", round_to_precision(r.value, p)},
                                        {"error_bound", round_to_precision(r.error_bound, p)},
                                        {"route", std::string(to_string(r.route))},
                                        {"work", r.work},
                                        {"rigorous", r.rigorous}};
      os << j.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

struct TableRow {
  double var;
  double r;
  EvalResult result;
};

std::string render_table(const std::vector<TableRow>& rows, const OutputSpec& spec) {
  const int p = spec.precision;
  std::ostringstream os;
  if (spec.format == Format::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const TableRow& row : rows) {
      arr.push_back({{"var", round_to_precision(row.var, p)},
                     {"r", round_to_precision(row.r, p)},
                     {"value", round_to_precision(row.result.value, p)},
                     {"error_bound", round_to_precision(row.result.error_bound, p)},
                     {"route", std::string(to_string(row.result.route))}});
    }
    os << arr.dump(2) << '\n';
    return os.str();
  }
  // plain falls back to CSV; the table is data for plotting.
  os << "var,r,value,error_bound,route\n";
  for (const TableRow& row : rows) {
    os << format_number(row.var, p) << ',' << format_number(row.r, p) << ','
       << format_number(row.result.value, p) << ',' << format_number(row.result.error_bound, p)
       << ',' << to_string(row.result.route) << '\n';
  }
  return os.str();
}

std::string render_report(const Report& report, const OutputSpec& spec) {
  switch (spec.format) {
    case Format::csv: return report_to_csv(report, spec.precision);
    case Format::json: return report_to_json(report, spec.precision);
    case Format::plain: return report_to_plain(report, spec.precision);
  }
  return {};
}

int exit_code_for(Errc code) {
  return code == Errc::tolerance_unreachable ? kExitTolerance : kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate and verify the alternating Chebyshev series f(x, r)", "chebmax"};
  app.require_subcommand(1);

  // eval
  std::optional<double> eval_x, eval_phi;
  double eval_r = 0.0;
  std::string eval_route = "auto";
  double eval_tol = 1e-12;
  bool degrees = false;
  OutputSpec eval_out;
  auto* eval = app.add_subcommand("eval", "Evaluate f at one point");
  auto* x_opt = eval->add_option("--x", eval_x, "x in (-1, 1]");
  auto* phi_opt = eval->add_option("--phi", eval_phi, "phi in [0, pi), radians");
  x_opt->excludes(phi_opt);
  eval->add_option("--r", eval_r, "r in (0, 1]")->required();
  eval->add_option("--route", eval_route, "Evaluation route")
      ->check(CLI::IsMember({"series", "quad", "closed", "auto"}));
  eval->add_option("--tol", eval_tol, "Absolute tolerance");
  eval->add_flag("--degrees", degrees, "Read --phi in degrees");
  add_output_flags(*eval, eval_out);

  // scan
  std::string scan_kind;
  double scan_tol = 1e-10;
  GridFlags scan_grid;
  OutputSpec scan_out;
  scan_out.format = Format::csv;
  auto* scan = app.add_subcommand("scan", "Run a verification scan and report violations");
  scan->add_option("--kind", scan_kind, "Scan kind")
      ->required()
      ->check(CLI::IsMember({"consistency", "monotonicity", "inequality", "identity"}));
  scan->add_option("--tol", scan_tol, "Absolute tolerance per evaluation");
  add_grid_flags(*scan, scan_grid);
  add_output_flags(*scan, scan_out);

  // table
  std::string surface;
  double table_tol = 1e-12;
  GridFlags table_grid;
  OutputSpec table_out;
  table_out.format = Format::csv;
  auto* table = app.add_subcommand("table", "Emit var,r,value,error_bound,route rows");
  table->add_option("--surface", surface, "Surface to tabulate")
      ->required()
      ->check(CLI::IsMember({"f", "dfdx", "margin"}));
  table->add_option("--tol", table_tol, "Absolute tolerance per evaluation");
  add_grid_flags(*table, table_grid);
  add_output_flags(*table, table_out);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (eval->parsed()) {
      if (eval_x.has_value() == eval_phi.has_value()) {
        err << "error: exactly one of --x or --phi is required\n";
        return kExitUsage;
      }
      const Tolerance tol(eval_tol);
      EvalResult result;
      if (eval_phi) {
        const double phi = degrees ? *eval_phi * std::numbers::pi / 180.0 : *eval_phi;
        const AnglePoint a(phi, eval_r);
        if (eval_route == "series") {
          result = fourier_series(a, tol);
        } else {
          const EvalPoint p = a.to_eval_point();
          result = eval_route == "quad"     ? f_quad(p, tol)
                   : eval_route == "closed" ? f_closed(p)
                                            : dispatch_eval(p, tol);
        }
      } else {
        const EvalPoint p(*eval_x, eval_r);
        result = eval_route == "series"   ? f_series(p, tol)
                 : eval_route == "quad"   ? f_quad(p, tol)
                 : eval_route == "closed" ? f_closed(p)
                                          : dispatch_eval(p, tol);
      }
      return emit(eval_out, render_eval(result, eval_out), out, err);
    }

    if (scan->parsed()) {
      const Tolerance tol(scan_tol);
      Report report;
      if (scan_kind == "consistency") {
        report = consistency_scan(scan_grid.build(VarKind::x_grid, 40, 0.01, 20), tol);
      } else if (scan_kind == "monotonicity") {
        GridFlags g = scan_grid;
        if (!g.var_max) g.var_max = 0.999;
        if (!g.var_min) g.var_min = std::max(-0.99, -1.0 + g.inset);
        report = monotonicity_scan(g.build(VarKind::x_grid, 40, 0.01, 20), tol);
      } else if (scan_kind == "inequality") {
        report = inequality_scan(scan_grid.build(VarKind::phi_grid, 100, 0.0, 100), tol);
      } else {
        report = identity_scan(tol);
      }
      const int rc = emit(scan_out, render_report(report, scan_out), out, err);
      if (rc != kExitOk) return rc;
      return report.passed() ? kExitOk : kExitViolations;
    }

    if (table->parsed()) {
      const Tolerance tol(table_tol);
      const bool angular = surface == "margin";
      const ScanGrid grid = table_grid.build(angular ? VarKind::phi_grid : VarKind::x_grid, 21,
                                             angular ? 0.0 : 0.01, 11);
      std::vector<TableRow> rows;
      rows.reserve(static_cast<std::size_t>(grid.size()));
      for (std::int64_t i = 0; i < grid.var_count(); ++i) {
        for (std::int64_t j = 0; j < grid.r_count(); ++j) {
          const double var = grid.var_at(i);
          const double r = grid.r_at(j);
          EvalResult res;
          if (surface == "f") {
            res = dispatch_eval(EvalPoint(var, r), tol);
          } else if (surface == "dfdx") {
            res = dfdx_quad(EvalPoint(var, r), tol);
          } else {
            const EvalResult f = dispatch_eval(AnglePoint(var, r).to_eval_point(), tol);
            res = f;
            res.value = f_at_one(r) - f.value;
            res.error_bound = f_at_one_error_bound(r) + f.error_bound;
          }
          rows.push_back({var, r, res});
        }
      }
      return emit(table_out, render_table(rows, table_out), out, err);
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

}  // namespace chebmax::cli
