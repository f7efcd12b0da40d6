#include "chebmax/report_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace chebmax {

std::string format_number(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

double round_to_precision(double v, int precision) {
  return std::strtod(format_number(v, precision).c_str(), nullptr);
}

std::string report_to_csv(const Report& report, int precision) {
  std::ostringstream os;
  os << "kind,points_checked,violations,min_margin,worst_var,worst_r,pass\n"
     << to_string(report.kind) << ',' << report.points_checked << ','
     << report.violations.size() << ',' << format_number(report.min_margin, precision) << ','
     << format_number(report.worst_var, precision) << ','
     << format_number(report.worst_r, precision) << ',' << (report.passed() ? "true" : "false")
     << '\n';
  return os.str();
}

std::string report_to_json(const Report& report, int precision) {
  auto num = [precision](double v) { return round_to_precision(v, precision); };
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"point", {num(v.var), num(v.r)}},
                          {"observed", num(v.observed)},
                          {"bound", num(v.bound)},
                          {"check", v.check}});
  }
  const nlohmann::ordered_json j = {
      {"kind", std::string(to_string(report.kind))},
      {"points_checked", report.points_checked},
      {"violations", std::move(violations)},
      {"min_margin", num(report.min_margin)},
      {"worst_point", {num(report.worst_var), num(report.worst_r)}},
      {"pass", report.passed()},
  };
  return j.dump(2) + "\n";
}

std::string report_to_plain(const Report& report, int precision) {
  std::ostringstream os;
  os << "kind            " << to_string(report.kind) << '\n'
     << "points_checked  " << report.points_checked << '\n'
     << "violations      " << report.violations.size() << '\n'
     << "min_margin      " << format_number(report.min_margin, precision) << '\n'
     << "worst_point     (" << format_number(report.worst_var, precision) << ", "
     << format_number(report.worst_r, precision) << ")\n"
     << "result          " << (report.passed() ? "PASS" : "FAIL") << '\n';
  for (const Violation& v : report.violations) {
    os << "  violation " << v.check << " at (" << format_number(v.var, precision) << ", "
       << format_number(v.r, precision) << "): observed " << format_number(v.observed, precision)
       << ", bound " << format_number(v.bound, precision) << '\n';
  }
  return os.str();
}

}  // namespace chebmax
