#pragma once

#include <string>

#include "chebmax/verify.hpp"

namespace chebmax {

inline constexpr int kDefaultPrecision = 15;

/// %.{precision}g, the shortest form at that many significant digits.
[[nodiscard]] std::string format_number(double v, int precision = kDefaultPrecision);

/// v rounded to `precision` significant digits (round trip through text).
[[nodiscard]] double round_to_precision(double v, int precision);

/// One header line and one summary row:
/// kind,points_checked,violations,min_margin,worst_var,worst_r,pass
[[nodiscard]] std::string report_to_csv(const Report& report, int precision = kDefaultPrecision);

/// Object with keys kind, points_checked, violations, min_margin,
/// worst_point, pass. Elapsed time is left out so output is reproducible.
[[nodiscard]] std::string report_to_json(const Report& report, int precision = kDefaultPrecision);

[[nodiscard]] std::string report_to_plain(const Report& report, int precision = kDefaultPrecision);

}  // namespace chebmax
