#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dmt {

struct CurveRow {
  double d = 0.0;
  double r_hk = 0.0;
  double r_outer = 0.0;
  std::optional<double> r_three_level;
  std::string regime;
};

/// Rows for d = d_min, d_min + d_step, ... up to d_max (always included).
/// Throws std::invalid_argument unless 0 <= d_min <= d_max <= 1, d_step > 0.
std::vector<CurveRow> curve_rows(double alpha, double d_min, double d_max, double d_step,
                                 bool three_level, double three_level_step);

/// Shortest text with 12 significant digits, locale independent.
std::string format_number(double x);

inline constexpr double kDefaultStep = 1e-3;
inline constexpr double kDefaultThreeLevelStep = 1.0 / 152;

/// Runs the command-line tool with `args` (program name excluded). Returns
/// the exit code: 0 success, 2 usage error, 1 computation error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dmt
