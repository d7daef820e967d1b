#pragma once

// Three-level superposition. Each transmitter sends a top level at full
// power, a middle level at power exponent -v2 and a bottom level at -v1
// (v1 >= v2). Received exponents at receiver i in state (h, g):
//   own level k          1 - h - w_k
//   interferer level k   alpha - g - w_k        with w = (0, v2, v1).
//
// The receiver decodes its three messages jointly with the interferer's top
// level, and also with the interferer's middle level when the interference
// is strong: alpha - g >= gamma. Splitting the no-outage simplex along
// g = alpha - gamma gives one cell per decoding rule. For each cell and every
// error set S that contains an own message,
//   sum of rates in S <= (max exponent in S - (max undecoded exponent)^+)^+
// minimized over the cell. Symmetric sub-rates turn this into a 3-variable
// linear program in (top, middle, bottom) rates.

#include "dmt/core.hpp"
#include "dmt/hk.hpp"

namespace dmt {

struct ThreeLevelParams {
  double v1 = 0.0;
  double v2 = 0.0;
  double gamma = 0.0;

  /// Throws std::invalid_argument unless v1 >= v2 >= 0 and 0 <= gamma <= alpha.
  void validate(double alpha) const;
};

double three_level_rate(const SymDmtQuery& query, const ThreeLevelParams& params);

struct ThreeLevelResult {
  ThreeLevelParams params;
  double rate = 0.0;
  /// Set when the no-private-stream scheme beats every grid point; params
  /// are then all zero.
  bool all_public = false;
};

/// Grid search over v1 in [0, max(alpha, 1)], v2 in [0, v1], gamma in
/// [0, alpha], plus the all-public scheme. Ties go to the lexicographically
/// smallest (v1, v2, gamma).
ThreeLevelResult optimize_three_level(const SymDmtQuery& query, double grid_step);

}  // namespace dmt
