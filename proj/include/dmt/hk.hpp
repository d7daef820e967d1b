#pragma once

// Two-level (Han-Kobayashi) superposition coding over the compound channel
// defined by the no-outage set: sub-rate caps, the symmetric rate they
// admit, power-split optimization and the closed-form tradeoff table.
//
// Exponents at receiver 1 with private power split v1 (own) and v2 (other):
//   own public      1 - h1           own private      1 - h1 - v1
//   other public    alpha - g1       other private    alpha - v2 - g1  (noise)
// Each cap is the minimum over the receiver's state region of the
// corresponding MAC-style bound; receiver 2 mirrors receiver 1.

#include "dmt/core.hpp"
#include "dmt/outage.hpp"

#include <array>
#include <string_view>

namespace dmt {

struct SubRateCaps {
  double a11 = 0, a12 = 0, a13 = 0, a14 = 0;
  double a21 = 0, a22 = 0, a23 = 0, a24 = 0;

  /// a_i1 <= a_i2, a_i1 <= a_i3 <= a_i4, a_i2 <= a_i4 for both receivers.
  bool ordered(double tol = kTolerance) const;
};

struct SymDmtQuery {
  double alpha = 0.0;
  double d = 0.0;
};

/// Caps (a_i1, a_i2, a_i3, a_i4) of one receiver.
std::array<double, 4> receiver_caps(double alpha, double v_own, double v_other,
                                    const StateRegion& states);

/// Caps over the kappa = 1 no-outage set {h + g <= d} at both receivers.
SubRateCaps subrate_caps(const SymDmtQuery& query, const PowerSplit& split);

/// Caps over arbitrary per-receiver state regions.
SubRateCaps subrate_caps(double alpha, const PowerSplit& split, const StateRegion& rx1,
                         const StateRegion& rx2);

/// Largest symmetric rate r = s_i + t_i admitted by the caps:
///   min{ a12, a22, (a11+a24)/2, (a21+a14)/2, (a13+a23)/2,
///        (a11+a14+a23)/3, (a21+a24+a13)/3 }.
double sym_rate(const SubRateCaps& caps);

/// Symmetric rate of the scheme with no private streams: each receiver
/// decodes both public messages, and only error events that include its own
/// message count, so r = min over receivers of (own cap, sum cap / 2).
double all_public_rate(double alpha, const StateRegion& rx1, const StateRegion& rx2);
double all_public_rate(const SymDmtQuery& query);

struct PowerSplitResult {
  PowerSplit split;
  double rate = 0.0;
  /// Set when the no-private-stream scheme beats every split on the grid;
  /// `split` is then reported as v = 0.
  bool all_public = false;
};

/// Exhaustive grid search over v in [0, max(alpha, 1)] (v1 = v2 when
/// `equal_splits`), plus the all-public scheme. Ties go to the smallest v1,
/// then v2.
///
/// The range is sufficient: once v >= max(alpha, 1) the private stream sits
/// below the noise floor at both receivers for every state with h, g >= 0,
/// so every cap is constant in v beyond that point.
PowerSplitResult optimize_power_split(const SymDmtQuery& query, double grid_step,
                                      bool equal_splits = true);

struct TableRate {
  double rate = 0.0;
  PowerSplit split;
  bool all_public = false;
  /// Row identifier "T1".."T8" in table order.
  std::string_view regime;
};

/// Closed-form symmetric DMT of the two-level scheme, piecewise in alpha and
/// d. Domain 0 <= d <= 1, alpha >= 0; throws std::domain_error outside it.
///
/// For alpha >= 1 the all-public rate includes the (alpha - d)/2 branch of
/// the sum cap, which only binds when d < alpha - 1. Without it the table
/// would fall below the grid optimum (and below the W-curve at d = 0) for
/// 1 < alpha < 3.
TableRate hk_table_rate(const SymDmtQuery& query);

}  // namespace dmt
