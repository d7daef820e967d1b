#pragma once

// Worst-case outer bound on the symmetric DMT. For a fixed channel state the
// transmitters may adapt their power splits (v1 = alpha - g2, v2 = alpha - g1),
// which gives the per-state caps below; a code that works for every state of
// the no-outage set cannot beat the worst of them.
//
//   b11 = (1 - alpha - h1 + g2)^+            b12 = (1 - h1)^+
//   b13 = (max(1 - alpha - h1 + g2, alpha - g1))^+
//   b14 = (max(1 - h1, alpha - g1))^+
// and b2j with receiver indices swapped.
//
// Closed form of the minimum over the no-outage set (checked against the
// numeric minimum on the whole test grid):
//   min(1 - d, max(1 - alpha/2 - d, (1 - d + alpha)/4, (alpha - d)/2),
//              max(alpha - d, 1 - alpha - d, (1 + alpha - d)/3))
// Grouping the last factor with min instead gives 1/8 at (1/2, 3/8), below
// the numeric minimum 3/8. The (alpha - d)/2 branch only matters for
// alpha > 1 and d < alpha - 1.

#include "dmt/core.hpp"
#include "dmt/hk.hpp"
#include "dmt/outage.hpp"

namespace dmt {

struct OuterCaps {
  double b11 = 0, b12 = 0, b13 = 0, b14 = 0;
  double b21 = 0, b22 = 0, b23 = 0, b24 = 0;

  bool ordered(double tol = kTolerance) const;
};

OuterCaps outer_caps(const FadePoint& fade, double alpha);

/// Symmetric rate of the per-state caps, same seven terms as sym_rate.
double per_state_sym_rate(const FadePoint& fade, double alpha);

/// Exact minimum of per_state_sym_rate over the closure of the product of
/// the two receivers' state regions (4-D vertex enumeration).
double worst_case_outer(double alpha, const StateRegion& rx1, const StateRegion& rx2);
double worst_case_outer(const SymDmtQuery& query);

/// Symmetric g.d.o.f. of the non-fading channel.
double w_curve(double alpha);

/// Throws std::domain_error unless 0 <= d <= 1.
double outer_closed_form(const SymDmtQuery& query);

}  // namespace dmt
