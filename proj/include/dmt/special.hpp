#pragma once

// Two channels where the two-level scheme is DMT optimal: the Z channel
// (cross link g2 absent) and the channel whose direct links do not fade.

#include "dmt/core.hpp"

namespace dmt {

/// {r1 <= r1_max, r2 <= r2_max, r1 + r2 <= sum_max}.
struct RateRegion2D {
  double r1_max = 0.0;
  double r2_max = 0.0;
  double sum_max = 0.0;

  bool contains(double r1, double r2, double tol = kTolerance) const {
    return r1 >= -tol && r2 >= -tol && r1 <= r1_max + tol && r2 <= r2_max + tol &&
           r1 + r2 <= sum_max + tol;
  }
};

/// Region achieved with v1 = 0 (user 1 all public) and v2 = alpha1.
RateRegion2D z_inner_region(double beta1, double beta2, double alpha1, double d1, double d2);

/// Worst-case outer region. The sum cap is
///   K = (max(beta2 - d2, (beta1 + alpha1 - d1)/2, beta1 - d1,
///            beta1 + beta2 - alpha1 - d1 - d2, alpha1 - d1))^+.
/// The second term is where the two sum-bound branches balance. Writing it
/// as (beta1 - alpha1 - d1)/2 does not match the minimum of the per-state
/// sum bound and breaks the inner/outer equality, e.g. at alpha1 = 0.5, d = 0.6.
RateRegion2D z_outer_region(double beta1, double beta2, double alpha1, double d1, double d2);

/// Inner and outer regions coincide at beta1 = beta2 = 1, d1 = d2 = d.
bool z_regions_match(double alpha1, double d);

/// Optimal symmetric DMT when only the cross links fade:
///   1 ^ (1/2 v 1 - alpha v alpha - d) ^ (1/2 v 1 - alpha/2 v (alpha - d)/2).
double crosslink_dmt(double alpha, double d);

struct CrosslinkRates {
  double orthogonal = 0.5;
  double tin = 0.0;
  /// Two-level scheme at v = alpha, closed form.
  double hk = 0.0;
  /// Same scheme evaluated by the generic cap minimization with h = 0.
  double hk_generic = 0.0;

  double best() const;
};

CrosslinkRates crosslink_scheme_rates(double alpha, double d);

}  // namespace dmt
