#include "dmt/special.hpp"

#include "dmt/hk.hpp"
#include "dmt/outage.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dmt {

namespace {

void check_diversity(double d1, double d2) {
  if (!(d1 >= 0.0 && d2 >= 0.0)) throw std::invalid_argument("diversity must be >= 0");
}

void check_crosslink(double alpha, double d) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("crosslink: alpha must be >= 0");
  if (!(d >= 0.0)) throw std::invalid_argument("crosslink: d must be >= 0");
}

}  // namespace

RateRegion2D z_inner_region(double b1, double b2, double a1, double d1, double d2) {
  check_diversity(d1, d2);
  const double rx1 = pos_part(std::max({b1 - d1, a1 - d1, (b1 - d1 + a1) / 2}));
  return {pos_part(b1 - d1), pos_part(b2 - d2), rx1 + pos_part(b2 - a1 - d2)};
}

RateRegion2D z_outer_region(double b1, double b2, double a1, double d1, double d2) {
  check_diversity(d1, d2);
  const double k = std::max(
      {b2 - d2, (b1 + a1 - d1) / 2, b1 - d1, b1 + b2 - a1 - d1 - d2, a1 - d1});
  return {pos_part(b1 - d1), pos_part(b2 - d2), pos_part(k)};
}

bool z_regions_match(double alpha1, double d) {
  if (!(d >= 0.0 && d <= 1.0)) throw std::domain_error("z_regions_match: requires 0 <= d <= 1");
  const auto in = z_inner_region(1, 1, alpha1, d, d);
  const auto out = z_outer_region(1, 1, alpha1, d, d);
  const double tol = 1e-9;
  return std::abs(in.r1_max - out.r1_max) <= tol && std::abs(in.r2_max - out.r2_max) <= tol &&
         std::abs(in.sum_max - out.sum_max) <= tol;
}

double crosslink_dmt(double a, double d) {
  check_crosslink(a, d);
  return std::min({1.0, std::max({0.5, 1 - a, a - d}), std::max({0.5, 1 - a / 2, (a - d) / 2})});
}

double CrosslinkRates::best() const { return std::max({orthogonal, tin, hk}); }

CrosslinkRates crosslink_scheme_rates(double a, double d) {
  check_crosslink(a, d);
  CrosslinkRates out;
  // The worst state for treating interference as noise is g = 0.
  out.tin = pos_part(1 - pos_part(a));
  // Negative for alpha > 1, d > alpha, where the scheme supports nothing.
  out.hk = pos_part(
      std::min({1.0, std::max(1 - a, a - d), std::max({0.5, 1 - a / 2, (a - d) / 2})}));
  const auto region = crosslink_region(d);
  out.hk_generic = sym_rate(subrate_caps(a, PowerSplit::equal(a), region, region));
  return out;
}

}  // namespace dmt
