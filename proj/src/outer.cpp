#include "dmt/outer.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace dmt {

namespace {

using Vec4 = Point<double, 4>;
using Aff4 = Affine<double, 4>;

double sym7(double c11, double c12, double c13, double c14, double c21, double c22, double c23,
            double c24) {
  return sym_rate(SubRateCaps{c11, c12, c13, c14, c21, c22, c23, c24});
}

// Coordinates (h1, g1, h2, g2).
Aff4 aff(double h1, double g1, double h2, double g2, double c) {
  Vec4 v;
  v << h1, g1, h2, g2;
  return {v, c};
}

}  // namespace

bool OuterCaps::ordered(double tol) const {
  return SubRateCaps{b11, b12, b13, b14, b21, b22, b23, b24}.ordered(tol);
}

OuterCaps outer_caps(const FadePoint& f, double a) {
  const double x1 = 1 - a - f.h1_hat + f.g2_hat, x2 = 1 - a - f.h2_hat + f.g1_hat;
  return {pos_part(x1), pos_part(1 - f.h1_hat), pos_part(std::max(x1, a - f.g1_hat)),
          pos_part(std::max(1 - f.h1_hat, a - f.g1_hat)),
          pos_part(x2), pos_part(1 - f.h2_hat), pos_part(std::max(x2, a - f.g2_hat)),
          pos_part(std::max(1 - f.h2_hat, a - f.g2_hat))};
}

double per_state_sym_rate(const FadePoint& fade, double alpha) {
  const OuterCaps c = outer_caps(fade, alpha);
  return sym7(c.b11, c.b12, c.b13, c.b14, c.b21, c.b22, c.b23, c.b24);
}

double worst_case_outer(double alpha, const StateRegion& rx1, const StateRegion& rx2) {
  const auto region = product(rx1, rx2);
  std::vector<Hyperplane<double, 4>> cuts;
  const Aff4 zero = aff(0, 0, 0, 0, 0);
  for (int rx = 0; rx < 2; ++rx) {
    // Receiver 1 pieces, or receiver 2 with the coordinates swapped.
    const Aff4 cross = rx == 0 ? aff(-1, 0, 0, 1, 1 - alpha) : aff(0, 1, -1, 0, 1 - alpha);
    const Aff4 own = rx == 0 ? aff(-1, 0, 0, 0, 1) : aff(0, 0, -1, 0, 1);
    const Aff4 intf = rx == 0 ? aff(0, -1, 0, 0, alpha) : aff(0, 0, 0, -1, alpha);
    for (const auto& pair : {std::array{cross, zero}, std::array{cross, intf},
                             std::array{intf, zero}, std::array{own, intf},
                             std::array{own, zero}})
      add_crossings<double, 4>(pair, cuts);
  }
  const auto vs = arrangement_vertices<double, 4>(region, cuts);
  if (vs.empty()) throw std::invalid_argument("state region is empty");
  return minimize_over<double, 4>(vs, [alpha](const Vec4& x) {
    return per_state_sym_rate({x(0), x(1), x(2), x(3)}, alpha);
  });
}

double worst_case_outer(const SymDmtQuery& query) {
  if (query.d < 0.0) throw std::invalid_argument("diversity must be >= 0");
  const auto region = simplex_region(query.d);
  return worst_case_outer(query.alpha, region, region);
}

double w_curve(double a) {
  return std::min({1.0, std::max(1 - a, a), std::max(1 - a / 2, a / 2)});
}

double outer_closed_form(const SymDmtQuery& q) {
  const double a = q.alpha, d = q.d;
  if (!(d >= 0.0 && d <= 1.0)) throw std::domain_error("outer_closed_form: requires 0 <= d <= 1");
  return std::min({1 - d, std::max({1 - a / 2 - d, (1 - d + a) / 4, (a - d) / 2}),
                   std::max({a - d, 1 - a - d, (1 + a - d) / 3})});
}

}  // namespace dmt
