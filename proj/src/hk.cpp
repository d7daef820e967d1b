#include "dmt/hk.hpp"

#include "dmt/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace dmt {

namespace {

using Aff = Affine<double, 2>;
using Cut = Hyperplane<double, 2>;

Aff affine(double ch, double cg, double c) { return {StatePoint(ch, cg), c}; }

std::vector<StatePoint> vertices(const StateRegion& states, std::span<const Aff> pieces) {
  std::vector<Cut> cuts;
  add_crossings<double, 2>(pieces, cuts);
  auto v = arrangement_vertices<double, 2>(states, cuts);
  if (v.empty()) throw std::invalid_argument("state region is empty");
  return v;
}

std::vector<double> grid(double hi, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be > 0");
  std::vector<double> g;
  const auto n = static_cast<long>(std::floor(hi / step + 1e-9));
  g.reserve(n + 2);
  for (long k = 0; k <= n; ++k) g.push_back(static_cast<double>(k) * step);
  if (g.back() < hi - 1e-12) g.push_back(hi);
  return g;
}

}  // namespace

bool SubRateCaps::ordered(double tol) const {
  auto chain = [tol](double x1, double x2, double x3, double x4) {
    return x1 >= -tol && x1 <= x2 + tol && x1 <= x3 + tol && x3 <= x4 + tol && x2 <= x4 + tol;
  };
  return chain(a11, a12, a13, a14) && chain(a21, a22, a23, a24);
}

std::array<double, 4> receiver_caps(double alpha, double v_own, double v_other,
                                    const StateRegion& states) {
  const std::array<Aff, 5> pieces = {
      affine(-1, 0, 1.0),                // own public
      affine(-1, 0, 1.0 - v_own),        // own private
      affine(0, -1, alpha),              // other public
      affine(0, -1, alpha - v_other),    // other private
      affine(0, 0, 0.0),
  };
  const auto& [own_pub, own_priv, oth_pub, oth_priv, zero] = pieces;
  // Only these crossings are breakpoints of the four cap expressions.
  const std::array<Aff, 2> noise_kink = {oth_priv, zero};
  const std::array<Aff, 2> priv_kink = {own_priv, oth_pub};
  const std::array<Aff, 2> pub_kink = {own_pub, oth_pub};
  std::vector<Cut> cuts;
  add_crossings<double, 2>(noise_kink, cuts);
  add_crossings<double, 2>(priv_kink, cuts);
  add_crossings<double, 2>(pub_kink, cuts);
  const auto vs = arrangement_vertices<double, 2>(states, cuts);
  if (vs.empty()) throw std::invalid_argument("state region is empty");

  std::array<double, 4> inner;
  inner.fill(kInfinity);
  for (const auto& x : vs) {
    const double noise = pos_part(oth_priv(x));
    inner[0] = std::min(inner[0], own_priv(x) - noise);
    inner[1] = std::min(inner[1], own_pub(x) - noise);
    inner[2] = std::min(inner[2], std::max(own_priv(x), oth_pub(x)) - noise);
    inner[3] = std::min(inner[3], std::max(own_pub(x), oth_pub(x)) - noise);
  }
  for (double& c : inner) c = pos_part(c);
  return inner;
}

SubRateCaps subrate_caps(double alpha, const PowerSplit& split, const StateRegion& rx1,
                         const StateRegion& rx2) {
  if (split.v1 < 0.0 || split.v2 < 0.0) throw std::invalid_argument("power split must be >= 0");
  const auto c1 = receiver_caps(alpha, split.v1, split.v2, rx1);
  const auto c2 = receiver_caps(alpha, split.v2, split.v1, rx2);
  return {c1[0], c1[1], c1[2], c1[3], c2[0], c2[1], c2[2], c2[3]};
}

SubRateCaps subrate_caps(const SymDmtQuery& query, const PowerSplit& split) {
  if (query.d < 0.0) throw std::invalid_argument("diversity must be >= 0");
  const auto region = simplex_region(query.d);
  return subrate_caps(query.alpha, split, region, region);
}

double sym_rate(const SubRateCaps& c) {
  return std::min({c.a12, c.a22, (c.a11 + c.a24) / 2, (c.a21 + c.a14) / 2, (c.a13 + c.a23) / 2,
                   (c.a11 + c.a14 + c.a23) / 3, (c.a21 + c.a24 + c.a13) / 3});
}

double all_public_rate(double alpha, const StateRegion& rx1, const StateRegion& rx2) {
  const std::array<Aff, 2> pieces = {affine(-1, 0, 1.0), affine(0, -1, alpha)};
  double rate = kInfinity;
  for (const StateRegion* rx : {&rx1, &rx2}) {
    const auto vs = vertices(*rx, pieces);
    double own = kInfinity, sum = kInfinity;
    for (const auto& x : vs) {
      own = std::min(own, pieces[0](x));
      sum = std::min(sum, std::max(pieces[0](x), pieces[1](x)));
    }
    rate = std::min({rate, pos_part(own), pos_part(sum) / 2});
  }
  return rate;
}

double all_public_rate(const SymDmtQuery& query) {
  const auto region = simplex_region(query.d);
  return all_public_rate(query.alpha, region, region);
}

PowerSplitResult optimize_power_split(const SymDmtQuery& query, double grid_step,
                                      bool equal_splits) {
  if (query.d < 0.0) throw std::invalid_argument("diversity must be >= 0");
  const auto vs = grid(std::max(query.alpha, 1.0), grid_step);
  const auto region = simplex_region(query.d);
  const std::size_t n = vs.size();

  auto split_at = [&](std::size_t i) {
    return equal_splits ? PowerSplit::equal(vs[i]) : PowerSplit{vs[i / n], vs[i % n]};
  };
  const std::size_t count = equal_splits ? n : n * n;
  const ArgMax best = parallel_argmax(
      count,
      [&](std::size_t i) { return sym_rate(subrate_caps(query.alpha, split_at(i), region, region)); },
      1e-12);

  PowerSplitResult out{split_at(best.index), best.value, false};
  const double pub = all_public_rate(query.alpha, region, region);
  if (pub > out.rate + kTolerance) out = {PowerSplit{0.0, 0.0}, pub, true};
  return out;
}

TableRate hk_table_rate(const SymDmtQuery& q) {
  const double a = q.alpha, d = q.d;
  if (!(d >= 0.0 && d <= 1.0)) throw std::domain_error("hk_table_rate: requires 0 <= d <= 1");
  if (!(a >= 0.0)) throw std::domain_error("hk_table_rate: requires alpha >= 0");

  const auto all_public = [&](std::string_view row) {
    const double r = std::min(1 - d, std::max((1 - d + a) / 4, (a - d) / 2));
    return TableRate{r, PowerSplit{0.0, 0.0}, true, row};
  };
  const auto split = [](double v, double r, std::string_view row) {
    return TableRate{r, PowerSplit::equal(v), false, row};
  };

  if (a >= 1) return all_public("T1");
  if (d > 1 - a) return all_public("T2");
  if (a >= 2.0 / 3) return split(a, 1 - a / 2 - d, "T3");
  if (a >= 5.0 / 8) {
    if (d > 5 * a - 3) return split((3 * a + d - 1) / 2, (3 - a - 3 * d) / 4, "T4");
    return split(a, a - d, "T5");
  }
  if (d > 1 - 7 * a / 5) return split((3 * a + d - 1) / 2, (3 - a - 3 * d) / 4, "T6");
  if (d > std::max(a - 0.5, 1 - 2 * a)) return split((1 + a - d) / 3, (1 + a - d) / 3, "T7");
  return split(a, std::max(a - d, 1 - a - d), "T8");
}

}  // namespace dmt
