#include "dmt/multilevel.hpp"

#include "dmt/lp.hpp"
#include "dmt/outage.hpp"
#include "dmt/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace dmt {

namespace {

using Aff = Affine<double, 2>;

// Per-(v1, v2) data shared by every gamma: the seven exponent pieces and
// their pairwise crossings.
struct Levels {
  std::array<Aff, 3> own;
  std::array<Aff, 3> intf;
  std::vector<Hyperplane<double, 2>> cuts;

  Levels(double alpha, double v1, double v2) {
    const std::array<double, 3> w = {0.0, v2, v1};
    std::vector<Aff> pieces;
    for (int k = 0; k < 3; ++k) {
      own[k] = {StatePoint(-1, 0), 1.0 - w[k]};
      intf[k] = {StatePoint(0, -1), alpha - w[k]};
      pieces.push_back(own[k]);
      pieces.push_back(intf[k]);
    }
    pieces.push_back({StatePoint(0, 0), 0.0});
    add_crossings<double, 2>(pieces, cuts);
  }
};

// Error sets are bitmasks over 3 own levels (bits 0-2) and the decoded
// interferer levels (bits 3-4). caps[key] holds the tightest bound for each
// multiset of level counts, key = n_top + 3 n_mid + 9 n_bot.
void add_cell(const Levels& lv, double d, double g_lo, double g_hi, int decoded,
              std::array<double, 27>& caps) {
  StateRegion cell = simplex_region(d);
  cell.bound(1, g_lo, g_hi);
  const auto vs = arrangement_vertices<double, 2>(cell, lv.cuts);
  if (vs.empty()) return;

  const int n_msgs = 3 + decoded;
  std::vector<std::array<double, 6>> exps;  // per vertex: message exponents
  std::vector<double> noise;
  exps.reserve(vs.size());
  for (const auto& x : vs) {
    std::array<double, 6> e{};
    for (int k = 0; k < 3; ++k) e[k] = lv.own[k](x);
    for (int k = 0; k < decoded; ++k) e[3 + k] = lv.intf[k](x);
    double n = 0.0;
    for (int k = decoded; k < 3; ++k) n = std::max(n, lv.intf[k](x));
    exps.push_back(e);
    noise.push_back(n);
  }
  for (int s = 1; s < (1 << n_msgs); ++s) {
    if ((s & 7) == 0) continue;
    std::array<int, 3> count{};
    for (int m = 0; m < n_msgs; ++m)
      if (s >> m & 1) ++count[m < 3 ? m : m - 3];
    double bound = kInfinity;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      double top = -kInfinity;
      for (int m = 0; m < n_msgs; ++m)
        if (s >> m & 1) top = std::max(top, exps[i][m]);
      bound = std::min(bound, top - noise[i]);
    }
    const int key = count[0] + 3 * count[1] + 9 * count[2];
    caps[key] = std::min(caps[key], pos_part(bound));
  }
}

double rate_with(const Levels& lv, const SymDmtQuery& q, double gamma) {
  std::array<double, 27> caps;
  caps.fill(kInfinity);
  const double edge = q.alpha - gamma;  // strong-interference cell is g <= edge
  if (edge >= 0.0) add_cell(lv, q.d, 0.0, std::min(q.d, edge), 2, caps);
  if (edge < q.d) add_cell(lv, q.d, std::max(0.0, edge), q.d, 1, caps);

  int rows = 0;
  for (double c : caps) rows += std::isfinite(c) ? 1 : 0;
  Eigen::MatrixXd a(rows, 3);
  Eigen::VectorXd b(rows);
  int r = 0;
  for (int key = 0; key < 27; ++key) {
    if (!std::isfinite(caps[key])) continue;
    a.row(r) << key % 3, key / 3 % 3, key / 9;
    b(r) = caps[key];
    ++r;
  }
  return maximize_nonneg<double>(a, b, Eigen::Vector3d::Ones()).value;
}

std::vector<double> grid(double hi, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be > 0");
  std::vector<double> g;
  const auto n = static_cast<long>(std::floor(hi / step + 1e-9));
  for (long k = 0; k <= n; ++k) g.push_back(static_cast<double>(k) * step);
  if (g.back() < hi - 1e-12) g.push_back(hi);
  return g;
}

}  // namespace

void ThreeLevelParams::validate(double alpha) const {
  if (!(v2 >= 0.0 && v1 >= v2)) throw std::invalid_argument("three-level: need v1 >= v2 >= 0");
  if (!(gamma >= 0.0 && gamma <= alpha + kTolerance))
    throw std::invalid_argument("three-level: need 0 <= gamma <= alpha");
}

double three_level_rate(const SymDmtQuery& query, const ThreeLevelParams& p) {
  if (query.d < 0.0) throw std::invalid_argument("diversity must be >= 0");
  p.validate(query.alpha);
  return rate_with(Levels(query.alpha, p.v1, p.v2), query, p.gamma);
}

ThreeLevelResult optimize_three_level(const SymDmtQuery& query, double grid_step) {
  if (query.d < 0.0) throw std::invalid_argument("diversity must be >= 0");
  const auto vs = grid(std::max(query.alpha, 1.0), grid_step);
  const auto gs = grid(std::max(query.alpha, 0.0), grid_step);

  // Pairs (i, k) with k <= i in lexicographic order.
  std::vector<std::array<std::size_t, 2>> pairs;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t k = 0; k <= i; ++k) pairs.push_back({i, k});

  std::vector<ArgMax> per_pair(pairs.size());
  const ArgMax best = parallel_argmax(
      pairs.size(),
      [&](std::size_t p) {
        const Levels lv(query.alpha, vs[pairs[p][0]], vs[pairs[p][1]]);
        ArgMax inner{0, -kInfinity};
        for (std::size_t j = 0; j < gs.size(); ++j) {
          const double r = rate_with(lv, query, gs[j]);
          if (r > inner.value + 1e-12) inner = {j, r};
        }
        per_pair[p] = inner;
        return inner.value;
      },
      1e-12);

  const auto& [i, k] = pairs[best.index];
  ThreeLevelResult out{{vs[i], vs[k], gs[per_pair[best.index].index]}, best.value, false};
  const double pub = all_public_rate(query);
  if (pub > out.rate + kTolerance) out = {ThreeLevelParams{}, pub, true};
  return out;
}

}  // namespace dmt
