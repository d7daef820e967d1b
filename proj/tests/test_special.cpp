#include "dmt/special.hpp"

#include "dmt/hk.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace dmt;

namespace {

std::vector<double> steps(double lo, double hi, double step) {
  std::vector<double> v;
  for (int i = 0; lo + i * step <= hi + 1e-9; ++i) v.push_back(lo + i * step);
  return v;
}

}  // namespace

TEST_CASE("Z channel inner region") {
  auto r = z_inner_region(1, 1, 0.5, 0, 0);
  CHECK(r.sum_max == doctest::Approx(1.5));
  r = z_inner_region(1, 1, 0.7, 1, 1);
  CHECK(r.r1_max == 0.0);
  CHECK(r.r2_max == 0.0);
  CHECK(r.contains(0, 0));
  CHECK_FALSE(r.contains(0, 0.01));
  CHECK_FALSE(r.contains(0.01, 0));
  r = z_inner_region(1, 1, 0, 0.3, 0.3);
  CHECK(r.sum_max == doctest::Approx(1.4));
  CHECK_THROWS(z_inner_region(1, 1, 0.5, -0.1, 0));
}

TEST_CASE("Z channel outer region") {
  CHECK(z_outer_region(1, 1, 0.5, 0, 0).sum_max == doctest::Approx(1.5));
  CHECK(z_outer_region(1, 1, 0.5, 0.375, 0.375).sum_max ==
        doctest::Approx(z_inner_region(1, 1, 0.5, 0.375, 0.375).sum_max));
  const auto r = z_outer_region(1, 1, 2, 0, 0);
  CHECK(r.sum_max == doctest::Approx(2));
  CHECK(r.r1_max + r.r2_max == doctest::Approx(2));
  CHECK(z_outer_region(1, 1.2, 0.5, 0.1, 0.3).r2_max == doctest::Approx(0.9));
}

TEST_CASE("Z channel outer sum cap is the worst state of the per-state sum bound") {
  // Per state the sum rate is at most (max(b1 - h1, a1 - g1))^+ + (b2 - a1 - h2 + g1)^+.
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 100; ++i) {
    const double b1 = 2 * u(rng), b2 = 2 * u(rng), a1 = 2.5 * u(rng);
    const double d1 = 1.5 * u(rng), d2 = 1.5 * u(rng);
    double best = std::numeric_limits<double>::infinity();
    const auto rx1 = oracle::simplex_grid(d1, d1 / 100);
    for (const auto& [h1, g1] : rx1) {
      const double first = oracle::pp(std::max(b1 - h1, a1 - g1));
      // The second term is smallest at the deepest direct fade h2 = d2.
      best = std::min(best, first + oracle::pp(b2 - a1 - d2 + g1));
    }
    INFO(b1 << " " << b2 << " " << a1 << " " << d1 << " " << d2);
    CHECK(std::abs(z_outer_region(b1, b2, a1, d1, d2).sum_max - best) <= 2e-2);
  }
}

TEST_CASE("Z channel regions coincide") {
  CHECK(z_regions_match(0.5, 0.2));
  CHECK(z_regions_match(1.5, 0.7));
  for (double a : steps(0, 2, 0.05))
    for (double d : steps(0, 1, 0.05)) CHECK(z_regions_match(a, d));
  CHECK_THROWS(z_regions_match(0.5, 1.5));
}

TEST_CASE("Z channel inner region shrinks with diversity") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 500; ++i) {
    const double b1 = 1 + u(rng), b2 = 1 + u(rng), a = 2 * u(rng), d1 = u(rng), d2 = u(rng);
    const auto base = z_inner_region(b1, b2, a, d1, d2);
    for (const auto& more : {z_inner_region(b1, b2, a, d1 + 0.1, d2),
                             z_inner_region(b1, b2, a, d1, d2 + 0.1)}) {
      CHECK(more.r1_max <= base.r1_max + 1e-12);
      CHECK(more.r2_max <= base.r2_max + 1e-12);
      CHECK(more.sum_max <= base.sum_max + 1e-12);
    }
  }
}

TEST_CASE("cross-link fading DMT") {
  CHECK(crosslink_dmt(0, 0.7) == 1.0);
  CHECK(crosslink_dmt(1, 0) == doctest::Approx(0.5));
  CHECK(crosslink_dmt(2, 0.5) == doctest::Approx(0.75));
  CHECK(crosslink_dmt(0.4, 0.9) == doctest::Approx(0.6));
  CHECK(crosslink_dmt(2, 1.5) == doctest::Approx(0.5));
  CHECK_THROWS(crosslink_dmt(-0.1, 0.2));
}

TEST_CASE("cross-link schemes") {
  auto r = crosslink_scheme_rates(0.4, 0.3);
  CHECK(r.orthogonal == 0.5);
  CHECK(r.tin == doctest::Approx(0.6));
  CHECK(r.best() == doctest::Approx(crosslink_dmt(0.4, 0.3)));

  r = crosslink_scheme_rates(1.5, 1.2);
  CHECK(r.orthogonal == doctest::Approx(crosslink_dmt(1.5, 1.2)));

  r = crosslink_scheme_rates(0.8, 0.1);
  CHECK(r.best() == doctest::Approx(crosslink_dmt(0.8, 0.1)));
}

TEST_CASE("cross-link coverage and generic evaluation") {
  for (double a : steps(0, 2, 0.05)) {
    for (double d : steps(0, 2, 0.05)) {
      INFO("alpha=" << a << " d=" << d);
      const auto r = crosslink_scheme_rates(a, d);
      CHECK(std::abs(r.best() - crosslink_dmt(a, d)) <= 1e-9);
      CHECK(std::abs(r.hk - r.hk_generic) <= 2e-3);
      CHECK(crosslink_dmt(a, d) >= 0.5);
    }
  }
}

TEST_CASE("cross-link tradeoff is flat once d passes alpha - 1/2") {
  for (double a : steps(0, 1, 0.05)) {
    const double floor = std::max(0.5, 1 - a);
    for (double d : steps(std::max(0.0, a - 0.5), 2, 0.05)) CHECK(crosslink_dmt(a, d) == doctest::Approx(floor));
  }
  for (double a : steps(0, 0.5, 0.05))
    for (double d : steps(0, 2, 0.1)) CHECK(crosslink_dmt(a, d) == doctest::Approx(1 - a));
}
