#include "dmt/hk.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace dmt;

namespace {

std::vector<double> steps(double lo, double hi, double step) {
  std::vector<double> v;
  for (int i = 0; lo + i * step <= hi + 1e-9; ++i) v.push_back(lo + i * step);
  return v;
}

}  // namespace

TEST_CASE("caps at a single state") {
  const auto c = subrate_caps({0.5, 0}, PowerSplit::equal(0.5));
  CHECK(c.a11 == doctest::Approx(0.5));
  CHECK(c.a14 == doctest::Approx(1.0));
  CHECK(c.a12 == doctest::Approx(1.0));
  CHECK(c.a13 == doctest::Approx(0.5));
}

TEST_CASE("caps match the grid oracle") {
  const auto c = subrate_caps({2.0 / 3, 0.2}, PowerSplit::equal(2.0 / 3));
  CHECK(c.a11 == doctest::Approx(1 - 2.0 / 3 - 0.2).epsilon(1e-9));
  const auto g = oracle::grid_caps(2.0 / 3, 2.0 / 3, 2.0 / 3, 0.2, 1e-3);
  CHECK(std::abs(c.a11 - g[0]) <= 2e-3);
}

TEST_CASE("caps agree with brute-force grid minimization on random tuples") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> ua(0, 1.3), ud(0, 1), uv(0, 1.3);
  for (int i = 0; i < 200; ++i) {
    const double a = ua(rng), d = ud(rng), v1 = uv(rng), v2 = uv(rng);
    const auto c = subrate_caps({a, d}, {v1, v2});
    const auto g1 = oracle::grid_caps(a, v1, v2, d, 1e-3);
    const auto g2 = oracle::grid_caps(a, v2, v1, d, 1e-3);
    const std::array<double, 8> lib = {c.a11, c.a12, c.a13, c.a14, c.a21, c.a22, c.a23, c.a24};
    const std::array<double, 8> ref = {g1[0], g1[1], g1[2], g1[3], g2[0], g2[1], g2[2], g2[3]};
    for (int k = 0; k < 8; ++k) {
      INFO("alpha=" << a << " d=" << d << " v=(" << v1 << "," << v2 << ") cap " << k);
      CHECK(std::abs(lib[k] - ref[k]) <= 2e-3);
      // Vertex enumeration is exact, the grid can only overestimate.
      CHECK(lib[k] <= ref[k] + 1e-12);
    }
    CHECK(c.ordered());
  }
}

TEST_CASE("symmetric rate") {
  CHECK(sym_rate({1, 1, 1, 1, 1, 1, 1, 1}) == 1.0);
  CHECK(sym_rate({0.2, 0, 1, 1, 1, 1, 1, 1}) == 0.0);
  const double v = (3 * 0.5 + 0.375 - 1) / 2;
  CHECK(sym_rate(subrate_caps({0.5, 0.375}, PowerSplit::equal(v))) ==
        doctest::Approx(11.0 / 32).epsilon(1e-12));
}

TEST_CASE("symmetric rate is non-decreasing in each cap") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 500; ++i) {
    std::array<double, 8> c;
    for (double& x : c) x = u(rng);
    const auto base = sym_rate({c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7]});
    for (int k = 0; k < 8; ++k) {
      auto up = c;
      up[k] += u(rng);
      CHECK(sym_rate({up[0], up[1], up[2], up[3], up[4], up[5], up[6], up[7]}) >= base);
    }
  }
}

TEST_CASE("all-public rate") {
  CHECK(all_public_rate({0.5, 0.6}) == doctest::Approx(0.225));
  CHECK(all_public_rate({1.2, 0.5}) == doctest::Approx(0.425));
  // Strong interference at small d: the sum cap is set by alpha - d.
  CHECK(all_public_rate({2.0, 0.1}) == doctest::Approx(0.9));
}

TEST_CASE("power split optimizer") {
  CHECK(std::abs(optimize_power_split({0.5, 0.375}, 1e-3).rate - 11.0 / 32) <= 1e-3);

  const auto r = optimize_power_split({0.8, 0.1}, 1e-3);
  CHECK(std::abs(r.rate - 0.5) <= 1e-3);
  CHECK(r.split.v1 == doctest::Approx(0.8).epsilon(1e-6));
  CHECK_FALSE(r.all_public);

  const auto p = optimize_power_split({0.5, 0.6}, 1e-3);
  CHECK(std::abs(p.rate - 0.225) <= 1e-3);

  CHECK_THROWS(optimize_power_split({0.5, 0.3}, 0.0));
}

TEST_CASE("unequal splits never lose to equal splits") {
  for (auto [a, d] : {std::pair{0.5, 0.375}, {0.3, 0.2}, {0.9, 0.05}}) {
    const auto eq = optimize_power_split({a, d}, 0.01, true);
    const auto ne = optimize_power_split({a, d}, 0.01, false);
    CHECK(ne.rate >= eq.rate - 1e-12);
    CHECK(ne.rate <= eq.rate + 5e-3);
  }
}

TEST_CASE("optimizer tie-breaking is deterministic") {
  // At d = 1 every split gives rate 0; the smallest split must be reported.
  const auto r = optimize_power_split({0.5, 1.0}, 0.01, false);
  CHECK(r.rate == 0.0);
  CHECK(r.split.v1 == 0.0);
  CHECK(r.split.v2 == 0.0);
}

TEST_CASE("table rows") {
  auto t = hk_table_rate({1.2, 0.5});
  CHECK(t.rate == doctest::Approx(0.425));
  CHECK(t.all_public);
  CHECK(t.split.v1 == 0.0);
  CHECK(t.regime == "T1");

  t = hk_table_rate({0.65, 0.3});
  CHECK(t.rate == doctest::Approx(0.3625));
  CHECK(t.split.v1 == doctest::Approx((3 * 0.65 + 0.3 - 1) / 2));

  t = hk_table_rate({0.25, 0.1});
  CHECK(t.rate == doctest::Approx(0.65));
  CHECK(t.split.v1 == doctest::Approx(0.25));

  CHECK(hk_table_rate({0.8, 0.1}).rate == doctest::Approx(0.5));
  CHECK(hk_table_rate({0.5, 0.375}).rate == doctest::Approx(11.0 / 32));
  CHECK_THROWS_AS(hk_table_rate({0.5, 1.1}), std::domain_error);
  CHECK_THROWS_AS(hk_table_rate({0.5, -0.1}), std::domain_error);
  CHECK_THROWS_AS(hk_table_rate({-0.5, 0.1}), std::domain_error);
}

TEST_CASE("table matches the grid optimizer") {
  for (double a : steps(0.05, 1.25, 0.05)) {
    for (double d : steps(0, 1, 0.05)) {
      INFO("alpha=" << a << " d=" << d);
      CHECK(std::abs(hk_table_rate({a, d}).rate - optimize_power_split({a, d}, 1e-3).rate) <= 5e-3);
    }
  }
}

TEST_CASE("table is continuous across regime boundaries") {
  const double eps = 1e-6;
  const auto jump_in_d = [&](double a, double d) {
    return std::abs(hk_table_rate({a, d + eps}).rate - hk_table_rate({a, d - eps}).rate);
  };
  const auto jump_in_a = [&](double a, double d) {
    return std::abs(hk_table_rate({a + eps, d}).rate - hk_table_rate({a - eps, d}).rate);
  };
  for (double a : steps(0.02, 0.98, 0.02)) {
    for (double b : {1 - a, 5 * a - 3, 1 - 7 * a / 5, a - 0.5, 1 - 2 * a}) {
      if (b > eps && b < 1 - eps) CHECK(jump_in_d(a, b) <= 1e-5);
    }
  }
  for (double d : steps(0.0, 1.0, 0.01)) {
    const double dd = std::clamp(d, eps, 1 - eps);
    for (double a : {1.0, 2.0 / 3, 5.0 / 8}) CHECK(jump_in_a(a, dd) <= 1e-5);
  }
}

TEST_CASE("table is non-increasing in d") {
  for (double a : steps(0.0, 2.0, 0.01)) {
    double prev = kInfinity;
    for (double d : steps(0, 1, 0.005)) {
      const double r = hk_table_rate({a, d}).rate;
      CHECK(r <= prev + 1e-12);
      prev = r;
    }
  }
}
