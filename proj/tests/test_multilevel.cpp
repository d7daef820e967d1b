#include "dmt/multilevel.hpp"

#include "dmt/outer.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace dmt;

TEST_CASE("parameter validation") {
  CHECK_THROWS(three_level_rate({0.5, 0.3}, {0.2, 0.3, 0.1}));
  CHECK_THROWS(three_level_rate({0.5, 0.3}, {0.3, -0.1, 0.1}));
  CHECK_THROWS(three_level_rate({0.5, 0.3}, {0.3, 0.2, 0.6}));
  CHECK_THROWS(three_level_rate({0.5, 0.3}, {0.3, 0.2, -0.1}));
  CHECK_THROWS(three_level_rate({0.5, -0.3}, {0.3, 0.2, 0.1}));
  CHECK_NOTHROW(three_level_rate({0.5, 0.3}, {0.3, 0.3, 0.5}));
}

TEST_CASE("merged levels reduce to the two-level scheme") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> ua(0, 1.3), ud(0, 1), uv(0, 1.3), ug(0, 1);
  for (int i = 0; i < 50; ++i) {
    const double a = ua(rng), d = ud(rng), v = uv(rng);
    const double two = sym_rate(subrate_caps({a, d}, PowerSplit::equal(v)));
    INFO("alpha=" << a << " d=" << d << " v=" << v);
    CHECK(std::abs(three_level_rate({a, d}, {v, v, 0.0}) - two) <= 1e-9);
    // With equal middle and bottom powers the decoding threshold is moot.
    CHECK(std::abs(three_level_rate({a, d}, {v, v, a * ug(rng)}) - two) <= 1e-9);
  }
}

TEST_CASE("operating point reaching 55/152") {
  const double r = three_level_rate({0.5, 0.375}, {73.0 / 152, 49.0 / 152, 56.0 / 152});
  CHECK(r == doctest::Approx(55.0 / 152).epsilon(1e-12));
}

TEST_CASE("any parameters stay below the outer bound") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 300; ++i) {
    const double a = 1.3 * u(rng), d = u(rng);
    const double v1 = 1.3 * u(rng), v2 = v1 * u(rng), g = a * u(rng);
    INFO("alpha=" << a << " d=" << d << " params=" << v1 << "," << v2 << "," << g);
    CHECK(three_level_rate({a, d}, {v1, v2, g}) <= worst_case_outer({a, d}) + 1e-9);
  }
}

TEST_CASE("optimizer improves on two levels at the anchor") {
  const auto r = optimize_three_level({0.5, 0.375}, 1.0 / 152);
  CHECK(r.rate >= 11.0 / 32 + 1e-4);
  CHECK(r.rate <= 0.375 + 1e-9);
  CHECK(r.rate == doctest::Approx(55.0 / 152).epsilon(1e-9));
  CHECK(r.params.v1 >= r.params.v2);
  CHECK(r.params.gamma <= 0.5);
}

TEST_CASE("no fading range leaves nothing to gain") {
  CHECK(optimize_three_level({0.5, 0}, 1.0 / 50).rate == doctest::Approx(w_curve(0.5)));
}

TEST_CASE("sandwich and monotonicity on a coarse grid") {
  for (double a : {0.3, 0.5, 0.8, 1.1}) {
    double prev = kInfinity;
    for (double d : {0.0, 0.2, 0.4, 0.6, 0.8}) {
      const SymDmtQuery q{a, d};
      const double three = optimize_three_level(q, 1.0 / 40).rate;
      INFO("alpha=" << a << " d=" << d);
      CHECK(three >= optimize_power_split(q, 1.0 / 40).rate - 1e-6);
      CHECK(three <= worst_case_outer(q) + 1e-9);
      CHECK(three <= prev + 1e-9);
      prev = three;
    }
  }
}
