#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "lcsp/covering.hpp"
#include "support.hpp"

using namespace lcsp;
using Catch::Approx;

namespace {

void check_interval(const Interval& iv, double lo, double hi) {
  REQUIRE_FALSE(iv.empty());
  CHECK(iv.lo == Approx(lo).margin(2e-9));
  CHECK(iv.hi == Approx(hi).margin(2e-9));
}

}  // namespace

TEST_CASE("covering_interval examples", "[covering]") {
  const NormP l2(2);
  check_interval(covering_interval({{2, 0}, {5, 0}}, 1, l2), 1, 6);
  CHECK(covering_interval({{0, 2}, {10, 2}}, 1, l2).empty());
  check_interval(covering_interval({{-3, 1}, {3, 1}}, std::sqrt(2.0), l2), -4, 4);

  SECTION("vertical segment based on the axis") {
    // The nearest point is the base for every x, so the reach is R both ways.
    check_interval(covering_interval({{0, 0}, {0, 5}}, 2, l2), -2, 2);
  }
  SECTION("steep segment whose lower end sits on the right") {
    // Endpoint formulas anchored at the left end would give u = -0.1411.
    const Segment s{{0, 0.99}, {0.1, 0.01}};
    const Interval iv = covering_interval(s, 1, l2);
    auto sampled = [&](double x) {
      double d = std::numeric_limits<double>::infinity();
      for (int k = 0; k <= 100000; ++k) d = std::min(d, lp_distance({x, 0}, s.at(k / 100000.0), l2));
      return d;
    };
    CHECK(sampled(-0.9) < 1.0);
    CHECK(sampled(-0.91) > 1.0);
    CHECK(iv.contains(-0.9));
    CHECK_FALSE(iv.contains(-0.91));
    CHECK(iv.hi == Approx(0.1 + std::sqrt(1 - 0.0001)).margin(2e-9));
  }
  SECTION("empty representation") {
    const Interval e = covering_interval({{0, 5}, {1, 6}}, 1, l2);
    CHECK(e.empty());
    CHECK(e.lo == std::numeric_limits<double>::infinity());
    CHECK(e.hi == -std::numeric_limits<double>::infinity());
  }
  SECTION("negative radius is rejected") { CHECK_THROWS_AS(covering_interval({{0, 0}, {1, 1}}, -1, l2), Error); }
}

TEST_CASE("covering_interval agrees with pointwise membership", "[covering][property]") {
  testing::Gen gen(21);
  const Tolerance tol;
  for (int trial = 0; trial < 300; ++trial) {
    const NormP norm(gen.norm_exponent());
    const Segment s = gen.segment();
    const double R = gen.uniform(0, 12);
    const Interval iv = covering_interval(s, R, norm, tol);
    for (int k = 0; k <= 1000; ++k) {
      const double x = -25.0 + 50.0 * k / 1000.0;
      const double d = axis_distance(x, s, norm);
      if (std::abs(d - R) <= 1e-7) continue;  // boundary band
      CHECK(iv.contains(x) == (d <= R));
    }
  }
}

TEST_CASE("covering_interval is monotone in R", "[covering][property]") {
  testing::Gen gen(22);
  for (int trial = 0; trial < 300; ++trial) {
    const NormP norm(gen.norm_exponent());
    const Segment s = gen.segment();
    const double r1 = gen.uniform(0, 10), r2 = r1 + gen.uniform(0, 5);
    const Interval a = covering_interval(s, r1, norm), b = covering_interval(s, r2, norm);
    if (a.empty()) continue;
    REQUIRE_FALSE(b.empty());
    CHECK(b.lo <= a.lo + 1e-9);
    CHECK(b.hi >= a.hi - 1e-9);
  }
}

TEST_CASE("covering_interval at the minimum radius is a point", "[covering][property]") {
  testing::Gen gen(23);
  const Tolerance tol;
  for (int trial = 0; trial < 300; ++trial) {
    const NormP norm(gen.norm_exponent());
    const Segment s{gen.point(-10, 10), gen.point(-10, 10)};
    const AxisArgmin m = distance_argmin_on_line(s, norm, tol);
    const Interval iv = covering_interval(s, m.distance, norm, tol);
    REQUIRE_FALSE(iv.empty());
    CHECK(iv.width() <= 2 * tol.eps);
    CHECK(iv.contains(m.x));
  }
}

TEST_CASE("crossing segment equals the union of its halves", "[covering][property]") {
  testing::Gen gen(24);
  int checked = 0;
  while (checked < 200) {
    const NormP norm(gen.norm_exponent());
    const Segment s{{gen.uniform(-10, 10), gen.uniform(0.1, 10)}, {gen.uniform(-10, 10), gen.uniform(-10, -0.1)}};
    const auto cross = segment_ox_intersection(s);
    REQUIRE(cross.has_value());
    const Point xi{cross->x, 0.0};
    const double R = gen.uniform(0, 8);
    const Interval whole = covering_interval(s, R, norm);
    const Interval h1 = covering_interval({s.a, xi}, R, norm);
    const Interval h2 = covering_interval({xi, s.b}, R, norm);
    REQUIRE_FALSE(whole.empty());
    CHECK(whole.lo == Approx(std::min(h1.lo, h2.lo)).margin(2e-9));
    CHECK(whole.hi == Approx(std::max(h1.hi, h2.hi)).margin(2e-9));
    ++checked;
  }
}

TEST_CASE("intersect_all", "[covering]") {
  const Interval dom{0, 10};
  const std::vector<Interval> a{{0, 5}, {3, 8}};
  CHECK(intersect_all(a, dom) == Interval{3, 5});
  const std::vector<Interval> b{{0, 2}, {4, 6}};
  CHECK(intersect_all(b, dom).empty());
  CHECK(intersect_all({}, dom) == dom);
  const std::vector<Interval> c{{1, 4}, Interval::empty_set()};
  CHECK(intersect_all(c, dom).empty());
}

TEST_CASE("union_covers", "[covering]") {
  const Interval dom{0, 10};
  const std::vector<Interval> chain{{0, 6}, {5, 10}};
  CHECK(union_covers(chain, dom).covered);
  const std::vector<Interval> gap{{0, 4}, {6, 10}};
  const Coverage c = union_covers(gap, dom);
  CHECK_FALSE(c.covered);
  REQUIRE(c.witness_gap.has_value());
  CHECK(*c.witness_gap > 4);
  CHECK(*c.witness_gap < 6);
  const Coverage none = union_covers({}, dom);
  CHECK_FALSE(none.covered);
  CHECK(*none.witness_gap == 0.0);
  const std::vector<Interval> right_short{{-1, 9}};
  CHECK(*union_covers(right_short, dom).witness_gap == 10.0);
}

TEST_CASE("interval algebra agrees with a pointwise grid", "[covering][property]") {
  testing::Gen gen(25);
  const Interval dom{0, 10};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Interval> ivs;
    const int n = gen.integer(0, 6);
    for (int k = 0; k < n; ++k) {
      const double a = gen.uniform(-2, 12);
      ivs.push_back(gen.coin(0.1) ? Interval::empty_set() : Interval::closed(a, a + gen.uniform(0, 6)));
    }
    const Interval meet = intersect_all(ivs, dom);
    const Coverage cov = union_covers(ivs, dom);
    bool any_uncovered = false;
    for (int k = 0; k <= 10000; ++k) {
      const double x = 10.0 * k / 10000.0;
      bool in_all = true, in_any = false;
      for (const Interval& iv : ivs) {
        in_all = in_all && iv.contains(x);
        in_any = in_any || iv.contains(x);
      }
      CHECK(meet.contains(x) == in_all);
      any_uncovered = any_uncovered || !in_any;
    }
    if (any_uncovered) CHECK_FALSE(cov.covered);
    if (!cov.covered) {
      REQUIRE(cov.witness_gap.has_value());
      const double w = *cov.witness_gap;
      CHECK(dom.contains(w));
      for (const Interval& iv : ivs) CHECK_FALSE(iv.contains(w));
    }
  }
}
