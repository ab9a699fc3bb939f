#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "lcsp/one_center.hpp"
#include "lcsp/oracles.hpp"
#include "support.hpp"

using namespace lcsp;
using Catch::Approx;

TEST_CASE("min_enclosing examples", "[one_center]") {
  const NormP l2(2);
  SECTION("single point") {
    const std::vector<Segment> segs{Segment::point({5, 3})};
    const PlacedCircle c = min_enclosing(segs, 10, l2);
    CHECK(c.cx == Approx(5).margin(1e-8));
    CHECK(c.radius == Approx(3).margin(2e-9));
  }
  SECTION("symmetric pair") {
    const std::vector<Segment> segs{Segment::point({0, 1}), Segment::point({10, 1})};
    const PlacedCircle c = min_enclosing(segs, 10, l2);
    CHECK(c.cx == Approx(5).margin(1e-8));
    CHECK(c.radius == Approx(std::sqrt(26.0)).margin(2e-9));
  }
  SECTION("one point dominates the bisector") {
    const std::vector<Segment> segs{Segment::point({0, 1}), Segment::point({2, 3})};
    const PlacedCircle c = min_enclosing(segs, 10, l2);
    const auto grid = oracle::grid_one_center(segs, l2, oracle::GridSpec(1e-4, {0, 10}));
    CHECK(grid.cx == Approx(2).margin(1e-4));
    CHECK(grid.radius == Approx(3).margin(1e-6));
    CHECK(c.cx == Approx(2).margin(1e-6));
    CHECK(c.radius == Approx(3).margin(2e-9));
  }
  SECTION("empty input") { CHECK_THROWS_AS(min_enclosing({}, 10, l2), Error); }
}

TEST_CASE("min_enclosing properties", "[one_center][property]") {
  testing::Gen gen(31);
  const Tolerance tol;
  const double L = 10;
  const Interval dom{0, L};
  for (int trial = 0; trial < 150; ++trial) {
    const NormP norm(gen.norm_exponent());
    const auto segs = gen.segments(static_cast<std::size_t>(gen.integer(1, 12)), -5, 15);
    const PlacedCircle c = min_enclosing(segs, L, norm, tol);
    INFO("trial " << trial << " p=" << norm.p());

    REQUIRE(dom.contains(c.cx));
    // Enclosure.
    for (const Segment& s : segs) CHECK(axis_distance(c.cx, s, norm) <= c.radius + 2 * tol.eps);
    // Tightening.
    double far = 0;
    for (const Segment& s : segs) far = std::max(far, axis_distance(c.cx, s, norm));
    CHECK((far >= c.radius - 2 * tol.eps || c.cx == 0.0 || c.cx == L));
    // Feasibility flips within eps of the radius.
    auto meets = [&](double R) {
      std::vector<Interval> cov;
      for (const Segment& s : segs) cov.push_back(covering_interval(s, R, norm, tol));
      return !intersect_all(cov, dom).empty();
    };
    if (c.radius > tol.eps) CHECK_FALSE(meets(c.radius - tol.eps));
    CHECK(meets(c.radius + tol.eps));
    // Dense grid oracle.
    const auto grid = oracle::grid_one_center(segs, norm, oracle::GridSpec(1e-3, dom));
    CHECK(c.radius == Approx(grid.radius).margin(2e-3));
    CHECK(c.radius <= grid.radius + 2 * tol.eps);
  }
}

TEST_CASE("min_enclosing on a degenerate domain", "[one_center]") {
  const std::vector<Segment> segs{{{-3, 4}, {1, 4}}};
  const PlacedCircle c = min_enclosing(segs, 0, NormP(2));
  CHECK(c.cx == 0.0);
  CHECK(c.radius == Approx(4));
}
