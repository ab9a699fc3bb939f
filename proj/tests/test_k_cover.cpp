#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <tuple>
#include <vector>

#include "lcsp/k_cover.hpp"
#include "lcsp/oracles.hpp"
#include "support.hpp"

using namespace lcsp;
using Catch::Approx;

namespace {

const NormP l2(2);

PointSet make(std::vector<Point> pts) { return PointSet(pts); }

std::vector<Point> random_points(testing::Gen& gen, std::size_t n, bool flat = false) {
  std::vector<Point> pts;
  for (std::size_t k = 0; k < n; ++k) pts.push_back({gen.uniform(-10, 10), flat ? 0.0 : gen.uniform(-5, 5)});
  return pts;
}

using Triple = std::tuple<std::size_t, std::size_t, double>;

std::vector<Triple> flatten(const CandidateLists& lists) {
  std::vector<Triple> out;
  for (const auto& list : lists) {
    for (const Candidate& c : list) out.emplace_back(c.left, c.right, c.radius);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Classic 1-D K-interval DP on collinear axis points: a run costs half its span.
double half_span_dp(std::vector<double> xs, std::size_t K) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> f(K + 1, std::vector<double>(n + 1, inf));
  for (std::size_t k = 0; k <= K; ++k) f[k][0] = 0.0;
  for (std::size_t k = 1; k <= K; ++k) {
    for (std::size_t i = 1; i <= n; ++i) {
      f[k][i] = f[k - 1][i];
      for (std::size_t j = 0; j < i; ++j) f[k][i] = std::min(f[k][i], f[k - 1][j] + 0.5 * (xs[i - 1] - xs[j]));
    }
  }
  return f[K][n];
}

}  // namespace

TEST_CASE("PointSet sorts by x and keeps original indices", "[k_cover]") {
  const PointSet ps = make({{3, 1}, {1, 2}, {3, 0}, {-1, 5}});
  REQUIRE(ps.size() == 4);
  CHECK(ps[0].x == -1);
  CHECK(ps.original(0) == 3);
  CHECK(ps.original(1) == 1);
  CHECK(ps.original(2) == 0);  // stable on equal x
  CHECK(ps.original(3) == 2);
}

TEST_CASE("rmin_on_axis examples", "[k_cover]") {
  PlacedCircle c = rmin_on_axis(make({{0, 0}, {4, 0}}), 0, 1, l2);
  CHECK(c.cx == Approx(2).margin(1e-8));
  CHECK(c.radius == Approx(2).margin(2e-9));
  c = rmin_on_axis(make({{0, 1}, {4, 1}}), 0, 1, l2);
  CHECK(c.cx == Approx(2).margin(1e-8));
  CHECK(c.radius == Approx(std::sqrt(5.0)).margin(2e-9));
  c = rmin_on_axis(make({{0, 1}, {2, 3}}), 0, 1, l2);
  CHECK(c.cx == Approx(2).margin(1e-6));
  CHECK(c.radius == Approx(3).margin(2e-9));
  const std::vector<Point> g{{0, 1}, {2, 3}};
  CHECK(detail::golden_group_centre(g, l2).radius == Approx(3).margin(1e-9));
  CHECK_THROWS_AS(rmin_on_axis(make({{0, 1}}), 1, 0, l2), Error);
}

TEST_CASE("two_point_circle examples", "[k_cover]") {
  BisectorCircle c = two_point_circle(make({{0, 1}, {4, 1}}), 0, 1, l2);
  CHECK(c.xc == Approx(2));
  CHECK(c.radius == Approx(std::sqrt(5.0)));
  c = two_point_circle(make({{7, -3}}), 0, 0, l2);
  CHECK(c.xc == 7);
  CHECK(c.radius == 3);
  c = two_point_circle(make({{0, 1}, {2, 3}}), 0, 1, l2);
  CHECK(c.xc == Approx(3));
  CHECK(c.radius == Approx(std::sqrt(10.0)));

  const PointSet stacked = make({{1, 1}, {1, 2}});
  try {
    (void)two_point_circle(stacked, 0, 1, l2);
    FAIL("expected NoBisectorRoot");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoBisectorRoot);
  }
  // Mirror images across OX share every axis circle.
  c = two_point_circle(make({{1, 2}, {1, -2}}), 0, 1, l2);
  CHECK(c.xc == 1);
  CHECK(c.radius == 2);

  SECTION("general p agrees with the equal-distance definition") {
    testing::Gen gen(51);
    for (int trial = 0; trial < 300; ++trial) {
      const NormP norm(trial % 3 == 0 ? 1.0 : gen.uniform(1.1, 4.0));
      const PointSet ps = make(random_points(gen, 2));
      if (ps[0].x == ps[1].x) continue;
      try {
        const BisectorCircle b = two_point_circle(ps, 0, 1, norm);
        const double da = lp_distance({b.xc, 0}, ps[0], norm);
        const double db = lp_distance({b.xc, 0}, ps[1], norm);
        CHECK(da == Approx(db).margin(1e-8));
        CHECK(b.radius == Approx(std::max(da, db)));
      } catch (const Error& e) {
        // Only L1 can miss: the height gap exceeds the horizontal gap.
        REQUIRE(e.code() == ErrorCode::NoBisectorRoot);
        CHECK(norm.manhattan());
        CHECK(std::abs(std::abs(ps[1].y) - std::abs(ps[0].y)) > ps[1].x - ps[0].x);
      }
    }
  }
}

TEST_CASE("build_lists_naive examples", "[k_cover]") {
  {
    const CandidateLists lists = build_lists_naive(make({{0, 0}, {1, 0}, {2, 0}}), l2);
    const auto& l0 = lists[0];
    CHECK(std::any_of(l0.begin(), l0.end(), [](const Candidate& c) { return c.left == 0 && c.radius == 0.0; }));
  }
  {
    const CandidateLists lists = build_lists_naive(make({{0, 0}, {2, 0}}), l2);
    const auto& l1 = lists[1];
    CHECK(std::any_of(l1.begin(), l1.end(), [](const Candidate& c) { return c.left == 0 && c.radius == 1.0; }));
  }
  {
    const CandidateLists lists = build_lists_naive(make({{0, 0}, {1, 0}, {10, 0}}), l2);
    const auto& l1 = lists[1];
    CHECK(std::any_of(l1.begin(), l1.end(), [](const Candidate& c) { return c.left == 0 && c.radius == 0.5; }));
    for (const Candidate& c : lists[2]) {
      if (c.left < 2) CHECK(c.radius >= 4.5);
    }
  }
}

TEST_CASE("build_lists_sweep examples", "[k_cover]") {
  const PointSet line = make({{0, 0}, {1, 0}, {2, 0}});
  CHECK(flatten(build_lists_sweep(line, l2)) == flatten(build_lists_naive(line, l2)));

  const PointSet pair = make({{0, 1}, {4, 1}});
  const CandidateLists lists = build_lists_sweep(pair, l2);
  CHECK(std::any_of(lists[1].begin(), lists[1].end(), [](const Candidate& c) {
    return c.left == 0 && c.radius == Approx(std::sqrt(5.0)) && c.cx == Approx(2);
  }));

  CHECK_THROWS_AS(build_lists_sweep(pair, NormP(1)), Error);
}

TEST_CASE("candidate lists are valid and contain the diagonal", "[k_cover][property]") {
  testing::Gen gen(52);
  for (int trial = 0; trial < 200; ++trial) {
    const NormP norm(gen.norm_exponent());
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 20));
    const PointSet ps = make(random_points(gen, n));
    std::vector<CandidateLists> all{build_lists_naive(ps, norm)};
    if (norm.euclidean()) all.push_back(build_lists_sweep(ps, norm));
    for (const CandidateLists& lists : all) {
      REQUIRE(lists.size() == n);
      for (std::size_t r = 0; r < n; ++r) {
        bool diagonal = false;
        for (const Candidate& c : lists[r]) {
          CHECK(c.right == r);
          CHECK(c.left <= r);
          for (std::size_t k = c.left; k <= r; ++k) CHECK(lp_distance({c.cx, 0}, ps[k], norm) <= c.radius + 2e-9);
          diagonal = diagonal || (c.left == r && c.radius <= std::abs(ps[r].y));
        }
        CHECK(diagonal);
      }
    }
  }
}

TEST_CASE("sweep and naive builders agree", "[k_cover][property]") {
  testing::Gen gen(53);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 60));
    std::vector<Point> pts = random_points(gen, n);
    // Shared x and mirrored y stress the tie handling.
    if (trial % 4 == 1 && n > 2) pts[1].x = pts[0].x;
    if (trial % 4 == 2 && n > 2) pts[2] = {pts[0].x, -pts[0].y};
    if (trial % 4 == 3) {
      for (Point& p : pts) p = {std::round(p.x), std::round(p.y)};
    }
    const PointSet ps = make(pts);
    const auto naive = flatten(build_lists_naive(ps, l2));
    const auto sweep = flatten(build_lists_sweep(ps, l2));
    INFO("trial " << trial << " n=" << n);
    REQUIRE(naive.size() == sweep.size());
    for (std::size_t k = 0; k < naive.size(); ++k) {
      CHECK(std::get<0>(naive[k]) == std::get<0>(sweep[k]));
      CHECK(std::get<1>(naive[k]) == std::get<1>(sweep[k]));
      CHECK(std::get<2>(naive[k]) == Approx(std::get<2>(sweep[k])).margin(1e-9));
    }
  }
}

TEST_CASE("dp_solve examples", "[k_cover]") {
  const PointSet four = make({{0, 0}, {1, 0}, {10, 0}, {11, 0}});
  const AggSpec sum1(1, Aggregate::Sum);
  CoverSolution sol = dp_solve(four, 2, sum1, build_lists_naive(four, l2), l2);
  CHECK(sol.objective == Approx(1.0).margin(1e-9));
  REQUIRE(sol.intervals.size() == 2);
  CHECK(sol.intervals[0] == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(sol.intervals[1] == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(sol.circles[0].cx == Approx(0.5).margin(1e-8));
  CHECK(sol.circles[0].radius == Approx(0.5).margin(1e-9));
  CHECK(sol.circles[1].cx == Approx(10.5).margin(1e-8));

  sol = dp_solve(four, 1, sum1, build_lists_naive(four, l2), l2);
  CHECK(sol.objective == Approx(5.5).margin(1e-9));
  CHECK(sol.circles[0].cx == Approx(5.5).margin(1e-8));

  const PointSet three = make({{0, 1}, {2, 1}, {6, 1}});
  const AggSpec sum2(2, Aggregate::Sum);
  sol = dp_solve(three, 2, sum2, build_lists_naive(three, l2), l2);
  CHECK(sol.objective == Approx(3.0).margin(1e-8));
  REQUIRE(sol.intervals.size() == 2);
  CHECK(sol.intervals[1] == std::pair<std::size_t, std::size_t>{2, 2});
  const PartitionSolution oracle = set_partition_oracle(three, 2, sum2, l2);
  CHECK(oracle.objective == Approx(3.0).margin(1e-8));

  CHECK_THROWS_AS(dp_solve(three, 0, sum2, build_lists_naive(three, l2), l2), Error);
  CHECK(dp_solve(PointSet{}, 2, sum2, {}, l2).intervals.empty());
}

TEST_CASE("set_partition_oracle examples", "[k_cover]") {
  const AggSpec sum1(1, Aggregate::Sum);
  CHECK(set_partition_oracle(make({{0, 0}, {10, 0}}), 2, sum1, l2).objective == Approx(0.0).margin(1e-9));
  const PartitionSolution four = set_partition_oracle(make({{0, 0}, {1, 0}, {10, 0}, {11, 0}}), 2, sum1, l2);
  CHECK(four.objective == Approx(1.0).margin(1e-9));
  CHECK(four.contiguous);
  std::vector<Point> eleven(11, Point{0, 0});
  CHECK_THROWS_AS(set_partition_oracle(make(eleven), 2, sum1, l2), Error);
  CHECK_THROWS_AS(set_partition_oracle(make({{0, 0}}), 5, sum1, l2), Error);
}

TEST_CASE("dp_solve matches the set-partition oracle", "[k_cover][property]") {
  testing::Gen gen(54);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 8));
    const std::size_t K = static_cast<std::size_t>(gen.integer(1, 3));
    const AggSpec spec(gen.coin() ? 1.0 : 2.0, Aggregate::Sum);
    const PointSet ps = make(random_points(gen, n));
    const double naive = dp_solve(ps, K, spec, build_lists_naive(ps, l2), l2).objective;
    const double sweep = dp_solve(ps, K, spec, build_lists_sweep(ps, l2), l2).objective;
    const PartitionSolution oracle = set_partition_oracle(ps, K, spec, l2);
    INFO("trial " << trial << " n=" << n << " K=" << K << " q=" << spec.q);
    CHECK(naive == Approx(oracle.objective).margin(1e-6));
    CHECK(sweep == Approx(oracle.objective).margin(1e-6));
  }
}

TEST_CASE("dp_solve matches the oracle for other norms and max", "[k_cover][property]") {
  testing::Gen gen(55);
  for (int trial = 0; trial < 150; ++trial) {
    const NormP norm(gen.norm_exponent());
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 7));
    const std::size_t K = static_cast<std::size_t>(gen.integer(1, 3));
    const AggSpec spec(gen.coin() ? 1.0 : 2.0, gen.coin() ? Aggregate::Sum : Aggregate::Max);
    const PointSet ps = make(random_points(gen, n));
    const CoverSolution sol = dp_solve(ps, K, spec, build_lists_naive(ps, norm), norm);
    const PartitionSolution oracle = set_partition_oracle(ps, K, spec, norm);
    INFO("trial " << trial << " p=" << norm.p() << " agg=" << (spec.agg == Aggregate::Sum ? "sum" : "max"));
    CHECK(sol.objective == Approx(oracle.objective).margin(1e-6));
  }
}

TEST_CASE("cover solutions are well formed", "[k_cover][property]") {
  testing::Gen gen(56);
  for (int trial = 0; trial < 100; ++trial) {
    const NormP norm(gen.norm_exponent());
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 25));
    const std::size_t K = static_cast<std::size_t>(gen.integer(1, 6));
    const AggSpec spec(gen.uniform(1, 3), gen.coin() ? Aggregate::Sum : Aggregate::Max);
    const PointSet ps = make(random_points(gen, n));
    const CandidateLists lists = build_lists_naive(ps, norm);
    const CoverSolution sol = dp_solve(ps, K, spec, lists, norm);
    REQUIRE(!sol.intervals.empty());
    CHECK(sol.intervals.size() <= K);
    REQUIRE(sol.circles.size() == sol.intervals.size());
    CHECK(sol.intervals.front().first == 0);
    CHECK(sol.intervals.back().second == n - 1);
    double obj = 0.0;
    for (std::size_t g = 0; g < sol.intervals.size(); ++g) {
      const auto [l, r] = sol.intervals[g];
      CHECK(l <= r);
      if (g > 0) CHECK(l == sol.intervals[g - 1].second + 1);
      for (std::size_t k = l; k <= r; ++k) {
        CHECK(lp_distance({sol.circles[g].cx, 0}, ps[k], norm) <= sol.circles[g].radius + 2e-9);
      }
      obj = spec.combine(obj, spec.cost(sol.circles[g].radius));
    }
    CHECK(sol.objective == Approx(obj));
    // More circles never hurt.
    CHECK(dp_solve(ps, K + 1, spec, lists, norm).objective <= sol.objective + 1e-9);
  }
}

TEST_CASE("collinear axis points reduce to the half-span DP", "[k_cover][property]") {
  testing::Gen gen(57);
  const AggSpec sum1(1, Aggregate::Sum);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 30));
    const std::size_t K = static_cast<std::size_t>(gen.integer(1, 5));
    const auto pts = random_points(gen, n, true);
    std::vector<double> xs;
    for (const Point& p : pts) xs.push_back(p.x);
    const PointSet ps = make(pts);
    const double want = half_span_dp(xs, K);
    CHECK(dp_solve(ps, K, sum1, build_lists_naive(ps, l2), l2).objective == Approx(want).margin(1e-9));
    CHECK(dp_solve(ps, K, sum1, build_lists_sweep(ps, l2), l2).objective == Approx(want).margin(1e-9));
  }
}

TEST_CASE("exact-end recurrence is never better than the covering one", "[k_cover][property]") {
  testing::Gen gen(58);
  int worse = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 8));
    const std::size_t K = static_cast<std::size_t>(gen.integer(1, 3));
    const AggSpec spec(gen.coin() ? 1.0 : 2.0, Aggregate::Sum);
    const PointSet ps = make(random_points(gen, n));
    const CandidateLists lists = build_lists_naive(ps, l2);
    const double covering = dp_solve(ps, K, spec, lists, l2).objective;
    const double exact = dp_solve(ps, K, spec, lists, l2, {}, Recurrence::ExactEnd).objective;
    CHECK(exact >= covering - 1e-9);
    if (exact > covering + 1e-6) ++worse;
  }
  UNSCOPED_INFO("exact-end recurrence strictly worse on " << worse << " of 200 instances");
  CHECK(worse >= 0);
}

TEST_CASE("unbounded recurrence uses one circle per point", "[k_cover]") {
  const PointSet ps = make({{0, 0}, {1, 0}, {5, 0}});
  const CoverSolution sol = dp_solve_unbounded(ps, AggSpec(1, Aggregate::Sum), build_lists_naive(ps, l2), l2);
  CHECK(sol.objective == Approx(0.0).margin(1e-12));
  CHECK(sol.intervals.size() == 3);
}
