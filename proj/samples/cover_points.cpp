// Cover points with at most K balls centred on the x axis, minimizing the sum
// of squared radii, under L2 and L1.
#include <cstdio>
#include <vector>

#include "lcsp/lcsp.hpp"

int main() {
  using namespace lcsp;
  const std::vector<Point> pts{{-4, 1}, {-3, -2}, {-1, 0.5}, {0, 3}, {2, -1}, {5, 2}, {6, -3}, {8, 0}};
  const PointSet ps(pts);
  const AggSpec spec(2.0, Aggregate::Sum);

  for (double p : {2.0, 1.0}) {
    const NormP norm(p);
    // The sweep builder is faster but only handles p = 2.
    const CandidateLists lists = norm.euclidean() ? build_lists_sweep(ps, norm) : build_lists_naive(ps, norm);
    const CoverSolution sol = dp_solve(ps, 3, spec, lists, norm);
    std::printf("p = %g: objective %.6f\n", p, sol.objective);
    for (std::size_t k = 0; k < sol.circles.size(); ++k) {
      std::printf("  ball at x = %8.4f  r = %.4f  points", sol.circles[k].cx, sol.circles[k].radius);
      for (std::size_t i = sol.intervals[k].first; i <= sol.intervals[k].second; ++i) std::printf(" %zu", ps.original(i));
      std::printf("\n");
    }
  }
}
