// Place a server on a road segment: the minimax (1-center) and the farthest
// (obnoxious) position with respect to a few obstacle segments.
#include <cstdio>
#include <vector>

#include "lcsp/lcsp.hpp"

int main() {
  using namespace lcsp;
  const NormP norm(2);
  const Segment road{{1, 1}, {7, 9}};
  const std::vector<Segment> obstacles{
      {{2, 6}, {4, 7}}, {{8, 2}, {9, 5}}, Segment::point({-1, 3}), {{5, 10}, {7, 8}}, {{3, -2}, {6, -1}}};

  // Solvers work on the axis frame where the road is [0, L] x {0}.
  const AxisFrame frame = transform_to_axis(road, norm);
  std::vector<Segment> local;
  for (const Segment& s : obstacles) local.push_back(frame.forward(s));

  const PlacedCircle near = min_enclosing(local, frame.length(), norm);
  const Point a = frame.inverse(Point{near.cx, 0});
  std::printf("1-center:  (%.6f, %.6f) radius %.6f\n", a.x, a.y, near.radius);

  const LowerEnvelope le = compute_lower_envelope(local, frame.length(), norm);
  const PlacedCircle far = largest_empty_from_envelope(le, local, norm);
  const Point b = frame.inverse(Point{far.cx, 0});
  std::printf("obnoxious: (%.6f, %.6f) radius %.6f (%zu envelope pieces)\n", b.x, b.y, far.radius, le.size());

  // The binary-search method gives the same radius.
  std::printf("binsearch radius %.6f\n", max_empty_binsearch(local, frame.length(), norm).radius);
}
