#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "lcsp/covering.hpp"

namespace lcsp {

// Circle (L_p ball) centred on the axis at (cx, 0).
struct PlacedCircle {
  double cx = 0.0;
  double radius = 0.0;
};

// Largest distance from (x, 0) to any of the segments.
inline double farthest_segment_distance(double x, std::span<const Segment> segments, const NormP& norm,
                                        const Tolerance& tol = {}) {
  double r = 0.0;
  for (const Segment& s : segments) r = std::max(r, axis_distance(x, s, norm, tol));
  return r;
}

// Closest distance from (x, 0) to any of the segments.
inline double nearest_segment_distance(double x, std::span<const Segment> segments, const NormP& norm,
                                       const Tolerance& tol = {}) {
  double r = std::numeric_limits<double>::infinity();
  for (const Segment& s : segments) r = std::min(r, axis_distance(x, s, norm, tol));
  return r;
}

// Minimax center restricted to `domain`: bisects the radius until the covering
// intervals of all segments still share a point of the domain.
inline PlacedCircle min_enclosing_on(std::span<const Segment> segments, Interval domain, const NormP& norm,
                                     const Tolerance& tol = {}) {
  if (segments.empty()) throw Error(ErrorCode::EmptyInput, "min_enclosing needs at least one segment");
  if (domain.empty()) throw Error(ErrorCode::InvalidArgument, "center domain is empty");

  std::vector<Interval> cover(segments.size());
  auto meet = [&](double R) {
    for (std::size_t k = 0; k < segments.size(); ++k) cover[k] = covering_interval(segments[k], R, norm, tol);
    return intersect_all(cover, domain);
  };
  auto feasible = [&](double R) { return !meet(R).empty(); };

  const Point lo{domain.lo, 0.0};
  const Point hi{domain.hi, 0.0};
  double bracket = 0.0;
  for (const Segment& s : segments) {
    for (Point e : {s.a, s.b}) bracket = std::max({bracket, lp_distance(lo, e, norm), lp_distance(hi, e, norm)});
  }

  double radius = 0.0;
  if (!feasible(0.0)) {
    // Covering intervals are inner approximations; widen until feasible.
    while (!feasible(bracket)) bracket = 2.0 * bracket + tol.eps;
    radius = bisect(bracket, 0.0, feasible, tol).first;
  }
  const double cx = meet(radius).midpoint();
  return {cx, farthest_segment_distance(cx, segments, norm, tol)};
}

inline PlacedCircle min_enclosing(std::span<const Segment> segments, double L, const NormP& norm,
                                  const Tolerance& tol = {}) {
  if (!(L >= 0.0)) throw Error(ErrorCode::InvalidArgument, "axis length L must be >= 0");
  return min_enclosing_on(segments, Interval::closed(0.0, L), norm, tol);
}

}  // namespace lcsp
