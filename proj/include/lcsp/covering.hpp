#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "lcsp/geometry.hpp"

namespace lcsp {

// Closed interval on OX. The empty interval is stored as [+inf, -inf].
struct Interval {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  static Interval empty_set() noexcept { return {}; }
  static Interval closed(double lo, double hi) noexcept {
    if (!(lo <= hi)) return {};
    return {lo, hi};
  }

  bool empty() const noexcept { return !(lo <= hi); }
  double width() const noexcept { return empty() ? 0.0 : hi - lo; }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  double midpoint() const noexcept { return lo + 0.5 * (hi - lo); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

namespace detail {

// Closed form for a segment parallel to OX (including point segments): the
// distance profile is flat over [x1, x2] and grows like an L_p ball outside.
inline Interval horizontal_covering_interval(const Segment& s, double R, const NormP& norm) {
  const double y = std::abs(s.a.y);
  if (y > R) return Interval::empty_set();
  if (R == 0.0) return {std::min(s.a.x, s.b.x), std::max(s.a.x, s.b.x)};
  const double p = norm.p();
  double reach;
  if (norm.euclidean()) {
    reach = std::sqrt((R - y) * (R + y));
  } else if (norm.manhattan()) {
    reach = R - y;
  } else {
    reach = R * std::pow(std::max(0.0, 1.0 - std::pow(y / R, p)), 1.0 / p);
  }
  return {std::min(s.a.x, s.b.x) - reach, std::max(s.a.x, s.b.x) + reach};
}

}  // namespace detail

// Axis points within distance R of s. The distance profile is convex, so the
// sublevel set is an interval: locate the profile minimum, then bisect each
// boundary against the predicate distance <= R. The returned bounds are
// inside the set; the true boundary lies at most tol.eps further out.
inline Interval covering_interval(const Segment& s, double R, const NormP& norm, const Tolerance& tol = {}) {
  if (!(R >= 0.0)) throw Error(ErrorCode::InvalidArgument, "covering radius must be >= 0");
  if (s.a.y == s.b.y) return detail::horizontal_covering_interval(s, R, norm);

  const AxisArgmin m = distance_argmin_on_line(s, norm, tol);
  if (m.distance > R) return Interval::empty_set();
  // Away from horizontal plateaus the profile is strictly convex, so the level
  // set at its minimum is the argmin alone. Bisecting there would only trace
  // rounding noise around a flat bottom.
  if (m.distance == R) return {m.x, m.x};

  auto inside = [&](double x) { return axis_distance(x, s, norm, tol) <= R; };
  // Any covered x satisfies |x - x(t)| <= R for some segment point, which
  // brackets both boundaries without an outward search.
  const double left_bound = std::min(s.a.x, s.b.x) - R;
  const double right_bound = std::max(s.a.x, s.b.x) + R;

  double u = left_bound;
  if (!inside(left_bound)) u = bisect(m.x, left_bound, inside, tol).first;
  double v = right_bound;
  if (!inside(right_bound)) v = bisect(m.x, right_bound, inside, tol).first;
  return {u, v};
}

inline Interval intersect_all(std::span<const Interval> intervals, Interval domain) noexcept {
  double lo = domain.lo;
  double hi = domain.hi;
  for (const Interval& iv : intervals) {
    lo = std::max(lo, iv.lo);
    hi = std::min(hi, iv.hi);
  }
  return Interval::closed(lo, hi);
}

struct Coverage {
  bool covered = false;
  // An uncovered point of the domain, present iff !covered.
  std::optional<double> witness_gap;
};

// Whether the union of closed intervals contains the domain. The witness is
// the leftmost gap: the domain end when the gap touches it, else the gap's
// midpoint.
inline Coverage union_covers(std::span<const Interval> intervals, Interval domain) {
  if (domain.empty()) return {true, std::nullopt};
  std::vector<Interval> sorted;
  sorted.reserve(intervals.size());
  for (const Interval& iv : intervals) {
    if (!iv.empty() && iv.hi >= domain.lo && iv.lo <= domain.hi) sorted.push_back(iv);
  }
  std::sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

  if (sorted.empty() || sorted.front().lo > domain.lo) return {false, domain.lo};
  double reach = sorted.front().hi;
  for (std::size_t k = 1; k < sorted.size() && reach < domain.hi; ++k) {
    if (sorted[k].lo > reach) return {false, reach + 0.5 * (sorted[k].lo - reach)};
    reach = std::max(reach, sorted[k].hi);
  }
  if (reach < domain.hi) return {false, domain.hi};
  return {true, std::nullopt};
}

}  // namespace lcsp
