#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "lcsp/error.hpp"
#include "lcsp/search.hpp"

namespace lcsp {

// Exponent of the L_p norm, 1 <= p < inf.
class NormP {
 public:
  explicit NormP(double p = 2.0) : p_(p) {
    if (!(p >= 1.0) || !std::isfinite(p)) {
      throw Error(ErrorCode::InvalidArgument, "norm exponent p must satisfy 1 <= p < inf, got " + std::to_string(p));
    }
  }

  double p() const noexcept { return p_; }
  bool euclidean() const noexcept { return p_ == 2.0; }
  bool manhattan() const noexcept { return p_ == 1.0; }

  // Length of the vector (dx, dy) under this norm.
  double length(double dx, double dy) const noexcept {
    dx = std::abs(dx);
    dy = std::abs(dy);
    if (p_ == 2.0) return std::sqrt(dx * dx + dy * dy);
    if (p_ == 1.0) return dx + dy;
    const double m = std::max(dx, dy);
    if (m == 0.0) return 0.0;
    const double rx = dx / m;
    const double ry = dy / m;
    return m * std::pow(std::pow(rx, p_) + std::pow(ry, p_), 1.0 / p_);
  }

  friend bool operator==(const NormP&, const NormP&) = default;

 private:
  double p_;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(Point a, Point b) noexcept { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) noexcept { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) noexcept { return {s * a.x, s * a.y}; }
};

// Closed segment a-b. a == b is a point obstacle.
struct Segment {
  Point a;
  Point b;

  static Segment point(Point p) noexcept { return {p, p}; }
  bool degenerate() const noexcept { return a == b; }
  Point at(double t) const noexcept { return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; }

  friend bool operator==(const Segment&, const Segment&) = default;
};

inline double lp_distance(Point a, Point b, const NormP& norm) noexcept {
  return norm.length(a.x - b.x, a.y - b.y);
}

namespace detail {

inline double signed_pow(double v, double e) noexcept {
  return std::copysign(std::pow(std::abs(v), e), v);
}

// Minimizes t -> |q - s(t)|_p over [0,1] for 1 < p, p != 2. The p-th power of
// the distance is convex and differentiable in t, so we root-find its
// derivative with a bracketed Newton iteration.
inline double segment_distance_general(Point q, const Segment& s, const NormP& norm, const Tolerance& tol) {
  const double p = norm.p();
  const double dx = s.b.x - s.a.x;
  const double dy = s.b.y - s.a.y;
  const double ex0 = s.a.x - q.x;
  const double ey0 = s.a.y - q.y;
  const double len = norm.length(dx, dy);

  auto grad = [&](double t) {
    return signed_pow(ex0 + t * dx, p - 1.0) * dx + signed_pow(ey0 + t * dy, p - 1.0) * dy;
  };
  auto curvature = [&](double t) {
    const double ex = std::abs(ex0 + t * dx);
    const double ey = std::abs(ey0 + t * dy);
    return (p - 1.0) * (std::pow(ex, p - 2.0) * dx * dx + std::pow(ey, p - 2.0) * dy * dy);
  };
  auto dist_at = [&](double t) { return norm.length(ex0 + t * dx, ey0 + t * dy); };

  if (grad(0.0) >= 0.0) return dist_at(0.0);
  if (grad(1.0) <= 0.0) return dist_at(1.0);

  const double t_tol = tol.eps / len;
  double lo = 0.0;
  double hi = 1.0;
  double t = 0.5;
  double width_before = 2.0;  // bracket width two steps back
  double width_last = 1.0;
  for (int it = 0; it < tol.max_iters; ++it) {
    const double g = grad(t);
    if (g == 0.0) return dist_at(t);
    if (g < 0.0) {
      lo = t;
    } else {
      hi = t;
    }
    if (hi - lo <= t_tol) break;
    // Newton step, kept inside the bracket. For p < 2 the curvature blows up
    // near a zero coordinate, so a tiny step is no sign of convergence: nudge
    // past it to test the bracket, and bisect when the bracket stalls.
    double next = t - g / curvature(t);
    if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
    if (std::abs(next - t) < 0.5 * t_tol) next = std::clamp(t + std::copysign(0.5 * t_tol, -g), lo, hi);
    if (hi - lo > 0.5 * width_before) next = 0.5 * (lo + hi);
    width_before = width_last;
    width_last = hi - lo;
    t = next;
  }
  return std::min({dist_at(t), dist_at(lo), dist_at(hi)});
}

}  // namespace detail

// Distance from q to the closest point of s. Closed form for p = 1 and p = 2;
// convex one-dimensional minimization over the segment parameter otherwise.
inline double point_segment_distance(Point q, const Segment& s, const NormP& norm, const Tolerance& tol = {}) {
  if (s.degenerate()) return lp_distance(q, s.a, norm);
  const double dx = s.b.x - s.a.x;
  const double dy = s.b.y - s.a.y;
  if (norm.euclidean()) {
    const double t = std::clamp(((q.x - s.a.x) * dx + (q.y - s.a.y) * dy) / (dx * dx + dy * dy), 0.0, 1.0);
    return lp_distance(q, s.at(t), norm);
  }
  if (norm.manhattan()) {
    // Piecewise linear in t; the minimum sits at an end or a kink.
    double best = std::min(lp_distance(q, s.a, norm), lp_distance(q, s.b, norm));
    for (double t : {dx != 0.0 ? (q.x - s.a.x) / dx : -1.0, dy != 0.0 ? (q.y - s.a.y) / dy : -1.0}) {
      if (t > 0.0 && t < 1.0) best = std::min(best, lp_distance(q, s.at(t), norm));
    }
    return best;
  }
  return detail::segment_distance_general(q, s, norm, tol);
}

// Distance from the axis point (x, 0) to s.
inline double axis_distance(double x, const Segment& s, const NormP& norm, const Tolerance& tol = {}) {
  return point_segment_distance(Point{x, 0.0}, s, norm, tol);
}

// Rigid map sending the constraint segment onto [0, L] x {0}.
class AxisFrame {
 public:
  AxisFrame() = default;
  AxisFrame(Point origin, double ux, double uy, double length)
      : origin_(origin), ux_(ux), uy_(uy), length_(length) {}

  Point origin() const noexcept { return origin_; }
  double length() const noexcept { return length_; }
  // Unit direction of the constraint segment in the original frame.
  Point direction() const noexcept { return {ux_, uy_}; }

  Point forward(Point q) const noexcept {
    const double rx = q.x - origin_.x;
    const double ry = q.y - origin_.y;
    return {ux_ * rx + uy_ * ry, -uy_ * rx + ux_ * ry};
  }
  Point inverse(Point q) const noexcept {
    return {origin_.x + ux_ * q.x - uy_ * q.y, origin_.y + uy_ * q.x + ux_ * q.y};
  }
  Segment forward(const Segment& s) const noexcept { return {forward(s.a), forward(s.b)}; }
  Segment inverse(const Segment& s) const noexcept { return {inverse(s.a), inverse(s.b)}; }

 private:
  Point origin_{};
  double ux_ = 1.0;
  double uy_ = 0.0;
  double length_ = 0.0;
};

// Only quarter-turn frames preserve L_p distances for p != 2, so a diagonal
// constraint is rejected unless the norm is Euclidean.
inline AxisFrame transform_to_axis(const Segment& constraint, const NormP& norm) {
  const double dx = constraint.b.x - constraint.a.x;
  const double dy = constraint.b.y - constraint.a.y;
  if (dx == 0.0 && dy == 0.0) return AxisFrame(constraint.a, 1.0, 0.0, 0.0);
  if (!norm.euclidean() && dx != 0.0 && dy != 0.0) {
    throw Error(ErrorCode::NonIsometricRotation,
                "constraint segment is not axis-parallel and rotation is not an isometry for p = " +
                    std::to_string(norm.p()));
  }
  if (dy == 0.0) return AxisFrame(constraint.a, dx > 0.0 ? 1.0 : -1.0, 0.0, std::abs(dx));
  if (dx == 0.0) return AxisFrame(constraint.a, 0.0, dy > 0.0 ? 1.0 : -1.0, std::abs(dy));
  const double len = std::hypot(dx, dy);
  return AxisFrame(constraint.a, dx / len, dy / len, len);
}

struct AxisCrossing {
  double x = 0.0;
  // The whole segment lies on OX; x is its leftmost point.
  bool collinear = false;
};

inline std::optional<AxisCrossing> segment_ox_intersection(const Segment& s) noexcept {
  const double ya = s.a.y;
  const double yb = s.b.y;
  if (ya == 0.0 && yb == 0.0) return AxisCrossing{std::min(s.a.x, s.b.x), true};
  if (ya == 0.0) return AxisCrossing{s.a.x, false};
  if (yb == 0.0) return AxisCrossing{s.b.x, false};
  if ((ya > 0.0) == (yb > 0.0)) return std::nullopt;
  const double t = ya / (ya - yb);
  return AxisCrossing{s.a.x + t * (s.b.x - s.a.x), false};
}

struct AxisArgmin {
  double x = 0.0;
  double distance = 0.0;
};

enum class ArgminMethod {
  // Bisection on the sign of a forward difference of the distance profile.
  ForwardDifference,
  // Closed candidate set {0, L, x1, x2, OX crossing}.
  Geometric,
};

namespace detail {

// Candidate-set minimizer of x -> distance((x,0), s) over [lo, hi]; either
// bound may be infinite. Ties resolve to the smallest x.
inline AxisArgmin geometric_argmin(const Segment& s, double lo, double hi, const NormP& norm, const Tolerance& tol) {
  std::array<double, 5> cand{};
  std::size_t n = 0;
  auto add = [&](double x) {
    if (x >= lo && x <= hi) cand[n++] = x;
  };
  if (std::isfinite(lo)) add(lo);
  if (std::isfinite(hi)) add(hi);
  add(s.a.x);
  add(s.b.x);
  if (auto c = segment_ox_intersection(s)) add(c->x);
  std::sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(n));

  AxisArgmin best{cand[0], axis_distance(cand[0], s, norm, tol)};
  for (std::size_t k = 1; k < n; ++k) {
    const double d = axis_distance(cand[k], s, norm, tol);
    if (d < best.distance) best = {cand[k], d};
  }
  return best;
}

inline AxisArgmin forward_difference_argmin(const Segment& s, double L, const NormP& norm, const Tolerance& tol) {
  double lo = 0.0;
  double hi = L;
  for (int it = 0; it < tol.max_iters && hi - lo > tol.eps; ++it) {
    const double step = std::max(tol.eps, 0.25 * (hi - lo));
    const double mid = 0.5 * (lo + hi);
    if (axis_distance(mid, s, norm, tol) <= axis_distance(mid + step, s, norm, tol)) {
      hi = std::min(hi, mid + step);
    } else {
      lo = mid;
    }
  }
  const double dlo = axis_distance(lo, s, norm, tol);
  const double dhi = axis_distance(hi, s, norm, tol);
  return dhi < dlo ? AxisArgmin{hi, dhi} : AxisArgmin{lo, dlo};
}

}  // namespace detail

// Minimizer of the distance profile x -> distance((x,0), s) over [0, L].
inline AxisArgmin distance_argmin_on_axis(const Segment& s, double L, const NormP& norm, const Tolerance& tol = {},
                                          ArgminMethod method = ArgminMethod::Geometric) {
  if (!(L >= 0.0)) throw Error(ErrorCode::InvalidArgument, "axis length L must be >= 0");
  if (method == ArgminMethod::ForwardDifference) return detail::forward_difference_argmin(s, L, norm, tol);
  return detail::geometric_argmin(s, 0.0, L, norm, tol);
}

// Unconstrained minimizer over the whole axis.
inline AxisArgmin distance_argmin_on_line(const Segment& s, const NormP& norm, const Tolerance& tol = {}) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return detail::geometric_argmin(s, -inf, inf, norm, tol);
}

// Point w in [u, v] where s1 and s2 are equally far from (w, 0). The sign of
// distance(s1) - distance(s2) must differ (or vanish) at u and v.
inline double equal_distance_point(const Segment& s1, const Segment& s2, double u, double v, const NormP& norm,
                                   const Tolerance& tol = {}) {
  auto diff = [&](double x) { return axis_distance(x, s1, norm, tol) - axis_distance(x, s2, norm, tol); };
  const double fu = diff(u);
  const double fv = diff(v);
  if (fu == 0.0) return u;
  if (fv == 0.0) return v;
  if ((fu < 0.0) == (fv < 0.0)) {
    throw Error(ErrorCode::NoCrossing, "distance profiles do not cross on [" + std::to_string(u) + ", " +
                                           std::to_string(v) + "]");
  }
  // x <= w exactly when the segment closer at u is still no farther at x.
  const bool first_closer_at_u = fu < 0.0;
  auto left_of_crossing = [&](double x) {
    const double f = diff(x);
    return first_closer_at_u ? f <= 0.0 : f >= 0.0;
  };
  const auto [good, bad] = bisect(u, v, left_of_crossing, tol);
  return 0.5 * (good + bad);
}

}  // namespace lcsp
