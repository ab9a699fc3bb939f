#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lcsp/config.hpp"
#include "lcsp/one_center.hpp"

namespace lcsp {

// Largest empty circle by bisection on the radius: the answer is the smallest
// R whose covering intervals jointly cover [0, L].
inline PlacedCircle max_empty_binsearch(std::span<const Segment> segments, double L, const NormP& norm,
                                        const Tolerance& tol = {}) {
  if (segments.empty()) throw Error(ErrorCode::EmptyInput, "max_empty_binsearch needs at least one segment");
  if (!(L >= 0.0)) throw Error(ErrorCode::InvalidArgument, "axis length L must be >= 0");

  // Inner searches run finer than the reported tolerance so the result lands
  // well inside eps of the optimum.
  const Tolerance fine(tol.eps / 8.0, tol.max_iters);
  const Interval domain{0.0, L};
  std::vector<Interval> cover(segments.size());
  auto coverage = [&](double R) {
    for (std::size_t k = 0; k < segments.size(); ++k) cover[k] = covering_interval(segments[k], R, norm, fine);
    return union_covers(cover, domain);
  };
  auto covered = [&](double R) { return coverage(R).covered; };

  if (covered(0.0)) return {0.0, 0.0};

  // The distance profile of each segment is convex, so its maximum over
  // [0, L] sits at an end; the nearest-segment profile is below every one.
  double bracket = std::numeric_limits<double>::infinity();
  for (const Segment& s : segments) {
    bracket = std::min(bracket, std::max(axis_distance(0.0, s, norm, fine), axis_distance(L, s, norm, fine)));
  }
  for (double step = fine.eps; !covered(bracket); step *= 2.0) bracket += step;

  const double open_radius = bisect(bracket, 0.0, covered, fine).second;
  const double cx = *coverage(open_radius).witness_gap;
  return {cx, nearest_segment_distance(cx, segments, norm, fine)};
}

enum class SplitStrategy {
  // |S1| ~ |S2|.
  Halves,
  // |S1| = |S| - 1, folded iteratively.
  OneOff,
};

struct EnvelopePiece {
  double a = 0.0;
  double b = 0.0;
  std::size_t seg = 0;

  friend bool operator==(const EnvelopePiece&, const EnvelopePiece&) = default;
};

// Pointwise-minimum distance profile over [0, L], as consecutive pieces each
// owned by the closest segment.
struct LowerEnvelope {
  std::vector<EnvelopePiece> pieces;

  std::size_t size() const noexcept { return pieces.size(); }
  const EnvelopePiece& piece_at(double x) const {
    auto it = std::lower_bound(pieces.begin(), pieces.end(), x,
                               [](const EnvelopePiece& p, double v) { return p.b < v; });
    if (it == pieces.end()) --it;
    return *it;
  }
};

// Tiling check: pieces[0].a == 0, last.b == L, consecutive pieces share ends.
inline bool tiles(const LowerEnvelope& le, double L) noexcept {
  if (le.pieces.empty() || le.pieces.front().a != 0.0 || le.pieces.back().b != L) return false;
  for (std::size_t k = 0; k < le.pieces.size(); ++k) {
    if (le.pieces[k].a > le.pieces[k].b) return false;
    if (k + 1 < le.pieces.size() && le.pieces[k].b != le.pieces[k + 1].a) return false;
  }
  return true;
}

namespace detail {

// Exact piecewise description of x -> distance((x, 0), s). On each piece the
// nearest point of s is a fixed feature: one endpoint, or the supporting
// line, whose distance is linear in x for every L_p (via the dual norm).
class AxisProfile {
 public:
  enum class Feature { EndA, EndB, Line };

  AxisProfile(const Segment& s, const NormP& norm) : a_(s.a), b_(s.b), norm_(norm) {
    if (a_.x > b_.x) std::swap(a_, b_);
    const double p = norm.p();
    if (norm.manhattan()) {
      add_kink(a_.x);
      add_kink(b_.x);
    }
    if (s.degenerate()) {
      fixed_ = Feature::EndA;
      return;
    }
    const double dx = b_.x - a_.x;
    const double dy = b_.y - a_.y;
    double dual;
    if (norm.manhattan()) {
      dual = std::max(std::abs(dx), std::abs(dy));
    } else if (norm.euclidean()) {
      dual = std::hypot(dx, dy);
    } else {
      const double q = p / (p - 1.0);
      const double m = std::max(std::abs(dx), std::abs(dy));
      dual = m * std::pow(std::pow(std::abs(dx) / m, q) + std::pow(std::abs(dy) / m, q), 1.0 / q);
    }
    k1_ = -dy / dual;
    k0_ = (dy * a_.x - dx * a_.y) / dual;
    if (k1_ != 0.0) add_kink(-k0_ / k1_);

    // Parameter of the nearest point on the supporting line. It is constant
    // for vertical segments (and steep ones under L_1); otherwise it grows
    // with x and hits 0 and 1 at ta_ and tb_.
    const double r = dy / dx;
    bool moving;
    if (norm.manhattan()) {
      moving = std::abs(dx) >= std::abs(dy);
      ta_ = a_.x;
      tb_ = b_.x;
    } else {
      moving = dx > 0.0 && std::isfinite(r);
      if (moving) {
        const double e = 1.0 / (p - 1.0);
        ta_ = a_.x + signed_pow(signed_pow(a_.y, p - 1.0) * r, e);
        tb_ = b_.x + signed_pow(signed_pow(b_.y, p - 1.0) * r, e);
        moving = std::isfinite(ta_) && std::isfinite(tb_);
        if (ta_ > tb_) std::swap(ta_, tb_);
      }
    }
    if (moving) {
      add_kink(ta_);
      add_kink(tb_);
      return;
    }
    const double t0 = -a_.y / dy;
    fixed_ = t0 < 0.0 ? Feature::EndA : (t0 > 1.0 ? Feature::EndB : Feature::Line);
  }

  Feature feature(double x) const noexcept {
    if (fixed_) return *fixed_;
    if (x < ta_) return Feature::EndA;
    if (x > tb_) return Feature::EndB;
    return Feature::Line;
  }

  double value(Feature f, double x) const noexcept {
    switch (f) {
      case Feature::EndA: return lp_distance({x, 0.0}, a_, norm_);
      case Feature::EndB: return lp_distance({x, 0.0}, b_, norm_);
      case Feature::Line: break;
    }
    return std::abs(k1_ * x + k0_);
  }

  double operator()(double x) const noexcept { return value(feature(x), x); }

  // Derivative of value(f, .) for p > 1.
  double slope(Feature f, double x) const noexcept {
    if (f == Feature::Line) return (k1_ * x + k0_ < 0.0) ? -k1_ : k1_;
    const Point c = f == Feature::EndA ? a_ : b_;
    const double d = value(f, x);
    if (d == 0.0) return 0.0;
    const double p = norm_.p();
    return signed_pow((x - c.x) / d, p - 1.0);
  }

  // Squared Euclidean profile of a feature as alpha x^2 + beta x + gamma.
  std::array<double, 3> quadratic(Feature f) const noexcept {
    if (f == Feature::Line) return {k1_ * k1_, 2.0 * k1_ * k0_, k0_ * k0_};
    const Point c = f == Feature::EndA ? a_ : b_;
    return {1.0, -2.0 * c.x, c.x * c.x + c.y * c.y};
  }

  // Two features with identical value functions.
  bool same_feature(Feature f, const AxisProfile& o, Feature g) const noexcept {
    if ((f == Feature::Line) != (g == Feature::Line)) return false;
    if (f == Feature::Line) return k1_ == o.k1_ && k0_ == o.k0_;
    const Point c = f == Feature::EndA ? a_ : b_;
    const Point d = g == Feature::EndA ? o.a_ : o.b_;
    return c.x == d.x && std::abs(c.y) == std::abs(d.y);
  }

  std::span<const double> kinks() const noexcept { return {kinks_.data(), nk_}; }

 private:
  void add_kink(double x) noexcept {
    if (std::isfinite(x)) kinks_[nk_++] = x;
  }

  Point a_;
  Point b_;
  NormP norm_;
  std::optional<Feature> fixed_;
  double ta_ = 0.0;
  double tb_ = 0.0;
  double k1_ = 0.0;
  double k0_ = 0.0;
  std::array<double, 5> kinks_{};
  std::size_t nk_ = 0;
};

class EnvelopeBuilder {
 public:
  EnvelopeBuilder(std::span<const Segment> segments, double L, const NormP& norm, const Tolerance& tol)
      : segments_(segments), L_(L), norm_(norm), tol_(tol), fine_(tol.eps / 8.0, tol.max_iters) {
    if (segments.empty()) throw Error(ErrorCode::EmptyInput, "lower envelope needs at least one segment");
    if (!(L >= 0.0)) throw Error(ErrorCode::InvalidArgument, "axis length L must be >= 0");
    xmin_.reserve(segments.size());
    profiles_.reserve(segments.size());
    for (const Segment& s : segments) {
      xmin_.push_back(distance_argmin_on_axis(s, L, norm, fine_).x);
      profiles_.emplace_back(s, norm);
    }
  }

  double xmin(std::size_t seg) const { return xmin_.at(seg); }

  LowerEnvelope base(std::size_t seg) const {
    const double m = xmin_[seg];
    return LowerEnvelope{{{0.0, m, seg}, {m, L_, seg}}};
  }

  LowerEnvelope build(SplitStrategy split) const {
    if (split == SplitStrategy::OneOff) {
      Ranged acc = leaf(0);
      for (std::size_t k = 1; k < segments_.size(); ++k) acc = combine(std::move(acc), leaf(k));
      return std::move(acc.le);
    }
    return build_range(0, segments_.size()).le;
  }

  LowerEnvelope merge(const LowerEnvelope& le1, const LowerEnvelope& le2) const {
    const auto& p1 = le1.pieces;
    const auto& p2 = le2.pieces;
    LowerEnvelope out;
    out.pieces.reserve(p1.size() + p2.size() + 4);

    std::size_t i = 0;
    std::size_t j = 0;
    double u = 0.0;
    while (i < p1.size() && j < p2.size()) {
      const double v = std::min(p1[i].b, p2[j].b);
      refine_cell(u, v, p1[i].seg, p2[j].seg, out.pieces);
      if (p1[i].b == v) ++i;
      if (p2[j].b == v) ++j;
      u = v;
    }
    out = compact(out);
#if LCSP_DEBUG_CHECKS
    assert(tiles(out, L_));
#endif
    return out;
  }

  // Fuses neighbours owned by the same segment unless the shared end is that
  // segment's minimum; drops zero-width pieces.
  LowerEnvelope compact(const LowerEnvelope& le) const {
    LowerEnvelope out;
    out.pieces.reserve(le.pieces.size());
    for (const EnvelopePiece& p : le.pieces) {
      if (p.b <= p.a) continue;
      if (!out.pieces.empty()) {
        EnvelopePiece& last = out.pieces.back();
        if (last.seg == p.seg && last.b != xmin_[p.seg]) {
          last.b = p.b;
          continue;
        }
      }
      out.pieces.push_back(p);
    }
    if (out.pieces.empty() && !le.pieces.empty()) out.pieces.push_back({0.0, L_, le.pieces.front().seg});
    return out;
  }

 private:
  using Feature = AxisProfile::Feature;

  // An envelope with the range of its values over [0, L].
  struct Ranged {
    LowerEnvelope le;
    double lo = 0.0;
    double hi = 0.0;
  };

  Ranged leaf(std::size_t seg) const {
    const AxisProfile& P = profiles_[seg];
    return {compact(base(seg)), P(xmin_[seg]), std::max(P(0.0), P(L_))};
  }

  // When one side lies strictly above the other everywhere, the merge would
  // hand every cell to the lower side, so skip it.
  Ranged combine(Ranged A, Ranged B) const {
    if (B.lo > A.hi + tol_.eps) return A;
    if (A.lo > B.hi + tol_.eps) return B;
    Ranged out{merge(A.le, B.le), std::numeric_limits<double>::infinity(), 0.0};
    for (const EnvelopePiece& p : out.le.pieces) {
      const AxisProfile& P = profiles_[p.seg];
      out.lo = std::min(out.lo, P(std::clamp(xmin_[p.seg], p.a, p.b)));
      out.hi = std::max({out.hi, P(p.a), P(p.b)});
    }
    return out;
  }

  Ranged build_range(std::size_t lo, std::size_t hi) const {
    if (hi - lo == 1) return leaf(lo);
    const std::size_t mid = lo + (hi - lo) / 2;
    return combine(build_range(lo, mid), build_range(mid, hi));
  }

  // Ties within eps go to the lower segment index.
  std::size_t closer(std::size_t s1, double d1, std::size_t s2, double d2) const {
    if (std::abs(d1 - d2) <= tol_.eps) return std::min(s1, s2);
    return d1 < d2 ? s1 : s2;
  }

  // Splits [u, v] wherever the owner between s1 and s2 changes. Both profiles
  // are cut at their kinks and feature changes first; on each sub-cell the
  // difference then has at most two roots.
  void refine_cell(double u, double v, std::size_t s1, std::size_t s2, std::vector<EnvelopePiece>& out) const {
    if (s1 == s2 || !(u < v)) {
      out.push_back({u, v, s1});
      return;
    }
    const AxisProfile& P1 = profiles_[s1];
    const AxisProfile& P2 = profiles_[s2];

    std::array<double, 12> cuts{};
    std::size_t nc = 0;
    cuts[nc++] = u;
    for (const AxisProfile* P : {&P1, &P2}) {
      for (double k : P->kinks()) {
        if (k > u && k < v) cuts[nc++] = k;
      }
    }
    cuts[nc++] = v;
    std::sort(cuts.begin() + 1, cuts.begin() + static_cast<std::ptrdiff_t>(nc) - 1);

    std::vector<double> marks;
    marks.push_back(u);
    for (std::size_t k = 0; k + 1 < nc; ++k) {
      const double c0 = cuts[k];
      const double c1 = cuts[k + 1];
      if (c1 > c0) {
        const double mid = c0 + 0.5 * (c1 - c0);
        roots(P1, P1.feature(mid), P2, P2.feature(mid), c0, c1, marks);
      }
      marks.push_back(c1);
    }

    for (std::size_t k = 0; k + 1 < marks.size(); ++k) {
      const double a = marks[k];
      const double b = marks[k + 1];
      const double mid = a + 0.5 * (b - a);
      const std::size_t owner = closer(s1, P1(mid), s2, P2(mid));
      if (!out.empty() && out.back().seg == owner && out.back().b == a && a != xmin_[owner]) {
        out.back().b = b;
      } else {
        out.push_back({a, b, owner});
      }
    }
  }

  // Appends the sign changes of value(f1) - value(f2) inside (c0, c1).
  void roots(const AxisProfile& P1, Feature f1, const AxisProfile& P2, Feature f2, double c0, double c1,
             std::vector<double>& marks) const {
    if (P1.same_feature(f1, P2, f2)) return;
    if (norm_.euclidean()) {
      quadratic_roots(P1.quadratic(f1), P2.quadratic(f2), c0, c1, marks);
      return;
    }
    auto g = [&](double x) { return P1.value(f1, x) - P2.value(f2, x); };
    const bool mixed = (f1 == Feature::Line) != (f2 == Feature::Line);
    if (!mixed || norm_.manhattan()) {
      // Endpoint against endpoint has a monotone sign; lines and all of L_1
      // are linear here.
      sign_change(g, c0, c1, marks);
      return;
    }
    // Endpoint minus line is convex: orient so that G is the convex one.
    const double sign = f1 == Feature::Line ? -1.0 : 1.0;
    auto G = [&](double x) { return sign * g(x); };
    auto dG = [&](double x) { return sign * (P1.slope(f1, x) - P2.slope(f2, x)); };
    const double g0 = G(c0);
    const double g1 = G(c1);
    if ((g0 > 0.0) != (g1 > 0.0)) {
      sign_change(G, c0, c1, marks);
      return;
    }
    if (g0 <= 0.0) return;  // convex and non-positive at both ends
    const double s0 = dG(c0);
    const double s1 = dG(c1);
    if (s0 >= 0.0 || s1 <= 0.0) return;
    // Tangent lines at both ends bound G from below.
    const double xt = (g1 - g0 + s0 * c0 - s1 * c1) / (s0 - s1);
    if (g0 + s0 * (xt - c0) > 0.0) return;
    // Descend to a negative point (or the minimum) along the derivative sign.
    double lo = c0;
    double hi = c1;
    double m = lo + 0.5 * (hi - lo);
    for (int it = 0; it < fine_.max_iters && hi - lo > fine_.eps; ++it) {
      m = lo + 0.5 * (hi - lo);
      if (G(m) <= 0.0) break;
      (dG(m) < 0.0 ? lo : hi) = m;
    }
    if (G(m) > 0.0) return;
    sign_change(G, c0, m, marks);
    sign_change(G, m, c1, marks);
  }

  template <class F>
  void sign_change(F&& g, double c0, double c1, std::vector<double>& marks) const {
    const bool neg0 = g(c0) < 0.0;
    if (neg0 == (g(c1) < 0.0)) return;
    auto same = [&](double x) { return (g(x) < 0.0) == neg0; };
    const auto [good, bad] = bisect(c0, c1, same, fine_);
    marks.push_back(good + 0.5 * (bad - good));
  }

  void quadratic_roots(const std::array<double, 3>& q1, const std::array<double, 3>& q2, double c0, double c1,
                       std::vector<double>& marks) const {
    const double A = q1[0] - q2[0];
    const double B = q1[1] - q2[1];
    const double C = q1[2] - q2[2];
    std::array<double, 2> r{};
    std::size_t n = 0;
    if (A == 0.0) {
      if (B != 0.0) r[n++] = -C / B;
    } else {
      const double disc = B * B - 4.0 * A * C;
      if (disc > 0.0) {
        const double q = -0.5 * (B + std::copysign(std::sqrt(disc), B));
        r[n++] = q / A;
        if (q != 0.0) r[n++] = C / q;
      }
    }
    if (n == 2 && r[0] > r[1]) std::swap(r[0], r[1]);
    for (std::size_t k = 0; k < n; ++k) {
      if (r[k] > c0 && r[k] < c1) marks.push_back(r[k]);
    }
  }

  std::span<const Segment> segments_;
  double L_;
  NormP norm_;
  Tolerance tol_;
  Tolerance fine_;
  std::vector<double> xmin_;
  std::vector<AxisProfile> profiles_;
};

}  // namespace detail

// Divide-and-conquer lower envelope of the segment distance profiles.
inline LowerEnvelope compute_lower_envelope(std::span<const Segment> segments, double L, const NormP& norm,
                                            const Tolerance& tol = {},
                                            SplitStrategy split = SplitStrategy::Halves) {
  return detail::EnvelopeBuilder(segments, L, norm, tol).build(split);
}

// Merges two envelopes built over (subsets of) `segments`; piece indices refer
// into `segments`.
inline LowerEnvelope merge_lower_envelopes(const LowerEnvelope& le1, const LowerEnvelope& le2,
                                           std::span<const Segment> segments, double L, const NormP& norm,
                                           const Tolerance& tol = {}) {
  return detail::EnvelopeBuilder(segments, L, norm, tol).merge(le1, le2);
}

inline LowerEnvelope compact(const LowerEnvelope& le, std::span<const Segment> segments, double L,
                             const NormP& norm, const Tolerance& tol = {}) {
  return detail::EnvelopeBuilder(segments, L, norm, tol).compact(le);
}

// The optimum sits at a piece end; ties go to the smallest cx.
inline PlacedCircle largest_empty_from_envelope(const LowerEnvelope& le, std::span<const Segment> segments,
                                                const NormP& norm, const Tolerance& tol = {}) {
  if (le.pieces.empty()) throw Error(ErrorCode::EmptyInput, "envelope has no pieces");
  const Tolerance fine(tol.eps / 8.0, tol.max_iters);
  PlacedCircle best{0.0, -1.0};
  for (const EnvelopePiece& p : le.pieces) {
    const Segment& s = segments[p.seg];
    for (double x : {p.a, p.b}) {
      const double d = axis_distance(x, s, norm, fine);
      if (d > best.radius || (d == best.radius && x < best.cx)) best = {x, d};
    }
  }
  return best;
}

}  // namespace lcsp
