#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcsp/config.hpp"
#include "lcsp/one_center.hpp"

namespace lcsp {

// Points sorted by x (ties by input order). All indices in this module are
// 0-based positions in the sorted order; original() maps back to input order.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::span<const Point> points) {
    order_.resize(points.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t l, std::size_t r) { return points[l].x < points[r].x; });
    points_.reserve(points.size());
    for (std::size_t k : order_) points_.push_back(points[k]);
  }

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Point& operator[](std::size_t k) const { return points_[k]; }
  std::span<const Point> points() const noexcept { return points_; }
  std::size_t original(std::size_t k) const { return order_[k]; }

 private:
  std::vector<Point> points_;
  std::vector<std::size_t> order_;
};

enum class Aggregate { Sum, Max };

struct AggSpec {
  double q = 1.0;
  Aggregate agg = Aggregate::Sum;

  AggSpec() = default;
  AggSpec(double q_, Aggregate agg_) : q(q_), agg(agg_) {
    if (!(q >= 1.0) || !std::isfinite(q)) throw Error(ErrorCode::InvalidArgument, "radius exponent q must be >= 1");
  }

  double cost(double radius) const { return q == 1.0 ? radius : std::pow(radius, q); }
  double combine(double acc, double c) const { return agg == Aggregate::Sum ? acc + c : std::max(acc, c); }
};

// Points left..right (inclusive) all lie within `radius` of (cx, 0).
struct Candidate {
  std::size_t left = 0;
  std::size_t right = 0;
  double radius = 0.0;
  double cx = 0.0;
};

// lists[r] holds the candidates whose covered run ends at r.
using CandidateLists = std::vector<std::vector<Candidate>>;

struct CoverSolution {
  // Contiguous, disjoint runs of sorted indices partitioning [0, N).
  std::vector<std::pair<std::size_t, std::size_t>> intervals;
  std::vector<PlacedCircle> circles;
  double objective = 0.0;
};

// Smallest axis-centred circle containing points j..i.
inline PlacedCircle rmin_on_axis(const PointSet& ps, std::size_t j, std::size_t i, const NormP& norm,
                                 const Tolerance& tol = {}) {
  if (j > i || i >= ps.size()) throw Error(ErrorCode::InvalidArgument, "rmin_on_axis needs j <= i < N");
  std::vector<Segment> group;
  group.reserve(i - j + 1);
  double reach = 0.0;
  for (std::size_t k = j; k <= i; ++k) {
    group.push_back(Segment::point(ps[k]));
    reach = std::max(reach, std::abs(ps[k].y));
  }
  return min_enclosing_on(group, Interval{ps[j].x - reach, ps[i].x + reach}, norm, tol);
}

namespace detail {

// x where the Euclidean bisector of a and b meets OX; symmetric in (a, b) and
// exactly negated under x -> -x.
inline double euclidean_bisector_x(Point a, Point b) noexcept {
  return 0.5 * (a.x + b.x) + 0.5 * ((b.y - a.y) * (b.y + a.y)) / (b.x - a.x);
}

}  // namespace detail

struct BisectorCircle {
  double xc = 0.0;
  double radius = 0.0;
};

// Axis point equidistant from points i and j, and that common distance.
inline BisectorCircle two_point_circle(const PointSet& ps, std::size_t i, std::size_t j, const NormP& norm,
                                       const Tolerance& tol = {}) {
  if (i > j || j >= ps.size()) throw Error(ErrorCode::InvalidArgument, "two_point_circle needs i <= j < N");
  const Point a = ps[i];
  const Point b = ps[j];
  if (i == j || (a.x == b.x && std::abs(a.y) == std::abs(b.y))) return {a.x, std::abs(a.y)};
  if (a.x == b.x) {
    throw Error(ErrorCode::NoBisectorRoot, "points " + std::to_string(i) + " and " + std::to_string(j) +
                                               " share x with different |y|");
  }
  double xc;
  if (norm.euclidean()) {
    xc = detail::euclidean_bisector_x(a, b);
  } else if (norm.manhattan()) {
    // |x - xa| - |x - xb| saturates at +-(xb - xa), so a root exists only when
    // the height gap fits inside the horizontal gap.
    const double gap = std::abs(b.x - a.x);
    const double dy = std::abs(b.y) - std::abs(a.y);
    if (std::abs(dy) > gap) {
      throw Error(ErrorCode::NoBisectorRoot, "L1 bisector of points " + std::to_string(i) + " and " +
                                                 std::to_string(j) + " misses OX");
    }
    xc = 0.5 * (a.x + b.x) + 0.5 * dy * (b.x > a.x ? 1.0 : -1.0);
  } else {
    // d_a - d_b is strictly monotone in x for p > 1.
    auto diff = [&](double x) { return lp_distance({x, 0.0}, a, norm) - lp_distance({x, 0.0}, b, norm); };
    const bool rising = b.x > a.x;
    double span = std::abs(b.x - a.x) + std::abs(a.y) + std::abs(b.y);
    double lo = std::min(a.x, b.x) - span;
    double hi = std::max(a.x, b.x) + span;
    for (int it = 0; it < 64 && (rising ? diff(lo) > 0.0 : diff(lo) < 0.0); ++it) lo -= (span *= 2.0);
    for (int it = 0; it < 64 && (rising ? diff(hi) < 0.0 : diff(hi) > 0.0); ++it) hi += (span *= 2.0);
    auto below = [&](double x) { return rising ? diff(x) <= 0.0 : diff(x) >= 0.0; };
    const auto [good, bad] = bisect(lo, hi, below, tol);
    xc = 0.5 * (good + bad);
  }
  const Point c{xc, 0.0};
  return {xc, std::max(lp_distance(c, a, norm), lp_distance(c, b, norm))};
}

// Keeps, per (left, right), the candidate with the smallest radius; each list
// ends up sorted by left.
inline void dedupe_lists(CandidateLists& lists) {
  for (auto& list : lists) {
    std::sort(list.begin(), list.end(), [](const Candidate& l, const Candidate& r) {
      return l.left != r.left ? l.left < r.left : l.radius < r.radius;
    });
    list.erase(std::unique(list.begin(), list.end(),
                           [](const Candidate& l, const Candidate& r) { return l.left == r.left; }),
               list.end());
  }
}

// Point i alone in a circle of radius |y(i)|. The expanded diagonal circle
// may also swallow neighbours, so this run is not always produced otherwise.
inline void add_singletons(const PointSet& ps, CandidateLists& lists) {
  for (std::size_t i = 0; i < ps.size(); ++i) lists[i].push_back({i, i, std::abs(ps[i].y), ps[i].x});
}

// Expands every pair circle over its contiguous run of covered neighbours.
// O(N^3).
inline CandidateLists build_lists_naive(const PointSet& ps, const NormP& norm, const Tolerance& tol = {}) {
  const std::size_t n = ps.size();
  CandidateLists lists(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      BisectorCircle c;
      try {
        c = two_point_circle(ps, i, j, norm, tol);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NoBisectorRoot) continue;
        throw;
      }
      const Point centre{c.xc, 0.0};
      auto covered = [&](std::size_t k) { return lp_distance(centre, ps[k], norm) <= c.radius; };
      std::size_t left = i;
      while (left > 0 && covered(left - 1)) --left;
      // Expansion starts at i, not j: the run stays contiguous and covered.
      std::size_t right = i;
      while (right + 1 < n && covered(right + 1)) ++right;
#if LCSP_DEBUG_CHECKS
      if (right >= j) {
        for (std::size_t k = left; k <= right; ++k) assert(covered(k));
      }
#endif
      lists[right].push_back({left, right, c.radius, c.xc});
    }
  }
  add_singletons(ps, lists);
  dedupe_lists(lists);
  return lists;
}

namespace detail {

struct PairCentre {
  double xc = 0.0;
  double radius = 0.0;
  std::size_t origin = 0;  // the pair's first index i
};

// Nearest uncovered neighbours of a pair's origin among points seen so far.
struct SweepHit {
  std::optional<std::size_t> below;
  std::optional<std::size_t> above;
};

// One left-to-right sweep. `pts` sorted by x, `centres` sorted by xc; hits
// are indexed like `centres`.
class EuclideanSweep {
 public:
  EuclideanSweep(std::span<const Point> pts, std::span<const PairCentre> centres)
      : pts_(pts), centres_(centres), pos_of_(pts.size(), npos), bt_(1) {}

  std::vector<SweepHit> run() {
    std::vector<SweepHit> hits(centres_.size());
    std::size_t next_pt = 0;
    std::size_t next_centre = 0;
    while (next_centre < centres_.size()) {
      const double x_swap = swaps_.empty() ? inf : swaps_.top().x;
      const double x_pt = next_pt < pts_.size() ? pts_[next_pt].x : inf;
      const double x_centre = centres_[next_centre].xc;
      // Simultaneous events go in type order: swap, insertion, centre.
      if (x_swap <= x_pt && x_swap <= x_centre) {
        const Swap s = swaps_.top();
        swaps_.pop();
        apply_swap(s);
      } else if (x_pt <= x_centre) {
        insert(next_pt++);
      } else {
        hits[next_centre] = query(centres_[next_centre]);
        ++next_centre;
      }
    }
    return hits;
  }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  static constexpr double inf = std::numeric_limits<double>::infinity();

  struct Swap {
    double x;
    std::size_t first;   // currently closer
    std::size_t second;  // overtakes `first` at x
    friend bool operator>(const Swap& l, const Swap& r) { return l.x > r.x; }
  };

  double dist2(std::size_t k, double xs) const {
    const double dx = xs - pts_[k].x;
    return dx * dx + pts_[k].y * pts_[k].y;
  }

  // Ordering just to the right of xs: by squared distance, then by rate of
  // growth (a larger x grows slower), then by index.
  bool before(std::size_t a, std::size_t b, double xs) const {
    const double da = dist2(a, xs);
    const double db = dist2(b, xs);
    if (da != db) return da < db;
    if (pts_[a].x != pts_[b].x) return pts_[a].x > pts_[b].x;
    return a < b;
  }

  void schedule(std::size_t q, double now) {
    if (q + 1 >= order_.size()) return;
    const std::size_t a = order_[q];
    const std::size_t b = order_[q + 1];
    // d_a^2 - d_b^2 grows with x only if b lies to the right of a.
    if (!(pts_[b].x > pts_[a].x)) return;
    swaps_.push({std::max(now, euclidean_bisector_x(pts_[a], pts_[b])), a, b});
  }

  void insert(std::size_t k) {
    const double xs = pts_[k].x;
    const auto it = std::partition_point(order_.begin(), order_.end(),
                                         [&](std::size_t other) { return before(other, k, xs); });
    const std::size_t q = static_cast<std::size_t>(it - order_.begin());
    order_.insert(it, k);
    for (std::size_t r = q; r < order_.size(); ++r) pos_of_[order_[r]] = r;
    // bt_[r] holds the indices at positions r..M-1.
    std::set<std::size_t> above = bt_[q];
    bt_.insert(bt_.begin() + static_cast<std::ptrdiff_t>(q), std::move(above));
    for (std::size_t r = 0; r <= q; ++r) bt_[r].insert(k);
    if (q > 0) schedule(q - 1, xs);
    schedule(q, xs);
  }

  void apply_swap(const Swap& s) {
    const std::size_t q = pos_of_[s.first];
    if (q == npos || q + 1 >= order_.size() || order_[q + 1] != s.second) return;  // stale
    std::swap(order_[q], order_[q + 1]);
    pos_of_[s.first] = q + 1;
    pos_of_[s.second] = q;
    bt_[q + 1].erase(s.second);
    bt_[q + 1].insert(s.first);
    if (q > 0) schedule(q - 1, s.x);
    schedule(q + 1, s.x);
  }

  SweepHit query(const PairCentre& c) const {
    const Point centre{c.xc, 0.0};
    const NormP l2(2.0);
    const auto it = std::partition_point(order_.begin(), order_.end(), [&](std::size_t k) {
      return lp_distance(centre, pts_[k], l2) <= c.radius;
    });
    const std::set<std::size_t>& uncovered = bt_[static_cast<std::size_t>(it - order_.begin())];
    SweepHit hit;
    auto up = uncovered.upper_bound(c.origin);
    if (up != uncovered.end()) hit.above = *up;
    auto lo = uncovered.lower_bound(c.origin);
    if (lo != uncovered.begin()) hit.below = *std::prev(lo);
    return hit;
  }

  std::span<const Point> pts_;
  std::span<const PairCentre> centres_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> pos_of_;
  std::vector<std::set<std::size_t>> bt_;
  std::priority_queue<Swap, std::vector<Swap>, std::greater<>> swaps_;
};

}  // namespace detail

// Same lists as build_lists_naive, via a left-to-right and a right-to-left
// sweep over the sorted pair centres. O(N^2 log N). Euclidean norm only.
inline CandidateLists build_lists_sweep(const PointSet& ps, const NormP& norm, const Tolerance& tol = {}) {
  if (!norm.euclidean()) {
    throw Error(ErrorCode::UnsupportedNorm, "sweep list builder supports p = 2 only, got p = " + std::to_string(norm.p()));
  }
  const std::size_t n = ps.size();
  std::vector<detail::PairCentre> centres;
  centres.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      try {
        const BisectorCircle c = two_point_circle(ps, i, j, norm, tol);
        centres.push_back({c.xc, c.radius, i});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoBisectorRoot) throw;
      }
    }
  }
  std::stable_sort(centres.begin(), centres.end(),
                   [](const detail::PairCentre& l, const detail::PairCentre& r) { return l.xc < r.xc; });

  const std::vector<detail::SweepHit> forward = detail::EuclideanSweep(ps.points(), centres).run();

  // Mirror x -> -x and reverse indices; the right-to-left sweep becomes a
  // left-to-right one.
  std::vector<Point> mirrored(n);
  for (std::size_t k = 0; k < n; ++k) mirrored[n - 1 - k] = {-ps[k].x, ps[k].y};
  std::vector<detail::PairCentre> mirrored_centres(centres.size());
  for (std::size_t k = 0; k < centres.size(); ++k) {
    const auto& c = centres[centres.size() - 1 - k];
    mirrored_centres[k] = {-c.xc, c.radius, n - 1 - c.origin};
  }
  const std::vector<detail::SweepHit> backward = detail::EuclideanSweep(mirrored, mirrored_centres).run();

  CandidateLists lists(n);
  for (std::size_t k = 0; k < centres.size(); ++k) {
    const detail::SweepHit& f = forward[k];
    const detail::SweepHit& b = backward[centres.size() - 1 - k];
    std::optional<std::size_t> below = f.below;
    std::optional<std::size_t> above = f.above;
    if (b.above) below = std::max(below.value_or(0), n - 1 - *b.above);
    if (b.below) above = std::min(above.value_or(n), n - 1 - *b.below);
    const std::size_t left = below ? *below + 1 : 0;
    const std::size_t right = above ? *above - 1 : n - 1;
    lists[right].push_back({left, right, centres[k].radius, centres[k].xc});
  }
  add_singletons(ps, lists);
  dedupe_lists(lists);
  return lists;
}

enum class Recurrence {
  // A circle may be charged for a run reaching past the prefix it closes.
  Covering,
  // Transitions only from candidates whose run ends exactly at the prefix end.
  ExactEnd,
};

// Best aggregate of radius^q over at most K axis circles covering all points,
// using only the candidate transitions in `lists`.
inline CoverSolution dp_solve(const PointSet& ps, std::size_t K, const AggSpec& spec, const CandidateLists& lists,
                              const NormP& norm, const Tolerance& tol = {},
                              Recurrence recurrence = Recurrence::Covering) {
  const std::size_t n = ps.size();
  if (K == 0) throw Error(ErrorCode::InvalidArgument, "K must be >= 1");
  if (lists.size() != n) throw Error(ErrorCode::InvalidArgument, "candidate lists do not match the point set");
  if (n == 0) return {};
  K = std::min(K, n);

  constexpr double inf = std::numeric_limits<double>::infinity();
  constexpr std::size_t from_fewer = std::numeric_limits<std::size_t>::max();
  struct Back {
    std::size_t list = from_fewer;
    std::size_t slot = 0;
  };
  // best[k][len]: cheapest way to cover the prefix 0..len-1 with <= k circles.
  std::vector<std::vector<double>> best(K + 1, std::vector<double>(n + 1, inf));
  std::vector<std::vector<Back>> back(K + 1, std::vector<Back>(n + 1));
  best[0][0] = 0.0;

  for (std::size_t k = 1; k <= K; ++k) {
    best[k][0] = 0.0;
    double run = inf;
    Back run_back;
    for (std::size_t len = n; len >= 1; --len) {
      const std::size_t r = len - 1;
      double here = inf;
      Back here_back;
      for (std::size_t s = 0; s < lists[r].size(); ++s) {
        const Candidate& c = lists[r][s];
        const double prev = best[k - 1][c.left];
        if (prev == inf) continue;
        const double v = spec.combine(prev, spec.cost(c.radius));
        if (v < here) {
          here = v;
          here_back = {r, s};
        }
      }
      if (recurrence == Recurrence::Covering) {
        if (here < run) {
          run = here;
          run_back = here_back;
        }
      } else {
        run = here;
        run_back = here_back;
      }
      if (best[k - 1][len] <= run) {
        best[k][len] = best[k - 1][len];
        back[k][len] = {};
      } else {
        best[k][len] = run;
        back[k][len] = run_back;
      }
    }
  }
  if (best[K][n] == inf) throw Error(ErrorCode::InvalidArgument, "candidate lists admit no cover");

  CoverSolution sol;
  std::size_t len = n;
  for (std::size_t k = K; k >= 1 && len > 0; --k) {
    const Back b = back[k][len];
    if (b.list == from_fewer) continue;
    const Candidate& c = lists[b.list][b.slot];
    if (c.left < len) sol.intervals.emplace_back(c.left, len - 1);
    len = std::min(len, c.left);
  }
  std::reverse(sol.intervals.begin(), sol.intervals.end());
  for (const auto& [l, r] : sol.intervals) {
    const PlacedCircle circle = rmin_on_axis(ps, l, r, norm, tol);
    sol.circles.push_back(circle);
    sol.objective = spec.combine(sol.objective, spec.cost(circle.radius));
  }
  return sol;
}

// The recurrence as literally stated, without a circle-count bound.
inline CoverSolution dp_solve_unbounded(const PointSet& ps, const AggSpec& spec, const CandidateLists& lists,
                                        const NormP& norm, const Tolerance& tol = {}) {
  return dp_solve(ps, std::max<std::size_t>(ps.size(), 1), spec, lists, norm, tol, Recurrence::ExactEnd);
}

// Exhaustive search over every assignment of points to at most K groups.
struct PartitionSolution {
  std::vector<std::vector<std::size_t>> groups;
  std::vector<PlacedCircle> circles;
  double objective = 0.0;
  // Every group is a run of consecutive sorted indices.
  bool contiguous = true;
};

namespace detail {

// Minimax axis centre of a small group by golden-section search on the convex
// farthest-point profile; independent of the covering-interval machinery.
inline PlacedCircle golden_group_centre(std::span<const Point> group, const NormP& norm) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double reach = 0.0;
  for (const Point& p : group) {
    lo = std::min(lo, p.x);
    hi = std::max(hi, p.x);
    reach = std::max(reach, std::abs(p.y));
  }
  lo -= reach;
  hi += reach;
  auto f = [&](double x) {
    double r = 0.0;
    for (const Point& p : group) r = std::max(r, lp_distance({x, 0.0}, p, norm));
    return r;
  };
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  const double stop = 1e-13 * (1.0 + std::abs(lo) + std::abs(hi));
  for (int it = 0; it < 300 && hi - lo > stop; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = f(x2);
    }
  }
  const double x = 0.5 * (lo + hi);
  return {x, f(x)};
}

}  // namespace detail

inline PartitionSolution set_partition_oracle(const PointSet& ps, std::size_t K, const AggSpec& spec,
                                              const NormP& norm) {
  const std::size_t n = ps.size();
  if (n > 10 || K > 4) throw Error(ErrorCode::TooLarge, "set_partition_oracle is capped at N <= 10, K <= 4");
  if (K == 0) throw Error(ErrorCode::InvalidArgument, "K must be >= 1");
  if (n == 0) return {};

  std::vector<std::optional<PlacedCircle>> memo(std::size_t{1} << n);
  auto group_circle = [&](unsigned mask) {
    auto& slot = memo[mask];
    if (!slot) {
      std::vector<Point> g;
      for (std::size_t k = 0; k < n; ++k) {
        if (mask & (1u << k)) g.push_back(ps[k]);
      }
      slot = detail::golden_group_centre(g, norm);
    }
    return *slot;
  };

  // Restricted growth strings: label[k] <= 1 + max(label[0..k-1]).
  std::vector<std::size_t> label(n, 0);
  PartitionSolution best;
  best.objective = std::numeric_limits<double>::infinity();
  auto evaluate = [&](std::size_t blocks) {
    std::vector<unsigned> masks(blocks, 0u);
    for (std::size_t k = 0; k < n; ++k) masks[label[k]] |= 1u << k;
    double obj = 0.0;
    for (unsigned m : masks) obj = spec.combine(obj, spec.cost(group_circle(m).radius));
    if (obj < best.objective) {
      best.objective = obj;
      best.groups.assign(blocks, {});
      best.circles.clear();
      for (std::size_t k = 0; k < n; ++k) best.groups[label[k]].push_back(k);
      for (unsigned m : masks) best.circles.push_back(group_circle(m));
    }
  };
  auto recurse = [&](auto&& self, std::size_t k, std::size_t blocks) -> void {
    if (k == n) {
      evaluate(blocks);
      return;
    }
    for (std::size_t b = 0; b <= blocks && b < K; ++b) {
      label[k] = b;
      self(self, k + 1, std::max(blocks, b + 1));
    }
  };
  recurse(recurse, 0, 0);

  for (const auto& g : best.groups) {
    for (std::size_t k = 1; k < g.size(); ++k) {
      if (g[k] != g[k - 1] + 1) best.contiguous = false;
    }
  }
  return best;
}

}  // namespace lcsp
