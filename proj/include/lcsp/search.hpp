#pragma once

#include <cmath>
#include <concepts>
#include <utility>

#include "lcsp/error.hpp"

namespace lcsp {

// Termination policy shared by every binary search in the library: stop when
// the bracket is no wider than `eps` or after `max_iters` halvings.
struct Tolerance {
  double eps = 1e-9;
  int max_iters = 200;

  Tolerance() = default;
  Tolerance(double eps_, int max_iters_ = 200) : eps(eps_), max_iters(max_iters_) {
    if (!(eps > 0.0) || !std::isfinite(eps)) {
      throw Error(ErrorCode::InvalidArgument, "tolerance eps must be a positive finite real");
    }
    if (max_iters < 1) {
      throw Error(ErrorCode::InvalidArgument, "tolerance max_iters must be >= 1");
    }
  }
};

// Bisects a monotone predicate. Requires pred(good) == true and
// pred(bad) == false; `good` may lie on either side of `bad`. Returns the final
// (good, bad) bracket.
template <std::predicate<double> Pred>
std::pair<double, double> bisect(double good, double bad, Pred&& pred, const Tolerance& tol) {
  for (int it = 0; it < tol.max_iters && std::abs(bad - good) > tol.eps; ++it) {
    const double mid = good + (bad - good) * 0.5;
    if (mid == good || mid == bad) break;
    if (pred(mid)) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  return {good, bad};
}

}  // namespace lcsp
