#pragma once

#include <cmath>
#include <span>

#include "lcsp/k_cover.hpp"
#include "lcsp/one_center.hpp"

// Brute-force references for the exact solvers. Deliberately naive.
namespace lcsp::oracle {

struct GridSpec {
  double step = 1e-3;
  Interval domain{0.0, 0.0};

  GridSpec() = default;
  GridSpec(double step_, Interval domain_) : step(step_), domain(domain_) {
    if (!(step > 0.0)) throw Error(ErrorCode::InvalidArgument, "grid step must be > 0");
    if (domain.empty()) throw Error(ErrorCode::InvalidArgument, "grid domain must be non-empty");
  }

  std::size_t count() const { return static_cast<std::size_t>(std::floor(domain.width() / step)) + 1; }
  // Last sample is clamped to the domain end.
  double at(std::size_t k) const { return std::min(domain.lo + static_cast<double>(k) * step, domain.hi); }
};

// Grid point minimizing the farthest segment distance (first one on ties).
inline PlacedCircle grid_one_center(std::span<const Segment> segments, const NormP& norm, const GridSpec& grid,
                                    const Tolerance& tol = {}) {
  if (segments.empty()) throw Error(ErrorCode::EmptyInput, "grid_one_center needs at least one segment");
  PlacedCircle best{grid.domain.lo, std::numeric_limits<double>::infinity()};
  const std::size_t n = grid.count();
  for (std::size_t k = 0; k <= n; ++k) {
    const double x = k == n ? grid.domain.hi : grid.at(k);
    const double r = farthest_segment_distance(x, segments, norm, tol);
    if (r < best.radius) best = {x, r};
  }
  return best;
}

// Grid point maximizing the nearest segment distance (first one on ties).
inline PlacedCircle grid_obnoxious_center(std::span<const Segment> segments, const NormP& norm,
                                          const GridSpec& grid, const Tolerance& tol = {}) {
  if (segments.empty()) throw Error(ErrorCode::EmptyInput, "grid_obnoxious_center needs at least one segment");
  PlacedCircle best{grid.domain.lo, -1.0};
  const std::size_t n = grid.count();
  for (std::size_t k = 0; k <= n; ++k) {
    const double x = k == n ? grid.domain.hi : grid.at(k);
    const double r = nearest_segment_distance(x, segments, norm, tol);
    if (r > best.radius) best = {x, r};
  }
  return best;
}

using lcsp::set_partition_oracle;

}  // namespace lcsp::oracle
