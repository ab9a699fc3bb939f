#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lcsp/geometry.hpp"

namespace lcsp::testing {

// Seeded generator for the property suites.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Point point(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }

  // Mix of general segments, point segments, axis-parallel and axis-crossing
  // ones, so every branch of the distance code is hit.
  Segment segment(double lo = -10.0, double hi = 10.0) {
    switch (integer(0, 5)) {
      case 0: return Segment::point(point(lo, hi));
      case 1: {
        const double y = uniform(lo, hi);
        return {{uniform(lo, hi), y}, {uniform(lo, hi), y}};
      }
      case 2: {
        const double x = uniform(lo, hi);
        return {{x, uniform(lo, hi)}, {x, uniform(lo, hi)}};
      }
      default: return {point(lo, hi), point(lo, hi)};
    }
  }

  double norm_exponent() {
    static constexpr double ps[] = {1.0, 2.0, 3.0};
    return ps[integer(0, 2)];
  }

  std::vector<Segment> segments(std::size_t n, double lo = -10.0, double hi = 10.0) {
    std::vector<Segment> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(segment(lo, hi));
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace lcsp::testing
