#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "instance.hpp"

namespace lcsp::cli {

struct GenOptions {
  Problem kind = Problem::Obnoxious;
  std::size_t n = 1;
  std::uint64_t seed = 1;
  double p = 2.0;
  // Coordinates are uniform in [-range, range]^2; constraint (0,0)-(L,0).
  double range = 100.0;
  double L = 10.0;
  std::size_t K = 3;
};

// mt19937_64 is fully specified by the standard; the distributions are not,
// so the unit-interval mapping is done by hand.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : rng_(seed) {}
  double operator()(double lo, double hi) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    // Six decimals keep generated files short and exactly reproducible.
    return std::round((lo + (hi - lo) * u) * 1e6) / 1e6;
  }

 private:
  std::mt19937_64 rng_;
};

inline Instance generate(const GenOptions& opt) {
  Uniform u(opt.seed);
  Instance inst;
  inst.problem = opt.kind;
  inst.p = opt.p;
  const double r = opt.range;
  if (opt.kind == Problem::KCover) {
    inst.K = opt.K;
    for (std::size_t k = 0; k < opt.n; ++k) {
      const double x = u(-r, r);
      inst.points.push_back({x, u(-r, r)});
    }
    return inst;
  }
  inst.constraint = Segment{{0.0, 0.0}, {opt.L, 0.0}};
  for (std::size_t k = 0; k < opt.n; ++k) {
    const double ax = u(-r, r), ay = u(-r, r), bx = u(-r, r), by = u(-r, r);
    inst.segments.push_back({{ax, ay}, {bx, by}});
  }
  return inst;
}

}  // namespace lcsp::cli
