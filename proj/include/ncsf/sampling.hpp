#pragma once

// Seeded random rational points for identity testing.

#include <cstdint>
#include <random>
#include <vector>

#include "ncsf/errors.hpp"
#include "ncsf/poly.hpp"

namespace ncsf {

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr int kRandomPointCount = 20;

class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  /// p/q with 1 <= |p| <= 97, 1 <= q <= 11.
  Rational value();
  Point sample(const std::vector<Var>& vars);

 private:
  std::mt19937_64 rng_;
};

/// Union of the variables of the given polynomials, sorted by id.
std::vector<Var> collect_variables(const std::vector<MPoly>& polys);

/// Calls f(point) at `count` points, resampling whenever f throws
/// DivisionByZero (the point hit a denominator's zero set).
template <class F>
void for_random_points(std::uint64_t seed, int count, const std::vector<Var>& vars, F&& f) {
  PointSampler sampler(seed);
  int done = 0;
  int misses = 0;
  while (done < count) {
    Point p = sampler.sample(vars);
    try {
      f(p);
      ++done;
    } catch (const DivisionByZero&) {
      if (++misses > 50 * count) throw;
    }
  }
}

}  // namespace ncsf
