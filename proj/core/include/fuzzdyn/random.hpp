#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fuzzdyn/compacta.hpp"
#include "fuzzdyn/fuzzy.hpp"
#include "fuzzdyn/ground.hpp"
#include "fuzzdyn/rational.hpp"

namespace fuzzdyn {

// Deterministic pseudo-random source. Every reduction from the raw 64-bit
// stream is written out here, so one seed yields one value sequence on any
// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, n). pre: n >= 1
  long below(long n);

  bool coin() { return (next_u64() & 1u) != 0; }

  // Uniform over {0, 1/d, ..., 1} for a denominator d drawn up to max_den.
  Rat unit_rational(long max_den);

  // Strictly between lo and hi. pre: lo < hi
  Rat between(const Rat& lo, const Rat& hi, long max_den);

 private:
  std::mt19937_64 gen_;
};

// A point of the space: grid coordinate with denominator at most max_den on
// the interval and circle, uniform element index on finite spaces.
Point random_point(Rng& rng, const GroundSpace& space, long max_den);

Compactum random_compactum(Rng& rng, const GroundSpace& space, int max_points, long max_den);

// Decreasing chain of the requested length, largest set first, built by
// repeatedly thinning a random compactum.
std::vector<Compactum> random_nested_chain(Rng& rng, const GroundSpace& space, int length,
                                           int max_points, long max_den);

StepFuzzySet random_step_fuzzy(Rng& rng, const GroundSpace& space, int max_pieces,
                               int max_points, long max_den);

TimeWarp random_warp(Rng& rng, int max_interior_knots, long max_den);

// Random finite metric space of the given size, with d(i, j) = r_i + r_j off
// the diagonal for positive weights r_i; such a table is always a metric.
GroundSpace random_finite_space(Rng& rng, int size, long max_den);

}  // namespace fuzzdyn
