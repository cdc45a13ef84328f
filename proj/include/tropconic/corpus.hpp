#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tropconic/conic.hpp"
#include "tropconic/quadratic.hpp"
#include "tropconic/scalar.hpp"

namespace tropconic {

// Deterministic generator for test inputs.  Draws go through plain modulo
// reduction instead of the standard distributions, whose output differs
// between library implementations; a fixed seed must mean a fixed corpus
// everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // Uniform-ish draw in [0, n); n must be positive.
  long below(long n);

  // Inclusive range [lo, hi].
  long range(long lo, long hi);

  bool chance(int percent);

  // Rational in [lo, hi] with denominator at most max_den.
  Rational rational(long lo, long hi, long max_den = 4);

 private:
  std::mt19937_64 eng_;
};

// Fully random symmetric matrix: finite diagonal, mixed entries occasionally
// bottom.  Entries stay within [-10, 10] with denominators at most 4.
SymMatrix3 random_symmetric(Rng& rng);

// Random matrix whose classification lands on the requested tag.  Built by
// choosing invariants with the tag's sign pattern in canonical position,
// optionally roughening clamped-away entries, then translating and permuting.
SymMatrix3 random_of_class(Rng& rng, ConicClassTag tag);

// count fully random matrices followed by per_class forced samples per tag.
std::vector<SymMatrix3> corpus(std::uint64_t seed, int count, int per_class);

}  // namespace tropconic
