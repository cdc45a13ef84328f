#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropconic/quadratic.hpp"

namespace tropconic {

struct CheckFailure {
  std::string what;   // property that failed
  std::string input;  // offending polynomial, formatted
};

// Outcome of running the self-checks over one or many polynomials.  Every
// property violation is recorded; nothing stops at the first failure.
struct CheckReport {
  int checked = 0;
  std::vector<CheckFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Cross-validates one polynomial: closed-form vertices against the corner
// locus in all three charts, balance, ray census, class/vertex-count and
// determinant consistency, clamping invariance, pendant gaps in canonical
// position, factorization, and the reconstruction round trip.
void check_poly(const QuadPoly& p, CheckReport& report);

// check_poly over a seeded corpus: count random matrices plus forced samples
// of every class (at least ten per class).  Forced samples also assert that
// they landed on the requested class.
CheckReport check_corpus(std::uint64_t seed, int count);

}  // namespace tropconic
