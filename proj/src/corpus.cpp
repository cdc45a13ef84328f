#include "tropconic/corpus.hpp"

#include "tropconic/error.hpp"

namespace tropconic {

long Rng::below(long n) {
  if (n <= 0) throw internal_error("Rng::below: nonpositive bound");
  return static_cast<long>(raw() % static_cast<std::uint64_t>(n));
}

long Rng::range(long lo, long hi) {
  if (lo > hi) throw internal_error("Rng::range: empty range");
  return lo + below(hi - lo + 1);
}

bool Rng::chance(int percent) { return below(100) < percent; }

Rational Rng::rational(long lo, long hi, long max_den) {
  long den = range(1, max_den);
  long num = range(lo * den, hi * den);
  return Rational(num) / den;
}

SymMatrix3 random_symmetric(Rng& rng) {
  auto mixed = [&rng]() {
    if (rng.chance(15)) return TropScalar::bottom();
    return TropScalar(rng.rational(-10, 10));
  };
  SymMatrix3 a;
  a.a11 = rng.rational(-10, 10);
  a.a22 = rng.rational(-10, 10);
  a.a33 = rng.rational(-10, 10);
  a.a21 = mixed();
  a.a32 = mixed();
  a.a31 = mixed();
  return a;
}

SymMatrix3 random_of_class(Rng& rng, ConicClassTag tag) {
  auto pos = [&rng]() { return rng.rational(1, 6, 2); };

  // Clamped shape in canonical position for the tag.
  Rational s21 = 0;
  Rational s32 = 0;
  Rational s31 = 0;
  switch (tag) {
    case ConicClassTag::OnePointCentral: {
      Rational d1 = pos();
      Rational d2 = pos();
      Rational d3 = pos();
      s21 = (d1 + d2) / 2;
      s32 = (d2 + d3) / 2;
      s31 = (d1 + d3) / 2;
      break;
    }
    case ConicClassTag::TwoPointCentral: {
      // d3 < 0 while both pair entries through index 3 stay positive.
      s31 = pos() / 2;
      s32 = pos() / 2;
      s21 = s31 + s32 + pos();
      break;
    }
    case ConicClassTag::Degenerate1: {
      s31 = 0;
      s32 = pos();
      s21 = s32 + pos();
      break;
    }
    case ConicClassTag::Degenerate2: {
      s21 = pos();
      break;
    }
    case ConicClassTag::PairOfLinesOneZero: {
      s31 = pos();
      s32 = pos();
      s21 = s31 + s32;
      break;
    }
    case ConicClassTag::PairOfLinesTwoZeros: {
      s21 = pos();
      s31 = s21;
      break;
    }
    case ConicClassTag::DoubleLine:
      break;
  }

  // Zero entries of the clamped shape came from clamping; roughen some of
  // them back below zero (or to bottom) without touching the class.
  auto roughen = [&rng](const Rational& s) {
    if (s != 0 || !rng.chance(40)) return TropScalar(s);
    if (rng.chance(35)) return TropScalar::bottom();
    return TropScalar(rng.rational(-6, -1));
  };
  TropScalar r21 = roughen(s21);
  TropScalar r32 = roughen(s32);
  TropScalar r31 = roughen(s31);

  // Conjugate by a random diagonal, then move out of canonical position.
  Rational t1 = rng.rational(-4, 4);
  Rational t2 = rng.rational(-4, 4);
  Rational t3 = rng.rational(-4, 4);
  auto lift = [](const TropScalar& s, const Rational& u, const Rational& v) {
    if (s.is_bottom()) return TropScalar::bottom();
    return TropScalar(s.value() + u + v);
  };
  SymMatrix3 a;
  a.a11 = 2 * t1;
  a.a22 = 2 * t2;
  a.a33 = 2 * t3;
  a.a21 = lift(r21, t1, t2);
  a.a32 = lift(r32, t2, t3);
  a.a31 = lift(r31, t1, t3);
  return permute(a, all_perms()[rng.below(6)]);
}

std::vector<SymMatrix3> corpus(std::uint64_t seed, int count, int per_class) {
  if (count < 0) count = 0;
  if (per_class < 0) per_class = 0;
  Rng rng(seed);
  std::vector<SymMatrix3> out;
  out.reserve(static_cast<std::size_t>(count) + 7u * static_cast<std::size_t>(per_class));
  for (int i = 0; i < count; ++i) out.push_back(random_symmetric(rng));
  for (ConicClassTag tag : kConicClassTags) {
    for (int i = 0; i < per_class; ++i) out.push_back(random_of_class(rng, tag));
  }
  return out;
}

}  // namespace tropconic
