#pragma once

/**
 * @file scalar.hpp
 * @brief Scalars of the max-plus semiring T = R union {-inf}.
 *
 * Tropical addition is max, tropical multiplication is classical addition:
 *
 *   operation   symbol   neutral    notes
 *   ---------   ------   -------    ------------------------------
 *   t_add       (+)      -inf       idempotent, commutative
 *   t_mul       (.)      0          -inf is absorbing
 *   t_pow       a^(.)k   0 (k = 0)  equals k * a classically
 *
 * Finite values are exact rationals (GMP), -inf is a distinct state of
 * TropScalar, never a sentinel rational. All operations are pure.
 */

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "tropconic/error.hpp"

namespace tropconic {

/* Arbitrary-precision rational, always in canonical reduced form with a
 * positive denominator. GMP keeps arithmetic results canonical; raw string
 * construction goes through parse_rational below, which canonicalizes. */
using Rational = mpq_class;

/* Parses "7", "-3", "3/2", "+9/4". The denominator, when present, must be a
 * positive integer. Throws input_error otherwise. */
Rational parse_rational(std::string_view text);

/* Inverse of parse_rational on canonical values: "7", "-3", "3/2". */
std::string format_rational(const Rational& q);

/* An element of T: either a finite rational or bottom (-inf). */
class TropScalar {
 public:
  TropScalar() = default;  // bottom
  TropScalar(Rational v) : v_(std::move(v)) {}
  TropScalar(long v) : v_(Rational(v)) {}
  TropScalar(int v) : v_(Rational(v)) {}

  static TropScalar bottom() { return TropScalar(); }

  bool is_bottom() const { return !v_.has_value(); }
  bool is_finite() const { return v_.has_value(); }

  /* The finite value. Calling this on bottom is a bug. */
  const Rational& value() const {
    if (!v_) throw internal_error("TropScalar::value on -inf");
    return *v_;
  }

  friend bool operator==(const TropScalar& a, const TropScalar& b) {
    if (a.is_bottom() || b.is_bottom()) return a.is_bottom() == b.is_bottom();
    return *a.v_ == *b.v_;
  }

  /* Total order with bottom below every finite value. */
  friend bool operator<(const TropScalar& a, const TropScalar& b) {
    if (a.is_bottom()) return !b.is_bottom();
    if (b.is_bottom()) return false;
    return *a.v_ < *b.v_;
  }
  friend bool operator>(const TropScalar& a, const TropScalar& b) { return b < a; }
  friend bool operator<=(const TropScalar& a, const TropScalar& b) { return !(b < a); }
  friend bool operator>=(const TropScalar& a, const TropScalar& b) { return !(a < b); }
  friend bool operator!=(const TropScalar& a, const TropScalar& b) { return !(a == b); }

 private:
  std::optional<Rational> v_;
};

/* max(a, b) */
TropScalar t_add(const TropScalar& a, const TropScalar& b);

/* a + b classically; bottom absorbs. */
TropScalar t_mul(const TropScalar& a, const TropScalar& b);

/* k-fold tropical product, i.e. k * a classically. k = 0 yields the tropical
 * one (0) for every a, including bottom (empty product). Negative k is the
 * tropical inverse power and is undefined on bottom. */
TropScalar t_pow(const TropScalar& a, long k);

/* a (+) 0, written a+ below. Always finite and >= 0. */
TropScalar nonneg_part(const TropScalar& a);

/* Semiring operators, for readability in formulas. operator+ is max. */
inline TropScalar operator+(const TropScalar& a, const TropScalar& b) { return t_add(a, b); }
inline TropScalar operator*(const TropScalar& a, const TropScalar& b) { return t_mul(a, b); }

/* Textual form: canonical rational or "-inf". parse . format == id, bit
 * exact, and format . parse == id on canonical spellings. */
TropScalar parse_scalar(std::string_view text);
std::string format_scalar(const TropScalar& a);

}  // namespace tropconic
