#pragma once

#include <optional>
#include <utility>

#include "tropconic/quadratic.hpp"

namespace tropconic {

/* Tropical linear form c_x*X + c_y*Y + c_z*Z (max-plus). Formal object:
 * two forms multiply coefficientwise via max/plus, see expand(). */
struct LinForm {
  TropScalar x, y, z;

  const TropScalar& coefficient(int i) const;  // 1-based variable index
  TropScalar& coefficient(int i);

  friend bool operator==(const LinForm& a, const LinForm& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const LinForm& a, const LinForm& b) { return !(a == b); }
};

/* Coefficientwise product of two linear forms. The XY coefficient is
 * (f_x*g_y) max (f_y*g_x), and so on. Throws input_error when a squared
 * variable comes out with coefficient -inf, since the result would not be
 * a conic polynomial. */
QuadPoly expand(const LinForm& f, const LinForm& g);

/* True iff the shape of p has all three off-diagonal entries finite and
 * >= 0, with the largest equal to the sum of the other two. A negative or
 * -inf shape entry means irreducible, even when the curve itself is
 * degenerate. */
bool is_reducible(const QuadPoly& p);

/* Factor p into two linear forms, or nullopt when is_reducible(p) is
 * false. The factors are normalized at the shape level (both Z-coefficients
 * zero before conjugating by the diagonal), and expand(f, g) == p holds
 * coefficientwise. Ties in locating the maximal shape entry resolve in the
 * order s21, s32, s31. */
std::optional<std::pair<LinForm, LinForm>> factorize(const QuadPoly& p);

LinForm permute(const LinForm& f, const IndexPerm& sigma);

}  // namespace tropconic
