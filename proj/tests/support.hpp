#pragma once

#include <string>

#include "tropconic/conic.hpp"
#include "tropconic/error.hpp"
#include "tropconic/expr.hpp"
#include "tropconic/quadratic.hpp"
#include "tropconic/scalar.hpp"

namespace tropconic::testutil {

inline Rational q(const char* text) { return parse_rational(text); }
inline TropScalar ts(const char* text) { return parse_scalar(text); }
inline AffinePoint pt(long x, long y) { return {Rational(x), Rational(y)}; }

/* Zero-diagonal matrix with the given mixed entries. */
inline SymMatrix3 shape_mat(const char* s21, const char* s32, const char* s31) {
  SymMatrix3 m;
  m.a11 = 0;
  m.a22 = 0;
  m.a33 = 0;
  m.a21 = ts(s21);
  m.a32 = ts(s32);
  m.a31 = ts(s31);
  return m;
}

/* Degenerate conic whose locus has two vertices, (0, 0) and (4, 2). */
inline QuadPoly sample_two_vertex() {
  return parse_poly("(-4)*X^2 + Y^2 + Z^2 + (-2)*X*Y + Y*Z + X*Z");
}

/* Reducible pair of tropical lines. */
inline QuadPoly sample_pair_of_lines() {
  return parse_poly("X^2 + 12*Y^2 + Z^2 + 7*X*Y + 6*Y*Z + 1*X*Z");
}

/* Message of the input_error thrown by f, empty when it does not throw. */
template <class F>
std::string rejection(F&& f) {
  try {
    f();
  } catch (const input_error& e) {
    return e.what();
  }
  return {};
}

}  // namespace tropconic::testutil
