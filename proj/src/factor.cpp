#include "tropconic/factor.hpp"

#include <algorithm>

#include "tropconic/error.hpp"

namespace tropconic {

const TropScalar& LinForm::coefficient(int i) const {
  switch (i) {
    case 1: return x;
    case 2: return y;
    case 3: return z;
  }
  throw internal_error("LinForm::coefficient: bad index");
}

TropScalar& LinForm::coefficient(int i) {
  switch (i) {
    case 1: return x;
    case 2: return y;
    case 3: return z;
  }
  throw internal_error("LinForm::coefficient: bad index");
}

QuadPoly expand(const LinForm& f, const LinForm& g) {
  TropScalar xx = t_mul(f.x, g.x);
  TropScalar yy = t_mul(f.y, g.y);
  TropScalar zz = t_mul(f.z, g.z);
  if (xx.is_bottom() || yy.is_bottom() || zz.is_bottom())
    throw input_error("expand: a squared-variable coefficient is -inf");
  QuadPoly p;
  p.xx = xx.value();
  p.yy = yy.value();
  p.zz = zz.value();
  p.xy = t_add(t_mul(f.x, g.y), t_mul(f.y, g.x));
  p.yz = t_add(t_mul(f.y, g.z), t_mul(f.z, g.y));
  p.xz = t_add(t_mul(f.x, g.z), t_mul(f.z, g.x));
  return p;
}

bool is_reducible(const QuadPoly& p) {
  SymMatrix3 s = shape(matrix_of(p));
  if (s.a21.is_bottom() || s.a32.is_bottom() || s.a31.is_bottom()) return false;
  const Rational s21 = s.a21.value(), s32 = s.a32.value(), s31 = s.a31.value();
  if (s21 < 0 || s32 < 0 || s31 < 0) return false;
  Rational mx = std::max({s21, s32, s31});
  return 2 * mx == s21 + s32 + s31;
}

LinForm permute(const LinForm& f, const IndexPerm& sigma) {
  LinForm out;
  for (int i = 1; i <= 3; ++i) out.coefficient(i) = f.coefficient(sigma[i - 1]);
  return out;
}

std::optional<std::pair<LinForm, LinForm>> factorize(const QuadPoly& p) {
  if (!is_reducible(p)) return std::nullopt;

  const SymMatrix3 a = matrix_of(p);
  const SymMatrix3 s = shape(a);
  const Rational s21 = s.a21.value(), s32 = s.a32.value(), s31 = s.a31.value();
  const Rational mx = std::max({s21, s32, s31});

  // Move the maximal entry to position (3,1); ties resolve (21, 32, 31).
  IndexPerm sigma = kIdentityPerm;
  if (s21 == mx)
    sigma = {1, 3, 2};
  else if (s32 == mx)
    sigma = {2, 1, 3};

  Rational aa = s.entry(sigma[2], sigma[0]).value();  // = mx
  Rational bb = s.entry(sigma[2], sigma[1]).value();

  // Shape-level factors (aa*X' + bb*Y' + Z')((-aa)*X' + (-bb)*Y' + Z') in
  // the permuted variables, carried back to the originals.
  LinForm f, g;
  f.coefficient(sigma[0]) = TropScalar(aa);
  f.coefficient(sigma[1]) = TropScalar(bb);
  f.coefficient(sigma[2]) = TropScalar(0L);
  g.coefficient(sigma[0]) = TropScalar(Rational(-aa));
  g.coefficient(sigma[1]) = TropScalar(Rational(-bb));
  g.coefficient(sigma[2]) = TropScalar(0L);

  // Conjugate by the diagonal part of p.
  const DiagTranslation t = diag_of(a);
  const std::array<Rational, 3> ts{t.t1, t.t2, t.t3};
  for (int i = 1; i <= 3; ++i) {
    f.coefficient(i) = TropScalar(Rational(f.coefficient(i).value() + ts[i - 1]));
    g.coefficient(i) = TropScalar(Rational(g.coefficient(i).value() + ts[i - 1]));
  }

  if (!(expand(f, g) == p))
    throw internal_error("factorize: factors fail the expand check");
  return std::make_pair(f, g);
}

}  // namespace tropconic
