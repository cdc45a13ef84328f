#include "tropconic/quadratic.hpp"

#include <algorithm>
#include <bit>

namespace tropconic {

const char* monomial_name(Monomial m) {
  switch (m) {
    case Monomial::XX: return "X^2";
    case Monomial::YY: return "Y^2";
    case Monomial::ZZ: return "Z^2";
    case Monomial::XY: return "X*Y";
    case Monomial::YZ: return "Y*Z";
    case Monomial::XZ: return "X*Z";
  }
  throw internal_error("monomial_name: bad enum");
}

int MonomialSet::size() const { return std::popcount(bits_); }

std::vector<Monomial> MonomialSet::members() const {
  std::vector<Monomial> out;
  for (Monomial m : kMonomials)
    if (contains(m)) out.push_back(m);
  return out;
}

std::vector<std::string> MonomialSet::names() const {
  std::vector<std::string> out;
  for (Monomial m : members()) out.emplace_back(monomial_name(m));
  return out;
}

const char* chart_name(Chart c) {
  switch (c) {
    case Chart::X: return "X";
    case Chart::Y: return "Y";
    case Chart::Z: return "Z";
  }
  throw internal_error("chart_name: bad enum");
}

Chart chart_of_name(std::string_view name) {
  if (name == "X") return Chart::X;
  if (name == "Y") return Chart::Y;
  if (name == "Z") return Chart::Z;
  throw input_error("unknown chart '" + std::string(name) + "', expected X, Y or Z");
}

TropScalar QuadPoly::coefficient(Monomial m) const {
  switch (m) {
    case Monomial::XX: return TropScalar(xx);
    case Monomial::YY: return TropScalar(yy);
    case Monomial::ZZ: return TropScalar(zz);
    case Monomial::XY: return xy;
    case Monomial::YZ: return yz;
    case Monomial::XZ: return xz;
  }
  throw internal_error("coefficient: bad enum");
}

SymMatrix3 matrix_of(const QuadPoly& p) {
  return SymMatrix3{p.xx, p.yy, p.zz, p.xy, p.yz, p.xz};
}

QuadPoly poly_of(const SymMatrix3& a) {
  return QuadPoly{a.a11, a.a22, a.a33, a.a21, a.a32, a.a31};
}

DiagTranslation diag_of(const SymMatrix3& a) {
  return DiagTranslation{a.a11 / 2, a.a22 / 2, a.a33 / 2};
}

TropScalar SymMatrix3::entry(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i == j) return TropScalar(i == 1 ? a11 : i == 2 ? a22 : a33);
  if (i == 1 && j == 2) return a21;
  if (i == 2 && j == 3) return a32;
  return a31;  // {1,3}
}

namespace {

/* s_ij = a_ij - (a_ii + a_jj) / 2 for the mixed entries. */
TropScalar shape_entry(const TropScalar& aij, const Rational& aii, const Rational& ajj) {
  if (aij.is_bottom()) return TropScalar::bottom();
  return TropScalar(Rational(aij.value() - (aii + ajj) / 2));
}

}  // namespace

SymMatrix3 shape(const SymMatrix3& a) {
  SymMatrix3 s;
  s.a11 = 0;
  s.a22 = 0;
  s.a33 = 0;
  s.a21 = shape_entry(a.a21, a.a11, a.a22);
  s.a32 = shape_entry(a.a32, a.a22, a.a33);
  s.a31 = shape_entry(a.a31, a.a11, a.a33);
  return s;
}

SymMatrix3 nonneg_shape(const SymMatrix3& s) {
  if (s.a11 != 0 || s.a22 != 0 || s.a33 != 0)
    throw internal_error("nonneg_shape: matrix has a nonzero diagonal");
  SymMatrix3 r = s;
  r.a21 = nonneg_part(s.a21);
  r.a32 = nonneg_part(s.a32);
  r.a31 = nonneg_part(s.a31);
  return r;
}

TropDet trop_det(const std::array<std::array<TropScalar, 3>, 3>& m) {
  static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::array<TropScalar, 6> prod;
  for (int k = 0; k < 6; ++k)
    prod[k] = m[0][perms[k][0]] * m[1][perms[k][1]] * m[2][perms[k][2]];
  TropScalar best = prod[0];
  for (int k = 1; k < 6; ++k) best = t_add(best, prod[k]);
  int attained = 0;
  for (int k = 0; k < 6; ++k)
    if (prod[k] == best) ++attained;
  return TropDet{best, attained};
}

TropDet trop_det(const SymMatrix3& a) {
  std::array<std::array<TropScalar, 3>, 3> m;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) m[i - 1][j - 1] = a.entry(i, j);
  return trop_det(m);
}

std::pair<int, int> exponent(Monomial m, Chart chart) {
  // Exponents of (X, Y, Z) with the chart's own variable dropped.
  static constexpr int exps[6][3] = {
      {2, 0, 0},  // X^2
      {0, 2, 0},  // Y^2
      {0, 0, 2},  // Z^2
      {1, 1, 0},  // X*Y
      {0, 1, 1},  // Y*Z
      {1, 0, 1},  // X*Z
  };
  const int* e = exps[static_cast<int>(m)];
  switch (chart) {
    case Chart::Z: return {e[0], e[1]};
    case Chart::Y: return {e[0], e[2]};
    case Chart::X: return {e[1], e[2]};
  }
  throw internal_error("exponent: bad chart");
}

Evaluation eval(const QuadPoly& p, const AffinePoint& q, Chart chart) {
  bool have = false;
  Rational best;
  std::array<std::optional<Rational>, 6> vals;
  for (Monomial m : kMonomials) {
    TropScalar c = p.coefficient(m);
    if (c.is_bottom()) continue;
    auto [e1, e2] = exponent(m, chart);
    Rational v = c.value() + e1 * q.x + e2 * q.y;
    vals[static_cast<int>(m)] = v;
    if (!have || v > best) {
      best = v;
      have = true;
    }
  }
  if (!have) throw internal_error("eval: polynomial with empty support");
  Evaluation out;
  out.value = best;
  for (Monomial m : kMonomials) {
    const auto& v = vals[static_cast<int>(m)];
    if (v && *v == best) out.maximizers.insert(m);
  }
  return out;
}

SymMatrix3 permute(const SymMatrix3& a, const IndexPerm& sigma) {
  SymMatrix3 r;
  r.a11 = a.entry(sigma[0], sigma[0]).value();
  r.a22 = a.entry(sigma[1], sigma[1]).value();
  r.a33 = a.entry(sigma[2], sigma[2]).value();
  r.a21 = a.entry(sigma[1], sigma[0]);
  r.a32 = a.entry(sigma[2], sigma[1]);
  r.a31 = a.entry(sigma[2], sigma[0]);
  return r;
}

QuadPoly permute(const QuadPoly& p, const IndexPerm& sigma) {
  return poly_of(permute(matrix_of(p), sigma));
}

IndexPerm inverse(const IndexPerm& sigma) {
  IndexPerm inv{};
  for (int i = 0; i < 3; ++i) inv[sigma[i] - 1] = i + 1;
  return inv;
}

const std::array<IndexPerm, 6>& all_perms() {
  static const std::array<IndexPerm, 6> perms = {{{1, 2, 3},
                                                  {1, 3, 2},
                                                  {2, 1, 3},
                                                  {2, 3, 1},
                                                  {3, 1, 2},
                                                  {3, 2, 1}}};
  return perms;
}

}  // namespace tropconic
