#pragma once

/**
 * @file quadratic.hpp
 * @brief Degree-two homogeneous max-plus polynomials in X, Y, Z and their
 *        symmetric matrix form.
 *
 * A polynomial max{a11 + 2X, a22 + 2Y, a33 + 2Z, a21 + X+Y, a32 + Y+Z,
 * a31 + X+Z} is stored as the lower triangle of a symmetric 3x3 matrix.
 * Mixed coefficients are NOT halved; tropical addition is idempotent, so
 * the monomial X+Y simply carries a21 on both sides of the diagonal.
 * Diagonal entries are always finite (the degree-two condition), the mixed
 * ones may be -inf.
 */

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tropconic/scalar.hpp"

namespace tropconic {

enum class Monomial : int { XX = 0, YY = 1, ZZ = 2, XY = 3, YZ = 4, XZ = 5 };

inline constexpr std::array<Monomial, 6> kMonomials = {
    Monomial::XX, Monomial::YY, Monomial::ZZ,
    Monomial::XY, Monomial::YZ, Monomial::XZ};

/* Canonical spelling: "X^2", "Y^2", "Z^2", "X*Y", "Y*Z", "X*Z". */
const char* monomial_name(Monomial m);

/* Subset of the six monomials, e.g. the maximizers of an evaluation. */
class MonomialSet {
 public:
  MonomialSet() = default;

  void insert(Monomial m) { bits_ |= bit(m); }
  bool contains(Monomial m) const { return bits_ & bit(m); }
  int size() const;
  bool empty() const { return bits_ == 0; }
  std::uint8_t bits() const { return bits_; }

  /* Members in fixed monomial order. */
  std::vector<Monomial> members() const;
  std::vector<std::string> names() const;

  friend bool operator==(MonomialSet a, MonomialSet b) { return a.bits_ == b.bits_; }
  friend bool operator!=(MonomialSet a, MonomialSet b) { return a.bits_ != b.bits_; }
  friend bool operator<(MonomialSet a, MonomialSet b) { return a.bits_ < b.bits_; }

 private:
  static std::uint8_t bit(Monomial m) {
    return static_cast<std::uint8_t>(1u << static_cast<int>(m));
  }
  std::uint8_t bits_ = 0;
};

/* Affine charts of the tropical projective plane. Chart Z pins the Z
 * coordinate to 0 and keeps the affine pair (x, y); chart Y keeps (x, z);
 * chart X keeps (y, z). */
enum class Chart { X, Y, Z };

const char* chart_name(Chart c);
Chart chart_of_name(std::string_view name);

/* Point of a chart, coordinates in that chart's free pair. */
struct AffinePoint {
  Rational x, y;

  friend bool operator==(const AffinePoint& a, const AffinePoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const AffinePoint& a, const AffinePoint& b) { return !(a == b); }
  /* Lexicographic; used for the deterministic orderings below. */
  friend bool operator<(const AffinePoint& a, const AffinePoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

/* Symmetric matrix of a degree-two polynomial, lower triangle. */
struct SymMatrix3 {
  Rational a11, a22, a33;        // finite by construction
  TropScalar a21, a32, a31;

  /* 1-based symmetric access: entry(1,2) == entry(2,1) == a21. */
  TropScalar entry(int i, int j) const;

  friend bool operator==(const SymMatrix3& a, const SymMatrix3& b) {
    return a.a11 == b.a11 && a.a22 == b.a22 && a.a33 == b.a33 &&
           a.a21 == b.a21 && a.a32 == b.a32 && a.a31 == b.a31;
  }
  friend bool operator!=(const SymMatrix3& a, const SymMatrix3& b) { return !(a == b); }
};

/* The same data in polynomial dress: coefficient per monomial. */
struct QuadPoly {
  Rational xx, yy, zz;
  TropScalar xy, yz, xz;

  TropScalar coefficient(Monomial m) const;

  friend bool operator==(const QuadPoly& a, const QuadPoly& b) {
    return a.xx == b.xx && a.yy == b.yy && a.zz == b.zz &&
           a.xy == b.xy && a.yz == b.yz && a.xz == b.xz;
  }
  friend bool operator!=(const QuadPoly& a, const QuadPoly& b) { return !(a == b); }
};

/* The two views are identical on coefficients. */
SymMatrix3 matrix_of(const QuadPoly& p);
QuadPoly poly_of(const SymMatrix3& a);

/* Diagonal translation D with entries t_i = a_ii / 2; A factors through its
 * shape as a_ij = s_ij + t_i + t_j. */
struct DiagTranslation {
  Rational t1, t2, t3;
};

DiagTranslation diag_of(const SymMatrix3& a);

/* shape(A): zero diagonal, s_ij = a_ij - (a_ii + a_jj)/2, bottom stays
 * bottom. Idempotent as an operator: shape(shape(A)) == shape(A). Invariant
 * under adding one constant to every entry of A. */
SymMatrix3 shape(const SymMatrix3& a);

/* Entrywise max with 0 on the mixed entries. Requires a zero diagonal. */
SymMatrix3 nonneg_shape(const SymMatrix3& s);

/* Tropical determinant of a general 3x3 matrix: the maximum over the six
 * permutation products, together with how many permutations attain it.
 * The matrix is tropically singular when attained >= 2. */
struct TropDet {
  TropScalar value;
  int attained;
};

TropDet trop_det(const std::array<std::array<TropScalar, 3>, 3>& m);
TropDet trop_det(const SymMatrix3& a);  // symmetric embedding

/* Value of the polynomial at a chart point, with the set of monomials
 * attaining the maximum. The value is finite because the diagonal is. */
struct Evaluation {
  Rational value;
  MonomialSet maximizers;
};

Evaluation eval(const QuadPoly& p, const AffinePoint& q, Chart chart);

/* Exponent of a monomial in a chart's affine pair, e.g. X*Y in chart Z
 * is (1, 1) and in chart X (where X = 0) it is (1, 0). */
std::pair<int, int> exponent(Monomial m, Chart chart);

/* Index permutation sigma acting on matrices: result a'_ij = a_(sigma i)(sigma j).
 * sigma maps 1-based index i to sigma[i-1], a permutation of {1,2,3}. */
using IndexPerm = std::array<int, 3>;

inline constexpr IndexPerm kIdentityPerm = {1, 2, 3};

SymMatrix3 permute(const SymMatrix3& a, const IndexPerm& sigma);
QuadPoly permute(const QuadPoly& p, const IndexPerm& sigma);
IndexPerm inverse(const IndexPerm& sigma);
const std::array<IndexPerm, 6>& all_perms();

}  // namespace tropconic
