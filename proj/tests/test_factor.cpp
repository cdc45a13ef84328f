#include <doctest.h>

#include "support.hpp"
#include "tropconic/conic.hpp"
#include "tropconic/error.hpp"
#include "tropconic/factor.hpp"

using namespace tropconic;
using testutil::shape_mat;
using testutil::ts;

namespace {

LinForm lf(const char* x, const char* y, const char* z) {
  return {ts(x), ts(y), ts(z)};
}

}  // namespace

TEST_CASE("expand multiplies coefficientwise with max") {
  const QuadPoly p = expand(lf("1", "6", "0"), lf("-1", "6", "0"));
  CHECK(p == testutil::sample_pair_of_lines());
  CHECK_THROWS_AS(expand(lf("-inf", "0", "0"), lf("0", "0", "0")), input_error);
}

TEST_CASE("linear form permutation relabels variables") {
  const LinForm f = lf("1", "2", "3");
  const LinForm g = permute(f, IndexPerm{2, 3, 1});
  CHECK(g == lf("2", "3", "1"));
}

TEST_CASE("pair of lines factors exactly") {
  const QuadPoly p = testutil::sample_pair_of_lines();
  CHECK(is_reducible(p));
  const auto fg = factorize(p);
  REQUIRE(fg.has_value());
  CHECK(fg->first == lf("1", "6", "0"));
  CHECK(fg->second == lf("-1", "6", "0"));
  CHECK(expand(fg->first, fg->second) == p);
}

TEST_CASE("sign slip in the second factor fails the expand check") {
  // Flipping the Y-coefficient of the second factor to -6 collapses the
  // Y^2 coefficient of the product to 0 instead of 12.
  const QuadPoly p = testutil::sample_pair_of_lines();
  const QuadPoly wrong = expand(lf("1", "6", "0"), lf("-1", "-6", "0"));
  CHECK(wrong != p);
  CHECK(wrong.yy == 0);
  CHECK(p.yy == 12);
}

TEST_CASE("two-vertex sample is irreducible") {
  const QuadPoly p = testutil::sample_two_vertex();
  CHECK(!is_reducible(p));
  CHECK(!factorize(p).has_value());
}

TEST_CASE("negative or missing shape entries block factorization") {
  // Clamped shape (2, 0, 2) classifies as a pair of lines, but the raw
  // entry -1 makes the polynomial irreducible.
  const SymMatrix3 m = shape_mat("2", "-1", "2");
  CHECK(classify(invariants_of(m)).tag == ConicClassTag::PairOfLinesTwoZeros);
  CHECK(!is_reducible(poly_of(m)));
  CHECK(!factorize(poly_of(m)).has_value());

  // A double line from absent mixed terms: irreducible as well.
  const SymMatrix3 dl = shape_mat("-inf", "-inf", "-inf");
  CHECK(classify(invariants_of(dl)).tag == ConicClassTag::DoubleLine);
  CHECK(!is_reducible(poly_of(dl)));
}

TEST_CASE("all-zero shape factors into two copies of the same line") {
  const QuadPoly p = poly_of(shape_mat("0", "0", "0"));
  const auto fg = factorize(p);
  REQUIRE(fg.has_value());
  CHECK(fg->first == lf("0", "0", "0"));
  CHECK(fg->second == lf("0", "0", "0"));
  CHECK(expand(fg->first, fg->second) == p);
}

TEST_CASE("factorization undoes the diagonal conjugation") {
  // Shape (3, 1, 2) conjugated by t = (1, -1, 2).
  SymMatrix3 a;
  a.a11 = 2;
  a.a22 = -2;
  a.a33 = 4;
  a.a21 = ts("3");
  a.a32 = ts("2");
  a.a31 = ts("5");
  const QuadPoly p = poly_of(a);
  CHECK(is_reducible(p));
  const auto fg = factorize(p);
  REQUIRE(fg.has_value());
  CHECK(fg->first == lf("4", "-1", "3"));
  CHECK(fg->second == lf("-2", "-1", "1"));
  CHECK(expand(fg->first, fg->second) == p);
}

TEST_CASE("ties in the maximal shape entry resolve deterministically") {
  // s21 and s31 tie; the s21 route wins and pins the factor layout.
  const QuadPoly p = poly_of(shape_mat("2", "0", "2"));
  const auto fg = factorize(p);
  REQUIRE(fg.has_value());
  CHECK(fg->first == lf("2", "0", "0"));
  CHECK(fg->second == lf("-2", "0", "0"));
  CHECK(expand(fg->first, fg->second) == p);
}

TEST_CASE("reducibility over permutations of a reducible shape") {
  const SymMatrix3 canon = shape_mat("3", "1", "2");
  for (const IndexPerm& sigma : all_perms()) {
    const QuadPoly p = poly_of(permute(canon, sigma));
    CAPTURE(sigma[0]);
    CHECK(is_reducible(p));
    const auto fg = factorize(p);
    REQUIRE(fg.has_value());
    CHECK(expand(fg->first, fg->second) == p);
  }
}
