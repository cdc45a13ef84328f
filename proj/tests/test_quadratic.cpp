#include <doctest.h>

#include <array>

#include "support.hpp"
#include "tropconic/quadratic.hpp"

using namespace tropconic;
using testutil::pt;
using testutil::q;
using testutil::shape_mat;
using testutil::ts;

namespace {

SymMatrix3 sample_matrix() {
  SymMatrix3 a;
  a.a11 = q("-4");
  a.a22 = 0;
  a.a33 = 0;
  a.a21 = ts("-2");
  a.a32 = ts("0");
  a.a31 = ts("0");
  return a;
}

SymMatrix3 add_constant(const SymMatrix3& a, const Rational& c) {
  SymMatrix3 out = a;
  out.a11 += c;
  out.a22 += c;
  out.a33 += c;
  for (TropScalar* s : {&out.a21, &out.a32, &out.a31}) {
    if (s->is_finite()) *s = TropScalar(s->value() + c);
  }
  return out;
}

}  // namespace

TEST_CASE("monomial names and sets") {
  CHECK(std::string(monomial_name(Monomial::XX)) == "X^2");
  CHECK(std::string(monomial_name(Monomial::XZ)) == "X*Z");
  MonomialSet set;
  CHECK(set.empty());
  set.insert(Monomial::YY);
  set.insert(Monomial::YZ);
  set.insert(Monomial::YY);
  CHECK(set.size() == 2);
  CHECK(set.contains(Monomial::YY));
  CHECK(!set.contains(Monomial::XX));
  CHECK(set.names() == std::vector<std::string>{"Y^2", "Y*Z"});
}

TEST_CASE("matrix and polynomial views carry the same coefficients") {
  const SymMatrix3 a = sample_matrix();
  const QuadPoly p = poly_of(a);
  CHECK(p.xx == ts("-4"));
  CHECK(p.xy == ts("-2"));
  CHECK(matrix_of(p) == a);
  CHECK(a.entry(1, 2) == a.a21);
  CHECK(a.entry(2, 1) == a.a21);
  CHECK(a.entry(3, 1) == a.a31);
  CHECK(a.entry(2, 2) == TropScalar(a.a22));
}

TEST_CASE("shape has a zero diagonal and ignores translation") {
  const SymMatrix3 a = sample_matrix();
  const SymMatrix3 s = shape(a);
  CHECK(s.a11 == 0);
  CHECK(s.a22 == 0);
  CHECK(s.a33 == 0);
  CHECK(s.a21 == ts("0"));
  CHECK(s.a32 == ts("0"));
  CHECK(s.a31 == ts("2"));
  CHECK(shape(s) == s);
  CHECK(shape(add_constant(a, q("7/2"))) == s);

  const SymMatrix3 b = shape_mat("1", "-inf", "-3");
  CHECK(shape(b) == b);
  CHECK(nonneg_shape(b) == shape_mat("1", "0", "0"));
}

TEST_CASE("diagonal translation factors the matrix through its shape") {
  const SymMatrix3 a = sample_matrix();
  const DiagTranslation d = diag_of(a);
  CHECK(d.t1 == q("-2"));
  CHECK(d.t2 == 0);
  CHECK(d.t3 == 0);
  const SymMatrix3 s = shape(a);
  CHECK(a.a21.value() == s.a21.value() + d.t1 + d.t2);
  CHECK(a.a31.value() == s.a31.value() + d.t1 + d.t3);
}

TEST_CASE("tropical determinant counts attaining permutations") {
  SUBCASE("diagonal matrix is regular") {
    const TropDet det = trop_det(shape_mat("-inf", "-inf", "-inf"));
    CHECK(det.value == ts("0"));
    CHECK(det.attained == 1);
  }
  SUBCASE("all-zero matrix is singular six ways") {
    const TropDet det = trop_det(shape_mat("0", "0", "0"));
    CHECK(det.value == ts("0"));
    CHECK(det.attained == 6);
  }
  SUBCASE("pair-of-lines shape is singular") {
    const TropDet det = trop_det(shape_mat("1", "0", "1"));
    CHECK(det.value == ts("2"));
    CHECK(det.attained == 4);
  }
  SUBCASE("two-vertex shape is regular") {
    const TropDet det = trop_det(shape_mat("0", "0", "2"));
    CHECK(det.value == ts("4"));
    CHECK(det.attained == 1);
  }
}

TEST_CASE("evaluation reports the maximizing monomials") {
  const QuadPoly p = testutil::sample_two_vertex();
  const Evaluation at_origin = eval(p, pt(0, 0), Chart::Z);
  CHECK(at_origin.value == 0);
  MonomialSet expect;
  expect.insert(Monomial::YY);
  expect.insert(Monomial::ZZ);
  expect.insert(Monomial::YZ);
  expect.insert(Monomial::XZ);
  CHECK(at_origin.maximizers == expect);

  const Evaluation generic = eval(p, pt(10, 0), Chart::Z);
  CHECK(generic.value == 16);
  CHECK(generic.maximizers.size() == 1);
  CHECK(generic.maximizers.contains(Monomial::XX));
}

TEST_CASE("chart exponents drop the fixed variable") {
  CHECK(exponent(Monomial::XY, Chart::Z) == std::pair{1, 1});
  CHECK(exponent(Monomial::XY, Chart::X) == std::pair{1, 0});
  CHECK(exponent(Monomial::XY, Chart::Y) == std::pair{1, 0});
  CHECK(exponent(Monomial::ZZ, Chart::Z) == std::pair{0, 0});
  CHECK(exponent(Monomial::ZZ, Chart::X) == std::pair{0, 2});
  CHECK(exponent(Monomial::XX, Chart::Z) == std::pair{2, 0});
}

TEST_CASE("index permutations act on both views alike") {
  const SymMatrix3 a = sample_matrix();
  CHECK(permute(a, kIdentityPerm) == a);
  CHECK(all_perms().size() == 6);
  for (const IndexPerm& sigma : all_perms()) {
    CAPTURE(sigma[0]);
    CAPTURE(sigma[1]);
    CAPTURE(sigma[2]);
    CHECK(permute(permute(a, sigma), inverse(sigma)) == a);
    CHECK(poly_of(permute(a, sigma)) == permute(poly_of(a), sigma));
  }
  const IndexPerm swap23 = {1, 3, 2};
  const SymMatrix3 b = permute(a, swap23);
  CHECK(b.a22 == a.a33);
  CHECK(b.a21 == a.a31);
  CHECK(b.a32 == a.a32);
}

TEST_CASE("chart names round trip") {
  for (Chart c : {Chart::X, Chart::Y, Chart::Z}) {
    CHECK(chart_of_name(chart_name(c)) == c);
  }
  CHECK_THROWS_AS(chart_of_name("w"), input_error);
}
