#include <doctest.h>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "support.hpp"
#include "tropconic/conic.hpp"
#include "tropconic/error.hpp"

using namespace tropconic;
using testutil::pt;
using testutil::q;
using testutil::shape_mat;
using testutil::ts;

namespace {

MonomialSet monos(std::initializer_list<Monomial> ms) {
  MonomialSet set;
  for (Monomial m : ms) set.insert(m);
  return set;
}

}  // namespace

TEST_CASE("projective points compare up to a common tropical factor") {
  const ProjPoint a{ts("1"), ts("2"), ts("0")};
  const ProjPoint b{ts("4"), ts("5"), ts("3")};
  CHECK(a == b);
  CHECK(a != ProjPoint{ts("1"), ts("2"), ts("1")});
  const ProjPoint c = a.canonical();
  CHECK(c.x == ts("-1"));
  CHECK(c.y == ts("0"));
  CHECK(c.z == ts("-2"));
  const ProjPoint with_bottom{TropScalar::bottom(), ts("3"), ts("1")};
  CHECK(with_bottom.canonical().y == ts("0"));
  CHECK(with_bottom.canonical().x.is_bottom());
}

TEST_CASE("chart embedding and projection invert each other") {
  const AffinePoint p = pt(3, -2);
  for (Chart chart : {Chart::X, Chart::Y, Chart::Z}) {
    CHECK(chart_project(chart_embed(p, chart), chart) == p);
  }
  CHECK(chart_embed(p, Chart::Z).z == ts("0"));
  CHECK(chart_embed(p, Chart::Y).y == ts("0"));
  const ProjPoint no_z{ts("0"), ts("1"), TropScalar::bottom()};
  CHECK_THROWS_AS(chart_project(no_z, Chart::Z), input_error);
}

TEST_CASE("invariants clamp the shape and satisfy the sum identities") {
  const Invariants inv = invariants_of(matrix_of(testutil::sample_two_vertex()));
  CHECK(inv.s21 == 0);
  CHECK(inv.s32 == 0);
  CHECK(inv.s31 == 2);
  CHECK(inv.d1 == 2);
  CHECK(inv.d2 == -2);
  CHECK(inv.d3 == 2);
  CHECK(inv.s_pair(1, 2) == inv.s21);
  CHECK(inv.s_pair(2, 1) == inv.s21);
  CHECK(inv.s_pair(3, 1) == inv.s31);
  CHECK(inv.d(2) == inv.d2);

  const Invariants pair = invariants_of(matrix_of(testutil::sample_pair_of_lines()));
  CHECK(pair.s21 == 1);
  CHECK(pair.s32 == 0);
  CHECK(pair.s31 == 1);
  CHECK(pair.d1 == 2);
  CHECK(pair.d2 == 0);
  CHECK(pair.d3 == 0);

  for (const Invariants* i : {&inv, &pair}) {
    CHECK(i->s21 == (i->d1 + i->d2) / 2);
    CHECK(i->s32 == (i->d2 + i->d3) / 2);
    CHECK(i->s31 == (i->d1 + i->d3) / 2);
  }
}

TEST_CASE("classification hits every tag in canonical position") {
  auto tag_of = [](const SymMatrix3& m) { return classify(invariants_of(m)); };

  CHECK(tag_of(shape_mat("2", "3", "4")) ==
        ConicClass{ConicClassTag::OnePointCentral, kIdentityPerm});
  CHECK(tag_of(shape_mat("4", "1", "1")) ==
        ConicClass{ConicClassTag::TwoPointCentral, kIdentityPerm});
  CHECK(tag_of(shape_mat("3", "2", "0")) ==
        ConicClass{ConicClassTag::Degenerate1, kIdentityPerm});
  CHECK(tag_of(shape_mat("1", "-inf", "-2")) ==
        ConicClass{ConicClassTag::Degenerate2, kIdentityPerm});
  CHECK(tag_of(shape_mat("3", "1", "2")) ==
        ConicClass{ConicClassTag::PairOfLinesOneZero, kIdentityPerm});
  CHECK(tag_of(shape_mat("2", "0", "2")) ==
        ConicClass{ConicClassTag::PairOfLinesTwoZeros, kIdentityPerm});
  CHECK(tag_of(shape_mat("0", "0", "0")) ==
        ConicClass{ConicClassTag::DoubleLine, kIdentityPerm});
  CHECK(tag_of(shape_mat("-inf", "-inf", "-inf")).tag == ConicClassTag::DoubleLine);
}

TEST_CASE("classification is equivariant under index permutations") {
  const SymMatrix3 canon = shape_mat("3", "2", "0");
  for (const IndexPerm& sigma : all_perms()) {
    const SymMatrix3 m = permute(canon, sigma);
    const ConicClass cls = classify(invariants_of(m));
    CHECK(cls.tag == ConicClassTag::Degenerate1);
    const ConicClass back = classify(invariants_of(permute(m, cls.perm)));
    CHECK(back.tag == cls.tag);
    CHECK(back.perm == kIdentityPerm);
  }
}

TEST_CASE("anchor points of the pair-of-lines shape") {
  const std::vector<std::pair<std::string, ProjPoint>> anchors =
      anchor_points(shape_mat("1", "0", "1"));
  CHECK(anchors.size() == 10);
  auto find = [&](const std::string& name) {
    auto it = std::find_if(anchors.begin(), anchors.end(),
                           [&](const auto& kv) { return kv.first == name; });
    REQUIRE(it != anchors.end());
    return it->second;
  };
  // v0, v2 and v3 collapse to the four-valent center; v1 sits east of it.
  CHECK(chart_project(find("v0"), Chart::Z) == pt(-1, 0));
  CHECK(chart_project(find("v2"), Chart::Z) == pt(-1, 0));
  CHECK(chart_project(find("v3"), Chart::Z) == pt(-1, 0));
  CHECK(chart_project(find("v1"), Chart::Z) == pt(1, 0));
}

TEST_CASE("vertices of the two-vertex sample carry their maximizers") {
  const QuadPoly p = testutil::sample_two_vertex();
  const std::vector<VertexInfo> vs = vertices(p);
  REQUIRE(vs.size() == 2);
  CHECK(vs[0].p == pt(0, 0));
  CHECK(vs[0].maximizers ==
        monos({Monomial::YY, Monomial::ZZ, Monomial::YZ, Monomial::XZ}));
  CHECK(vs[1].p == pt(4, 2));
  CHECK(vs[1].maximizers ==
        monos({Monomial::XX, Monomial::YY, Monomial::XY, Monomial::XZ}));
}

TEST_CASE("vertices of the pair of lines sit on the translated anchors") {
  const QuadPoly p = testutil::sample_pair_of_lines();
  const std::vector<VertexInfo> vs = vertices(p);
  REQUIRE(vs.size() == 2);
  CHECK(vs[0].p == pt(-1, -6));
  CHECK(vs[1].p == pt(1, -6));
}

TEST_CASE("corner locus of the two-vertex sample") {
  const QuadPoly p = testutil::sample_two_vertex();
  const Sketch sk = corner_locus(p, Chart::Z);
  CHECK(sk.chart == Chart::Z);
  CHECK(sk.vertices == vertices(p));
  CHECK(sk.edges == std::vector<SketchEdge>{{0, 1, 1}});
  const std::vector<SketchRay> rays = {
      {0, {-1, 0}, 2}, {0, {0, -1}, 1}, {1, {0, -1}, 1}, {1, {1, 1}, 2}};
  CHECK(sk.rays == rays);
  CHECK(check_balance(sk).empty());
  CHECK(ray_census(sk).is_conic_census());
}

TEST_CASE("corner locus agrees with closed-form vertices in every chart") {
  for (const QuadPoly& p : {testutil::sample_two_vertex(), testutil::sample_pair_of_lines()}) {
    for (Chart chart : {Chart::X, Chart::Y, Chart::Z}) {
      const Sketch sk = corner_locus(p, chart);
      CHECK(sk.vertices == vertices(p, chart));
      CHECK(sk.vertices.size() == 2);
      CHECK(check_balance(sk).empty());
      CHECK(ray_census(sk).is_conic_census());
    }
  }
}

TEST_CASE("a flipped ray direction breaks balance and the census") {
  Sketch sk = corner_locus(testutil::sample_two_vertex(), Chart::Z);
  for (SketchRay& r : sk.rays) {
    if (r.v == 1 && r.dir == std::pair{0, -1}) r.dir = {0, 1};
  }
  CHECK(!check_balance(sk).empty());
  const RayCensus census = ray_census(sk);
  CHECK(!census.only_standard_directions);
  CHECK(!census.is_conic_census());
}

TEST_CASE("a doubled edge weight breaks balance") {
  Sketch sk = corner_locus(testutil::sample_two_vertex(), Chart::Z);
  sk.edges[0].weight = 2;
  CHECK(check_balance(sk).size() == 2);
  CHECK(ray_census(sk).is_conic_census());  // census alone cannot see it
}

TEST_CASE("double line locus is one vertex with three thick rays") {
  const QuadPoly p = poly_of(shape_mat("0", "0", "0"));
  const Sketch sk = corner_locus(p, Chart::Z);
  REQUIRE(sk.vertices.size() == 1);
  CHECK(sk.vertices[0].p == pt(0, 0));
  CHECK(sk.edges.empty());
  const std::vector<SketchRay> rays = {{0, {-1, 0}, 2}, {0, {0, -1}, 2}, {0, {1, 1}, 2}};
  CHECK(sk.rays == rays);
  CHECK(check_balance(sk).empty());
}

TEST_CASE("pendant separations read the invariants in canonical position") {
  const QuadPoly p = testutil::sample_two_vertex();
  const SymMatrix3 a = matrix_of(p);
  const ConicClass cls = classify(invariants_of(a));
  CHECK(cls.tag == ConicClassTag::Degenerate2);
  CHECK(cls.perm == IndexPerm{1, 3, 2});

  const SymMatrix3 b = permute(a, cls.perm);
  const Invariants binv = invariants_of(b);
  CHECK(binv.s21 == 2);
  CHECK(binv.s32 == 0);
  CHECK(binv.s31 == 0);
  const PendantSeparations sep = pendant_separations(corner_locus(poly_of(b), Chart::Z));
  CHECK(sep.ne_dx == binv.d1);
  CHECK(sep.ne_dy == -binv.d2);
  CHECK(sep.west == 2 * binv.s32);
  CHECK(sep.south == 2 * binv.s31);
}

TEST_CASE("pendant separations of the two-vertex sample in its own chart") {
  const Sketch sk = corner_locus(testutil::sample_two_vertex(), Chart::Z);
  const PendantSeparations sep = pendant_separations(sk);
  CHECK(sep.ne_dx == 0);  // single weight-2 ray, gap zero
  CHECK(sep.ne_dy == 0);
  CHECK(sep.west == 0);
  CHECK(sep.south == 4);
}

TEST_CASE("pair and singular predicates") {
  const Invariants two_vertex = invariants_of(matrix_of(testutil::sample_two_vertex()));
  const Invariants pair = invariants_of(matrix_of(testutil::sample_pair_of_lines()));
  CHECK(!is_pair_of_lines(two_vertex));
  CHECK(is_pair_of_lines(pair));
  CHECK(!is_shape_singular_class(ConicClassTag::TwoPointCentral));
  CHECK(!is_shape_singular_class(ConicClassTag::Degenerate2));
  CHECK(is_shape_singular_class(ConicClassTag::OnePointCentral));
  CHECK(is_shape_singular_class(ConicClassTag::DoubleLine));
}

TEST_CASE("one-point central locus is a four-valent star") {
  // d = (3, 1, 5): arms east (3, 0), north (0, 1), south-west (-5, -5).
  const QuadPoly p = poly_of(shape_mat("2", "3", "4"));
  const Sketch sk = corner_locus(p, Chart::Z);
  REQUIRE(sk.vertices.size() == 4);
  CHECK(sk.edges.size() == 3);
  CHECK(sk.rays.size() == 6);
  for (const SketchRay& r : sk.rays) CHECK(r.weight == 1);
  for (const SketchEdge& e : sk.edges) CHECK(e.weight == 1);
  CHECK(check_balance(sk).empty());
  CHECK(ray_census(sk).is_conic_census());

  // Center v0 = [3, 4, 2] projects to (1, 2); arm tips by the d offsets.
  const AffinePoint center = pt(1, 2);
  std::vector<AffinePoint> expect = {center,
                                     {center.x + 3, center.y},
                                     {center.x, center.y + 1},
                                     {center.x - 5, center.y - 5}};
  std::sort(expect.begin(), expect.end());
  std::vector<AffinePoint> got;
  for (const VertexInfo& v : sk.vertices) got.push_back(v.p);
  CHECK(got == expect);
}
