#include <doctest.h>

#include <string>

#include "support.hpp"
#include "tropconic/corpus.hpp"
#include "tropconic/error.hpp"
#include "tropconic/expr.hpp"
#include "tropconic/json_io.hpp"
#include "tropconic/reconstruct.hpp"
#include "tropconic/render.hpp"

using namespace tropconic;
using testutil::rejection;
using testutil::ts;

TEST_CASE("polynomial parsing") {
  const QuadPoly p = parse_poly("(-4)*X^2 + Y^2 + Z^2 + (-2)*X*Y + Y*Z + X*Z");
  CHECK(p == testutil::sample_two_vertex());
  CHECK(p.xx == ts("-4"));
  CHECK(p.yy == ts("0"));

  SUBCASE("whitespace and factor order are free") {
    CHECK(parse_poly("(-4)*X^2+Z*Y+Y^2+Z^2+X*Z+(-2)*Y*X") ==
          parse_poly("(-4)*X^2 + Y^2 + Z^2 + (-2)*X*Y + Y*Z + X*Z"));
    CHECK(parse_poly("  X^2+Y^2 +Z^2  ") == parse_poly("X^2 + Y^2 + Z^2"));
  }
  SUBCASE("unicode operator spellings are accepted") {
    CHECK(parse_poly("X^2 ⊕ Y^2 ⊕ Z^2 ⊕ 3⊙X⊙Y") ==
          parse_poly("X^2 + Y^2 + Z^2 + 3*X*Y"));
  }
  SUBCASE("repeated monomials combine by max") {
    CHECK(parse_poly("X^2 + Y^2 + Z^2 + 2*X*Y + 5*X*Y + 3*X*Y") ==
          parse_poly("X^2 + Y^2 + Z^2 + 5*X*Y"));
  }
  SUBCASE("explicit -inf coefficients are allowed on mixed monomials") {
    CHECK(parse_poly("X^2 + Y^2 + Z^2 + -inf*X*Y") == parse_poly("X^2 + Y^2 + Z^2"));
  }
  SUBCASE("fractions and X*X spelling") {
    const QuadPoly f = parse_poly("3/2*X*X + Y^2 + Z^2");
    CHECK(f.xx == ts("3/2"));
  }
}

TEST_CASE("polynomial parse errors carry positions") {
  for (const char* bad : {"", "X^2 + Y^2", "X^3 + Y^2 + Z^2", "X*Y*Z + X^2 + Y^2 + Z^2",
                          "X + Y^2 + Z^2 + X^2", "2* + X^2", "X^2 + + Y^2 + Z^2",
                          "(3*X^2 + Y^2 + Z^2", "X^0 + Y^2 + Z^2", "X^12 + Y^2 + Z^2",
                          "q*X^2 + Y^2 + Z^2", "-inf*X^2 + Y^2 + Z^2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_poly(bad), input_error);
  }
  CHECK(rejection([] { parse_poly("X^2 @ Y^2"); }).find("position") != std::string::npos);
  CHECK(rejection([] { parse_poly("X^2 + Y^2"); }).find("Z^2") != std::string::npos);
}

TEST_CASE("formatting is canonical and inverts parsing") {
  CHECK(format_poly(testutil::sample_two_vertex()) ==
        "(-4)*X^2 + Y^2 + Z^2 + (-2)*X*Y + Y*Z + X*Z");
  CHECK(format_poly(testutil::sample_pair_of_lines()) ==
        "X^2 + 12*Y^2 + Z^2 + 7*X*Y + 6*Y*Z + 1*X*Z");
  CHECK(format_poly(parse_poly("X^2+Y^2+Z^2")) == "X^2 + Y^2 + Z^2");

  for (const SymMatrix3& a : corpus(99, 40, 2)) {
    const QuadPoly p = poly_of(a);
    const std::string once = format_poly(p);
    CHECK(parse_poly(once) == p);
    CHECK(format_poly(parse_poly(once)) == once);
  }
}

TEST_CASE("linear forms format in variable order") {
  CHECK(format_linform({ts("1"), ts("6"), ts("0")}) == "1*X + 6*Y + Z");
  CHECK(format_linform({ts("-1"), ts("6"), ts("0")}) == "(-1)*X + 6*Y + Z");
  CHECK(format_linform({TropScalar::bottom(), ts("2"), ts("0")}) == "2*Y + Z");
}

TEST_CASE("matrix JSON round trip") {
  const SymMatrix3 a = matrix_of(testutil::sample_two_vertex());
  const Json j = matrix_to_json(a);
  CHECK(j["format"] == 1);
  CHECK(j["a11"] == "-4");
  CHECK(j["a21"] == "-2");
  CHECK(matrix_from_json(j) == a);

  SUBCASE("absent mixed keys mean -inf, integers are accepted") {
    Json m;
    m["format"] = 1;
    m["a11"] = 3;
    m["a22"] = "1/2";
    m["a33"] = "0";
    const SymMatrix3 b = matrix_from_json(m);
    CHECK(b.a11 == Rational(3));
    CHECK(b.a22 == Rational(1) / 2);
    CHECK(b.a21.is_bottom());
  }
  SUBCASE("bad documents are rejected") {
    Json m;
    m["format"] = 1;
    m["a11"] = "3";
    m["a22"] = "1";
    CHECK_THROWS_AS(matrix_from_json(m), input_error);  // a33 missing
    m["a33"] = "-inf";
    CHECK_THROWS_AS(matrix_from_json(m), input_error);  // diagonal must be finite
    m["a33"] = 1.5;
    CHECK_THROWS_AS(matrix_from_json(m), input_error);  // floats rejected
    m["a33"] = "1";
    m["format"] = 2;
    CHECK_THROWS_AS(matrix_from_json(m), input_error);  // unknown format
    CHECK_THROWS_AS(matrix_from_json(Json::array()), input_error);
  }
}

TEST_CASE("json_of_text rejects malformed documents") {
  CHECK_THROWS_AS(json_of_text("{\"a\": }"), input_error);
  CHECK(json_of_text("{\"a\": 1}")["a"] == 1);
}

TEST_CASE("sketch JSON carries cells and maximizer names") {
  const Sketch sk = corner_locus(testutil::sample_two_vertex(), Chart::Z);
  const Json j = sketch_to_json(sk);
  CHECK(j["format"] == 1);
  CHECK(j["chart"] == "Z");
  REQUIRE(j["vertices"].size() == 2);
  CHECK(j["vertices"][0]["x"] == "0");
  CHECK(j["vertices"][1]["x"] == "4");
  CHECK(j["vertices"][0]["maximizers"] ==
        Json::array({"Y^2", "Z^2", "Y*Z", "X*Z"}));
  CHECK(j["edges"] == Json::array({Json{{"u", 0}, {"v", 1}, {"weight", 1}}}));
  CHECK(j["rays"][0]["dir"] == Json::array({-1, 0}));
  CHECK(j["rays"][0]["weight"] == 2);
}

TEST_CASE("tree JSON round trip") {
  const Sketch sk = corner_locus(testutil::sample_pair_of_lines(), Chart::Y);
  const TreeSpec t = tree_of(sk);
  const TreeSpec back = tree_from_json(tree_to_json(t));
  CHECK(back.chart == Chart::Y);
  CHECK(same_cells(sketch_of(back), sk));

  SUBCASE("chart defaults to Z") {
    Json j = tree_to_json(tree_of(corner_locus(testutil::sample_two_vertex(), Chart::Z)));
    j.erase("chart");
    CHECK(tree_from_json(j).chart == Chart::Z);
  }
}

TEST_CASE("classification JSON names the class and lists vertices") {
  const Json j = classification_to_json(testutil::sample_two_vertex());
  CHECK(j["format"] == 1);
  CHECK(j["class"] == "Degenerate2");
  CHECK(j["perm"] == Json::array({1, 3, 2}));
  CHECK(j["s"]["s31"] == "2");
  CHECK(j["d"]["d2"] == "-2");
  REQUIRE(j["vertices"].size() == 2);
  CHECK(j["vertices"][1]["y"] == "2");
}

TEST_CASE("linear form JSON") {
  const Json j = linform_to_json({ts("1"), ts("6"), ts("0")});
  CHECK(j["format"] == 1);
  CHECK(j["x"] == "1");
  CHECK(j["y"] == "6");
  CHECK(j["z"] == "0");
}

TEST_CASE("renderings are deterministic") {
  const QuadPoly p = testutil::sample_two_vertex();
  const Sketch sk = corner_locus(p, Chart::Z);
  const std::vector<std::string> labels = anchor_labels(p, sk);
  REQUIRE(labels.size() == 2);

  const std::string svg = render_svg(sk, labels);
  CHECK(svg == render_svg(sk, labels));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("stroke-width=\"5\"") != std::string::npos);  // weight-2 rays
  CHECK(svg.find("stroke-width=\"2\"") != std::string::npos);  // weight-1 cells

  const std::string art = render_ascii(sk, labels);
  CHECK(art == render_ascii(sk, labels));
  CHECK(art.find('o') != std::string::npos);
  CHECK(art.find("legend") != std::string::npos);
}

TEST_CASE("double line rendering uses thick strokes only") {
  const QuadPoly p = parse_poly("X^2 + Y^2 + Z^2 + X*Y + Y*Z + X*Z");
  const Sketch sk = corner_locus(p, Chart::Z);
  const std::vector<std::string> labels = anchor_labels(p, sk);
  const std::string svg = render_svg(sk, labels);
  CHECK(svg.find("stroke-width=\"5\"") != std::string::npos);
  CHECK(svg.find("stroke-width=\"2\"") == std::string::npos);
}
