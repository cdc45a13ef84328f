#include "tropconic/json_io.hpp"

namespace tropconic {

namespace {

void check_format(const Json& j, const char* what) {
  if (!j.is_object())
    throw input_error(std::string(what) + ": expected a JSON object");
  if (j.contains("format") && j["format"] != 1)
    throw input_error(std::string(what) + ": unsupported format version");
}

TropScalar scalar_from_json(const Json& v, const std::string& key) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer())
    return TropScalar(static_cast<long>(v.get<std::int64_t>()));
  throw input_error("key '" + key +
                    "': expected a scalar string such as \"3/2\" or \"-inf\"");
}

TropScalar scalar_field(const Json& j, const std::string& key, bool required) {
  if (!j.contains(key)) {
    if (required) throw input_error("missing key '" + key + "'");
    return TropScalar::bottom();
  }
  return scalar_from_json(j[key], key);
}

int int_field(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw input_error("missing or non-integer key '" + key + "'");
  return j[key].get<int>();
}

}  // namespace

Json json_of_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("malformed JSON document");
  return j;
}

Json matrix_to_json(const SymMatrix3& a) {
  Json j;
  j["format"] = 1;
  j["a11"] = format_rational(a.a11);
  j["a22"] = format_rational(a.a22);
  j["a33"] = format_rational(a.a33);
  j["a21"] = format_scalar(a.a21);
  j["a32"] = format_scalar(a.a32);
  j["a31"] = format_scalar(a.a31);
  return j;
}

SymMatrix3 matrix_from_json(const Json& j) {
  check_format(j, "matrix");
  SymMatrix3 a;
  for (const char* key : {"a11", "a22", "a33"}) {
    TropScalar v = scalar_field(j, key, true);
    if (v.is_bottom())
      throw input_error(std::string("diagonal entry ") + key +
                        " must be finite");
    Rational& slot = key[1] == '1' ? a.a11 : key[1] == '2' ? a.a22 : a.a33;
    slot = v.value();
  }
  a.a21 = scalar_field(j, "a21", false);
  a.a32 = scalar_field(j, "a32", false);
  a.a31 = scalar_field(j, "a31", false);
  return a;
}

Json poly_to_json(const QuadPoly& p) { return matrix_to_json(matrix_of(p)); }

QuadPoly poly_from_json(const Json& j) { return poly_of(matrix_from_json(j)); }

Json sketch_to_json(const Sketch& sk) {
  Json j;
  j["format"] = 1;
  j["chart"] = chart_name(sk.chart);
  j["vertices"] = Json::array();
  for (const VertexInfo& v : sk.vertices) {
    Json jv;
    jv["x"] = format_rational(v.p.x);
    jv["y"] = format_rational(v.p.y);
    jv["maximizers"] = v.maximizers.names();
    j["vertices"].push_back(jv);
  }
  j["edges"] = Json::array();
  for (const SketchEdge& e : sk.edges)
    j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"weight", e.weight}});
  j["rays"] = Json::array();
  for (const SketchRay& r : sk.rays)
    j["rays"].push_back({{"v", r.v},
                         {"dir", Json::array({r.dir.first, r.dir.second})},
                         {"weight", r.weight}});
  return j;
}

Json tree_to_json(const TreeSpec& t) {
  Json j;
  j["format"] = 1;
  j["chart"] = chart_name(t.chart);
  j["vertices"] = Json::array();
  for (const TreeVertex& v : t.vertices)
    j["vertices"].push_back({{"id", v.id},
                             {"x", format_rational(v.p.x)},
                             {"y", format_rational(v.p.y)}});
  j["edges"] = Json::array();
  for (const TreeEdge& e : t.edges)
    j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"weight", e.weight}});
  j["rays"] = Json::array();
  for (const TreeRay& r : t.rays)
    j["rays"].push_back({{"v", r.v},
                         {"dir", Json::array({r.dir.first, r.dir.second})},
                         {"weight", r.weight}});
  return j;
}

TreeSpec tree_from_json(const Json& j) {
  check_format(j, "tree");
  TreeSpec t;
  t.chart = j.contains("chart")
                ? chart_of_name(j["chart"].get<std::string>())
                : Chart::Z;
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw input_error("tree: missing 'vertices' array");
  for (const Json& jv : j["vertices"]) {
    TreeVertex v;
    v.id = int_field(jv, "id");
    TropScalar x = scalar_field(jv, "x", true), y = scalar_field(jv, "y", true);
    if (x.is_bottom() || y.is_bottom())
      throw input_error("tree: vertex coordinates must be finite");
    v.p = AffinePoint{x.value(), y.value()};
    t.vertices.push_back(v);
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw input_error("tree: 'edges' must be an array");
    for (const Json& je : j["edges"])
      t.edges.push_back(TreeEdge{int_field(je, "u"), int_field(je, "v"),
                                 int_field(je, "weight")});
  }
  if (j.contains("rays")) {
    if (!j["rays"].is_array()) throw input_error("tree: 'rays' must be an array");
    for (const Json& jr : j["rays"]) {
      TreeRay r;
      r.v = int_field(jr, "v");
      r.weight = int_field(jr, "weight");
      if (!jr.contains("dir") || !jr["dir"].is_array() || jr["dir"].size() != 2 ||
          !jr["dir"][0].is_number_integer() || !jr["dir"][1].is_number_integer())
        throw input_error("tree: ray 'dir' must be a pair of integers");
      r.dir = {jr["dir"][0].get<int>(), jr["dir"][1].get<int>()};
      t.rays.push_back(r);
    }
  }
  return t;
}

Json linform_to_json(const LinForm& f) {
  Json j;
  j["format"] = 1;
  j["x"] = format_scalar(f.x);
  j["y"] = format_scalar(f.y);
  j["z"] = format_scalar(f.z);
  return j;
}

Json classification_to_json(const QuadPoly& p) {
  const Invariants inv = invariants_of(matrix_of(p));
  const ConicClass cls = classify(inv);
  Json j;
  j["format"] = 1;
  j["class"] = class_name(cls.tag);
  j["perm"] = Json::array({cls.perm[0], cls.perm[1], cls.perm[2]});
  j["s"] = {{"s21", format_rational(inv.s21)},
            {"s32", format_rational(inv.s32)},
            {"s31", format_rational(inv.s31)}};
  j["d"] = {{"d1", format_rational(inv.d1)},
            {"d2", format_rational(inv.d2)},
            {"d3", format_rational(inv.d3)}};
  j["vertices"] = Json::array();
  for (const VertexInfo& v : vertices(p)) {
    Json jv;
    jv["x"] = format_rational(v.p.x);
    jv["y"] = format_rational(v.p.y);
    jv["maximizers"] = v.maximizers.names();
    j["vertices"].push_back(jv);
  }
  return j;
}

}  // namespace tropconic
