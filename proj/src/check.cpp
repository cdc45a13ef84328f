#include "tropconic/check.hpp"

#include <cstddef>
#include <string>
#include <utility>

#include "tropconic/conic.hpp"
#include "tropconic/corpus.hpp"
#include "tropconic/error.hpp"
#include "tropconic/expr.hpp"
#include "tropconic/factor.hpp"
#include "tropconic/reconstruct.hpp"

namespace tropconic {

namespace {

std::size_t expected_vertex_count(ConicClassTag tag) {
  switch (tag) {
    case ConicClassTag::OnePointCentral: return 4;
    case ConicClassTag::TwoPointCentral: return 4;
    case ConicClassTag::Degenerate1: return 3;
    case ConicClassTag::Degenerate2: return 2;
    case ConicClassTag::PairOfLinesOneZero: return 3;
    case ConicClassTag::PairOfLinesTwoZeros: return 2;
    case ConicClassTag::DoubleLine: return 1;
  }
  throw internal_error("expected_vertex_count: unknown class");
}

bool all_weights_one(const Sketch& sk) {
  for (const SketchEdge& e : sk.edges) {
    if (e.weight != 1) return false;
  }
  for (const SketchRay& r : sk.rays) {
    if (r.weight != 1) return false;
  }
  return true;
}

}  // namespace

void check_poly(const QuadPoly& p, CheckReport& report) {
  report.checked += 1;
  const std::string text = format_poly(p);
  auto fail = [&](std::string what) {
    report.failures.push_back({std::move(what), text});
  };
  auto require = [&](bool ok, const char* what) {
    if (!ok) fail(what);
  };

  const SymMatrix3 a = matrix_of(p);
  const Invariants inv = invariants_of(a);
  const ConicClass cls = classify(inv);

  // d sign pattern and its inversion back to the clamped shape.
  const int negatives = (inv.d1 < 0 ? 1 : 0) + (inv.d2 < 0 ? 1 : 0) + (inv.d3 < 0 ? 1 : 0);
  require(negatives <= 1, "more than one negative d entry");
  require(inv.s21 == (inv.d1 + inv.d2) / 2 && inv.s32 == (inv.d2 + inv.d3) / 2 &&
              inv.s31 == (inv.d1 + inv.d3) / 2,
          "d vector does not invert to the clamped shape");

  // Taking the shape of a shape changes nothing.
  const SymMatrix3 s = shape(a);
  require(shape(s) == s, "shape of a shape differs from the shape");

  // Determinant singularity matches the d signs and the class.
  const SymMatrix3 sp = nonneg_shape(s);
  const bool det_singular = trop_det(sp).attained >= 2;
  require(det_singular == (inv.d1 >= 0 && inv.d2 >= 0 && inv.d3 >= 0),
          "determinant singularity disagrees with the d signs");
  require(det_singular == is_shape_singular_class(cls.tag),
          "determinant singularity disagrees with the class");

  // Clamping negative shape entries does not move the curve.
  require(same_cells(corner_locus(poly_of(s), Chart::Z),
                     corner_locus(poly_of(sp), Chart::Z)),
          "clamping moved the corner locus");

  // Pair-of-lines predicate against the class family.
  const bool pair_tag = cls.tag == ConicClassTag::PairOfLinesOneZero ||
                        cls.tag == ConicClassTag::PairOfLinesTwoZeros ||
                        cls.tag == ConicClassTag::DoubleLine;
  require(is_pair_of_lines(inv) == pair_tag,
          "pair-of-lines predicate disagrees with the class");

  Sketch sketch_z;
  for (Chart chart : {Chart::Z, Chart::Y, Chart::X}) {
    const std::string where = std::string(" in chart ") + chart_name(chart);
    Sketch sk = corner_locus(p, chart);
    if (!(vertices(p, chart) == sk.vertices)) {
      fail("closed-form vertices disagree with the corner locus" + where);
    }
    if (!check_balance(sk).empty()) fail("balance fails at a vertex" + where);
    if (!ray_census(sk).is_conic_census()) fail("ray census is not two per direction" + where);

    // Reconstruction round trip through the stripped tree.
    TreeSpec t = tree_of(sk);
    try {
      validate_tree(t);
      const SymMatrix3 r = recover_polynomial(t);
      if (!same_cells(corner_locus(poly_of(r), chart), sk)) {
        fail("recovered polynomial draws a different curve" + where);
      }
      const auto [rinv, rcls] = recover_invariants(t);
      if (!(rinv.s21 == inv.s21 && rinv.s32 == inv.s32 && rinv.s31 == inv.s31)) {
        fail("recovered invariants disagree" + where);
      }
      if (rcls.tag != cls.tag) fail("recovered class disagrees" + where);
      const SymMatrix3 r2 = recover_polynomial(tree_of(corner_locus(poly_of(r), chart)));
      if (!(r2 == r)) fail("recovery is not idempotent" + where);
    } catch (const input_error& e) {
      fail("reconstruction rejected a genuine corner locus" + where + ": " + e.what());
    }

    if (chart == Chart::Z) sketch_z = sk;
  }

  require(sketch_z.vertices.size() == expected_vertex_count(cls.tag),
          "vertex count disagrees with the class");

  // Smooth classes are exactly the all-weight-one non-pair curves.
  const bool smooth_tag = cls.tag == ConicClassTag::OnePointCentral ||
                          cls.tag == ConicClassTag::TwoPointCentral;
  require(smooth_tag == (all_weights_one(sketch_z) && !is_pair_of_lines(inv)),
          "weight-one criterion disagrees with the class");

  // Pendant gaps in canonical position read off the invariants.
  const SymMatrix3 b = permute(a, cls.perm);
  const Invariants binv = invariants_of(b);
  const ConicClass bcls = classify(binv);
  require(bcls.tag == cls.tag, "moving to canonical position changed the class");
  require(bcls.perm == kIdentityPerm, "canonical position does not classify as canonical");
  const PendantSeparations sep = pendant_separations(corner_locus(poly_of(b), Chart::Z));
  require(sep.ne_dx == binv.d1 && sep.ne_dy == -binv.d2,
          "northeast pendant gap disagrees with the d invariants");
  require(sep.west == 2 * binv.s32, "west pendant gap disagrees with the shape");
  require(sep.south == 2 * binv.s31, "south pendant gap disagrees with the shape");

  // Factorization: reducible exactly when nothing was clamped and the curve
  // is a pair of lines; factors must expand back on the nose.
  const bool raw_nonneg = !s.a21.is_bottom() && s.a21.value() >= 0 &&
                          !s.a32.is_bottom() && s.a32.value() >= 0 &&
                          !s.a31.is_bottom() && s.a31.value() >= 0;
  const bool red = is_reducible(p);
  const auto fg = factorize(p);
  require(red == fg.has_value(), "is_reducible disagrees with factorize");
  require(red == (raw_nonneg && is_pair_of_lines(inv)),
          "reducibility criterion disagrees with the class");
  if (fg) {
    require(expand(fg->first, fg->second) == p, "factors do not expand back");
  }
}

CheckReport check_corpus(std::uint64_t seed, int count) {
  if (count < 0) count = 0;
  int per_class = count / 50;
  if (per_class < 10) per_class = 10;

  CheckReport report;
  Rng rng(seed);
  for (int i = 0; i < count; ++i) check_poly(poly_of(random_symmetric(rng)), report);
  for (ConicClassTag tag : kConicClassTags) {
    for (int i = 0; i < per_class; ++i) {
      const SymMatrix3 a = random_of_class(rng, tag);
      if (classify(invariants_of(a)).tag != tag) {
        report.failures.push_back(
            {std::string("forced sample landed on the wrong class, wanted ") + class_name(tag),
             format_poly(poly_of(a))});
      }
      check_poly(poly_of(a), report);
    }
  }
  return report;
}

}  // namespace tropconic
