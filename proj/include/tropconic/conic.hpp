#pragma once

/**
 * @file conic.hpp
 * @brief Tropical conics: the corner locus of a degree-two polynomial in the
 *        tropical projective plane, its classification and its sketch.
 *
 * Everything is driven by the shape invariants of the defining matrix.
 * Writing s21, s32, s31 for the clamped shape entries (each >= 0) and
 *
 *     d1 = s21 - s32 + s31
 *     d2 = s21 + s32 - s31        (inverse: s_ij = (d_i + d_j) / 2)
 *     d3 = -s21 + s32 + s31
 *
 * the sign pattern of (d1, d2, d3) and the zeros among the s entries pin the
 * conic type completely. At most one d_j can be negative.
 *
 * Two independent routes to the curve are provided and cross-checked by the
 * test suite:
 *   - vertices(): closed-form anchor points filtered by maximizer count,
 *   - corner_locus(): an exhaustive tie enumeration over monomial pairs and
 *     triples that knows nothing about the classification.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropconic/quadratic.hpp"

namespace tropconic {

/* Point of the tropical projective plane: coordinates up to a common
 * tropical factor, not all -inf. */
struct ProjPoint {
  TropScalar x, y, z;

  /* Representative with maximum coordinate 0. */
  ProjPoint canonical() const;

  /* Equality as projective points (compares canonical forms). */
  friend bool operator==(const ProjPoint& a, const ProjPoint& b);
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
};

/* j3(x,y) = [x,y,0], j2(x,z) = [x,0,z], j1(y,z) = [0,y,z]. */
ProjPoint chart_embed(const AffinePoint& q, Chart chart);

/* Inverse of chart_embed; requires the chart coordinate to be finite. */
AffinePoint chart_project(const ProjPoint& p, Chart chart);

/* Clamped shape entries and their alternating sums. */
struct Invariants {
  Rational s21, s32, s31;  // shape+ entries, each >= 0
  Rational d1, d2, d3;

  /* s entry of the unordered index pair {i, j}, 1-based. */
  const Rational& s_pair(int i, int j) const;
  const Rational& d(int j) const;
};

Invariants invariants_of(const SymMatrix3& a);

/* Matrix with zero diagonal and the s entries of inv. */
SymMatrix3 shape_matrix(const Invariants& inv);

enum class ConicClassTag {
  OnePointCentral,      // d1, d2, d3 > 0
  TwoPointCentral,      // one d negative, both adjacent s entries > 0
  Degenerate1,          // one d negative, one adjacent s entry zero
  Degenerate2,          // one d negative, both adjacent s entries zero
  PairOfLinesOneZero,   // d >= 0, exactly one zero
  PairOfLinesTwoZeros,  // d >= 0, exactly two zeros
  DoubleLine,           // d = 0
};

inline constexpr std::array<ConicClassTag, 7> kConicClassTags = {
    ConicClassTag::OnePointCentral, ConicClassTag::TwoPointCentral,
    ConicClassTag::Degenerate1,    ConicClassTag::Degenerate2,
    ConicClassTag::PairOfLinesOneZero, ConicClassTag::PairOfLinesTwoZeros,
    ConicClassTag::DoubleLine};

const char* class_name(ConicClassTag tag);

/* Class tag plus the index permutation that carries the canonical sign
 * pattern (distinguished index 3, zeros in canonical slots) onto the actual
 * indices: perm[i-1] is the actual index playing canonical role i. */
struct ConicClass {
  ConicClassTag tag;
  IndexPerm perm;

  friend bool operator==(const ConicClass& a, const ConicClass& b) {
    return a.tag == b.tag && a.perm == b.perm;
  }
};

ConicClass classify(const Invariants& inv);

/* Anchor points of the shape+ model, projectively:
 *   v1 = [0, -s21, -s31], v2 = [-s21, 0, -s32], v3 = [-s31, -s32, 0],
 *   v0 = [s32, s31, s21],
 * and the displaced points w(i,j) = v_i + t(i,j) for i = j +- 1 mod 3, where
 * t(i,j) has -2 s_ij in coordinate i and 0 elsewhere. Keys: "v0".."v3",
 * "w12", "w13", "w21", "w23", "w31", "w32" (w(i,j) as "w" + i + j). */
std::vector<std::pair<std::string, ProjPoint>> anchor_points(const SymMatrix3& splus);

/* A vertex of the curve: chart point where at least three monomials tie at
 * the maximum. */
struct VertexInfo {
  AffinePoint p;
  MonomialSet maximizers;

  friend bool operator==(const VertexInfo& a, const VertexInfo& b) {
    return a.p == b.p && a.maximizers == b.maximizers;
  }
};

/* Closed-form vertex computation: anchor and displaced candidates of the
 * shape+ model are filtered by maximizer count >= 3 against the shape+
 * polynomial, deduplicated, translated by ((a33-a11)/2, (a33-a22)/2), and
 * reported with maximizer sets against p itself. Sorted lexicographically. */
std::vector<VertexInfo> vertices(const QuadPoly& p);
std::vector<VertexInfo> vertices(const QuadPoly& p, Chart chart);

/* Working in chart c on p is the same as working in chart Z on
 * permute(p, chart_perm(c)); the affine coordinate pairs line up. */
IndexPerm chart_perm(Chart chart);

struct SketchEdge {
  int u, v;  // vertex indices, u < v
  int weight;

  friend bool operator==(const SketchEdge& a, const SketchEdge& b) {
    return a.u == b.u && a.v == b.v && a.weight == b.weight;
  }
};

struct SketchRay {
  int v;                    // base vertex index
  std::pair<int, int> dir;  // primitive integer direction, pointing outward
  int weight;

  friend bool operator==(const SketchRay& a, const SketchRay& b) {
    return a.v == b.v && a.dir == b.dir && a.weight == b.weight;
  }
};

/* The curve as a plane graph: vertices, bounded edges, unbounded rays.
 * Deterministic order: vertices lexicographic, edges by (u, v), rays by
 * (v, dir). Weights are lattice lengths of the dual exponent segments. */
struct Sketch {
  Chart chart = Chart::Z;
  std::vector<VertexInfo> vertices;
  std::vector<SketchEdge> edges;
  std::vector<SketchRay> rays;
};

/* Independent oracle: enumerates all monomial pair/triple ties, keeps those
 * attaining the global maximum, and assembles the cells. Signals an internal
 * error if the result is not a tree. */
Sketch corner_locus(const QuadPoly& p, Chart chart);

/* Balance condition at a vertex: the weighted primitive directions of the
 * incident edges and rays sum to zero. */
struct BalanceViolation {
  int vertex;
  std::pair<Rational, Rational> excess;
};

std::vector<BalanceViolation> check_balance(const Sketch& sk);

/* Total ray weight per pendant direction. Valid conics have 2/2/2 over
 * west (-1,0), south (0,-1) and north-east (1,1). */
struct RayCensus {
  int west = 0, south = 0, northeast = 0;
  bool only_standard_directions = true;

  bool is_conic_census() const {
    return only_standard_directions && west == 2 && south == 2 && northeast == 2;
  }
};

RayCensus ray_census(const Sketch& sk);

/* Separations between the two pendant rays of each direction. A direction
 * served by a single weight-2 ray has gap zero. The north-east gap is the
 * exact displacement pair between base vertices (lexicographically later
 * minus earlier); for a conic in canonical position it equals (d1, -d2).
 * West and south gaps are the scalar offsets 2*s32 and 2*s31. */
struct PendantSeparations {
  Rational ne_dx, ne_dy;
  Rational west, south;
};

PendantSeparations pendant_separations(const Sketch& sk);

/* d >= 0 with at least one zero. */
bool is_pair_of_lines(const Invariants& inv);

/* Classes whose shape+ matrix is tropically singular: pairs of lines, the
 * double line and one-point central conics. */
bool is_shape_singular_class(ConicClassTag tag);

}  // namespace tropconic
