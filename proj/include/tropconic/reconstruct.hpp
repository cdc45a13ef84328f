#pragma once

/**
 * @file reconstruct.hpp
 * @brief From a balanced weighted tree back to a defining polynomial.
 *
 * A conic's corner locus determines its matrix only up to the clamped shape
 * and a translation (adding a constant to a mixed coefficient below the
 * clamping threshold changes nothing geometrically). Reconstruction
 * therefore returns the canonical representative: s_ij pinned to the
 * clamped value, a33 = 0, and the diagonal chosen so the model lands on
 * the input's vertices.
 */

#include <vector>

#include "tropconic/conic.hpp"

namespace tropconic {

struct TreeVertex {
  int id;  // caller-chosen, unique
  AffinePoint p;
};

struct TreeEdge {
  int u, v;  // vertex ids
  int weight;
};

struct TreeRay {
  int v;  // base vertex id
  std::pair<int, int> dir;
  int weight;
};

/* A weighted tree in one affine chart, candidate corner locus of a conic. */
struct TreeSpec {
  Chart chart = Chart::Z;
  std::vector<TreeVertex> vertices;
  std::vector<TreeEdge> edges;
  std::vector<TreeRay> rays;
};

/* Reject trees that cannot be a conic locus for a structural reason:
 * bad references, more than four vertices, a cycle, a disconnected graph,
 * a pendant direction other than west/south/northeast, per-direction ray
 * weight other than two, or an unbalanced vertex. Throws input_error with
 * the reason; acceptance here does not yet guarantee the tree is a conic. */
void validate_tree(const TreeSpec& t);

/* Validated tree in sketch form: vertices sorted, rays with equal base and
 * direction merged, edges renumbered. Maximizer sets are left empty. */
Sketch sketch_of(const TreeSpec& t);

/* Sketch as a tree, ids equal to vertex indices. */
TreeSpec tree_of(const Sketch& sk);

/* Geometric cell-for-cell equality: same vertex coordinates, same edges
 * and rays with equal weights. Maximizer sets are ignored; two polynomials
 * with the same locus may label cells differently. */
bool same_cells(const Sketch& a, const Sketch& b);

/* Read the clamped shape and the class off the tree's displacement
 * pattern. Throws input_error when the pattern matches no class. */
std::pair<Invariants, ConicClass> recover_invariants(const TreeSpec& t);

/* Canonical defining matrix of the tree, in the tree's chart. Guarantees
 * the round trip: the corner locus of the result equals the input tree
 * cell for cell (throws input_error otherwise). */
SymMatrix3 recover_polynomial(const TreeSpec& t);

}  // namespace tropconic
