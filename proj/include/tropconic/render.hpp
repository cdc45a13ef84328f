#pragma once

/**
 * @file render.hpp
 * @brief Deterministic SVG and ASCII pictures of a sketch.
 *
 * All coordinates are computed in exact rational arithmetic and emitted as
 * fixed three-digit decimals, so repeated runs produce byte-identical
 * documents. Weight-1 cells draw thin, weight-2 cells thick. The viewport
 * is the vertex hull padded by max(2, half the hull diameter); rays are
 * clipped to it. The y axis points up, as in the charts.
 */

#include <string>
#include <vector>

#include "tropconic/conic.hpp"

namespace tropconic {

/* Anchor names landing on each sketch vertex ("v0", "v1=w13", ...), for a
 * sketch produced from p in its own chart. Positions that collapse share
 * the label, joined with '='. */
std::vector<std::string> anchor_labels(const QuadPoly& p, const Sketch& sk);

/* labels may be empty or one string per vertex (empty string = no label). */
std::string render_svg(const Sketch& sk, const std::vector<std::string>& labels);
std::string render_ascii(const Sketch& sk, const std::vector<std::string>& labels);

}  // namespace tropconic
