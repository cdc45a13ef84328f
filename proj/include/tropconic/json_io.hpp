#pragma once

/**
 * @file json_io.hpp
 * @brief JSON serialization. Every document carries "format": 1.
 *
 * Scalars travel as strings ("7", "3/2", "-inf"); exact integers are also
 * accepted on input, floating point numbers are not. Matrix documents use
 * the keys a11, a22, a33, a21, a32, a31 with the diagonal mandatory and
 * finite; absent mixed keys mean -inf.
 */

#include <json.hpp>

#include "tropconic/conic.hpp"
#include "tropconic/factor.hpp"
#include "tropconic/reconstruct.hpp"

namespace tropconic {

using Json = nlohmann::json;

Json matrix_to_json(const SymMatrix3& a);
SymMatrix3 matrix_from_json(const Json& j);

Json poly_to_json(const QuadPoly& p);
QuadPoly poly_from_json(const Json& j);

Json sketch_to_json(const Sketch& sk);

Json tree_to_json(const TreeSpec& t);
TreeSpec tree_from_json(const Json& j);

Json linform_to_json(const LinForm& f);

/* Full classification record: tag, permutation, s+, d and the vertex list
 * of the chart-Z sketch. */
Json classification_to_json(const QuadPoly& p);

/* Parse a JSON document from text with input_error on malformed input. */
Json json_of_text(const std::string& text);

}  // namespace tropconic
