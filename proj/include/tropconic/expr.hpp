#pragma once

/**
 * @file expr.hpp
 * @brief Concrete syntax for polynomials and linear forms.
 *
 * Grammar (whitespace-insensitive, '+' is tropical sum, '*' tropical
 * product; the unicode spellings of both are accepted on input):
 *
 *   poly := term ('+' term)*
 *   term := [coef '*'] mono
 *   mono := variable factors combining to degree two, e.g. X^2, X*Y, Y*X
 *   coef := rational | '(' rational ')' | '-inf'
 *
 * A missing coefficient means 0. Monomials may repeat; their coefficients
 * combine by max. Mixed monomials may be absent (coefficient -inf); the
 * squared ones must end up finite.
 */

#include <string>
#include <string_view>

#include "tropconic/factor.hpp"
#include "tropconic/quadratic.hpp"

namespace tropconic {

/* Throws input_error with a position-annotated message. */
QuadPoly parse_poly(std::string_view text);

/* Canonical form: monomials in the order X^2, Y^2, Z^2, X*Y, Y*Z, X*Z,
 * negative coefficients parenthesized, zero coefficients dropped, -inf
 * monomials omitted. parse_poly(format_poly(p)) == p. */
std::string format_poly(const QuadPoly& p);

std::string format_linform(const LinForm& f);

}  // namespace tropconic
