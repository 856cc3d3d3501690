#pragma once

#include <string>
#include <vector>

#include "fibercone/polynomial.hpp"

namespace fibercone {

// Parses "x^2*y - 3*x + 7" style input. Grammar:
//   expr   := ['-']? term (('+' | '-') term)*
//   term   := natural ('*'? factor)*  |  factor ('*'? factor)*
//   factor := ident ('^' natural)?
// Whitespace is free; '*' between factors is optional. Identifiers must be
// variables of the ring. Throws ParseError with the offending position.
Polynomial parse_poly(const std::string& text, const PolyRing& ring);

// Comma-separated list of polynomials.
std::vector<Polynomial> parse_poly_list(const std::string& text,
                                        const PolyRing& ring);

}  // namespace fibercone
