#pragma once

#include <string>

#include "summandlab/polynomial.hpp"

namespace summandlab {

// Parses the expression grammar used everywhere in the tool: variable names
// [A-Za-z_][A-Za-z0-9_]*, integer and a/b rational literals, operators
// + - * ^ and parentheses. ^ binds tightest, then *, then +/-. Juxtaposition
// is not multiplication. Whitespace is insignificant.
Polynomial parse_polynomial(const std::string& text, const PolyRing& ring);

}  // namespace summandlab
