#pragma once

#include <string_view>

#include "tmahler/polynomial.hpp"

namespace tmahler {

// Parses an ASCII Laurent polynomial in x and y (X and Y are accepted too).
//
//   expr    := ['+'|'-'] term { ('+'|'-') term }
//   term    := factor { ['*'|'/'] factor }        juxtaposition multiplies
//   factor  := ('+'|'-') factor | power
//   power   := primary [ '^' ['+'|'-'] integer ]
//   primary := number | 'x' | 'y' | '(' expr ')'
//   number  := digits ['.' digits] [('e'|'E') ['+'|'-'] digits]
//
// Division is allowed by constants and monomials only; negative powers by
// monomials only. Throws Error(ParseError) with the offending column.
LaurentPolynomial parse_polynomial(std::string_view text);

}  // namespace tmahler
