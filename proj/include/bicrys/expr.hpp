#pragma once

#include <string>
#include <string_view>

#include "bicrys/polynomial.hpp"
#include "bicrys/term_order.hpp"

namespace bicrys {

// expression := ['+'|'-'] term (('+'|'-') term)*
// term       := factor ('*' factor)*
// factor     := primary ['^' posint]
// primary    := 'z[' int ',' int ']' | '(' expression ')' | int ['/' posint]
// Whitespace is ignored. Variable indices are 1-based.
Polynomial parse_polynomial(std::string_view src, int m, int n);

// Canonical text: terms in decreasing order, coefficient 1 omitted, "0" for zero.
std::string format_polynomial(const Polynomial& f, const TermOrder& ord);
// Uses the antidiagonal order of the polynomial's ring.
std::string format_polynomial(const Polynomial& f);

}  // namespace bicrys
