#pragma once

#include <string>

#include "paramweyl/weyl.hpp"

namespace paramweyl {

// Grammar: sums and differences of products of powers, with rational
// literals ("3", "3/2"), variables x1..xn, d1..dn, s1..sp, and parentheses.
// `*` multiplies in written order, so "d1*x1" ingests as x1*d1 + 1. `^`
// takes a nonnegative integer literal and its base must be a single
// variable, a number, or a parenthesized expression free of x and d.
// Errors carry the 0-based offset of the offending token.
WeylOperator parse_operator(const std::string& text, std::size_t n,
                            std::size_t p);

// Comma-separated rationals, e.g. "-1,3/2"; must have exactly p entries.
RationalPoint parse_rational_point(const std::string& text, std::size_t p);

} // namespace paramweyl
