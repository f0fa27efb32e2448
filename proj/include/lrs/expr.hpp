#pragma once

#include <string_view>

#include "lrs/recurrence.hpp"

namespace lrs {

// Rational function in z from text such as "z^4/(1-z^2) + z^9/(1-z^3)".
// Literals are integers or decimal-free rationals written with '/';
// '^' takes a nonnegative integer exponent and binds tighter than unary minus.
// Throws Error(parse) with the byte offset as witness on a syntax error, and
// invalid_argument when the reduced denominator vanishes at 0.
RationalFunction parse_expr(std::string_view text);

} // namespace lrs
