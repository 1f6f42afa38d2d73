#pragma once

#include "prelie/scalar.hpp"

#include <string_view>

namespace prelie {

// Grammar: integers, identifiers, + - * / ^ (non-negative integer exponent),
// unary minus, parentheses. Precedence: ^ > unary - > * / > + -.
Scalar parse_scalar(std::string_view text, const ParamRing &ring);

Rational parse_rational(std::string_view text);

} // namespace prelie
