#pragma once

#include "pfzero/algebra/multipoly.hpp"

#include <string_view>

namespace pfzero::algebra {

/// Parse the polynomial text grammar:
///
///     poly   := ['+'|'-'] term (('+'|'-') term)*
///     term   := factor ('*' factor)*
///     factor := INT ['/' INT] | ('x'|'y'|'t') ['^' INT]
///
/// Whitespace is ignored.  Throws ParseError carrying the byte offset of the
/// offending character (the input length when the text ends early).
MultiPoly parse_polynomial(std::string_view text);

/// Parse an exact rational: INT or INT/INT, optionally signed, or a plain
/// decimal such as "0.25" / "-1.5e-3" (converted exactly).
Rational parse_rational(std::string_view text);

} // namespace pfzero::algebra
