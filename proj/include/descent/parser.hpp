#pragma once

#include <string_view>

#include "descent/poly.hpp"

namespace descent {

/// Parses a polynomial written in the grammar
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := integer | variable ['^' exponent] | '(' expr ')' ['^' exponent]
///
/// Integers of any size are reduced mod p. Products must be written with an
/// explicit '*': "xy" is a single identifier and an error unless declared.
/// Throws ParseError carrying the byte offset of the problem.
Polynomial parse_poly(std::string_view src, const RingPtr& ring);

}  // namespace descent
