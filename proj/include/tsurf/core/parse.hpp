#pragma once

#include <string_view>

#include "tsurf/core/polynomial.hpp"

namespace tsurf {

// expr   := ['-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := coeff | ident ['^' ['-'] uint] | '(' expr ')' ['^' uint]
// coeff  := int ['/' uint]
// Negative powers are accepted for invertible variables only, so the
// canonical text produced by Polynomial::str() always parses back.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

}  // namespace tsurf
