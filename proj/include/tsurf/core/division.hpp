#pragma once

#include <vector>

#include "tsurf/core/polynomial.hpp"

namespace tsurf {

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

// Multivariate division with remainder.  Monomials are ordered by graded
// reverse lex in the non-invertible variables; the invertible variables are
// treated as part of the coefficients.  A divisor takes part only when its
// leading coefficient is a unit.  f == sum q_i d_i + remainder always holds,
// so a zero remainder certifies ideal membership (the converse needs a
// Groebner basis and is not claimed).
DivisionResult divide_by(const Polynomial& f, const std::vector<Polynomial>& divisors);

}  // namespace tsurf
