#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsurf/core/polynomial.hpp"
#include "tsurf/tsing/tchain.hpp"

namespace tsurf {

// hypersurface germ (f = 0) in C^3 / mu_n, mu_n acting with the given weights
struct QuotientGerm {
    long n = 1;
    std::vector<std::string> variables;  // exactly three local coordinates
    std::vector<long> weights;           // one per variable, taken mod n
    Polynomial equation;                 // other ring variables are weight-0 parameters
};

enum class GermKind { Smooth, RDP, T, CyclicQuotient, Unrecognized };

struct GermClass {
    GermKind kind = GermKind::Unrecognized;
    std::optional<TSingularity> singularity;  // RDP or T
    std::optional<CyclicQuotient> quotient;   // smooth cover, non-T quotient
    std::string detail;

    std::string str() const;
};

// Matches the germ against the index-one cover normal form
// (xy - z^{dn}) in 1/n(1,-1,a) by weight-equivariant formal coordinate
// changes.  Unrecognized only means "not matched at this order".
GermClass classify_germ(const QuotientGerm& g, int order = 10);

}  // namespace tsurf
