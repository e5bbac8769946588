#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "tsurf/core/polynomial.hpp"
#include "tsurf/rings/relations.hpp"

namespace tsurf {

// numerator / prod (1 - t^d), numerator a polynomial in the single variable t
struct HilbertSeries {
    Polynomial numerator;
    std::vector<int> denominator;

    static Ring ring();  // the ring Q[t]
    std::vector<Rational> coefficients(int count) const;
    Rational coefficient(int k) const;
    // cross-multiplied comparison
    bool equals(const HilbertSeries& o) const;
    std::string str() const;
};

struct ResolutionData {
    std::vector<int> weights;
    int socle = 0;
    std::vector<int> l1, l2;

    // ranks 1, |L1|, |L2|, |L2|, |L1|, 1 with alternating sum 0, weights positive
    void validate() const;
    static ResolutionData from_json(const nlohmann::json& j);
};

// N(t) / prod(1 - t^w) for the self-dual resolution
// O <- L1 <- L2 <- L2^v(-s) <- L1^v(-s) <- O(-s)
HilbertSeries hilbert_series_from_resolution(const ResolutionData& res);

struct HypersurfaceInvariants {
    int canonical_degree;  // d - sum w
    Rational k_squared;    // d (d - sum w)^2 / prod w
    HilbertSeries series;  // (1 - t^d) / prod(1 - t^w)
};
HypersurfaceInvariants wps_hypersurface_invariants(int degree, const std::vector<int>& weights);

struct FixedPart {
    Polynomial equation;  // R13 on x0 = x1 = y = u0 = t = 0
    std::string shape;    // "irreducible", "cone with vertex P_z", "two components", "triple line"
};
FixedPart fixed_part(const RelationSystem& rels, const std::string& relation = "R13");

}  // namespace tsurf
