#pragma once

#include <string>
#include <vector>

#include "tsurf/curves/configuration.hpp"

namespace tsurf {

struct MissingCoefficients : Error {
    using Error::Error;
};

// Rules a-d.  Each fires only when the flags it relies on are set:
//   a  distinct (-1)-curves are disjoint          (Kodaira dimension one)
//   b  no curve with K.C < 0                      (minimal)
//   c  a K-trivial curve of genus 1 is a whole fibre, so it meets no other
//      K-trivial rational curve                   (minimal, Kodaira dimension one)
//   d  a (-2)-curve that is not contracted misses the exceptional locus
//                                                 (Kodaira dimension one, and
//      only on the starting surface: nothing contracted yet)
struct ContradictionRule {
    std::string id;
    std::string description;
    std::string source;  // the argument the rule abstracts
};
const std::vector<ContradictionRule>& contradiction_rules();

struct Violation {
    std::string rule;
    std::vector<std::string> curves;
    std::string detail;
};

std::vector<Violation> check_rules(const CurveConfiguration& cfg);

// Delta.C for Delta = sum of coefficient * curve over the curves carrying a
// coefficient
Rational delta_pairing(const CurveConfiguration& cfg, const std::string& curve);

// K_X.C = K.C + Delta.C.  Every f-exceptional curve needs a coefficient
// (MissingCoefficients); on f-exceptional curves the result must be 0 and is
// checked (std::logic_error otherwise).
Rational kx_pairing(const CurveConfiguration& cfg, const std::string& curve);

}  // namespace tsurf
