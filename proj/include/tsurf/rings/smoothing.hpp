#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tsurf/rings/relations.hpp"

namespace tsurf {

struct NotLinear : Error {
    using Error::Error;
};

struct EliminationStep {
    std::string relation;
    std::string variable;
};

struct Elimination {
    Ring ring;  // the system's ring with the declared parameters invertible
    // eliminated variable -> expression in the surviving variables
    std::map<std::string, Polynomial> solutions;
    // every relation outside the plan after substitution
    std::vector<Relation> reduced;
    std::vector<std::string> identities;  // reduced to 0
    std::vector<std::string> residuals;   // the rest, in system order
    // residual -> earlier residual it is a polynomial multiple of
    std::map<std::string, std::string> multiple_of;

    const Polynomial& reduced_relation(const std::string& name) const;
    // residuals that are not multiples of earlier ones
    std::vector<std::string> independent_residuals() const;
};

// Solves the planned relations one after another for their variables (each
// must be of degree one in it with a unit coefficient: NotLinear /
// NotInvertible), back-substitutes so that every solution involves only
// surviving variables, and reduces the remaining relations.
Elimination smoothing_eliminate(const RelationSystem& rels, const std::set<std::string>& invertible,
                                const std::vector<EliminationStep>& plan);

}  // namespace tsurf
