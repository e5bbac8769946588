#pragma once

#include <map>
#include <string>
#include <vector>

#include "tsurf/rings/relations.hpp"
#include "tsurf/rings/smoothing.hpp"
#include "tsurf/tsing/germ.hpp"

namespace tsurf {

// Orbifold chart at a coordinate point: the coordinate is set to 1, the
// planned relations are solved as power series for their variables, and the
// germ relation, rewritten in the local coordinates, is classified in
// C^3 / mu_n with the given weights.
struct ChartSpec {
    std::string point;
    std::vector<EliminationStep> plan;
    std::string germ;
    std::vector<std::string> local;
    std::vector<long> weights;
    long n = 1;
};

// `specialization` fixes parameters and opaque general forms (polynomials
// over the system's ring); every other variable must be local, eliminated or
// absent from the relations used.
QuotientGerm chart_germ(const RelationSystem& sys, const ChartSpec& spec,
                        const std::map<std::string, Polynomial>& specialization, int order = 10);
GermClass chart_singularity(const RelationSystem& sys, const ChartSpec& spec,
                            const std::map<std::string, Polynomial>& specialization, int order = 10);

}  // namespace tsurf
