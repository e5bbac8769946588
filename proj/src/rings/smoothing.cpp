#include "tsurf/rings/smoothing.hpp"

#include <algorithm>

namespace tsurf {

const Polynomial& Elimination::reduced_relation(const std::string& name) const {
    for (const auto& r : reduced)
        if (r.name == name) return r.poly;
    throw std::invalid_argument("'" + name + "' was not reduced");
}

std::vector<std::string> Elimination::independent_residuals() const {
    std::vector<std::string> out;
    for (const auto& r : residuals)
        if (!multiple_of.count(r)) out.push_back(r);
    return out;
}

Elimination smoothing_eliminate(const RelationSystem& rels, const std::set<std::string>& invertible,
                                const std::vector<EliminationStep>& plan) {
    Elimination out;
    out.ring = rels.ring.with_invertible(invertible);
    std::set<std::string> used;
    for (const auto& step : plan) {
        Polynomial f = substitute(rels[step.relation].in(out.ring), out.ring, out.solutions);
        std::size_t v = out.ring.index(step.variable);
        if (f.degree_in(v) != 1 || f.min_degree_in(v) > 1)
            throw NotLinear(step.relation + " is not linear in " + step.variable + " after the earlier steps");
        auto parts = f.collect(v);
        const Polynomial& coeff = parts.at(1);
        if (!coeff.is_unit())
            throw NotInvertible("coefficient " + coeff.str() + " of " + step.variable + " in " + step.relation +
                                " is not invertible");
        Polynomial rest = parts.count(0) ? parts.at(0) : Polynomial(out.ring);
        Polynomial sol = -(rest * inverse_unit(coeff));
        for (auto& [name, s] : out.solutions) s = substitute(s, out.ring, {{step.variable, sol}});
        out.solutions.emplace(step.variable, sol);
        used.insert(step.relation);
    }
    for (const auto& r : rels.relations) {
        if (used.count(r.name)) continue;
        Polynomial red = substitute(r.poly.in(out.ring), out.ring, out.solutions);
        out.reduced.push_back({r.name, red, r.degree});
        if (red.is_zero()) {
            out.identities.push_back(r.name);
            continue;
        }
        for (const auto& earlier : out.residuals) {
            if (out.multiple_of.count(earlier)) continue;
            try {
                exact_divide(red, out.reduced_relation(earlier));
                out.multiple_of[r.name] = earlier;
                break;
            } catch (const NotDivisible&) {
            }
        }
        out.residuals.push_back(r.name);
    }
    return out;
}

}  // namespace tsurf
