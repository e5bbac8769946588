#include "tsurf/rings/charts.hpp"

#include <algorithm>

#include "tsurf/core/series.hpp"

namespace tsurf {

QuotientGerm chart_germ(const RelationSystem& sys, const ChartSpec& spec,
                        const std::map<std::string, Polynomial>& specialization, int order) {
    if (spec.local.size() != 3 || spec.weights.size() != 3)
        throw std::invalid_argument("a chart germ needs three local coordinates with weights");
    const Ring& ring = sys.ring;
    // general forms may mention the chart coordinate, so it is set after them
    const std::map<std::string, Polynomial> at_point{{spec.point, Polynomial::constant(ring, 1)}};
    auto prepare = [&](const std::string& name) {
        return substitute(substitute(sys[name], ring, specialization), ring, at_point);
    };

    std::vector<Polynomial> eqs;
    std::vector<std::string> unknowns;
    for (const auto& s : spec.plan) {
        eqs.push_back(prepare(s.relation));
        unknowns.push_back(s.variable);
    }
    Polynomial germ = prepare(spec.germ);
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const std::string& v = ring.name(i);
        bool known = std::find(spec.local.begin(), spec.local.end(), v) != spec.local.end() ||
                     std::find(unknowns.begin(), unknowns.end(), v) != unknowns.end();
        bool appears = germ.involves(i) || std::any_of(eqs.begin(), eqs.end(), [&](const Polynomial& e) { return e.involves(i); });
        if (appears && !known)
            throw std::invalid_argument("'" + v + "' is neither local, eliminated nor specialised in chart " + spec.point);
    }

    SeriesContext ctx = SeriesContext::standard(ring, order);
    std::map<std::size_t, TruncatedSeries> sol;
    if (!eqs.empty()) {
        auto solved = solve_implicit(eqs, unknowns, ctx);
        for (std::size_t k = 0; k < unknowns.size(); ++k) sol.emplace(ring.index(unknowns[k]), solved[k]);
    }
    QuotientGerm g;
    g.n = spec.n;
    g.variables = spec.local;
    g.weights = spec.weights;
    g.equation = compose(germ, sol, ctx).poly();
    return g;
}

GermClass chart_singularity(const RelationSystem& sys, const ChartSpec& spec,
                            const std::map<std::string, Polynomial>& specialization, int order) {
    return classify_germ(chart_germ(sys, spec, specialization, order), order);
}

}  // namespace tsurf
