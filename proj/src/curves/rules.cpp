#include "tsurf/curves/rules.hpp"

namespace tsurf {

const std::vector<ContradictionRule>& contradiction_rules() {
    static const std::vector<ContradictionRule> rules = {
        {"a", "two distinct (-1)-curves meet", "(-1)-curves are disjoint on a surface of Kodaira dimension one"},
        {"b", "a curve on the minimal model has negative canonical degree", "the canonical class of a minimal model is nef"},
        {"c", "a K-trivial genus 1 curve meets another K-trivial curve",
         "on a minimal elliptic surface such a curve is a whole fibre; Kodaira's list has no room for more"},
        {"d", "a (-2)-curve of the resolution that is not contracted meets the exceptional locus",
         "adjunction and nefness give K_Y.D = E.D = 0 for a (-2)-curve D"},
    };
    return rules;
}

std::vector<Violation> check_rules(const CurveConfiguration& cfg) {
    std::vector<Violation> out;
    const auto& cs = cfg.curves();
    auto minus_one = [](const Curve& c) { return c.self_intersection == -1 && c.genus == 0; };
    if (cfg.kodaira_dimension_one) {
        for (std::size_t i = 0; i < cs.size(); ++i)
            for (std::size_t j = i + 1; j < cs.size(); ++j)
                if (minus_one(cs[i]) && minus_one(cs[j]) && cfg.incidence(cs[i].name, cs[j].name) > 0)
                    out.push_back({"a", {cs[i].name, cs[j].name},
                                   "incidence " + std::to_string(cfg.incidence(cs[i].name, cs[j].name))});
    }
    if (cfg.minimal) {
        for (const auto& c : cs)
            if (c.k_degree() < 0) out.push_back({"b", {c.name}, "K.C = " + std::to_string(c.k_degree())});
    }
    if (cfg.minimal && cfg.kodaira_dimension_one) {
        for (const auto& f : cs) {
            if (f.genus != 1 || f.k_degree() != 0) continue;
            for (const auto& [n, m] : cfg.neighbours(f.name)) {
                const Curve& c = cfg.curve(n);
                if (c.genus == 0 && c.k_degree() == 0)
                    out.push_back({"c", {f.name, n}, "full fibre meets a K-trivial rational curve " + std::to_string(m) + " times"});
            }
        }
    }
    if (cfg.kodaira_dimension_one && cfg.contracted == 0) {
        for (const auto& d : cs) {
            if (d.self_intersection != -2 || d.genus != 0 || d.has(tags::eps_exceptional)) continue;
            for (const auto& [n, m] : cfg.neighbours(d.name))
                if (cfg.curve(n).has(tags::eps_exceptional))
                    out.push_back({"d", {d.name, n}, "E.D >= " + std::to_string(m)});
        }
    }
    return out;
}

Rational delta_pairing(const CurveConfiguration& cfg, const std::string& curve) {
    Rational s = 0;
    for (const auto& c : cfg.curves())
        if (c.coefficient) s += *c.coefficient * cfg.incidence(c.name, curve);
    return s;
}

Rational kx_pairing(const CurveConfiguration& cfg, const std::string& curve) {
    for (const auto& c : cfg.curves())
        if (c.has(tags::f_exceptional) && !c.coefficient)
            throw MissingCoefficients("f-exceptional curve '" + c.name + "' has no codiscrepancy coefficient");
    const Curve& c = cfg.curve(curve);
    Rational k = Rational(c.k_degree()) + delta_pairing(cfg, curve);
    if (c.has(tags::f_exceptional) && k != 0)
        throw std::logic_error("K_X." + curve + " = " + k.get_str() + " on an f-exceptional curve");
    return k;
}

}  // namespace tsurf
