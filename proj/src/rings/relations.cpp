#include "tsurf/rings/relations.hpp"

#include <algorithm>

#include "tsurf/core/parse.hpp"
#include "tsurf/toric/cox.hpp"

namespace tsurf {

bool all_passed(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool RelationSystem::has(std::string_view name) const {
    return std::any_of(relations.begin(), relations.end(), [&](const Relation& r) { return r.name == name; });
}

const Polynomial& RelationSystem::operator[](std::string_view name) const {
    for (const auto& r : relations)
        if (r.name == name) return r.poly;
    throw std::invalid_argument("no relation named '" + std::string(name) + "'");
}

std::vector<std::string> RelationSystem::names() const {
    std::vector<std::string> out;
    for (const auto& r : relations) out.push_back(r.name);
    return out;
}

int RelationSystem::degree_of(const Polynomial& p) const {
    if (p.is_zero()) throw std::invalid_argument("degree of the zero polynomial");
    std::optional<int> deg;
    for (const auto& [e, c] : p.terms()) {
        int d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            auto it = degrees.find(ring.name(i));
            d += (it == degrees.end() ? 0 : it->second) * e[i];
        }
        if (deg && *deg != d)
            throw NotHomogeneous(p.str() + " mixes degrees " + std::to_string(*deg) + " and " + std::to_string(d));
        deg = d;
    }
    return *deg;
}

std::vector<CheckResult> RelationSystem::check_degrees() const {
    std::vector<CheckResult> out;
    for (const auto& r : relations) {
        CheckResult c{r.name + " homogeneous of degree " + std::to_string(r.degree), false,
                      std::to_string(r.degree), ""};
        try {
            int d = degree_of(r.poly);
            c.actual = std::to_string(d);
            c.passed = d == r.degree;
        } catch (const NotHomogeneous& e) {
            c.actual = e.what();
        }
        out.push_back(std::move(c));
    }
    return out;
}

const RelationSystem& RelationLibrary::system(std::string_view name) const {
    auto it = systems.find(std::string(name));
    if (it == systems.end()) throw std::invalid_argument("no relation system '" + std::string(name) + "'");
    return it->second;
}

const Polynomial& RelationLibrary::find(std::string_view relation) const {
    for (const auto& [n, s] : systems)
        if (s.has(relation)) return s[relation];
    throw std::invalid_argument("no relation named '" + std::string(relation) + "'");
}

RelationLibrary RelationLibrary::from_json(const nlohmann::json& j) {
    RelationLibrary lib;
    std::vector<std::string> names;
    for (const auto& v : j.at("variables")) {
        auto name = v.at(0).get<std::string>();
        names.push_back(name);
        lib.degrees[name] = v.at(1).get<int>();
    }
    lib.ring = Ring(names);
    for (const auto& [sname, sj] : j.at("systems").items()) {
        RelationSystem sys{lib.ring, lib.degrees, {}};
        for (const auto& r : sj)
            sys.relations.push_back({r.at("name").get<std::string>(),
                                     parse_polynomial(r.at("poly").get<std::string>(), lib.ring),
                                     r.at("degree").get<int>()});
        lib.systems.emplace(sname, std::move(sys));
    }
    if (j.contains("equivalences"))
        for (const auto& e : j.at("equivalences")) {
            Equivalence eq{e.at("lhs").get<std::string>(), e.at("rhs").get<std::string>(), {}, {}};
            for (const auto& d : e.at("difference"))
                eq.difference.emplace_back(d.at(0).get<std::string>(),
                                           parse_polynomial(d.at(1).get<std::string>(), lib.ring));
            if (e.contains("requires"))
                for (const auto& [k, v] : e.at("requires").items()) {
                    Rational q(v.get<std::string>());
                    q.canonicalize();
                    eq.requires_values[k] = q;
                }
            lib.equivalences.push_back(std::move(eq));
        }
    return lib;
}

std::vector<CheckResult> verify_equivalences(const RelationLibrary& lib) {
    std::vector<CheckResult> out;
    for (const auto& e : lib.equivalences) {
        const auto& at = e.requires_values;
        Polynomial diff = specialize(lib.find(e.lhs) - lib.find(e.rhs), at);
        Polynomial comb(lib.ring);
        std::string text;
        for (const auto& [name, m] : e.difference) {
            comb += specialize(m * lib.find(name), at);
            text += (text.empty() ? "" : " + ") + std::string("(") + m.str() + ")*" + name;
        }
        std::string cond;
        for (const auto& [k, v] : at) cond += (cond.empty() ? " at " : ", ") + k + " = " + v.get_str();
        out.push_back({e.lhs + " - " + e.rhs + " = " + text + cond, diff == comb, "0", (diff - comb).str()});
    }
    return out;
}

RelationSystem specialize_system(const RelationSystem& sys, const std::map<std::string, Rational>& values) {
    RelationSystem out = sys;
    for (auto& r : out.relations) r.poly = specialize(r.poly, values);
    return out;
}

Polynomial to_cox(const Polynomial& p, const GeneratorTable& table, const Ring& cox_ring,
                  const std::map<std::string, Polynomial>& extra) {
    auto images = table.substitution(cox_ring);
    for (const auto& [k, v] : extra) images[k] = v;
    const Ring& r = p.ring();
    std::map<std::string, Polynomial> used;
    for (std::size_t i = 0; i < r.size(); ++i) {
        auto it = images.find(r.name(i));
        if (it != images.end()) used.emplace(it->first, it->second);
    }
    return substitute(p, cox_ring, used);
}

std::vector<CheckResult> verify_binomials(const GeneratorTable& table, const RelationSystem& sys,
                                          const std::vector<std::string>& names, const Ring& cox_ring) {
    std::vector<CheckResult> out;
    for (const auto& n : names) {
        const Polynomial& rel = sys[n];
        Polynomial residual = to_cox(rel, table, cox_ring);
        std::string lhs;
        if (!rel.is_zero()) lhs = to_cox(Polynomial::monomial(rel.ring(), rel.leading_exponents()), table, cox_ring).str();
        out.push_back({n + ": " + rel.str() + " vanishes on the generator monomials" +
                           (lhs.empty() ? "" : " (both sides " + lhs + ")"),
                       residual.is_zero(), "0", residual.str()});
    }
    return out;
}

Polynomial bundle_general_form(const Polynomial& relation, const Polynomial& lead, const Polynomial& tail) {
    return exact_divide(relation - tail.in(relation.ring()), lead.in(relation.ring()));
}

}  // namespace tsurf
