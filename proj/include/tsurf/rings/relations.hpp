#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tsurf/core/polynomial.hpp"
#include "tsurf/rings/generators.hpp"

namespace tsurf {

// one line of a verification report
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string expected;
    std::string actual;
};
bool all_passed(const std::vector<CheckResult>& checks);

struct Relation {
    std::string name;
    Polynomial poly;
    int degree = 0;
};

// Named relations over a ring whose variables carry integer degrees
// (parameters have degree 0; an opaque general form such as P has its own).
struct RelationSystem {
    Ring ring;
    std::map<std::string, int> degrees;
    std::vector<Relation> relations;

    bool has(std::string_view name) const;
    const Polynomial& operator[](std::string_view name) const;
    std::vector<std::string> names() const;
    int degree_of(const Polynomial& p) const;  // NotHomogeneous when mixed
    // every relation homogeneous of its declared degree
    std::vector<CheckResult> check_degrees() const;
};

// lhs - rhs = sum multiplier_k * R_k once the `requires` values are set
struct Equivalence {
    std::string lhs, rhs;
    std::vector<std::pair<std::string, Polynomial>> difference;
    std::map<std::string, Rational> requires_values;
};

// relations.json: shared variables with degrees, several named systems over
// them, equivalence certificates between relations of different systems
struct RelationLibrary {
    Ring ring;
    std::map<std::string, int> degrees;
    std::map<std::string, RelationSystem> systems;
    std::vector<Equivalence> equivalences;

    const RelationSystem& system(std::string_view name) const;
    const Polynomial& find(std::string_view relation) const;  // searched across systems
    static RelationLibrary from_json(const nlohmann::json& j);
};

std::vector<CheckResult> verify_equivalences(const RelationLibrary& lib);

// the system with the listed variables set to constants (parameters, or a
// chart coordinate set to 1)
RelationSystem specialize_system(const RelationSystem& sys, const std::map<std::string, Rational>& values);

// Substitutes the Cox monomials of the generators into each listed relation;
// variables that are not generators are mapped by `extra` or kept by name in
// the Cox ring (which must then contain them).
Polynomial to_cox(const Polynomial& p, const GeneratorTable& table, const Ring& cox_ring,
                  const std::map<std::string, Polynomial>& extra = {});

// one check per binomial: the substituted relation must vanish
std::vector<CheckResult> verify_binomials(const GeneratorTable& table, const RelationSystem& sys,
                                          const std::vector<std::string>& names, const Ring& cox_ring);

// For an induced relation rel = lead * P + tail, returns P = (rel - tail)/lead,
// or NotDivisible when the remainder is not a multiple of lead.
Polynomial bundle_general_form(const Polynomial& relation, const Polynomial& lead, const Polynomial& tail);

}  // namespace tsurf
