#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "tsurf/core/polynomial.hpp"
#include "tsurf/lattice/integer_matrix.hpp"

namespace tsurf {

struct NotHomogeneous : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InconsistentRow : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Cox ring data of a toric variety: graded variables plus the irrelevant
// ideal as a list of monomial primes (each a set of variables).  The fan is
// never built; it is only checked through Gale-dual ray relations.
struct CoxPresentation {
    std::vector<std::string> variables;
    IntegerMatrix weights;  // one row per grading, one column per variable
    std::vector<std::vector<std::string>> irrelevant;

    std::size_t column(const std::string& var) const;  // throws when absent
    IntVector degree_of(const std::string& var) const;
    // throws std::invalid_argument on rank/shape/name problems
    void validate() const;
    // rays keyed by variable name
    std::map<std::string, IntVector> rays() const;

    static CoxPresentation from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

// common multidegree of every term; ring variables outside the presentation
// count as coefficients (degree 0)
IntVector multidegree(const Polynomial& f, const CoxPresentation& cox);

// Adds a variable with one new grading row.  The row lists the old variables
// followed by -1 for the new one; the nonnegative entries m_i say the new ray
// is sum m_i v_i.  Old rows get a 0 in the new column.
CoxPresentation toric_blowup(const CoxPresentation& cox, const std::string& new_var, const IntVector& new_row,
                             const std::vector<std::vector<std::string>>& new_irrelevant);

// the substitution x_i -> new_var^{m_i} x_i read off from a blowup row
std::map<std::string, Polynomial> blowup_substitution(const Ring& ring, const CoxPresentation& blown_up,
                                                      std::size_t row);

// pullback of f followed by exact division by the exceptional monomial
Polynomial blowup_transform(const Polynomial& f, const std::map<std::string, Polynomial>& substitution,
                            const Polynomial& exceptional);

}  // namespace tsurf
