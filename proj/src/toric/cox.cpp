#include "tsurf/toric/cox.hpp"

#include <algorithm>
#include <set>

#include "tsurf/core/errors.hpp"

namespace tsurf {

std::size_t CoxPresentation::column(const std::string& var) const {
    auto it = std::find(variables.begin(), variables.end(), var);
    if (it == variables.end()) throw std::invalid_argument("'" + var + "' is not a Cox variable");
    return static_cast<std::size_t>(it - variables.begin());
}

IntVector CoxPresentation::degree_of(const std::string& var) const { return weights.column(column(var)); }

void CoxPresentation::validate() const {
    if (weights.cols() != variables.size())
        throw std::invalid_argument("weight matrix has " + std::to_string(weights.cols()) + " columns for " +
                                    std::to_string(variables.size()) + " variables");
    std::set<std::string> seen(variables.begin(), variables.end());
    if (seen.size() != variables.size()) throw std::invalid_argument("repeated Cox variable");
    if (rank(weights) != weights.rows()) throw std::invalid_argument("weight matrix is not of full row rank");
    if (irrelevant.empty()) throw std::invalid_argument("irrelevant ideal has no components");
    for (const auto& comp : irrelevant) {
        if (comp.empty()) throw std::invalid_argument("empty irrelevant component");
        for (const auto& v : comp)
            if (!seen.count(v)) throw std::invalid_argument("irrelevant component mentions '" + v + "'");
    }
}

std::map<std::string, IntVector> CoxPresentation::rays() const {
    auto r = gale_rays(weights);
    std::map<std::string, IntVector> out;
    for (std::size_t i = 0; i < variables.size(); ++i) out[variables[i]] = r[i];
    return out;
}

CoxPresentation CoxPresentation::from_json(const nlohmann::json& j) {
    CoxPresentation c;
    c.variables = j.at("vars").get<std::vector<std::string>>();
    std::vector<IntVector> rows;
    for (const auto& row : j.at("weights")) {
        IntVector r;
        for (const auto& x : row) r.emplace_back(x.get<long>());
        rows.push_back(std::move(r));
    }
    c.weights = IntegerMatrix::from_rows(rows, c.variables.size());
    c.irrelevant = j.at("irrelevant").get<std::vector<std::vector<std::string>>>();
    c.validate();
    return c;
}

nlohmann::json CoxPresentation::to_json() const {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& row : weights.row_list()) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : row) r.push_back(x.get_si());
        w.push_back(r);
    }
    return {{"vars", variables}, {"weights", w}, {"irrelevant", irrelevant}};
}

IntVector multidegree(const Polynomial& f, const CoxPresentation& cox) {
    if (f.is_zero()) throw std::invalid_argument("multidegree of the zero polynomial");
    const Ring& ring = f.ring();
    std::vector<std::pair<std::size_t, IntVector>> cols;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        auto it = std::find(cox.variables.begin(), cox.variables.end(), ring.name(i));
        if (it != cox.variables.end()) cols.emplace_back(i, cox.weights.column(static_cast<std::size_t>(it - cox.variables.begin())));
    }
    std::optional<IntVector> deg;
    const Exponents* first = nullptr;
    for (const auto& [e, c] : f.terms()) {
        IntVector d(cox.weights.rows(), 0);
        for (const auto& [i, col] : cols)
            for (std::size_t r = 0; r < d.size(); ++r) d[r] += col[r] * e[i];
        if (!deg) {
            deg = d;
            first = &e;
        } else if (*deg != d) {
            throw NotHomogeneous("terms " + exponents_str(ring, *first) + " (degree " + vector_str(*deg) + ") and " +
                                 exponents_str(ring, e) + " (degree " + vector_str(d) + ") differ");
        }
    }
    return *deg;
}

CoxPresentation toric_blowup(const CoxPresentation& cox, const std::string& new_var, const IntVector& new_row,
                             const std::vector<std::vector<std::string>>& new_irrelevant) {
    const std::size_t n = cox.variables.size();
    if (new_row.size() != n + 1)
        throw InconsistentRow("blowup row needs " + std::to_string(n + 1) + " entries, got " +
                              std::to_string(new_row.size()));
    if (new_row[n] != -1) throw InconsistentRow("the new variable must have weight -1 in its row");
    bool positive = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (new_row[i] < 0) throw InconsistentRow("blowup row has a negative entry on an old variable");
        if (new_row[i] > 0) positive = true;
    }
    if (!positive) throw InconsistentRow("blowup row does not involve any old variable");
    if (std::find(cox.variables.begin(), cox.variables.end(), new_var) != cox.variables.end())
        throw InconsistentRow("'" + new_var + "' is already a Cox variable");

    CoxPresentation out;
    out.variables = cox.variables;
    out.variables.push_back(new_var);
    out.weights = cox.weights.with_column(IntVector(cox.weights.rows(), 0));
    out.weights.append_row(new_row);
    out.irrelevant = new_irrelevant;
    out.validate();
    return out;
}

std::map<std::string, Polynomial> blowup_substitution(const Ring& ring, const CoxPresentation& blown_up,
                                                      std::size_t row) {
    const IntVector r = blown_up.weights.row(row);
    const std::size_t last = blown_up.variables.size() - 1;
    if (r[last] != -1) throw InconsistentRow("row " + std::to_string(row) + " is not a blowup row");
    const std::string& ex = blown_up.variables[last];
    std::map<std::string, Polynomial> sub;
    for (std::size_t i = 0; i < last; ++i) {
        if (r[i] == 0) continue;
        sub.emplace(blown_up.variables[i], Polynomial::monomial(ring, {{ex, static_cast<int>(r[i].get_si())},
                                                                      {blown_up.variables[i], 1}}));
    }
    return sub;
}

Polynomial blowup_transform(const Polynomial& f, const std::map<std::string, Polynomial>& substitution,
                            const Polynomial& exceptional) {
    if (!exceptional.is_monomial()) throw std::invalid_argument("exceptional divisor must be a monomial");
    return exact_divide(substitute(f, f.ring(), substitution), exceptional);
}

}  // namespace tsurf
