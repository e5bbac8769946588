#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tsurf/core/polynomial.hpp"

namespace tsurf {

// Per-variable weights plus a truncation order: a term survives when its
// weighted degree is < order.  Weight 0 marks a coefficient parameter.
struct SeriesContext {
    std::vector<int> weights;
    int order = 10;

    // weight 1 for ordinary variables, 0 for invertible ones
    static SeriesContext standard(const Ring& ring, int order);
    int weight(const Exponents& e) const;
};

class TruncatedSeries {
public:
    TruncatedSeries(Polynomial p, SeriesContext ctx);

    const Polynomial& poly() const { return p_; }
    const SeriesContext& context() const { return ctx_; }
    const Ring& ring() const { return p_.ring(); }
    int order() const { return ctx_.order; }
    bool is_zero() const { return p_.is_zero(); }
    // smallest weighted degree present; order() for zero
    int valuation() const;
    Polynomial weight_zero_part() const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries pow(unsigned k) const;
    // requires the weight-0 part to be a unit
    TruncatedSeries inverse() const;

    bool operator==(const TruncatedSeries& o) const { return p_ == o.p_; }

private:
    Polynomial p_;
    SeriesContext ctx_;
};

TruncatedSeries truncate(const Polynomial& p, const SeriesContext& ctx);
Polynomial truncated_product(const Polynomial& a, const Polynomial& b, const SeriesContext& ctx);

// f with the listed variables (by ring index) replaced by series, truncated
TruncatedSeries compose(const Polynomial& f, const std::map<std::size_t, TruncatedSeries>& images,
                        const SeriesContext& ctx);

// Solves eqs = 0 for the unknowns as series in the remaining variables.  The
// system must vanish at the origin and its linear part in the unknowns must
// have a unit determinant; the solution is found by chord iteration.
std::vector<TruncatedSeries> solve_implicit(const std::vector<Polynomial>& eqs,
                                            const std::vector<std::string>& unknowns, const SeriesContext& ctx);

// single-equation case: var = g(other variables) with f(var = g) = 0 mod order
TruncatedSeries series_eliminate(const TruncatedSeries& f, std::string_view var, int order);

}  // namespace tsurf
