#include "tsurf/rings/hilbert.hpp"

#include <numeric>

namespace tsurf {

Ring HilbertSeries::ring() {
    static const Ring r(std::vector<std::string>{"t"});
    return r;
}

std::vector<Rational> HilbertSeries::coefficients(int count) const {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(count, 0)), 0);
    for (const auto& [e, a] : numerator.terms())
        if (e[0] < count) c[static_cast<std::size_t>(e[0])] += a;
    // dividing by (1 - t^d) is a running sum with stride d
    for (int d : denominator)
        for (int k = d; k < count; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - d)];
    return c;
}

Rational HilbertSeries::coefficient(int k) const { return coefficients(k + 1).at(static_cast<std::size_t>(k)); }

namespace {

Polynomial one_minus(int d) {
    const Ring r = HilbertSeries::ring();
    return Polynomial::constant(r, 1) - Polynomial::monomial(r, Exponents{d});
}

}  // namespace

bool HilbertSeries::equals(const HilbertSeries& o) const {
    Polynomial a = numerator, b = o.numerator;
    for (int d : o.denominator) a = a * one_minus(d);
    for (int d : denominator) b = b * one_minus(d);
    return a == b;
}

std::string HilbertSeries::str() const {
    std::map<int, int> powers;
    for (int d : denominator) ++powers[d];
    std::string den;
    for (const auto& [d, k] : powers) {
        den += "(1 - t" + (d == 1 ? std::string() : "^" + std::to_string(d)) + ")";
        if (k > 1) den += "^" + std::to_string(k);
    }
    return "(" + numerator.str() + ")/(" + (den.empty() ? "1" : den) + ")";
}

void ResolutionData::validate() const {
    if (weights.empty()) throw std::invalid_argument("no ambient weights");
    for (int w : weights)
        if (w <= 0) throw std::invalid_argument("ambient weights must be positive");
    long alternating = 1 - static_cast<long>(l1.size()) + static_cast<long>(l2.size()) -
                       static_cast<long>(l2.size()) + static_cast<long>(l1.size()) - 1;
    if (alternating != 0) throw std::invalid_argument("alternating rank sum is not zero");
    for (int d : l1)
        if (d <= 0 || d >= socle) throw std::invalid_argument("first syzygy degree outside (0, socle)");
    for (int d : l2)
        if (d <= 0 || d >= socle) throw std::invalid_argument("second syzygy degree outside (0, socle)");
}

ResolutionData ResolutionData::from_json(const nlohmann::json& j) {
    ResolutionData r;
    r.weights = j.at("weights").get<std::vector<int>>();
    r.socle = j.at("socle").get<int>();
    r.l1 = j.at("L1").get<std::vector<int>>();
    r.l2 = j.at("L2").get<std::vector<int>>();
    r.validate();
    return r;
}

HilbertSeries hilbert_series_from_resolution(const ResolutionData& res) {
    res.validate();
    const Ring r = HilbertSeries::ring();
    auto t = [&](int d) { return Polynomial::monomial(r, Exponents{d}); };
    Polynomial n = Polynomial::constant(r, 1) - t(res.socle);
    for (int d : res.l1) n += t(res.socle - d) - t(d);
    for (int d : res.l2) n += t(d) - t(res.socle - d);
    return {n, res.weights};
}

HypersurfaceInvariants wps_hypersurface_invariants(int degree, const std::vector<int>& weights) {
    if (weights.empty()) throw std::invalid_argument("no weights");
    Integer prod = 1;
    int sum = 0;
    for (int w : weights) {
        if (w <= 0) throw std::invalid_argument("weights must be positive");
        prod *= w;
        sum += w;
    }
    const int k = degree - sum;
    Rational k2(Integer(degree) * k * k, prod);
    k2.canonicalize();
    return {k, k2, {one_minus(degree), weights}};
}

FixedPart fixed_part(const RelationSystem& rels, const std::string& relation) {
    FixedPart out;
    out.equation = rels[relation].restrict_zero({"x0", "x1", "y", "u0", "t"});
    const Ring& r = rels.ring;
    Polynomial u1 = Polynomial::variable(r, "u1");
    auto divides = [&](const Polynomial& f, const Polynomial& g) {
        try {
            exact_divide(f, g);
            return true;
        } catch (const NotDivisible&) {
            return false;
        }
    };
    if (out.equation.is_zero())
        out.shape = "whole plane";
    else if (out.equation.is_monomial() && out.equation.leading_exponents() == u1.pow(3).leading_exponents())
        out.shape = "triple line";
    else if (divides(out.equation, u1))
        out.shape = "two components";
    else if (!out.equation.involves("z"))
        out.shape = "cone with vertex P_z";
    else
        out.shape = "irreducible";
    return out;
}

}  // namespace tsurf
