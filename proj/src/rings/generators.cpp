#include "tsurf/rings/generators.hpp"

#include <algorithm>

#include "tsurf/lattice/cone.hpp"
#include "tsurf/toric/elliptic.hpp"

namespace tsurf {

const Generator& GeneratorTable::at(std::string_view name) const {
    for (const auto& g : generators)
        if (g.name == name) return g;
    throw std::invalid_argument("no generator named '" + std::string(name) + "'");
}

std::vector<std::string> GeneratorTable::names() const {
    std::vector<std::string> out;
    for (const auto& g : generators) out.push_back(g.name);
    return out;
}

Polynomial GeneratorTable::cox_monomial(const Ring& cox_ring, std::string_view name) const {
    const Generator& g = at(name);
    Exponents e(cox_ring.size(), 0);
    for (std::size_t i = 0; i < cox_variables.size(); ++i) e[cox_ring.index(cox_variables[i])] = g.exponents[i].get_si();
    return Polynomial::monomial(cox_ring, e);
}

std::map<std::string, Polynomial> GeneratorTable::substitution(const Ring& cox_ring) const {
    std::map<std::string, Polynomial> out;
    for (const auto& g : generators) out.emplace(g.name, cox_monomial(cox_ring, g.name));
    return out;
}

GeneratorTable GeneratorTable::from_json(const nlohmann::json& j) {
    GeneratorTable t;
    t.cox_variables = j.at("cox_variables").get<std::vector<std::string>>();
    for (const auto& g : j.at("generators")) {
        Generator gen;
        gen.name = g.at("name").get<std::string>();
        for (const auto& x : g.at("exponents")) gen.exponents.emplace_back(x.get<long>());
        if (gen.exponents.size() != t.cox_variables.size())
            throw std::invalid_argument("generator '" + gen.name + "' has the wrong number of exponents");
        gen.degree = Rational(g.at("degree").get<std::string>());
        gen.degree.canonicalize();
        t.generators.push_back(std::move(gen));
    }
    return t;
}

nlohmann::json GeneratorTable::to_json() const {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : generators) {
        std::vector<long> e;
        for (const auto& x : g.exponents) e.push_back(x.get_si());
        gens.push_back({{"name", g.name}, {"exponents", e}, {"degree", g.degree.get_str()}});
    }
    return {{"cox_variables", cox_variables}, {"generators", gens}};
}

std::vector<std::string> root_variables() { return {"alpha", "beta", "gamma", "e", "t1", "s0", "zeta"}; }

IntegerMatrix canonical_grading() {
    return {{1, 0, 0, 0, 0, 10, 15}, {0, 1, 0, 0, 5, 30, 45}, {0, 0, 1, 0, 10, 55, 85}, {0, 0, 0, 5, 15, 85, 125}};
}

IntVector canonical_ray() { return make_vector({3, 9, 17, 25}); }

Ring root_ring() {
    static const Ring ring = [] {
        std::vector<std::string> names = root_variables();
        names.push_back("theta");
        names.push_back("tau");
        for (int i = 0; i <= 11; ++i) names.push_back("k" + std::to_string(i));
        for (int i = 0; i <= 16; ++i) names.push_back("l" + std::to_string(i));
        return Ring(names);
    }();
    return ring;
}

Polynomial root_surface_equation() {
    const Ring r = root_ring();
    return substitute(double_blowup_form(elliptic_ring()), r,
                      {{"s1", Polynomial::monomial(r, {{"alpha", 5}})},
                       {"t0", Polynomial::monomial(r, {{"beta", 5}})},
                       {"c", Polynomial::monomial(r, {{"gamma", 5}})}});
}

Rational canonical_degree(const IntegerMatrix& grading, const IntVector& ray, const IntVector& v) {
    IntVector d = grading * v;
    std::optional<Rational> n;
    for (std::size_t i = 0; i < ray.size(); ++i) {
        if (ray[i] == 0) {
            if (d[i] != 0) throw std::invalid_argument(vector_str(v) + " is not on the ray");
            continue;
        }
        Rational q(d[i], ray[i]);
        q.canonicalize();
        if (n && *n != q) throw std::invalid_argument(vector_str(v) + " is not on the ray");
        n = q;
    }
    if (!n) throw std::invalid_argument("zero ray");
    return *n;
}

GeneratorTable canonical_generators(const IntegerMatrix& grading, const IntVector& ray,
                                    const std::vector<std::string>& cox_variables,
                                    const std::vector<std::pair<std::string, IntVector>>& known,
                                    const Rational& degree_bound) {
    if (cox_variables.size() != grading.cols())
        throw std::invalid_argument("one Cox variable name per grading column is needed");
    LatticeCone cone = LatticeCone::preimage_of_ray(grading, ray);

    // degree functional: n = (row i) / ray_i for the last nonzero ray entry
    std::size_t pivot = ray.size();
    for (std::size_t i = ray.size(); i-- > 0;)
        if (ray[i] != 0) {
            pivot = i;
            break;
        }
    if (pivot == ray.size()) throw std::invalid_argument("zero ray");
    HilbertBasisOptions opts;
    std::vector<mpq_class> functional;
    for (std::size_t k = 0; k < grading.cols(); ++k) {
        mpq_class q(grading(pivot, k), ray[pivot]);
        q.canonicalize();
        functional.push_back(q);
    }
    opts.grading = functional;
    opts.degree_bound = degree_bound;

    GeneratorTable table;
    table.cox_variables = cox_variables;
    int unnamed = 0;
    for (const auto& v : hilbert_basis(cone, opts)) {
        Generator g;
        g.exponents = v;
        g.degree = canonical_degree(grading, ray, v);
        auto it = std::find_if(known.begin(), known.end(), [&](const auto& k) { return k.second == v; });
        g.name = it != known.end() ? it->first : "h" + std::to_string(++unnamed);
        table.generators.push_back(std::move(g));
    }
    return table;
}

MonoidFactorizer::MonoidFactorizer(const GeneratorTable& table, const std::vector<std::string>& preference)
    : table_(table) {
    for (const auto& name : preference) {
        const Generator& g = table.at(name);
        order_.push_back(static_cast<std::size_t>(&g - table.generators.data()));
    }
    for (std::size_t i = 0; i < table.generators.size(); ++i)
        if (std::find(order_.begin(), order_.end(), i) == order_.end()) order_.push_back(i);
}

bool MonoidFactorizer::search(const IntVector& v, std::vector<int>& out) {
    if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; })) return true;
    if (dead_.count(v)) return false;
    for (std::size_t gi : order_) {
        const IntVector& g = table_.generators[gi].exponents;
        bool fits = true;
        for (std::size_t k = 0; k < v.size() && fits; ++k)
            if (v[k] < g[k]) fits = false;
        if (!fits) continue;
        IntVector rest(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) rest[k] = v[k] - g[k];
        ++out[gi];
        if (search(rest, out)) return true;
        --out[gi];
    }
    dead_.insert(v);
    return false;
}

std::vector<int> MonoidFactorizer::factor(const IntVector& v) {
    if (v.size() != table_.cox_variables.size()) throw std::invalid_argument("exponent vector has the wrong length");
    std::vector<int> out(table_.generators.size(), 0);
    if (!search(v, out)) throw NotFactorable(vector_str(v) + " is not a product of generators");
    return out;
}

Polynomial derive_relation(const Polynomial& surface, const Polynomial& excess, const GeneratorTable& table,
                           const Ring& target, const std::vector<std::string>& preference) {
    if (!excess.is_monomial()) throw std::invalid_argument("excess must be a monomial");
    const Ring& src = surface.ring();
    std::vector<std::size_t> cox_index;
    for (const auto& v : table.cox_variables) cox_index.push_back(src.index(v));
    std::vector<std::string> carried;
    for (std::size_t i = 0; i < src.size(); ++i)
        if (std::find(cox_index.begin(), cox_index.end(), i) == cox_index.end() && surface.involves(i))
            carried.push_back(src.name(i));
    Ring out_ring = target.extended(carried);
    std::vector<std::size_t> gen_index;
    for (const auto& g : table.generators) gen_index.push_back(out_ring.index(g.name));

    MonoidFactorizer factorizer(table, preference);
    Polynomial product = surface * excess.in(src);
    Polynomial out(out_ring);
    for (const auto& [e, c] : product.terms()) {
        IntVector v;
        for (auto i : cox_index) v.emplace_back(e[i]);
        std::vector<int> f;
        try {
            f = factorizer.factor(v);
        } catch (const NotFactorable&) {
            throw NotFactorable("term " + exponents_str(src, e) + " of the product is not a product of generators");
        }
        Exponents oe(out_ring.size(), 0);
        for (std::size_t k = 0; k < f.size(); ++k) oe[gen_index[k]] += f[k];
        for (const auto& name : carried) oe[out_ring.index(name)] += e[src.index(name)];
        out.add_term(oe, c);
    }
    return out;
}

}  // namespace tsurf
