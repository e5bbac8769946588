#pragma once

#include <json.hpp>

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tsurf/core/polynomial.hpp"
#include "tsurf/lattice/integer_matrix.hpp"

namespace tsurf {

struct NotFactorable : Error {
    using Error::Error;
};

struct Generator {
    std::string name;
    IntVector exponents;  // over GeneratorTable::cox_variables
    Rational degree;
};

struct GeneratorTable {
    std::vector<std::string> cox_variables;
    std::vector<Generator> generators;

    const Generator& at(std::string_view name) const;
    std::vector<std::string> names() const;
    Polynomial cox_monomial(const Ring& cox_ring, std::string_view name) const;
    // generator name -> Cox monomial, for substitute()
    std::map<std::string, Polynomial> substitution(const Ring& cox_ring) const;

    static GeneratorTable from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

// The grading of S[alpha, beta, gamma] on monomials
// alpha^n1 beta^n2 gamma^n3 e^n4 t1^n5 s0^n6 zeta^n7, multiplied by 5 so that
// it is integral, and the image (3, 9, 17, 25) of the canonical class.
std::vector<std::string> root_variables();
IntegerMatrix canonical_grading();
IntVector canonical_ray();

// alpha..zeta, theta, tau and the coefficient symbols k0..k11, l0..l16
Ring root_ring();
// the strict transform after both blowups, with s1, t0, c replaced by
// alpha^5, beta^5, gamma^5
Polynomial root_surface_equation();

// n with grading * v = n * ray; throws when v is off the ray
Rational canonical_degree(const IntegerMatrix& grading, const IntVector& ray, const IntVector& v);

// Hilbert basis of {v >= 0 : grading * v in Q_{>=0} ray}.  Generators whose
// exponent vector appears in `known` take that name, the rest are h1, h2, ...
GeneratorTable canonical_generators(const IntegerMatrix& grading, const IntVector& ray,
                                    const std::vector<std::string>& cox_variables,
                                    const std::vector<std::pair<std::string, IntVector>>& known = {},
                                    const Rational& degree_bound = 20);

// Writes a monomial of the generator monoid as a product of generators.
// Depth-first over generators in preference order with memoised dead ends,
// so the answer is the first factorisation in that order.
class MonoidFactorizer {
public:
    MonoidFactorizer(const GeneratorTable& table, const std::vector<std::string>& preference = {});
    // exponent of each generator (table order), or NotFactorable
    std::vector<int> factor(const IntVector& v);

private:
    bool search(const IntVector& v, std::vector<int>& out);
    const GeneratorTable& table_;
    std::vector<std::size_t> order_;
    std::set<IntVector> dead_;
};

// excess * surface rewritten in the generators: every term's Cox monomial is
// factored over the generator monoid, the other variables of the surface ring
// (parameters, coefficient symbols) are carried along.  The result lives in
// `target` extended by those carried names.
Polynomial derive_relation(const Polynomial& surface, const Polynomial& excess, const GeneratorTable& table,
                           const Ring& target, const std::vector<std::string>& preference = {});

}  // namespace tsurf
