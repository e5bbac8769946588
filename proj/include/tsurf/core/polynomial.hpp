#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tsurf/core/errors.hpp"

namespace tsurf {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Ordered variable names.  Variables flagged invertible may carry negative
// exponents, which is how coefficients that are rational functions in
// parameters (lambda^-1, tau^-3, ...) are represented.
class Ring {
public:
    Ring();
    explicit Ring(std::vector<std::string> names, const std::set<std::string>& invertible = {});

    std::size_t size() const { return d_->names.size(); }
    const std::string& name(std::size_t i) const { return d_->names[i]; }
    const std::vector<std::string>& names() const { return d_->names; }
    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index(std::string_view name) const;  // throws when undeclared
    bool has(std::string_view name) const { return find(name).has_value(); }
    bool invertible(std::size_t i) const { return d_->invertible[i]; }
    std::set<std::string> invertible_names() const;

    // same names, different invertibility
    Ring with_invertible(const std::set<std::string>& invertible) const;
    // names appended (duplicates ignored)
    Ring extended(const std::vector<std::string>& more, const std::set<std::string>& invertible = {}) const;

    bool operator==(const Ring& o) const;
    bool operator!=(const Ring& o) const { return !(*this == o); }

private:
    struct Data {
        std::vector<std::string> names;
        std::vector<bool> invertible;
        std::unordered_map<std::string, std::size_t> index;
    };
    std::shared_ptr<const Data> d_;
};

using Exponents = std::vector<int>;

// graded lexicographic, larger first: total degree, then the earlier variable
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

int total_degree(const Exponents& e);

class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GrlexGreater>;

    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial constant(const Ring& ring, const Rational& c);
    static Polynomial variable(const Ring& ring, std::string_view name);
    static Polynomial monomial(const Ring& ring, const Exponents& e, const Rational& c = 1);
    // monomial from name/exponent pairs, e.g. {{"c",2},{"t0",1}}
    static Polynomial monomial(const Ring& ring, const std::vector<std::pair<std::string, int>>& powers,
                               const Rational& c = 1);

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_unit() const;  // nonzero rational times a monomial in invertible variables

    Rational coefficient(const Exponents& e) const;
    Rational constant_term() const;
    const Exponents& leading_exponents() const;
    const Rational& leading_coefficient() const;

    int total_degree() const;  // max over terms; -1 for zero
    int degree_in(std::size_t var) const;
    int min_degree_in(std::size_t var) const;
    bool involves(std::size_t var) const;
    bool involves(std::string_view name) const;

    void add_term(const Exponents& e, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial pow(unsigned k) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // f = sum_k coeff[k] * var^k
    std::map<int, Polynomial> collect(std::size_t var) const;
    Polynomial derivative(std::size_t var) const;
    // re-express in another ring by variable name
    Polynomial in(const Ring& target) const;
    // sets the listed variables to zero
    Polynomial restrict_zero(const std::vector<std::string>& names) const;

    std::string str() const;

private:
    void check_ring(const Polynomial& o) const;
    Ring ring_;
    TermMap terms_;
};

std::string to_string(const Polynomial& p);
std::string exponents_str(const Ring& ring, const Exponents& e);

// inverse of a unit monomial (negative powers only in invertible variables)
Polynomial inverse_unit(const Polynomial& u);

// q with q*g == f, or NotDivisible
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

// every variable of f's ring is mapped to its image when listed, otherwise to
// the variable of the same name in the target ring
Polynomial substitute(const Polynomial& f, const Ring& target, const std::map<std::string, Polynomial>& images);
// constant images
Polynomial specialize(const Polynomial& f, const std::map<std::string, Rational>& values);
Rational evaluate(const Polynomial& f, const std::map<std::string, Rational>& values);

// monomial whose product with f has no negative exponents and no common
// monomial factor in the invertible variables
Polynomial clearing_monomial(const Polynomial& f);
// f times a unit so that no invertible variable divides it and the leading
// coefficient is 1
Polynomial unit_normal(const Polynomial& f);

// a == u * b for some unit u
bool equal_up_to_unit(const Polynomial& a, const Polynomial& b);

}  // namespace tsurf
