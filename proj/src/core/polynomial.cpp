#include "tsurf/core/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tsurf {

Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------- Ring

Ring::Ring() : d_(std::make_shared<Data>()) {}

Ring::Ring(std::vector<std::string> names, const std::set<std::string>& invertible) {
    auto d = std::make_shared<Data>();
    d->names = std::move(names);
    d->invertible.resize(d->names.size(), false);
    for (std::size_t i = 0; i < d->names.size(); ++i) {
        if (!d->index.emplace(d->names[i], i).second)
            throw std::invalid_argument("duplicate variable '" + d->names[i] + "'");
        d->invertible[i] = invertible.count(d->names[i]) > 0;
    }
    for (const auto& n : invertible)
        if (!d->index.count(n)) throw std::invalid_argument("invertible variable '" + n + "' not declared");
    d_ = std::move(d);
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
    auto it = d_->index.find(std::string(name));
    if (it == d_->index.end()) return std::nullopt;
    return it->second;
}

std::size_t Ring::index(std::string_view name) const {
    auto i = find(name);
    if (!i) throw std::invalid_argument("undeclared variable '" + std::string(name) + "'");
    return *i;
}

std::set<std::string> Ring::invertible_names() const {
    std::set<std::string> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (d_->invertible[i]) out.insert(d_->names[i]);
    return out;
}

Ring Ring::with_invertible(const std::set<std::string>& invertible) const { return Ring(d_->names, invertible); }

Ring Ring::extended(const std::vector<std::string>& more, const std::set<std::string>& invertible) const {
    auto names = d_->names;
    auto inv = invertible_names();
    for (const auto& n : more)
        if (!has(n)) names.push_back(n);
    inv.insert(invertible.begin(), invertible.end());
    return Ring(std::move(names), inv);
}

bool Ring::operator==(const Ring& o) const {
    return d_ == o.d_ || (d_->names == o.d_->names && d_->invertible == o.d_->invertible);
}

// ---------------------------------------------------------------- ordering

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

// ---------------------------------------------------------------- Polynomial

namespace {

void check_exponents(const Ring& ring, const Exponents& e) {
    if (e.size() != ring.size()) throw RingMismatch("exponent vector length does not match ring");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 && !ring.invertible(i))
            throw NotInvertible("negative power of non-invertible variable '" + ring.name(i) + "'");
}

}  // namespace

Polynomial Polynomial::constant(const Ring& ring, const Rational& c) {
    Polynomial p(ring);
    p.add_term(Exponents(ring.size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(const Ring& ring, std::string_view name) {
    Exponents e(ring.size(), 0);
    e[ring.index(name)] = 1;
    return monomial(ring, e);
}

Polynomial Polynomial::monomial(const Ring& ring, const Exponents& e, const Rational& c) {
    check_exponents(ring, e);
    Polynomial p(ring);
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::monomial(const Ring& ring, const std::vector<std::pair<std::string, int>>& powers,
                                const Rational& c) {
    Exponents e(ring.size(), 0);
    for (const auto& [n, k] : powers) e[ring.index(n)] += k;
    return monomial(ring, e, c);
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

bool Polynomial::is_unit() const {
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0 && !ring_.invertible(i)) return false;
    return true;
}

Rational Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Exponents(ring_.size(), 0)); }

const Exponents& Polynomial::leading_exponents() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->second;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, tsurf::total_degree(e));
    return d;
}

int Polynomial::degree_in(std::size_t var) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        d = first ? e[var] : std::max(d, e[var]);
        first = false;
    }
    return d;
}

int Polynomial::min_degree_in(std::size_t var) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        d = first ? e[var] : std::min(d, e[var]);
        first = false;
    }
    return d;
}

bool Polynomial::involves(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[var] != 0; });
}

bool Polynomial::involves(std::string_view name) const {
    auto i = ring_.find(name);
    return i && involves(*i);
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_ring(const Polynomial& o) const {
    if (ring_ != o.ring_) throw RingMismatch("polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, k] : terms_) k *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial r(a.ring_);
    Exponents e(a.ring_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }

std::map<int, Polynomial> Polynomial::collect(std::size_t var) const {
    std::map<int, Polynomial> out;
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        rest[var] = 0;
        auto it = out.try_emplace(e[var], ring_).first;
        it->second.add_term(rest, c);
    }
    return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial r(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * e[var]);
    }
    return r;
}

Polynomial Polynomial::in(const Ring& target) const {
    if (target == ring_) return *this;
    std::vector<std::optional<std::size_t>> map(ring_.size());
    for (std::size_t i = 0; i < ring_.size(); ++i) map[i] = target.find(ring_.name(i));
    Polynomial r(target);
    for (const auto& [e, c] : terms_) {
        Exponents t(target.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!map[i]) throw RingMismatch("variable '" + ring_.name(i) + "' missing from target ring");
            t[*map[i]] = e[i];
        }
        check_exponents(target, t);
        r.add_term(t, c);
    }
    return r;
}

Polynomial Polynomial::restrict_zero(const std::vector<std::string>& names) const {
    std::vector<std::size_t> idx;
    for (const auto& n : names)
        if (auto i = ring_.find(n)) idx.push_back(*i);
    Polynomial r(ring_);
    for (const auto& [e, c] : terms_)
        if (std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return e[i] == 0; })) r.add_term(e, c);
    return r;
}

std::string exponents_str(const Ring& ring, const Exponents& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring.name(i);
        if (e[i] != 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string m = exponents_str(ring_, e);
        if (m.empty())
            out += a.get_str();
        else if (a == 1)
            out += m;
        else
            out += a.get_str() + "*" + m;
    }
    return out;
}

std::string to_string(const Polynomial& p) { return p.str(); }

// ---------------------------------------------------------------- free functions

Polynomial inverse_unit(const Polynomial& u) {
    if (!u.is_unit()) throw NotInvertible("not a unit: " + u.str());
    const auto& [e, c] = *u.terms().begin();
    Exponents inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
    return Polynomial::monomial(u.ring(), inv, 1 / c);
}

Polynomial clearing_monomial(const Polynomial& f) {
    const Ring& ring = f.ring();
    Exponents m(ring.size(), 0);
    if (f.is_zero()) return Polynomial::monomial(ring, m);
    for (std::size_t i = 0; i < ring.size(); ++i) {
        int lo = f.min_degree_in(i);
        if (ring.invertible(i))
            m[i] = -lo;
        else if (lo < 0)
            throw NotInvertible("negative power of non-invertible variable");
    }
    return Polynomial::monomial(ring, m);
}

Polynomial unit_normal(const Polynomial& f) {
    if (f.is_zero()) return f;
    Polynomial g = f * clearing_monomial(f);
    return g * Rational(1 / g.leading_coefficient());
}

bool equal_up_to_unit(const Polynomial& a, const Polynomial& b) {
    if (a.ring() != b.ring()) return false;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.size() != b.size()) return false;
    return unit_normal(a) == unit_normal(b);
}

namespace {

bool divides(const Exponents& d, const Exponents& e) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > e[i]) return false;
    return true;
}

}  // namespace

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    const Ring& ring = f.ring();
    if (ring != g.ring()) throw RingMismatch("exact_divide across rings");
    if (g.is_monomial()) {
        const auto& [ge, gc] = *g.terms().begin();
        Polynomial q(ring);
        Exponents d(ring.size());
        for (const auto& [e, c] : f.terms()) {
            for (std::size_t i = 0; i < d.size(); ++i) {
                d[i] = e[i] - ge[i];
                if (d[i] < 0 && !ring.invertible(i))
                    throw NotDivisible(g.str() + " does not divide " + f.str());
            }
            q.add_term(d, c / gc);
        }
        return q;
    }
    if (f.is_zero()) return f;
    Polynomial mf = clearing_monomial(f), mg = clearing_monomial(g);
    Polynomial r = f * mf, G = g * mg;
    const Exponents& lg = G.leading_exponents();
    const Rational& lc = G.leading_coefficient();
    Polynomial q(ring);
    while (!r.is_zero()) {
        const Exponents& lr = r.leading_exponents();
        if (!divides(lg, lr)) throw NotDivisible(g.str() + " does not divide " + f.str());
        Exponents d(lr.size());
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = lr[i] - lg[i];
        Polynomial t = Polynomial::monomial(ring, d, r.leading_coefficient() / lc);
        q += t;
        r -= t * G;
    }
    return q * mg * inverse_unit(mf);
}

Polynomial substitute(const Polynomial& f, const Ring& target, const std::map<std::string, Polynomial>& images) {
    const Ring& src = f.ring();
    std::vector<std::optional<Polynomial>> image(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (!f.involves(i)) continue;
        auto it = images.find(src.name(i));
        if (it != images.end()) {
            if (it->second.ring() != target)
                image[i] = it->second.in(target);
            else
                image[i] = it->second;
        } else if (target.has(src.name(i))) {
            image[i] = Polynomial::variable(target, src.name(i));
        } else {
            throw std::invalid_argument("variable '" + src.name(i) + "' has no image");
        }
    }
    std::map<std::pair<std::size_t, int>, Polynomial> cache;
    auto power = [&](std::size_t i, int k) -> const Polynomial& {
        auto key = std::make_pair(i, k);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        Polynomial p = k >= 0 ? image[i]->pow(static_cast<unsigned>(k)) : inverse_unit(*image[i]).pow(-k);
        return cache.emplace(key, std::move(p)).first->second;
    };
    Polynomial result(target);
    for (const auto& [e, c] : f.terms()) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t = t * power(i, e[i]);
        result += t;
    }
    return result;
}

Polynomial specialize(const Polynomial& f, const std::map<std::string, Rational>& values) {
    const Ring& ring = f.ring();
    std::vector<std::optional<Rational>> v(ring.size());
    for (const auto& [n, q] : values)
        if (auto i = ring.find(n)) v[*i] = q;
    Polynomial r(ring);
    for (const auto& [e, c] : f.terms()) {
        Exponents rest = e;
        Rational k = c;
        bool zero = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!v[i] || e[i] == 0) continue;
            if (*v[i] == 0) {
                if (e[i] < 0) throw NotInvertible("specializing invertible '" + ring.name(i) + "' to 0");
                zero = true;
                break;
            }
            Rational p = 1;
            for (int j = 0; j < std::abs(e[i]); ++j) p *= *v[i];
            k *= e[i] > 0 ? p : Rational(1 / p);
            rest[i] = 0;
        }
        if (!zero) r.add_term(rest, k);
    }
    return r;
}

Rational evaluate(const Polynomial& f, const std::map<std::string, Rational>& values) {
    Polynomial s = specialize(f, values);
    if (!s.is_constant()) throw std::invalid_argument("evaluate: not every variable has a value");
    return s.constant_term();
}

}  // namespace tsurf
