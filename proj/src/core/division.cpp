#include "tsurf/core/division.hpp"

#include <map>
#include <optional>

namespace tsurf {

namespace {

struct MaskedGrevlex {
    const std::vector<bool>* inv;
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = 0, db = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!(*inv)[i]) {
                da += a[i];
                db += b[i];
            }
        if (da != db) return da > db;
        for (std::size_t i = a.size(); i-- > 0;) {
            if ((*inv)[i]) continue;
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

using Groups = std::map<Exponents, Polynomial, MaskedGrevlex>;

Groups group(const Polynomial& f, const std::vector<bool>& inv) {
    Groups g(MaskedGrevlex{&inv});
    for (const auto& [e, c] : f.terms()) {
        Exponents key = e, coef(e.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (inv[i]) {
                coef[i] = e[i];
                key[i] = 0;
            }
        auto it = g.try_emplace(key, f.ring()).first;
        it->second.add_term(coef, c);
    }
    return g;
}

}  // namespace

DivisionResult divide_by(const Polynomial& f, const std::vector<Polynomial>& divisors) {
    const Ring& ring = f.ring();
    std::vector<bool> inv(ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i) inv[i] = ring.invertible(i);

    struct Lead {
        Exponents key;
        Polynomial unit_inverse;
    };
    std::vector<std::optional<Lead>> leads;
    for (const auto& d : divisors) {
        if (d.ring() != ring) throw RingMismatch("divisor in a different ring");
        if (d.is_zero()) {
            leads.emplace_back();
            continue;
        }
        Groups g = group(d, inv);
        const auto& [key, coef] = *g.begin();
        if (coef.is_unit())
            leads.push_back(Lead{key, inverse_unit(coef)});
        else
            leads.emplace_back();
    }

    DivisionResult out{std::vector<Polynomial>(divisors.size(), Polynomial(ring)), Polynomial(ring)};
    Polynomial rest = f;
    while (!rest.is_zero()) {
        Groups g = group(rest, inv);
        const auto& [key, coef] = *g.begin();
        bool reduced = false;
        for (std::size_t k = 0; k < divisors.size() && !reduced; ++k) {
            if (!leads[k]) continue;
            const Exponents& lk = leads[k]->key;
            bool div = true;
            for (std::size_t i = 0; i < key.size() && div; ++i)
                if (!inv[i] && lk[i] > key[i]) div = false;
            if (!div) continue;
            Exponents shift(key.size(), 0);
            for (std::size_t i = 0; i < key.size(); ++i)
                if (!inv[i]) shift[i] = key[i] - lk[i];
            Polynomial q = coef * leads[k]->unit_inverse * Polynomial::monomial(ring, shift);
            out.quotients[k] += q;
            rest -= q * divisors[k];
            reduced = true;
        }
        if (!reduced) {
            Polynomial lead = coef * Polynomial::monomial(ring, key);
            out.remainder += lead;
            rest -= lead;
        }
    }
    return out;
}

}  // namespace tsurf
