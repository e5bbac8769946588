#include "tsurf/tsing/tchain.hpp"

#include <algorithm>
#include <numeric>

namespace tsurf {

long positive_mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

long mod_inverse(long a, long n) {
    if (n == 1) return 0;
    long t = 0, nt = 1, r = n, nr = positive_mod(a, n);
    while (nr != 0) {
        long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw InvalidInput(std::to_string(a) + " is not invertible mod " + std::to_string(n));
    return positive_mod(t, n);
}

std::string TSingularity::str() const {
    if (is_rdp()) return "A_" + std::to_string(d - 1);
    return "1/" + std::to_string(order()) + "(1," + std::to_string(weight()) + ")";
}

bool TSingularity::equivalent(const TSingularity& o) const {
    if (d != o.d || n != o.n) return false;
    if (n == 1) return true;
    return positive_mod(a - o.a, n) == 0 || positive_mod(a + o.a, n) == 0;
}

std::string CyclicQuotient::str() const { return "1/" + std::to_string(p) + "(1," + std::to_string(q) + ")"; }

CyclicQuotient normalize_quotient(long n, long w1, long w2) {
    long inv = mod_inverse(w1, n);
    return {n, positive_mod(w2 * inv, n)};
}

std::vector<long> hj_expand(long p, long q) {
    if (!(p > q && q >= 1) || std::gcd(p, q) != 1)
        throw InvalidInput("hj_expand needs p > q >= 1 coprime, got " + std::to_string(p) + "/" + std::to_string(q));
    std::vector<long> out;
    // p/q = b - 1/(p'/q'), b = ceil(p/q)
    while (q != 0) {
        long b = (p + q - 1) / q;
        out.push_back(b);
        long r = b * q - p;
        p = q;
        q = r;
    }
    return out;
}

Rational hj_value(const std::vector<long>& chain) {
    if (chain.empty()) throw InvalidInput("empty chain");
    Rational v = chain.back();
    for (std::size_t i = chain.size() - 1; i-- > 0;) v = Rational(chain[i]) - 1 / v;
    return v;
}

ChainRecognition recognize_tchain(const std::vector<long>& chain) {
    for (long b : chain)
        if (b < 2) throw InvalidInput("chain entries must be >= 2");
    if (chain.empty()) throw InvalidInput("empty chain");
    ChainRecognition out;
    if (std::all_of(chain.begin(), chain.end(), [](long b) { return b == 2; })) {
        out.kind = ChainKind::RDP;
        out.singularity = TSingularity{static_cast<long>(chain.size()) + 1, 1, 1};
        return out;
    }
    Rational v = hj_value(chain);
    if (!v.get_num().fits_slong_p()) return out;
    long p = v.get_num().get_si(), q = v.get_den().get_si();
    for (long n = 2; n * n <= p; ++n) {
        if (p % (n * n)) continue;
        long d = p / (n * n);
        if ((q + 1) % (d * n)) continue;
        long a = (q + 1) / (d * n);
        if (a < 1 || a >= n || std::gcd(a, n) != 1) continue;
        out.kind = ChainKind::TProper;
        out.singularity = TSingularity{d, n, a};
        return out;
    }
    return out;
}

std::vector<long> tchain_from_singularity(const TSingularity& s) {
    if (s.d < 1 || s.n < 1) throw InvalidInput("d and n must be positive");
    if (s.n == 1) return std::vector<long>(static_cast<std::size_t>(s.d - 1), 2);
    if (s.a < 1 || s.a >= s.n || std::gcd(s.a, s.n) != 1) throw InvalidInput("need 1 <= a < n with gcd(a,n) = 1");
    return hj_expand(s.order(), s.weight());
}

Codiscrepancy codiscrepancy(const std::vector<long>& chain) {
    const std::size_t r = chain.size();
    for (long b : chain)
        if (b < 2) throw InvalidInput("chain entries must be >= 2");
    // tridiagonal: a_{i-1} - b_i a_i + a_{i+1} = 2 - b_i
    std::vector<Rational> diag(r), rhs(r);
    for (std::size_t i = 0; i < r; ++i) {
        diag[i] = -chain[i];
        rhs[i] = 2 - chain[i];
    }
    for (std::size_t i = 1; i < r; ++i) {
        Rational m = 1 / diag[i - 1];  // sub-diagonal entry is 1
        diag[i] -= m;                  // super-diagonal entry is 1
        rhs[i] -= m * rhs[i - 1];
    }
    std::vector<Rational> a(r);
    for (std::size_t i = r; i-- > 0;) {
        Rational s = rhs[i];
        if (i + 1 < r) s -= a[i + 1];
        a[i] = s / diag[i];
    }
    return {chain, a};
}

Rational delta_squared(const Codiscrepancy& cd) {
    Rational s = 0;
    for (std::size_t i = 0; i < cd.chain.size(); ++i) s += cd.coefficients[i] * (2 - cd.chain[i]);
    return s;
}

Rational ktilde_squared(const std::vector<std::vector<long>>& chains) {
    Rational k2 = 1;
    long cross = 1;
    for (const auto& c : chains) {
        auto rec = recognize_tchain(c);
        if (rec.kind != ChainKind::TProper) throw InvalidInput("not a proper T-chain");
        k2 += delta_squared(codiscrepancy(c));
        cross += rec.singularity->d - static_cast<long>(c.size()) - 1;
    }
    if (k2 != cross) throw std::logic_error("K^2 cross-check failed");
    return k2;
}

}  // namespace tsurf
