#include "tsurf/core/random.hpp"

namespace tsurf {

namespace {

void enumerate(const Ring& ring, const std::vector<std::pair<std::size_t, int>>& vars, std::size_t k, int left,
               Exponents& cur, std::vector<Exponents>& out) {
    if (k == vars.size()) {
        if (left == 0) out.push_back(cur);
        return;
    }
    auto [idx, w] = vars[k];
    if (w <= 0) throw std::invalid_argument("weights must be positive");
    for (int e = left / w; e >= 0; --e) {
        cur[idx] = e;
        enumerate(ring, vars, k + 1, left - e * w, cur, out);
    }
    cur[idx] = 0;
}

}  // namespace

std::vector<Exponents> weighted_monomials(const Ring& ring, const std::vector<std::pair<std::string, int>>& weights,
                                          int degree) {
    std::vector<std::pair<std::size_t, int>> vars;
    for (const auto& [n, w] : weights) vars.emplace_back(ring.index(n), w);
    std::vector<Exponents> out;
    if (degree < 0) return out;
    Exponents cur(ring.size(), 0);
    enumerate(ring, vars, 0, degree, cur, out);
    return out;
}

Rational FormSampler::nonzero(int bound) {
    std::uint64_t r = rng_();
    long mag = static_cast<long>(r % static_cast<std::uint64_t>(bound)) + 1;
    return Rational((r >> 32) & 1u ? -mag : mag);
}

Polynomial FormSampler::form(const Ring& ring, const std::vector<std::pair<std::string, int>>& weights, int degree,
                             int bound) {
    Polynomial p(ring);
    for (const auto& e : weighted_monomials(ring, weights, degree)) p.add_term(e, nonzero(bound));
    return p;
}

}  // namespace tsurf
