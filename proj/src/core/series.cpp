#include "tsurf/core/series.hpp"

#include <algorithm>

#include "tsurf/core/skew.hpp"

namespace tsurf {

SeriesContext SeriesContext::standard(const Ring& ring, int order) {
    SeriesContext c;
    c.order = order;
    c.weights.resize(ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i) c.weights[i] = ring.invertible(i) ? 0 : 1;
    return c;
}

int SeriesContext::weight(const Exponents& e) const {
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += weights[i] * e[i];
    return w;
}

TruncatedSeries truncate(const Polynomial& p, const SeriesContext& ctx) { return TruncatedSeries(p, ctx); }

TruncatedSeries::TruncatedSeries(Polynomial p, SeriesContext ctx) : p_(p.ring()), ctx_(std::move(ctx)) {
    if (ctx_.weights.size() != p.ring().size()) throw std::invalid_argument("series weights do not match ring");
    if (ctx_.order <= 0) throw std::invalid_argument("truncation order must be positive");
    for (std::size_t i = 0; i < ctx_.weights.size(); ++i)
        if (ctx_.weights[i] < 0) throw std::invalid_argument("negative series weight");
    for (const auto& [e, c] : p.terms())
        if (ctx_.weight(e) < ctx_.order) p_.add_term(e, c);
}

int TruncatedSeries::valuation() const {
    int v = ctx_.order;
    for (const auto& [e, c] : p_.terms()) v = std::min(v, ctx_.weight(e));
    return v;
}

Polynomial TruncatedSeries::weight_zero_part() const {
    Polynomial z(p_.ring());
    for (const auto& [e, c] : p_.terms())
        if (ctx_.weight(e) == 0) z.add_term(e, c);
    return z;
}

TruncatedSeries TruncatedSeries::operator-() const { return TruncatedSeries(-p_, ctx_); }

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    p_ += o.p_;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    p_ -= o.p_;
    return *this;
}

Polynomial truncated_product(const Polynomial& a, const Polynomial& b, const SeriesContext& ctx) {
    struct T {
        int w;
        const Exponents* e;
        const Rational* c;
    };
    auto list = [&](const Polynomial& p) {
        std::vector<T> v;
        v.reserve(p.size());
        for (const auto& [e, c] : p.terms()) v.push_back({ctx.weight(e), &e, &c});
        std::sort(v.begin(), v.end(), [](const T& x, const T& y) { return x.w < y.w; });
        return v;
    };
    auto la = list(a), lb = list(b);
    Polynomial r(a.ring());
    Exponents e(a.ring().size());
    for (const auto& x : la) {
        if (lb.empty() || x.w + lb.front().w >= ctx.order) break;
        for (const auto& y : lb) {
            if (x.w + y.w >= ctx.order) break;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = (*x.e)[i] + (*y.e)[i];
            r.add_term(e, *x.c * *y.c);
        }
    }
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    SeriesContext ctx = a.ctx_;
    ctx.order = std::min(a.ctx_.order, b.ctx_.order);
    return TruncatedSeries(truncated_product(a.p_, b.p_, ctx), ctx);
}

TruncatedSeries TruncatedSeries::pow(unsigned k) const {
    TruncatedSeries result(Polynomial::constant(ring(), 1), ctx_);
    TruncatedSeries base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

TruncatedSeries TruncatedSeries::inverse() const {
    Polynomial c0 = weight_zero_part();
    if (!c0.is_unit()) throw NotInvertible("series is not a unit: weight-zero part " + c0.str());
    TruncatedSeries c0inv(inverse_unit(c0), ctx_);
    // this = c0 (1 + r), r of positive valuation
    TruncatedSeries r = *this * c0inv - TruncatedSeries(Polynomial::constant(ring(), 1), ctx_);
    TruncatedSeries sum(Polynomial::constant(ring(), 1), ctx_);
    TruncatedSeries term = sum;
    TruncatedSeries minus_r = -r;
    for (int k = 0; k < ctx_.order + 1; ++k) {
        term = term * minus_r;
        if (term.is_zero()) break;
        sum += term;
    }
    return sum * c0inv;
}

TruncatedSeries compose(const Polynomial& f, const std::map<std::size_t, TruncatedSeries>& images,
                        const SeriesContext& ctx) {
    const Ring& ring = f.ring();
    std::map<std::pair<std::size_t, int>, TruncatedSeries> cache;
    auto power = [&](std::size_t i, int k) -> const TruncatedSeries& {
        auto key = std::make_pair(i, k);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        const TruncatedSeries& base = images.at(i);
        TruncatedSeries p = k >= 0 ? base.pow(static_cast<unsigned>(k)) : base.inverse().pow(-k);
        return cache.emplace(key, std::move(p)).first->second;
    };
    Polynomial acc(ring);
    for (const auto& [e, c] : f.terms()) {
        Exponents rest = e;
        std::vector<std::pair<std::size_t, int>> subs;
        for (const auto& [i, s] : images)
            if (e[i] != 0) {
                subs.emplace_back(i, e[i]);
                rest[i] = 0;
            }
        if (ctx.weight(rest) >= ctx.order) continue;
        Polynomial t = Polynomial::monomial(ring, rest, c);
        for (const auto& [i, k] : subs) {
            t = truncated_product(t, power(i, k).poly(), ctx);
            if (t.is_zero()) break;
        }
        acc += t;
    }
    return TruncatedSeries(acc, ctx);
}

std::vector<TruncatedSeries> solve_implicit(const std::vector<Polynomial>& eqs, const std::vector<std::string>& unknowns,
                                            const SeriesContext& ctx) {
    if (eqs.size() != unknowns.size()) throw std::invalid_argument("need one equation per unknown");
    if (eqs.empty()) return {};
    const Ring& ring = eqs.front().ring();
    const std::size_t n = eqs.size();
    std::vector<std::size_t> idx(n);
    for (std::size_t k = 0; k < n; ++k) {
        idx[k] = ring.index(unknowns[k]);
        if (ctx.weights[idx[k]] <= 0) throw NotSolvable("unknown '" + unknowns[k] + "' has weight 0");
    }
    // linear part at the origin and centring check
    std::vector<std::vector<Polynomial>> J(n, std::vector<Polynomial>(n, Polynomial(ring)));
    for (std::size_t j = 0; j < n; ++j) {
        if (eqs[j].ring() != ring) throw RingMismatch("equations live in different rings");
        for (const auto& [e, c] : eqs[j].terms()) {
            int w = ctx.weight(e);
            if (w == 0) throw NotSolvable("equation " + std::to_string(j + 1) + " does not vanish at the origin");
            for (std::size_t k = 0; k < n; ++k) {
                if (e[idx[k]] != 1 || w != ctx.weights[idx[k]]) continue;
                Exponents rest = e;
                rest[idx[k]] = 0;
                J[j][k].add_term(rest, c);
            }
        }
    }
    Polynomial det = determinant(J);
    if (!det.is_unit()) throw NotSolvable("linear part in the unknowns is not invertible (det = " + det.str() + ")");
    Polynomial det_inv = inverse_unit(det);
    // inverse via cofactors
    std::vector<std::vector<Polynomial>> Jinv(n, std::vector<Polynomial>(n, Polynomial(ring)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<std::vector<Polynomial>> minor;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == r) continue;
                std::vector<Polynomial> row;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != c) row.push_back(J[i][k]);
                minor.push_back(std::move(row));
            }
            Polynomial cof = n == 1 ? Polynomial::constant(ring, 1) : determinant(minor);
            if ((r + c) % 2) cof = -cof;
            Jinv[c][r] = cof * det_inv;
        }

    std::vector<TruncatedSeries> X(n, TruncatedSeries(Polynomial(ring), ctx));
    const int max_iter = ctx.order + 2;
    for (int it = 0; it <= max_iter; ++it) {
        std::map<std::size_t, TruncatedSeries> images;
        for (std::size_t k = 0; k < n; ++k) images.emplace(idx[k], X[k]);
        std::vector<TruncatedSeries> R;
        bool done = true;
        for (std::size_t j = 0; j < n; ++j) {
            R.push_back(compose(eqs[j], images, ctx));
            if (!R.back().is_zero()) done = false;
        }
        if (done) return X;
        if (it == max_iter) break;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                if (!Jinv[k][j].is_zero() && !R[j].is_zero())
                    X[k] -= TruncatedSeries(truncated_product(Jinv[k][j], R[j].poly(), ctx), ctx);
    }
    throw NotSolvable("implicit solve did not converge");
}

TruncatedSeries series_eliminate(const TruncatedSeries& f, std::string_view var, int order) {
    SeriesContext ctx = f.context();
    ctx.order = order;
    return solve_implicit({f.poly()}, {std::string(var)}, ctx).front();
}

}  // namespace tsurf
