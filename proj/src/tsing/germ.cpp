#include "tsurf/tsing/germ.hpp"

#include <numeric>

#include "tsurf/core/series.hpp"
#include "tsurf/core/skew.hpp"

namespace tsurf {

std::string GermClass::str() const {
    switch (kind) {
        case GermKind::Smooth: return "smooth";
        case GermKind::RDP:
        case GermKind::T: return singularity->str();
        case GermKind::CyclicQuotient: return quotient->str();
        case GermKind::Unrecognized: return "unrecognized (" + detail + ")";
    }
    return "?";
}

namespace {

GermClass unrecognized(std::string why) {
    GermClass g;
    g.kind = GermKind::Unrecognized;
    g.detail = std::move(why);
    return g;
}

GermClass from_singularity(const TSingularity& s, std::string detail) {
    GermClass g;
    g.kind = s.is_rdp() ? GermKind::RDP : GermKind::T;
    g.singularity = s;
    g.detail = std::move(detail);
    return g;
}

}  // namespace

GermClass classify_germ(const QuotientGerm& germ, int order) {
    if (germ.variables.size() != 3 || germ.weights.size() != 3)
        throw std::invalid_argument("a germ needs exactly three coordinates and weights");
    if (germ.n < 1) throw std::invalid_argument("group order must be positive");
    const Ring& ring = germ.equation.ring();
    const long n = germ.n;
    std::vector<std::size_t> var(3);
    std::vector<long> w(3);
    for (int i = 0; i < 3; ++i) {
        var[i] = ring.index(germ.variables[i]);
        w[i] = positive_mod(germ.weights[i], n);
    }
    SeriesContext ctx;
    ctx.order = order;
    ctx.weights.assign(ring.size(), 0);
    for (auto v : var) ctx.weights[v] = 1;
    for (std::size_t i = 0; i < ring.size(); ++i)
        if (ctx.weights[i] == 0 && germ.equation.involves(i) && !ring.invertible(i))
            throw std::invalid_argument("parameter '" + ring.name(i) + "' must be invertible or specialised");

    Polynomial f = truncate(germ.equation, ctx).poly();
    if (f.is_zero()) throw TruncationTooShallow("equation vanishes to the truncation order");
    if (!truncate(f, ctx).weight_zero_part().is_zero())
        throw std::invalid_argument("germ equation does not vanish at the origin");

    // f must be semi-invariant: one character chi for every term
    std::optional<long> chi;
    for (const auto& [e, c] : f.terms()) {
        long x = 0;
        for (int i = 0; i < 3; ++i) x += w[i] * e[var[i]];
        x = positive_mod(x, n);
        if (chi && *chi != x) return unrecognized("equation is not semi-invariant: " + exponents_str(ring, e));
        chi = x;
    }

    // linear and quadratic parts (coefficients are weight-zero polynomials)
    std::vector<Polynomial> lin(3, Polynomial(ring));
    std::vector<std::vector<Polynomial>> hess(3, std::vector<Polynomial>(3, Polynomial(ring)));
    for (const auto& [e, c] : f.terms()) {
        int deg = ctx.weight(e);
        if (deg > 2) continue;
        Exponents rest = e;
        std::vector<int> pw(3);
        for (int i = 0; i < 3; ++i) {
            pw[i] = e[var[i]];
            rest[var[i]] = 0;
        }
        if (deg == 1) {
            for (int i = 0; i < 3; ++i)
                if (pw[i] == 1) lin[i].add_term(rest, c);
        } else {
            for (int i = 0; i < 3; ++i) {
                if (pw[i] == 2) hess[i][i].add_term(rest, 2 * c);
                for (int j = i + 1; j < 3; ++j)
                    if (pw[i] == 1 && pw[j] == 1) {
                        hess[i][j].add_term(rest, c);
                        hess[j][i].add_term(rest, c);
                    }
            }
        }
    }

    for (int i = 0; i < 3; ++i) {
        if (lin[i].is_zero()) continue;
        if (!lin[i].is_unit()) return unrecognized("linear coefficient is not a unit");
        if (*chi != w[i]) return unrecognized("linear term has the wrong character");
        // smooth cover: quotient of the plane spanned by the other two
        std::vector<int> o;
        for (int j = 0; j < 3; ++j)
            if (j != i) o.push_back(j);
        if (n == 1) {
            GermClass g;
            g.kind = GermKind::Smooth;
            g.detail = "linear term in " + germ.variables[i];
            return g;
        }
        long w1 = w[o[0]], w2 = w[o[1]];
        if (std::gcd(w1, n) != 1 || std::gcd(w2, n) != 1)
            return unrecognized("action on the smooth cover is not small");
        CyclicQuotient cq = normalize_quotient(n, w1, w2);
        std::string detail = "smooth cover, eliminated " + germ.variables[i] + ", quotient 1/" + std::to_string(n) +
                             "(" + std::to_string(w1) + "," + std::to_string(w2) + ")";
        auto rec = recognize_tchain(hj_expand(cq.p, cq.q));
        if (rec.kind != ChainKind::NotT) return from_singularity(*rec.singularity, detail);
        GermClass g;
        g.kind = GermKind::CyclicQuotient;
        g.quotient = cq;
        g.detail = detail;
        return g;
    }

    // choose z so that the quadratic form is nondegenerate on the other pair
    int zi = -1;
    for (int z = 0; z < 3 && zi < 0; ++z) {
        int p = z == 0 ? 1 : 0, q = z == 2 ? 1 : 2;
        Polynomial det = hess[p][p] * hess[q][q] - hess[p][q] * hess[q][p];
        if (det.is_unit()) zi = z;
    }
    if (zi < 0) return unrecognized("quadratic part has no invertible rank-2 block");
    if (*chi != 0) return unrecognized("singular germ with a nontrivial character");
    int pi = zi == 0 ? 1 : 0, qi = zi == 2 ? 1 : 2;
    const std::string &p = germ.variables[pi], &q = germ.variables[qi], &z = germ.variables[zi];
    if (positive_mod(w[pi] + w[qi], n) != 0) return unrecognized("pair weights are not opposite");
    long u = w[pi];
    if (std::gcd(u, n) != 1) return unrecognized("pair weight not coprime to the group order");

    // splitting: solve f_p = f_q = 0 for (p, q) as series in z, restrict f
    std::vector<TruncatedSeries> sol =
        solve_implicit({f.derivative(var[pi]), f.derivative(var[qi])}, {p, q}, ctx);
    TruncatedSeries g = compose(f, {{var[pi], sol[0]}, {var[qi], sol[1]}}, ctx);
    if (g.is_zero()) throw TruncationTooShallow("residual in " + z + " vanishes to order " + std::to_string(order));
    long k = g.valuation();
    std::string detail = "pair (" + p + "," + q + "), residual " + z + "^" + std::to_string(k);
    if (k < 2) return unrecognized("residual order below 2");
    if (n == 1) return from_singularity(TSingularity{k, 1, 1}, detail);
    if (k % n) return unrecognized("cover exponent " + std::to_string(k) + " not divisible by " + std::to_string(n));
    long a = positive_mod(w[zi] * mod_inverse(u, n), n);
    if (std::gcd(a, n) != 1) return unrecognized("z-weight not coprime to the group order");
    return from_singularity(TSingularity{k / n, n, a}, detail);
}

}  // namespace tsurf
