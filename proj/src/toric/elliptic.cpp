#include "tsurf/toric/elliptic.hpp"

#include <map>

namespace tsurf {

Ring elliptic_ring() {
    static const Ring ring = [] {
        std::vector<std::string> names{"t0", "t1", "s1", "s0", "zeta", "c", "e", "theta", "tau"};
        for (int i = 0; i <= 11; ++i) names.push_back("k" + std::to_string(i));
        for (int i = 0; i <= 16; ++i) names.push_back("l" + std::to_string(i));
        return Ring(names);
    }();
    return ring;
}

Polynomial general_binary_form(const Ring& ring, const std::string& prefix, int degree, const Polynomial& a,
                               const Polynomial& b) {
    Polynomial out(ring);
    for (int i = 0; i <= degree; ++i)
        out += Polynomial::variable(ring, prefix + std::to_string(i)) * a.pow(i) * b.pow(degree - i);
    return out;
}

namespace {

Polynomial var(const Ring& r, const char* n) { return Polynomial::variable(r, n); }

void check_form(const Polynomial& p, int degree, const char* what) {
    const Ring& r = p.ring();
    std::size_t t0 = r.index("t0"), t1 = r.index("t1");
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i == t0 || i == t1) continue;
            if (e[i] != 0) throw std::invalid_argument(std::string(what) + " must be a form in t0, t1 only");
        }
    for (const auto& [e, c] : p.terms())
        if (e[t0] + e[t1] != degree)
            throw std::invalid_argument(std::string(what) + " must be homogeneous of degree " + std::to_string(degree));
}

Rational coefficient_of(const Polynomial& p, std::initializer_list<std::pair<const char*, int>> powers) {
    Exponents e(p.ring().size(), 0);
    for (auto [n, k] : powers) e[p.ring().index(n)] = k;
    return p.coefficient(e);
}

}  // namespace

Polynomial weierstrass_equation(const WeierstrassModel& m) {
    const Ring& r = m.k.ring();
    auto s0 = var(r, "s0"), s1 = var(r, "s1"), z = var(r, "zeta");
    return z * z - (s0.pow(3) + m.j * s0 * s0 * s1 * s1 + m.k * s0 * s1.pow(4) + m.l * s1.pow(6));
}

Polynomial discriminant(const WeierstrassModel& m) {
    const auto &j = m.j, &k = m.k, &l = m.l;
    return Rational(4) * k.pow(3) + Rational(27) * l * l - j * j * k * k + Rational(4) * j.pow(3) * l -
           Rational(18) * j * k * l;
}

Rational rational_sqrt(const Rational& q) {
    if (q < 0) throw NoSquareRoot(q.get_str() + " is negative");
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        throw NoSquareRoot(q.get_str() + " is not a rational square");
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

NormalizedModel weierstrass_normalize(const WeierstrassModel& m) {
    const Ring& r = m.k.ring();
    Polynomial j = m.j.is_zero() ? Polynomial(r) : m.j;
    check_form(j, 6, "j");
    check_form(m.k, 12, "k");
    check_form(m.l, 18, "l");
    auto t0 = var(r, "t0"), t1 = var(r, "t1"), s0 = var(r, "s0"), s1 = var(r, "s1"), z = var(r, "zeta");
    const Polynomial original = weierstrass_equation({j, m.k, m.l});

    NormalizedModel out;
    // s0 -> s0 - j/3 s1^2 kills the s0^2 term
    Polynomial h = Rational(-1, 3) * j;
    out.depressed.j = Polynomial(r);
    out.depressed.k = m.k - Rational(1, 3) * j * j;
    out.depressed.l = m.l - Rational(1, 3) * j * m.k + Rational(2, 27) * j.pow(3);
    {
        Polynomial lhs = substitute(original, r, {{"s0", s0 + h * s1 * s1}});
        if (lhs != weierstrass_equation(out.depressed)) throw std::logic_error("Tschirnhausen step does not verify");
        out.steps.push_back("s0 -> s0 + (" + h.str() + ")*s1^2");
    }

    out.alpha = coefficient_of(out.depressed.k, {{"t1", 12}});
    out.beta = coefficient_of(out.depressed.l, {{"t1", 18}});
    if (4 * out.alpha * out.alpha * out.alpha + 27 * out.beta * out.beta != 0)
        throw std::invalid_argument("the fibre over t0 = 0 is smooth (4 alpha^3 + 27 beta^2 != 0)");
    out.epsilon = out.alpha == 0 ? Rational(0) : Rational(-3 * out.beta / (2 * out.alpha));

    // s0 -> s0 + eps t1^6 s1^2 moves the singular point to s0 = 0
    Polynomial shift = Polynomial::constant(r, out.epsilon) * t1.pow(6);
    Polynomial k2 = out.depressed.k + Rational(3) * shift * shift;
    Polynomial l2 = out.depressed.l + shift * out.depressed.k + shift.pow(3);
    out.steps.push_back("s0 -> s0 + (" + shift.str() + ")*s1^2");
    out.k11 = exact_divide(k2, t0);
    Polynomial l1 = exact_divide(l2, t0);
    out.tau = coefficient_of(l1, {{"t1", 17}});
    out.l16 = exact_divide(l1 - Polynomial::constant(r, out.tau) * t1.pow(17), t0);

    // zeta -> zeta - theta/2 t1^3 s0 s1 absorbs 3 eps t1^6 s0^2 s1^2 iff theta^2 = 12 eps
    out.theta_squared = 12 * out.epsilon;
    Polynomial theta;
    try {
        out.theta = rational_sqrt(out.theta_squared);
        theta = Polynomial::constant(r, *out.theta);
    } catch (const NoSquareRoot&) {
        theta = var(r, "theta");
        out.steps.push_back("theta formal with theta^2 = " + out.theta_squared.get_str());
    }
    Polynomial x = t1.pow(3) * s0 * s1;
    out.steps.push_back("zeta -> zeta - 1/2*theta*t1^3*s0*s1");
    out.equation = (z - theta * x) * z - s0.pow(3) - t0 * out.k11 * s0 * s1.pow(4) -
                   t0 * (t0 * out.l16 + Polynomial::constant(r, out.tau) * t1.pow(17)) * s1.pow(6);

    // the whole chain in one substitution, compared with theta^2 reduced
    Polynomial pulled = substitute(original, r,
                                   {{"s0", s0 + (h + shift) * s1 * s1},
                                    {"zeta", z - Rational(1, 2) * theta * x}});
    if (!out.theta) {
        Polynomial red(r);
        for (const auto& [deg, c] : pulled.collect(r.index("theta"))) {
            Rational scale = 1;
            for (int i = 0; i < deg / 2; ++i) scale *= out.theta_squared;
            red += scale * c * theta.pow(deg % 2);
        }
        pulled = red;
    }
    if (pulled != out.equation) throw std::logic_error("normal form does not verify by substitution");
    return out;
}

std::string to_string(FiberType f) {
    switch (f) {
        case FiberType::I1: return "I1";
        case FiberType::II: return "II";
        case FiberType::I2: return "I2";
        case FiberType::III: return "III";
    }
    return "?";
}

FiberType fiber_type(const Rational& theta, const Rational& tau) {
    if (theta != 0 && tau != 0) return FiberType::I1;
    if (theta == 0 && tau != 0) return FiberType::II;
    if (theta != 0) return FiberType::I2;
    return FiberType::III;
}

Polynomial elliptic_normal_form(const Ring& r) {
    auto t0 = var(r, "t0"), t1 = var(r, "t1"), s0 = var(r, "s0"), s1 = var(r, "s1"), z = var(r, "zeta");
    auto k11 = general_binary_form(r, "k", 11, t0, t1);
    auto l16 = general_binary_form(r, "l", 16, t0, t1);
    return (z - var(r, "theta") * t1.pow(3) * s0 * s1) * z - s0.pow(3) - t0 * k11 * s0 * s1.pow(4) -
           t0 * (t0 * l16 + var(r, "tau") * t1.pow(17)) * s1.pow(6);
}

Polynomial double_blowup_form(const Ring& r) {
    auto t0 = var(r, "t0"), t1 = var(r, "t1"), s0 = var(r, "s0"), s1 = var(r, "s1"), z = var(r, "zeta");
    auto c = var(r, "c"), e = var(r, "e");
    auto T = c * c * e.pow(3) * t0;
    auto k11 = general_binary_form(r, "k", 11, T, t1);
    auto l16 = general_binary_form(r, "l", 16, T, t1);
    return (e * z - var(r, "theta") * t1.pow(3) * s0 * s1) * z - c * s0.pow(3) - c * e * t0 * k11 * s0 * s1.pow(4) -
           t0 * (c * c * e.pow(3) * t0 * l16 + var(r, "tau") * t1.pow(17)) * s1.pow(6);
}

Polynomial wps_collapse(const Polynomial& f, const std::vector<std::string>& to_one) {
    std::map<std::string, Rational> values;
    for (const auto& n : to_one) values[n] = 1;
    return specialize(f, values);
}

}  // namespace tsurf
