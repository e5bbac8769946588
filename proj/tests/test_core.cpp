#include <doctest.h>

#include <random>

#include "tsurf/core/division.hpp"
#include "tsurf/core/parse.hpp"
#include "tsurf/core/random.hpp"
#include "tsurf/core/series.hpp"
#include "tsurf/core/skew.hpp"

using namespace tsurf;

namespace {

Polynomial P(const std::string& s, const Ring& r) { return parse_polynomial(s, r); }

Polynomial random_poly(std::mt19937_64& rng, const Ring& r, int terms, int maxdeg) {
    Polynomial p(r);
    for (int t = 0; t < terms; ++t) {
        Exponents e(r.size());
        for (auto& x : e) x = static_cast<int>(rng() % (maxdeg + 1));
        long c = static_cast<long>(rng() % 11) - 5;
        p.add_term(e, Rational(c));
    }
    return p;
}

}  // namespace

TEST_CASE("parse: oracle examples") {
    Ring r({"x0", "x1", "y"});
    auto p = P("x0*y - x1^3", r);
    CHECK(p.size() == 2);
    CHECK(p.str() == "-x1^3 + x0*y");

    Ring rn({"y", "z", "nu"});
    auto q = P("z^2 - nu*y^5", rn);
    CHECK(q.size() == 2);
    CHECK(q.coefficient({5, 0, 1}) == -1);

    auto zero = P("x0*y - x1^3 - (x0*y - x1^3)", r);
    CHECK(zero.is_zero());
    CHECK(zero.size() == 0);
}

TEST_CASE("parse: errors carry a position") {
    Ring r({"x", "y"});
    try {
        P("x + q", r);
        FAIL("expected error");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
    CHECK_THROWS_AS(P("x +", r), ParseError);
    CHECK_THROWS_AS(P("x^-1", r), ParseError);
    CHECK_THROWS_AS(P("(x + y", r), ParseError);
    CHECK_THROWS_AS(P("2/0", r), ParseError);
}

TEST_CASE("parse: invertible variables take negative powers") {
    Ring r({"x", "lambda", "tau"}, {"lambda", "tau"});
    auto p = P("3*lambda^6*tau^-1*x - 1/2*x^2", r);
    CHECK(p.coefficient({1, 6, -1}) == 3);
    CHECK(p.str() == "3*x*lambda^6*tau^-1 - 1/2*x^2");
    CHECK(P(p.str(), r) == p);
}

TEST_CASE("canonical form is graded lex with p/q coefficients") {
    Ring r({"a", "b"});
    auto p = P("b + a + a*b + 2/4*b^2 - 3", r);
    CHECK(p.str() == "a*b + 1/2*b^2 + a + b - 3");
}

TEST_CASE("exact_divide: oracle examples") {
    Ring r({"c", "s0", "t0"});
    CHECK(exact_divide(P("c^2*s0^3 + c^2*t0", r), P("c^2", r)) == P("s0^3 + t0", r));
    Ring r2({"x0", "x1", "y"});
    CHECK_THROWS_AS(exact_divide(P("x0*y - x1^3", r2), P("x1", r2)), NotDivisible);
    CHECK(exact_divide(P("x0^2 - x1^2", r2), P("x0 + x1", r2)) == P("x0 - x1", r2));
    CHECK_THROWS_AS(exact_divide(P("x0^2 + x1^2", r2), P("x0 + x1", r2)), NotDivisible);
}

TEST_CASE("exact_divide through invertible monomials") {
    Ring r({"x", "lambda"}, {"lambda"});
    auto g = P("lambda*x + 1", r);
    auto f = g * P("lambda^-2*x - 3", r);
    CHECK(exact_divide(f, g) == P("lambda^-2*x - 3", r));
    CHECK(exact_divide(P("x", r), P("lambda^3", r)) == P("lambda^-3*x", r));
}

TEST_CASE("substitute") {
    Ring r({"x"});
    CHECK(substitute(P("x^2", r), r, {{"x", P("x + 1", r)}}) == P("x^2 + 2*x + 1", r));
    Ring big({"a", "b", "lambda"}, {"lambda"});
    Ring src({"x", "y", "lambda"}, {"lambda"});
    auto f = P("x*lambda^-1 + y^2", src);
    auto g = substitute(f, big, {{"x", P("a*lambda", big)}, {"y", P("b - a", big)}});
    CHECK(g == P("a + b^2 - 2*a*b + a^2", big));
    CHECK_THROWS_AS(substitute(P("x", Ring({"x"})), Ring({"y"}), {}), std::invalid_argument);
    // negative power needs a unit image
    Ring li({"u", "lambda"}, {"lambda"});
    CHECK_THROWS_AS(substitute(P("lambda^-1", li), li, {{"lambda", P("u + 1", li)}}), NotInvertible);
}

TEST_CASE("pfaffian: classical formula, parity") {
    Ring r({"a", "b", "c", "d", "e", "f"});
    SkewMatrix m(r, 4);
    m.set(0, 1, P("a", r));
    m.set(0, 2, P("b", r));
    m.set(0, 3, P("c", r));
    m.set(1, 2, P("d", r));
    m.set(1, 3, P("e", r));
    m.set(2, 3, P("f", r));
    CHECK(pfaffian(m) == P("a*f - b*e + c*d", r));
    CHECK(pfaffian(m, {0, 1, 2}).is_zero());
    CHECK(sub_pfaffians(m, 2).size() == 6);
    CHECK(sub_pfaffians(m, 2)[0].value == P("a", r));
    CHECK(m(3, 0) == P("-c", r));
}

TEST_CASE("property: ring laws over random triples") {
    std::mt19937_64 rng(7);
    Ring r({"x", "y", "z"});
    for (int i = 0; i < 120; ++i) {
        auto f = random_poly(rng, r, 4, 3), g = random_poly(rng, r, 4, 3), h = random_poly(rng, r, 3, 2);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f - f == Polynomial(r));
    }
}

TEST_CASE("property: parse/serialize round trip") {
    std::mt19937_64 rng(11);
    Ring r({"x", "y", "lam"}, {"lam"});
    for (int i = 0; i < 100; ++i) {
        auto f = random_poly(rng, r, 5, 3) * Polynomial::monomial(r, {0, 0, -2}, make_rational(3, 7));
        CHECK(parse_polynomial(f.str(), r) == f);
        CHECK(parse_polynomial(f.str(), r).str() == f.str());
    }
}

TEST_CASE("property: exact_divide(f*g, g) == f") {
    std::mt19937_64 rng(13);
    Ring r({"x", "y", "z"});
    for (int i = 0; i < 100; ++i) {
        auto f = random_poly(rng, r, 4, 3), g = random_poly(rng, r, 3, 2);
        if (g.is_zero()) continue;
        CHECK(exact_divide(f * g, g) == f);
    }
}

TEST_CASE("property: pf^2 == det for random skew matrices up to size 8") {
    std::mt19937_64 rng(17);
    Ring r({"x"});
    for (std::size_t n = 2; n <= 8; n += 2)
        for (int trial = 0; trial < 6; ++trial) {
            SkewMatrix m(r, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    long c = static_cast<long>(rng() % 7) - 3;
                    // mix constants and a variable so the identity is polynomial
                    m.set(i, j, Polynomial::constant(r, c) + Polynomial::monomial(r, Exponents{static_cast<int>(rng() % 2)}, 1));
                }
            auto pf = pfaffian(m);
            CHECK(pf * pf == determinant(m.dense()));
        }
    // odd size: determinant vanishes
    SkewMatrix odd(r, 3);
    odd.set(0, 1, P("x", r));
    odd.set(0, 2, P("1", r));
    odd.set(1, 2, P("x + 2", r));
    CHECK(determinant(odd.dense()).is_zero());
    CHECK(pfaffian(odd).is_zero());
}

TEST_CASE("series_eliminate: oracle examples") {
    Ring r({"x", "y"});
    auto ctx = SeriesContext::standard(r, 10);
    auto sol = series_eliminate(truncate(P("x - y^2", r), ctx), "x", 10);
    CHECK(sol.poly() == P("y^2", r));
    CHECK_THROWS_AS(series_eliminate(truncate(P("x^2 - y", r), ctx), "x", 10), NotSolvable);
    CHECK_THROWS_AS(series_eliminate(truncate(P("x*y + y^2", r), ctx), "x", 10), NotSolvable);
}

TEST_CASE("series_eliminate: geometric series") {
    // x - y - x*y = 0  =>  x = y/(1-y) = y + y^2 + ...
    Ring r({"x", "y"});
    auto sol = series_eliminate(truncate(P("x - y - x*y", r), SeriesContext::standard(r, 6)), "x", 6);
    CHECK(sol.poly() == P("y + y^2 + y^3 + y^4 + y^5", r));
}

TEST_CASE("series_eliminate with a unit parameter coefficient") {
    Ring r({"y", "w", "u1", "theta"}, {"theta"});
    // theta*y + w*u1 + u1^3 + y^2 = 0
    auto f = P("theta*y + w*u1 + u1^3 + y^2", r);
    auto ctx = SeriesContext::standard(r, 8);
    auto sol = series_eliminate(truncate(f, ctx), "y", 8);
    CHECK(sol.poly().coefficient({0, 0, 3, -1}) == -1);
    CHECK(sol.poly().coefficient({0, 1, 1, -1}) == -1);
    CHECK(compose(f, {{0, sol}}, ctx).is_zero());
}

TEST_CASE("property: eliminate then substitute vanishes to the order") {
    std::mt19937_64 rng(19);
    Ring r({"v", "a", "b"});
    auto ctx = SeriesContext::standard(r, 7);
    for (int i = 0; i < 40; ++i) {
        auto f = Polynomial::monomial(r, {1, 0, 0}, Rational(1 + static_cast<long>(rng() % 4)));
        for (int t = 0; t < 6; ++t) {
            Exponents e{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
            if (total_degree(e) < 2) continue;
            f.add_term(e, Rational(static_cast<long>(rng() % 9) - 4));
        }
        auto g = series_eliminate(truncate(f, ctx), "v", 7);
        CHECK(compose(f, {{0, g}}, ctx).is_zero());
    }
}

TEST_CASE("solve_implicit: coupled linear part") {
    Ring r({"p", "q", "z"});
    auto ctx = SeriesContext::standard(r, 9);
    // gradient of p*q + p^2 + z*p + z^3*q
    auto f = P("p*q + p^2 + z*p + z^3*q + p^3", r);
    auto sol = solve_implicit({f.derivative(0), f.derivative(1)}, {"p", "q"}, ctx);
    CHECK(compose(f.derivative(0), {{0, sol[0]}, {1, sol[1]}}, ctx).is_zero());
    CHECK(compose(f.derivative(1), {{0, sol[0]}, {1, sol[1]}}, ctx).is_zero());
}

TEST_CASE("unit inverse") {
    Ring r({"x", "t"}, {"t"});
    auto ctx = SeriesContext::standard(r, 6);
    TruncatedSeries u(P("2*t + x + x^2", r), ctx);
    auto inv = u.inverse();
    CHECK((u * inv).poly() == P("1", r));
    CHECK_THROWS_AS(TruncatedSeries(P("x", r), ctx).inverse(), NotInvertible);
}

TEST_CASE("division certifies membership") {
    Ring r({"x0", "x1", "y", "w", "lam"}, {"lam"});
    auto a = P("x0*y - x1^3", r);
    auto b = P("y^5 - 3*x1*y^3*w + lam^3", r);
    auto f = P("x0 + lam^-2*w", r) * a + P("x1*w^2", r) * b;
    auto res = divide_by(f, {a, b});
    CHECK(res.remainder.is_zero());
    CHECK(res.quotients[0] * a + res.quotients[1] * b == f);
    auto miss = divide_by(P("x0", r), {a, b});
    CHECK(miss.remainder == P("x0", r));
}

TEST_CASE("seeded forms are reproducible") {
    Ring r({"x", "y", "z"});
    FormSampler s1(42), s2(42);
    auto f = s1.form(r, {{"x", 1}, {"y", 2}, {"z", 5}}, 10);
    CHECK(f == s2.form(r, {{"x", 1}, {"y", 2}, {"z", 5}}, 10));
    CHECK(weighted_monomials(r, {{"x", 1}, {"y", 2}, {"z", 5}}, 10).size() == f.size());
    CHECK(f.size() == 10);
}
