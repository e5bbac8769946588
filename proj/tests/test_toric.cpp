#include <doctest.h>

#include <fstream>
#include <random>

#include "tsurf/core/parse.hpp"
#include "tsurf/toric/cox.hpp"
#include "tsurf/toric/elliptic.hpp"

using namespace tsurf;

namespace {

CoxPresentation fixture(const std::string& name) {
    std::ifstream in(std::string(TSURF_DATA_DIR) + "/" + name);
    REQUIRE(in);
    return CoxPresentation::from_json(nlohmann::json::parse(in));
}

Polynomial P(const std::string& s) { return parse_polynomial(s, elliptic_ring()); }

IntVector sum(std::initializer_list<std::pair<long, IntVector>> terms) {
    IntVector out;
    for (const auto& [m, v] : terms) {
        if (out.empty()) out.assign(v.size(), 0);
        for (std::size_t i = 0; i < v.size(); ++i) out[i] += m * v[i];
    }
    return out;
}

}  // namespace

TEST_CASE("fixtures load and round trip") {
    for (auto name : {"cox_F.json", "cox_F1.json", "cox_Ftilde.json", "cox_Ftilde_shifted.json"}) {
        auto c = fixture(name);
        CHECK(CoxPresentation::from_json(c.to_json()).to_json() == c.to_json());
    }
    CHECK_THROWS_AS(CoxPresentation::from_json(nlohmann::json::parse(
                        R"({"vars":["a","b"],"weights":[[1,1],[2,2]],"irrelevant":[["a","b"]]})")),
                    std::invalid_argument);
}

TEST_CASE("toric blowups rebuild the Cox matrix and its ray relations") {
    auto F = fixture("cox_F.json");
    auto F1 = toric_blowup(F, "c", make_vector({2, 0, 0, 1, 1, -1}), fixture("cox_F1.json").irrelevant);
    CHECK(F1.weights == fixture("cox_F1.json").weights);
    auto Ft = toric_blowup(F1, "e", make_vector({1, 0, 0, 0, 1, 1, -1}), fixture("cox_Ftilde.json").irrelevant);
    CHECK(Ft.weights == fixture("cox_Ftilde.json").weights);
    CHECK(Ft.variables == fixture("cox_Ftilde.json").variables);

    auto v = Ft.rays();
    for (const auto& [name, ray] : v) CHECK(primitive(ray) == ray);
    CHECK(v["c"] == sum({{2, v["t0"]}, {1, v["s0"]}, {1, v["zeta"]}}));
    CHECK(v["e"] == sum({{1, v["t0"]}, {1, v["zeta"]}, {1, v["c"]}}));
    // every weight row is a relation among the rays
    for (const auto& row : Ft.weights.row_list()) {
        IntVector s(v["t0"].size(), 0);
        for (std::size_t i = 0; i < Ft.variables.size(); ++i)
            for (std::size_t k = 0; k < s.size(); ++k) s[k] += row[i] * v[Ft.variables[i]][k];
        CHECK(s == IntVector(s.size(), 0));
    }
    // F has no unimodular block of rays, so its rays agree with the old rays
    // of F1 only up to a lattice automorphism: same relations, both spanning
    auto old = F.rays(), mid = F1.rays();
    auto as_matrix = [](const std::map<std::string, IntVector>& rays, const std::vector<std::string>& names) {
        std::vector<IntVector> cols;
        for (const auto& n : names) cols.push_back(rays.at(n));
        return IntegerMatrix::from_rows(cols).transpose();
    };
    auto R = as_matrix(old, F.variables), R1 = as_matrix(mid, F.variables);
    CHECK(kernel_basis(R) == kernel_basis(R1));
    CHECK(hermite_normal_form(R.transpose()) == IntegerMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(hermite_normal_form(R1.transpose()) == IntegerMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    // F1 has one ({t0, s1, c}), and the second blowup keeps every old ray
    CHECK(mid["t0"] == make_vector({1, 0, 0}));
    CHECK(mid["s1"] == make_vector({0, 1, 0}));
    CHECK(mid["c"] == make_vector({0, 0, 1}));
    for (const auto& name : F1.variables) CHECK(mid[name] == v[name]);

    CHECK_THROWS_AS(toric_blowup(F, "c", make_vector({0, 0, 0, 0, 0, 0}), {}), InconsistentRow);
    CHECK_THROWS_AS(toric_blowup(F, "c", make_vector({2, 0, 0, 1, 1, 1}), {}), InconsistentRow);
    CHECK_THROWS_AS(toric_blowup(F, "c", make_vector({2, 0, 1}), {}), InconsistentRow);
}

TEST_CASE("blowup transforms reproduce the double blowup and its multidegrees") {
    const Ring r = elliptic_ring();
    auto F = fixture("cox_F.json");
    auto F1 = fixture("cox_F1.json");
    auto Ft = fixture("cox_Ftilde.json");
    auto Y = elliptic_normal_form(r);
    CHECK(multidegree(Y, F) == make_vector({0, 6}));

    auto sub1 = blowup_substitution(r, F1, 2);
    CHECK(sub1.at("t0") == P("c^2*t0"));
    CHECK(sub1.at("s0") == P("c*s0"));
    CHECK(sub1.at("zeta") == P("c*zeta"));
    auto Y1 = blowup_transform(Y, sub1, P("c^2"));
    // the first strict transform carries t1^3, as a direct expansion shows
    CHECK(Y1.coefficient(P("theta*t1^3*s0*s1*zeta").leading_exponents()) == -1);
    CHECK(multidegree(Y1, F1) == make_vector({0, 6, 2}));

    auto sub2 = blowup_substitution(r, Ft, 3);
    CHECK(sub2.size() == 3);
    auto Yt = blowup_transform(Y1, sub2, P("e"));
    CHECK(Yt == double_blowup_form(r));
    CHECK(multidegree(Yt, Ft) == make_vector({0, 6, 2, 1}));
    CHECK(multidegree(Yt, fixture("cox_Ftilde_shifted.json")) == make_vector({6, 18, 34, 51}));
    CHECK(multidegree(P("zeta"), fixture("cox_Ftilde_shifted.json")) == make_vector({3, 9, 17, 25}));

    CHECK_THROWS_AS(blowup_transform(Y, sub1, P("c^3")), NotDivisible);
    CHECK_THROWS_AS(multidegree(P("t0 + s0"), F), NotHomogeneous);
    Ring x({"x", "e"});
    CHECK(blowup_transform(parse_polynomial("x^2", x), {{"x", parse_polynomial("e*x", x)}},
                           parse_polynomial("e^2", x)) == parse_polynomial("x^2", x));
}

TEST_CASE("collapse to the weighted projective space") {
    const Ring r = elliptic_ring();
    auto S = wps_collapse(double_blowup_form(r));
    auto shifted = fixture("cox_Ftilde_shifted.json");
    CoxPresentation wps{{"e", "t1", "s0", "zeta"}, IntegerMatrix{{1, 3, 17, 25}}, {{"e", "t1", "s0", "zeta"}}};
    CHECK(multidegree(S, wps) == make_vector({51}));
    // shape e*P50 + tau t1^17 + theta t1^3 s0 zeta + s0^3 (signs of the normal form)
    Polynomial rest = S - P("-tau*t1^17 - theta*t1^3*s0*zeta - s0^3");
    Polynomial P50 = exact_divide(rest, P("e"));
    CHECK(multidegree(P50, wps) == make_vector({50}));
    CHECK(P50.coefficient(P("zeta^2").leading_exponents()) == 1);
    CHECK(wps_collapse(P("c*s0^3")) == P("s0^3"));
    // the fourth shifted row is blind to s1, t0, c
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        std::vector<std::pair<std::string, int>> pw;
        for (const auto& v : shifted.variables) pw.emplace_back(v, static_cast<int>(rng() % 4));
        auto m = Polynomial::monomial(r, pw);
        CHECK(multidegree(m, shifted)[3] == multidegree(wps_collapse(m), wps)[0]);
    }
}

TEST_CASE("Weierstrass normalisation") {
    const Ring r = elliptic_ring();
    SUBCASE("nodal fibre with formal theta") {
        // alpha = -3, beta = 2 (eps = 1), j nonzero
        // k, l chosen so that the depressed model has alpha = -3, beta = 2
        Polynomial j = P("3*t1^6 + t0*t1^5");
        WeierstrassModel m{j, P("-3*t1^12 + 2*t0*t1^11 + t0^12") + Rational(1, 3) * j * j, Polynomial(r)};
        m.l = P("2*t1^18 + 5*t0*t1^17 - t0^18") + Rational(1, 3) * j * m.k - Rational(2, 27) * j.pow(3);
        auto n = weierstrass_normalize(m);
        CHECK(n.depressed.k == P("-3*t1^12 + 2*t0*t1^11 + t0^12"));
        CHECK(n.alpha == -3);
        CHECK(n.beta == 2);
        CHECK(n.epsilon == 1);
        CHECK(n.theta_squared == 12);
        CHECK_FALSE(n.theta);
        CHECK(n.tau == 5 + 2);  // l + eps t1^6 k contributes 2*t0*t1^17
        CHECK(discriminant(n.depressed) == discriminant(m));
        CHECK(n.equation.involves("theta"));
    }
    SUBCASE("rational theta") {
        // eps = 3 gives theta^2 = 36
        WeierstrassModel m{Polynomial(r), P("-27*t1^12 + t0^12"), P("54*t1^18 - t0*t1^17")};
        auto n = weierstrass_normalize(m);
        CHECK(n.epsilon == 3);
        REQUIRE(n.theta);
        CHECK(*n.theta == 6);
        CHECK_FALSE(n.equation.involves("theta"));
    }
    SUBCASE("cuspidal") {
        WeierstrassModel m{Polynomial(r), P("t0*t1^11"), P("t0*t1^17 + t0^2*t1^16")};
        auto n = weierstrass_normalize(m);
        CHECK(n.epsilon == 0);
        REQUIRE(n.theta);
        CHECK(*n.theta == 0);
        CHECK(n.tau == 1);
        CHECK(n.l16 == P("t1^16"));
        CHECK(fiber_type(*n.theta, n.tau) == FiberType::II);
    }
    SUBCASE("smooth fibre is rejected") {
        WeierstrassModel m{Polynomial(r), P("t1^12"), P("t1^18")};
        CHECK_THROWS_AS(weierstrass_normalize(m), std::invalid_argument);
    }
    CHECK_THROWS_AS(rational_sqrt(Rational(3)), NoSquareRoot);
    CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
}

TEST_CASE("discriminant") {
    const Ring r = elliptic_ring();
    CHECK(discriminant({Polynomial(r), Polynomial(r), P("t1^18")}) == P("27*t1^36"));
    auto d = discriminant({Polynomial(r), P("-3*t1^12 + t0*t1^11"), P("2*t1^18 + t0^18")});
    CHECK(d.restrict_zero({"t0"}).is_zero());
    WeierstrassModel m{Polynomial(r), P("7*t1^12 + t0^12"), P("-2*t1^18 + t0^3*t1^15")};
    CHECK(discriminant(m).restrict_zero({"t0"}) == P("(4*343 + 27*4)*t1^36"));
}

TEST_CASE("property: the discriminant survives every normalisation step") {
    const Ring r = elliptic_ring();
    std::mt19937_64 rng(29);
    auto rnd = [&] { return Rational(static_cast<long>(rng() % 9) - 4); };
    for (int trial = 0; trial < 8; ++trial) {
        long eps = static_cast<long>(rng() % 5) - 2;
        Polynomial k = Polynomial::constant(r, -3 * eps * eps) * P("t1^12");
        Polynomial l = Polynomial::constant(r, 2 * eps * eps * eps) * P("t1^18");
        for (int i = 1; i <= 12; ++i) k += rnd() * P("t0").pow(i) * P("t1").pow(12 - i);
        for (int i = 1; i <= 18; ++i) l += rnd() * P("t0").pow(i) * P("t1").pow(18 - i);
        Polynomial j(r);
        for (int i = 0; i <= 6; ++i) j += rnd() * P("t0").pow(i) * P("t1").pow(6 - i);
        // put j back in so the depressed model is the one built above
        WeierstrassModel m{j, k + Rational(1, 3) * j * j, Polynomial(r)};
        m.l = l + Rational(1, 3) * j * m.k - Rational(2, 27) * j.pow(3);
        auto n = weierstrass_normalize(m);
        CHECK(n.epsilon == eps);
        CHECK(discriminant(n.depressed) == discriminant(m));
        // after the eps shift the model has j = 3 eps t1^6
        WeierstrassModel shifted{Polynomial::constant(r, 3 * eps) * P("t1^6"), P("t0") * n.k11,
                                 P("t0") * (P("t0") * n.l16 + Polynomial::constant(r, n.tau) * P("t1^17"))};
        CHECK(discriminant(shifted) == discriminant(m));
        for (int pt = 0; pt < 5; ++pt) {
            std::map<std::string, Rational> at{{"t0", rnd()}, {"t1", rnd()}};
            CHECK(evaluate(discriminant(shifted), at) == evaluate(discriminant(m), at));
        }
    }
}

TEST_CASE("fibre types") {
    CHECK(fiber_type(1, 1) == FiberType::I1);
    CHECK(fiber_type(0, 1) == FiberType::II);
    CHECK(fiber_type(1, 0) == FiberType::I2);
    CHECK(fiber_type(0, 0) == FiberType::III);
    CHECK(to_string(FiberType::III) == "III");
}
