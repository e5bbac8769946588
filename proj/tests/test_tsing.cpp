#include <doctest.h>

#include <numeric>
#include <random>

#include "tsurf/core/parse.hpp"
#include "tsurf/tsing/germ.hpp"

using namespace tsurf;

namespace {

using Chain = std::vector<long>;

GermClass classify(const std::string& eq, const std::vector<std::string>& vars, long n, std::vector<long> w,
                   const Ring& r, int order = 10) {
    QuotientGerm g{n, vars, std::move(w), parse_polynomial(eq, r)};
    return classify_germ(g, order);
}

}  // namespace

TEST_CASE("hj expansion: oracle values") {
    CHECK(hj_expand(25, 14) == Chain{2, 5, 3});
    CHECK(hj_expand(18, 5) == Chain{4, 3, 2});
    CHECK(hj_expand(9, 5) == Chain{2, 5});
    CHECK(hj_expand(4, 1) == Chain{4});
    CHECK(hj_value({2, 5, 3}) == Rational(25, 14));
    CHECK_THROWS_AS(hj_expand(6, 4), InvalidInput);
    CHECK_THROWS_AS(hj_expand(3, 3), InvalidInput);
}

TEST_CASE("T-chain recognition: oracle values") {
    auto r = recognize_tchain({2, 5, 3});
    REQUIRE(r.kind == ChainKind::TProper);
    CHECK(*r.singularity == TSingularity{1, 5, 3});
    CHECK(r.singularity->str() == "1/25(1,14)");

    r = recognize_tchain({4});
    CHECK(*r.singularity == TSingularity{1, 2, 1});
    CHECK(r.singularity->str() == "1/4(1,1)");

    r = recognize_tchain({4, 3, 2});
    CHECK(*r.singularity == TSingularity{2, 3, 1});
    CHECK(r.singularity->str() == "1/18(1,5)");

    r = recognize_tchain({2, 5});
    CHECK(r.singularity->str() == "1/9(1,5)");

    r = recognize_tchain({2, 2, 2});
    CHECK(r.kind == ChainKind::RDP);
    CHECK(r.singularity->str() == "A_3");

    CHECK(recognize_tchain({3}).kind == ChainKind::NotT);
    CHECK(recognize_tchain({2, 3}).kind == ChainKind::NotT);
    CHECK_THROWS_AS(recognize_tchain({1, 2}), InvalidInput);
}

TEST_CASE("codiscrepancy: oracle values") {
    auto cd = codiscrepancy({4});
    CHECK(cd.coefficients == std::vector<Rational>{Rational(1, 2)});
    CHECK(delta_squared(cd) == -1);
    cd = codiscrepancy({2, 5, 3});
    CHECK(cd.coefficients == std::vector<Rational>{Rational(2, 5), Rational(4, 5), Rational(3, 5)});
    CHECK(delta_squared(cd) == -3);
    CHECK(delta_squared(codiscrepancy({4, 3, 2})) == -2);
    CHECK(ktilde_squared({{2, 5, 3}, {4, 3, 2}}) == -4);
    CHECK(ktilde_squared({{4}}) == 0);
}

TEST_CASE("property: hj round trip for all p <= 200") {
    for (long p = 2; p <= 200; ++p)
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto c = hj_expand(p, q);
            for (long b : c) REQUIRE(b >= 2);
            REQUIRE(hj_value(c) == Rational(p, q));
        }
}

TEST_CASE("property: every T-singularity with d n^2 <= 200 is recognised") {
    int count = 0;
    for (long n = 2; n * n <= 200; ++n)
        for (long d = 1; d * n * n <= 200; ++d)
            for (long a = 1; a < n; ++a) {
                if (std::gcd(a, n) != 1) continue;
                TSingularity s{d, n, a};
                auto chain = tchain_from_singularity(s);
                auto rec = recognize_tchain(chain);
                REQUIRE(rec.kind == ChainKind::TProper);
                CHECK(rec.singularity->equivalent(s));
                CHECK(rec.singularity->order() == s.order());
                // reversed chain is the conjugate quotient, same singularity
                Chain rev(chain.rbegin(), chain.rend());
                auto rrec = recognize_tchain(rev);
                REQUIRE(rrec.kind == ChainKind::TProper);
                CHECK(rrec.singularity->equivalent(s));
                // K^2 contribution of one chain
                CHECK(delta_squared(codiscrepancy(chain)) == d - static_cast<long>(chain.size()) - 1);
                ++count;
            }
    CHECK(count > 100);
}

TEST_CASE("property: the recognised order is d n^2 for T-chains only") {
    // chains that are not T have no n with n^2 | p and (q+1) = d n a
    for (long p = 2; p <= 120; ++p)
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto rec = recognize_tchain(hj_expand(p, q));
            if (rec.kind == ChainKind::TProper) {
                CHECK(rec.singularity->order() == p);
                CHECK(rec.singularity->weight() == q);
            }
        }
}

TEST_CASE("classify_germ: smooth cover") {
    Ring r({"w", "x", "y"});
    auto g = classify("w + x^4 + y^4 + x^2*y^2", {"w", "x", "y"}, 4, {0, 1, 1}, r);
    REQUIRE(g.kind == GermKind::T);
    CHECK(g.str() == "1/4(1,1)");
    auto cq = classify("w + x^2*y + y^5", {"w", "x", "y"}, 5, {0, 3, 4}, r);
    CHECK(cq.kind == GermKind::CyclicQuotient);
    CHECK(cq.str() == "1/5(1,3)");
    CHECK(classify("w + x*y", {"w", "x", "y"}, 1, {0, 0, 0}, r).kind == GermKind::Smooth);
}

TEST_CASE("classify_germ: 1/25(1,14) from a weight-(3,4,2) germ") {
    Ring r({"w", "u1", "t"});
    auto g = classify("w*t + u1^5 + t^5 + w^5 + w^2*u1", {"w", "u1", "t"}, 5, {3, 4, 2}, r);
    REQUIRE(g.kind == GermKind::T);
    CHECK(*g.singularity == TSingularity{1, 5, 3});
    CHECK(g.str() == "1/25(1,14)");
}

TEST_CASE("classify_germ: index-one cover normal forms") {
    Ring r({"x", "y", "z"});
    CHECK(classify("x*y - z^2", {"x", "y", "z"}, 1, {0, 0, 0}, r).str() == "A_1");
    CHECK(classify("x^2 + y^2 + z^5", {"x", "y", "z"}, 1, {0, 0, 0}, r).str() == "A_4");
    CHECK(classify("x*y - z^2", {"x", "y", "z"}, 2, {1, 1, 1}, r).str() == "1/4(1,1)");
    CHECK(classify("x*y - z^4", {"x", "y", "z"}, 2, {1, 1, 1}, r).str() == "1/8(1,3)");
    CHECK(classify("x*y - z^6", {"x", "y", "z"}, 3, {1, 2, 1}, r).str() == "1/18(1,5)");
    CHECK(classify("x*y - z^3 + z^6", {"x", "y", "z"}, 3, {1, 2, 2}, r).str() == "1/9(1,5)");
    // non-invariant and degenerate
    CHECK(classify("x*y - z^5", {"x", "y", "z"}, 2, {1, 1, 1}, r).kind == GermKind::Unrecognized);
    CHECK(classify("x^2 - z + y^2", {"x", "y", "z"}, 2, {1, 1, 1}, r).kind == GermKind::Unrecognized);
    CHECK(classify("x^3 + y^3 + z^3", {"x", "y", "z"}, 1, {0, 0, 0}, r).kind == GermKind::Unrecognized);
    CHECK_THROWS_AS(classify("x*y", {"x", "y", "z"}, 1, {0, 0, 0}, r), TruncationTooShallow);
    CHECK_THROWS_AS(classify("1 + x*y", {"x", "y", "z"}, 1, {0, 0, 0}, r), std::invalid_argument);
}

TEST_CASE("classify_germ: higher-order cross terms") {
    // the pair is only split after solving f_x = f_y = 0 as series in z
    Ring r({"x", "y", "z"});
    auto g = classify("x*y + x*z^2 + y*z^4 + x^3*z^3 - z^6", {"x", "y", "z"}, 3, {1, 2, 1}, r, 12);
    CHECK(g.str() == "1/18(1,5)");
}

TEST_CASE("property: coordinate permutation and unit rescaling do not change the class") {
    Ring r({"x", "y", "z", "s"}, {"s"});
    std::vector<std::string> base{"x", "y", "z"};
    std::vector<long> w{1, 2, 1};
    const std::string eq = "s*x*y + x^2*y^2 + x*z^2 + 2*y*z^4 + s^-1*z^6 + z^9";
    auto ref = classify(eq, base, 3, w, r, 12);
    REQUIRE(ref.kind == GermKind::T);
    std::vector<int> perm{0, 1, 2};
    do {
        std::vector<std::string> vars;
        std::vector<long> ws;
        for (int i : perm) {
            vars.push_back(base[i]);
            ws.push_back(w[i]);
        }
        auto g = classify(eq, vars, 3, ws, r, 12);
        REQUIRE(g.kind == GermKind::T);
        CHECK(g.singularity->equivalent(*ref.singularity));
    } while (std::next_permutation(perm.begin(), perm.end()));
    auto scaled = classify("3*s^2*(" + eq + ")", base, 3, w, r, 12);
    CHECK(scaled.singularity->equivalent(*ref.singularity));
    // twisting weights by a unit mod n
    auto twisted = classify(eq, base, 3, {2, 4, 2}, r, 12);
    CHECK(twisted.singularity->equivalent(*ref.singularity));
}
