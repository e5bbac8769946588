#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>

#include "tsurf/curves/configuration.hpp"
#include "tsurf/curves/examples.hpp"
#include "tsurf/curves/profiles.hpp"
#include "tsurf/curves/rules.hpp"
#include "tsurf/curves/script.hpp"
#include "tsurf/tsing/tchain.hpp"

using namespace tsurf;

namespace {

nlohmann::json load(const std::string& file) {
    std::ifstream in(std::string(TSURF_DATA_DIR) + "/" + file);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

Curve rational(const std::string& n, long self, std::set<std::string> t = {}) { return {n, self, 0, std::move(t), std::nullopt}; }

// the two strings of 1/25(1,14) and 1/4(1,1) with their coefficients
CurveConfiguration strings_5_2() {
    CurveConfiguration c;
    c.kodaira_dimension_one = true;
    c.k_squared = -3;
    c.add_curve(rational("A1", -3));
    c.add_curve(rational("B1", -5));
    c.add_curve(rational("C1", -2));
    c.add_curve(rational("A2", -4));
    c.set_incidence("A1", "B1", 1);
    c.set_incidence("B1", "C1", 1);
    assign_codiscrepancy(c, {"A1", "B1", "C1"});
    assign_codiscrepancy(c, {"A2"});
    return c;
}

CurveConfiguration with_gamma(CurveConfiguration c, const std::string& g, const std::vector<std::string>& meets) {
    c.add_curve(rational(g, -1, {tags::eps_exceptional}));
    for (const auto& m : meets) c.set_incidence(g, m, 1);
    return c;
}

bool has_rule(const std::vector<Violation>& v, const std::string& id) {
    return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.rule == id; });
}

std::vector<Script> scripts() {
    std::vector<Script> out;
    const nlohmann::json doc = load("scripts.json");
    for (const auto& j : doc.at("scripts")) out.push_back(Script::from_json(j));
    return out;
}

const Script& script(const std::vector<Script>& all, const std::string& name) {
    auto it = std::find_if(all.begin(), all.end(), [&](const Script& s) { return s.name == name; });
    REQUIRE(it != all.end());
    return *it;
}

}  // namespace

TEST_CASE("blowing down Gamma and then the image of C1") {
    CurveConfiguration c = with_gamma(strings_5_2(), "Gamma", {"C1", "B1"});
    CurveConfiguration d = blow_down(c, "Gamma");
    CHECK(d.curve("C1").self_intersection == -1);
    CHECK(d.curve("C1").genus == 0);
    CHECK(d.curve("B1").self_intersection == -4);
    CHECK(d.incidence("B1", "C1") == 2);
    CHECK_FALSE(d.has("Gamma"));
    CurveConfiguration e = blow_down(d, "C1");
    CHECK(e.curve("B1").self_intersection == 0);
    CHECK(e.curve("B1").genus == 1);  // nodal
    CHECK(e.curve("B1").k_degree() == 0);
    CHECK(e.incidence("A1", "B1") == 1);
}

TEST_CASE("only rational (-1)-curves contract") {
    CurveConfiguration c = strings_5_2();
    CHECK_THROWS_AS(blow_down(c, "C1"), NotContractible);
    CHECK_THROWS_AS(blow_down(c, "A1"), NotContractible);
    CHECK_THROWS_AS(blow_down(c, "Z"), UnknownCurve);
    CurveConfiguration n = blow_down(blow_down(with_gamma(c, "Gamma", {"C1", "B1"}), "Gamma"), "C1");
    n.add_curve(rational("N", -1));
    n.curve("N").genus = 1;
    CHECK_THROWS_AS(blow_down(n, "N"), NotContractible);
}

TEST_CASE("K^2 + contractions is preserved, and blow-up inverts blow-down") {
    CurveConfiguration c = with_gamma(strings_5_2(), "Gamma", {"C1", "B1"});
    CurveConfiguration d = blow_down(c, "Gamma");
    CHECK(*d.k_squared == *c.k_squared + 1);
    CHECK(d.contracted == 1);
    CurveConfiguration e = blow_down(d, "C1");
    CHECK(*e.k_squared == *c.k_squared + 2);
    CurveConfiguration back = blow_up(d, "Gamma", {{"C1", 1}, {"B1", 1}});
    for (const auto& n : c.names()) {
        CHECK(back.curve(n).self_intersection == c.curve(n).self_intersection);
        for (const auto& m : c.names()) CHECK(back.incidence(n, m) == c.incidence(n, m));
    }
    CHECK(*back.k_squared == *c.k_squared);
}

TEST_CASE("property: blow_down after a random blow-up restores the configuration") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        CurveConfiguration c;
        int n = 2 + static_cast<int>(rng() % 5);
        for (int i = 0; i < n; ++i) {
            Curve cur = rational("C" + std::to_string(i), -static_cast<long>(rng() % 6));
            cur.genus = static_cast<long>(rng() % 3);
            c.add_curve(cur);
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) c.set_incidence("C" + std::to_string(i), "C" + std::to_string(j), rng() % 3);
        // a point on a random subset, multiplicity 1 or (on genus >= 1 curves) 2
        std::vector<std::pair<std::string, long>> through;
        for (int i = 0; i < n; ++i) {
            if (rng() % 2) continue;
            long m = c.curve("C" + std::to_string(i)).genus >= 1 && rng() % 2 ? 2 : 1;
            through.emplace_back("C" + std::to_string(i), m);
        }
        bool possible = true;
        for (std::size_t a = 0; a < through.size(); ++a)
            for (std::size_t b = a + 1; b < through.size(); ++b)
                if (c.incidence(through[a].first, through[b].first) < through[a].second * through[b].second) possible = false;
        if (!possible) {
            CHECK_THROWS_AS(blow_up(c, "E", through), std::invalid_argument);
            continue;
        }
        CurveConfiguration up = blow_up(c, "E", through);
        for (const auto& cur : up.curves()) CHECK(cur.genus >= 0);
        CurveConfiguration down = blow_down(up, "E");
        for (const auto& a : c.names()) {
            CHECK(down.curve(a).genus == c.curve(a).genus);
            for (const auto& b : c.names()) CHECK(down.incidence(a, b) == c.incidence(a, b));
        }
    }
}

TEST_CASE("rule a: meeting (-1)-curves") {
    CurveConfiguration c = with_gamma(with_gamma(strings_5_2(), "G1", {"A1"}), "G2", {"A2"});
    CHECK(check_rules(c).empty());
    c.set_incidence("G1", "G2", 1);
    auto v = check_rules(c);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == "a");
    c.kodaira_dimension_one = false;
    CHECK(check_rules(c).empty());
}

TEST_CASE("rule b: a (-1)-curve on the minimal model") {
    CurveConfiguration c = with_gamma(strings_5_2(), "G", {"A1"});
    CHECK(check_rules(c).empty());
    c.minimal = true;
    auto v = check_rules(c);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == "b");
    CHECK(v[0].curves == std::vector<std::string>{"G"});
}

TEST_CASE("rule c: a nodal K-trivial fibre meeting a (-2)-curve") {
    CurveConfiguration c;
    c.minimal = c.kodaira_dimension_one = true;
    c.add_curve({"N", 0, 1, {}, std::nullopt});
    c.add_curve(rational("D", -2));
    c.set_incidence("N", "D", 1);
    auto v = check_rules(c);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == "c");
    c.set_incidence("N", "D", 0);
    CHECK(check_rules(c).empty());
}

TEST_CASE("rule d: a surviving (-2)-curve meets a (-1)-curve") {
    CurveConfiguration c = with_gamma(strings_5_2(), "G", {"C1", "B1"});
    auto v = check_rules(c);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == "d");
    CHECK(v[0].curves == std::vector<std::string>{"C1", "G"});
    c.curve("C1").tags.insert(tags::eps_exceptional);
    CHECK(check_rules(c).empty());
}

TEST_CASE("every rule carries a justification") {
    CHECK(contradiction_rules().size() == 4);
    for (const auto& r : contradiction_rules()) {
        CHECK_FALSE(r.description.empty());
        CHECK_FALSE(r.source.empty());
    }
}

TEST_CASE("K_X on the (-1)-curves of profiles I and II and on the strings") {
    CurveConfiguration c = with_gamma(with_gamma(strings_5_2(), "GI", {"A1", "A2"}), "GII", {"B1", "C1"});
    CHECK(kx_pairing(c, "GI") == Rational(1, 10));
    CHECK(kx_pairing(c, "GII") == Rational(1, 5));
    for (const std::string n : {"A1", "B1", "C1", "A2"}) CHECK(kx_pairing(c, n) == 0);
    CHECK(c.curve("B1").coefficient == Rational(4, 5));
    c.curve("A2").coefficient.reset();
    CHECK_THROWS_AS(kx_pairing(c, "GI"), MissingCoefficients);
}

TEST_CASE("property: K_X vanishes on every T-string from the codiscrepancy") {
    for (long n = 2; n <= 6; ++n)
        for (long d = 1; d <= 3; ++d)
            for (long a = 1; a < n; ++a) {
                if (std::gcd(a, n) != 1) continue;
                auto chain = tchain_from_singularity({d, n, a});
                CurveConfiguration c;
                std::vector<std::string> names;
                for (std::size_t i = 0; i < chain.size(); ++i) {
                    names.push_back("E" + std::to_string(i));
                    c.add_curve(rational(names.back(), -chain[i]));
                    if (i) c.set_incidence(names[i - 1], names[i], 1);
                }
                assign_codiscrepancy(c, names);
                for (const auto& nm : names) CHECK(kx_pairing(c, nm) == 0);
            }
}

TEST_CASE("profiles of a (-1)-curve for 1/25(1,14) and 1/4(1,1)") {
    auto p = enumerate_gamma_profiles({3, 5, 2}, {4}, {Rational(1, 10), Rational(3, 10)}, {{"C1", 1}, {"A1", 1}});
    REQUIRE(p.size() == 3);
    CHECK(p[0].incidences == std::map<std::string, long>{{"A1", 1}, {"A2", 1}});
    CHECK(p[0].kx == Rational(1, 10));
    CHECK(p[1].incidences == std::map<std::string, long>{{"B1", 1}, {"C1", 1}});
    CHECK(p[1].kx == Rational(1, 5));
    CHECK(p[2].incidences == std::map<std::string, long>{{"A2", 1}, {"B1", 1}});
    CHECK(p[2].kx == Rational(3, 10));
    CHECK(p[0].str() == "A1 + A2 (K_X = 1/10)");
}

TEST_CASE("without the caps the excluded incidences reappear") {
    auto p = enumerate_gamma_profiles({3, 5, 2}, {4}, {Rational(1, 10), Rational(3, 10)});
    CHECK(p.size() > 3);
    bool c1_twice = std::any_of(p.begin(), p.end(), [](const GammaProfile& g) {
        auto it = g.incidences.find("C1");
        return it != g.incidences.end() && it->second >= 2;
    });
    CHECK(c1_twice);
}

TEST_CASE("a wider bound gives a strict superset") {
    std::map<std::string, long> caps{{"C1", 1}, {"A1", 1}};
    auto narrow = enumerate_gamma_profiles({3, 5, 2}, {4}, {Rational(1, 10), Rational(3, 10)}, caps);
    auto wide = enumerate_gamma_profiles({3, 5, 2}, {4}, {Rational(1, 10), Rational(1)}, caps);
    CHECK(wide.size() > narrow.size());
    for (const auto& g : narrow)
        CHECK(std::any_of(wide.begin(), wide.end(), [&](const GammaProfile& h) { return h.incidences == g.incidences; }));
}

TEST_CASE("empty menu, empty interval") {
    CHECK(enumerate_gamma_profiles(std::vector<MenuEntry>{}, {Rational(0), Rational(1)}).empty());
    CHECK(enumerate_gamma_profiles({3, 5, 2}, {4}, {Rational(1, 2), Rational(1, 3)}).empty());
    CHECK_THROWS_AS(enumerate_gamma_profiles({3, 5, 2}, {4}, {Rational(0), Rational(1)}, {{"Z9", 1}}),
                    std::invalid_argument);
}

TEST_CASE("property: the enumeration does not depend on the menu order") {
    auto menu = codiscrepancy_menu({3, 5, 2}, {4, 3, 2});
    KxBounds b{Rational(1, 10), Rational(7, 10)};
    auto ref = enumerate_gamma_profiles(menu, b);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        std::shuffle(menu.begin(), menu.end(), rng);
        auto got = enumerate_gamma_profiles(menu, b);
        REQUIRE(got.size() == ref.size());
        for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k].incidences == ref[k].incidences);
    }
}

TEST_CASE("property: every profile satisfies the pairing identity") {
    auto menu = codiscrepancy_menu({2, 5, 3}, {4, 3, 2});
    for (const auto& g : enumerate_gamma_profiles(menu, {Rational(0), Rational(1)})) {
        Rational s = 0;
        for (const auto& [n, m] : g.incidences)
            for (const auto& e : menu)
                if (e.name == n) s += e.coefficient * m;
        CHECK(s == g.delta);
        CHECK(g.kx == s - 1);
    }
}

TEST_CASE("the three profile scripts end in contradictions") {
    auto all = scripts();
    auto recipes = load("recipes.json");
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"profile-I", "b"}, {"profile-II", "c"}, {"profile-III", "a"}};
    for (const auto& [name, rule] : expected) {
        const Script& s = script(all, name);
        Verdict v = replay_script(s, recipes);
        CHECK_MESSAGE(v.contradiction, name);
        CHECK_MESSAGE(has_rule(v.violations, rule), name << ": " << v.str());
        CHECK(v.at_step.has_value());
        CHECK(s.expect == "contradiction");
    }
}

TEST_CASE("profile II reaches the fibre rule after three contractions") {
    auto all = scripts();
    Verdict v = replay_script(script(all, "profile-II"), load("recipes.json"));
    REQUIRE(v.contradiction);
    CHECK(*v.at_step == 5);  // after assuming minimality
    const auto& f = v.final_configuration;
    CHECK(f.curve("B1").genus == 1);
    CHECK(f.curve("B1").self_intersection == 0);
    CHECK(f.curve("A1").self_intersection == -2);
    CHECK(*f.k_squared == 0);
}

TEST_CASE("profile I: two type I curves leave a curve with K.C < 0") {
    auto all = scripts();
    Verdict v = replay_script(script(all, "profile-I"), load("recipes.json"));
    REQUIRE(v.contradiction);
    CHECK(v.violations.size() == 1);
    CHECK(v.violations[0].curves == std::vector<std::string>{"A2"});
    CHECK(v.final_configuration.curve("A2").k_degree() == -2);
}

TEST_CASE("the construction scripts survive") {
    auto all = scripts();
    auto recipes = load("recipes.json");
    for (const std::string name : {"example-III-fiber", "example-I3-fiber", "example-I2-fiber"}) {
        Verdict v = replay_script(script(all, name), recipes);
        CHECK_MESSAGE(!v.contradiction, name << ": " << v.str());
        CHECK(*v.final_configuration.k_squared == 0);
        CHECK(v.final_configuration.minimal);
    }
}

TEST_CASE("illegal steps are diagnosed") {
    CurveConfiguration c = strings_5_2();
    CHECK_THROWS_AS(replay_script(c, {{"blow_down", {{"op", "blow_down"}, {"curve", "B1"}}}}), IllegalStep);
    CHECK_THROWS_AS(replay_script(c, {{"twist", {{"op", "twist"}}}}), IllegalStep);
    CurveConfiguration g = with_gamma(c, "G", {"A1", "A2"});
    try {
        replay_script(g, {{"assert_kx", {{"op", "assert_kx"}, {"curve", "G"}, {"value", "1/5"}}}});
        FAIL("no exception");
    } catch (const IllegalStep& e) {
        CHECK(e.step == 0);
        CHECK(std::string(e.what()).find("1/10") != std::string::npos);
    }
    CHECK_THROWS_AS(replay_script(g, {{"assert_minus_one_curves", {{"op", "assert_minus_one_curves"}, {"at_least", 2}}}}),
                    IllegalStep);
}

TEST_CASE("property: replay is deterministic and keeps the incidence invariants") {
    auto all = scripts();
    auto recipes = load("recipes.json");
    for (const auto& s : all) {
        Verdict a = replay_script(s, recipes), b = replay_script(s, recipes);
        CHECK(a.str() == b.str());
        CHECK(a.final_configuration.to_json().dump() == b.final_configuration.to_json().dump());
        CHECK_NOTHROW(a.final_configuration.validate());
        CHECK((s.expect == "contradiction") == a.contradiction);
    }
}

TEST_CASE("example recipes build the claimed strings") {
    auto recipes = load("recipes.json");
    struct Want {
        std::string name;
        std::vector<std::vector<long>> chains;
        std::size_t connecting;
        long blowups;
        std::vector<std::string> sings;
    };
    const std::vector<Want> wants = {
        {"III-fiber", {{2, 5, 3}, {4, 3, 2}}, 1, 4, {"1/25(1,14)", "1/18(1,5)"}},
        {"I3-fiber", {{2, 5, 3}, {4, 3, 2}}, 2, 4, {"1/25(1,14)", "1/18(1,5)"}},
        {"I2+Ir-fibers", {{4}, {4, 3, 2}}, 2, 2, {"1/4(1,1)", "1/18(1,5)"}},
    };
    for (const auto& w : wants) {
        ExampleSurface ex = build_example(find_recipe(recipes, w.name));
        CHECK(ex.chains == w.chains);
        CHECK(ex.connecting.size() == w.connecting);
        CHECK(static_cast<long>(ex.recipe.blowups.size()) == w.blowups);
        CHECK(ex.ktilde_squared == -w.blowups);
        CHECK(*ex.configuration.k_squared == -w.blowups);
        REQUIRE(ex.singularities.size() == 2);
        for (std::size_t i = 0; i < 2; ++i) CHECK(ex.singularities[i].str() == w.sings[i]);
    }
}

TEST_CASE("the I2 example works for longer I_r fibres") {
    Recipe r = find_recipe(load("recipes.json"), "I2+Ir-fibers");
    for (long len : {3, 4, 7}) {
        r.r = len;
        CHECK(build_example(r).chains.back() == std::vector<long>{4, 3, 2});
    }
}

TEST_CASE("recipes that miss their claims are rejected") {
    auto recipes = load("recipes.json");
    Recipe r = find_recipe(recipes, "III-fiber");
    r.blowups.pop_back();
    CHECK_THROWS_AS(build_example(r), std::logic_error);
    Recipe s = find_recipe(recipes, "I3-fiber");
    s.expected[0] = {3, 5, 2};
    CHECK_THROWS_AS(build_example(s), std::logic_error);
    CHECK_THROWS_AS(find_recipe(recipes, "I4-fiber"), UnknownRecipe);
    CHECK_THROWS_AS(base_surface("II-fiber"), UnknownRecipe);
}

TEST_CASE("configuration json round trip and DOT export") {
    ExampleSurface ex = build_example(find_recipe(load("recipes.json"), "III-fiber"));
    const auto& c = ex.configuration;
    CurveConfiguration back = CurveConfiguration::from_json(c.to_json());
    CHECK(back == c);
    std::string dot = c.to_dot("fig");
    CHECK(dot.rfind("graph \"fig\" {", 0) == 0);
    CHECK(dot.find("\"E2\" -- \"E4\";") != std::string::npos);
    CHECK(dot.find("\"E4\" [label=\"E4\\n-1\", shape=box];") != std::string::npos);
    nlohmann::json bad = c.to_json();
    bad["curves"][0]["tags"] = {"bogus"};
    CHECK_THROWS_AS(CurveConfiguration::from_json(bad), std::invalid_argument);
}
