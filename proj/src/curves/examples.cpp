#include "tsurf/curves/examples.hpp"

#include <algorithm>

#include "tsurf/curves/rules.hpp"

namespace tsurf {

namespace {

Curve rational(const std::string& name, long self, const char* tag) { return {name, self, 0, {tag}, std::nullopt}; }

std::string join(const std::vector<long>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

}  // namespace

std::vector<std::string> base_surfaces() { return {"III-fiber", "I3-fiber", "I2+Ir-fibers"}; }

CurveConfiguration base_surface(const std::string& fibre, long r) {
    CurveConfiguration cfg;
    cfg.minimal = true;
    cfg.kodaira_dimension_one = true;
    cfg.k_squared = 0;
    cfg.add_curve(rational("S", -3, tags::section));
    if (fibre == "III-fiber") {
        cfg.add_curve(rational("F1", -2, tags::fiber));
        cfg.add_curve(rational("F2", -2, tags::fiber));
        cfg.set_incidence("F1", "F2", 2);  // tangent at one point
        cfg.set_incidence("S", "F2", 1);
    } else if (fibre == "I3-fiber") {
        for (const char* n : {"F1", "F2", "F3"}) cfg.add_curve(rational(n, -2, tags::fiber));
        cfg.set_incidence("F1", "F2", 1);
        cfg.set_incidence("F2", "F3", 1);
        cfg.set_incidence("F1", "F3", 1);
        cfg.set_incidence("S", "F1", 1);
    } else if (fibre == "I2+Ir-fibers") {
        if (r < 2) throw std::invalid_argument("the I_r fibre needs r >= 2");
        cfg.add_curve(rational("F1", -2, tags::fiber));
        cfg.add_curve(rational("F2", -2, tags::fiber));
        cfg.set_incidence("F1", "F2", 2);  // two transversal points
        for (long i = 1; i <= r; ++i) cfg.add_curve(rational("G" + std::to_string(i), -2, tags::fiber));
        if (r == 2)
            cfg.set_incidence("G1", "G2", 2);
        else
            for (long i = 1; i <= r; ++i)
                cfg.set_incidence("G" + std::to_string(i), "G" + std::to_string(i % r + 1), 1);
        cfg.set_incidence("S", "F2", 1);
        cfg.set_incidence("S", "G1", 1);
    } else {
        throw UnknownRecipe("no base surface '" + fibre + "'");
    }
    return cfg;
}

Recipe Recipe::from_json(const nlohmann::json& j) {
    Recipe r;
    r.name = j.at("name").get<std::string>();
    r.base = j.at("base").get<std::string>();
    r.r = j.value("r", 2L);
    for (const auto& b : j.at("blowups")) {
        BlowupStep s;
        s.name = b.at("name").get<std::string>();
        for (const auto& t : b.at("through")) s.through.emplace_back(t[0].get<std::string>(), t[1].get<long>());
        r.blowups.push_back(std::move(s));
    }
    r.strings = j.at("strings").get<std::vector<std::vector<std::string>>>();
    r.expected = j.at("expected").get<std::vector<std::vector<long>>>();
    if (r.expected.size() != r.strings.size()) throw std::invalid_argument(r.name + ": one expected chain per string");
    return r;
}

Recipe find_recipe(const nlohmann::json& recipes, const std::string& name) {
    for (const auto& j : recipes.at("recipes"))
        if (j.at("name").get<std::string>() == name) return Recipe::from_json(j);
    throw UnknownRecipe("no recipe '" + name + "'");
}

ExampleSurface build_example(const Recipe& recipe) {
    ExampleSurface ex;
    ex.recipe = recipe;
    CurveConfiguration cfg = base_surface(recipe.base, recipe.r);
    for (const auto& b : recipe.blowups) cfg = blow_up(cfg, b.name, b.through);
    cfg.minimal = false;

    std::set<std::string> used;
    for (std::size_t i = 0; i < recipe.strings.size(); ++i) {
        const auto& names = recipe.strings[i];
        auto chain = chain_of(cfg, names);
        if (!chain) throw std::logic_error(recipe.name + ": string " + std::to_string(i + 1) + " is not a chain");
        if (*chain != recipe.expected[i])
            throw std::logic_error(recipe.name + ": string " + std::to_string(i + 1) + " is " + join(*chain) +
                                   ", expected " + join(recipe.expected[i]));
        ChainRecognition rec = recognize_tchain(*chain);
        if (rec.kind != ChainKind::TProper)
            throw std::logic_error(recipe.name + ": " + join(*chain) + " is not a T-chain of a non-Du Val singularity");
        for (const auto& n : names)
            if (!used.insert(n).second) throw std::logic_error(recipe.name + ": strings share '" + n + "'");
        ex.chains.push_back(*chain);
        ex.singularities.push_back(*rec.singularity);
        assign_codiscrepancy(cfg, names);
        cfg.strings.push_back(names);
    }
    for (std::size_t i = 0; i < recipe.strings.size(); ++i)
        for (std::size_t j = i + 1; j < recipe.strings.size(); ++j)
            for (const auto& a : recipe.strings[i])
                for (const auto& b : recipe.strings[j])
                    if (cfg.incidence(a, b) != 0) throw std::logic_error(recipe.name + ": strings meet at " + a + "." + b);

    for (const auto& c : cfg.curves()) {
        if (c.self_intersection != -1 || c.genus != 0) continue;
        bool all = std::all_of(recipe.strings.begin(), recipe.strings.end(), [&](const auto& s) {
            return std::any_of(s.begin(), s.end(), [&](const std::string& n) { return cfg.incidence(c.name, n) > 0; });
        });
        if (all) ex.connecting.push_back(c.name);
    }
    auto v = check_rules(cfg);
    if (!v.empty()) throw std::logic_error(recipe.name + ": rule " + v[0].rule + " fails on " + v[0].curves[0]);

    ex.ktilde_squared = ktilde_squared(ex.chains);
    const long n = static_cast<long>(recipe.blowups.size());
    if (ex.ktilde_squared != -n)
        throw std::logic_error(recipe.name + ": 1 + sum Delta^2 = " + ex.ktilde_squared.get_str() + " but " +
                               std::to_string(n) + " blowups were made");
    if (cfg.k_squared && *cfg.k_squared != -n) throw std::logic_error("K^2 bookkeeping is off");
    ex.configuration = std::move(cfg);
    return ex;
}

}  // namespace tsurf
