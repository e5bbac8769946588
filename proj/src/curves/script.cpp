#include "tsurf/curves/script.hpp"

#include "tsurf/curves/examples.hpp"
#include "tsurf/tsing/tchain.hpp"

namespace tsurf {

std::string ScriptStep::str() const {
    if (op == "blow_down") return "blow down " + args.at("curve").get<std::string>();
    if (op == "set_flag")
        return std::string(args.at("value").get<bool>() ? "assume " : "drop ") + args.at("flag").get<std::string>();
    if (op == "assert_kx") return "K_X." + args.at("curve").get<std::string>() + " = " + args.at("value").get<std::string>();
    if (op == "assert_minus_one_curves")
        return "at least " + std::to_string(args.at("at_least").get<long>()) + " (-1)-curves";
    if (op == "assert_ktilde") return "1 + sum Delta^2 = -" + std::to_string(args.at("blowups").get<long>());
    return op;
}

Script Script::from_json(const nlohmann::json& j) {
    Script s;
    s.name = j.at("name").get<std::string>();
    s.profile = j.value("profile", "");
    s.note = j.value("note", "");
    s.start = j.at("start");
    s.expect = j.at("expect").get<std::string>();
    if (s.expect != "contradiction" && s.expect != "survives")
        throw std::invalid_argument(s.name + ": expect must be 'contradiction' or 'survives'");
    for (const auto& st : j.at("steps")) s.steps.push_back({st.at("op").get<std::string>(), st});
    return s;
}

std::string Verdict::str() const {
    if (!contradiction) return "survives";
    std::string s = "contradiction";
    s += at_step ? " after step " + std::to_string(*at_step + 1) : " at the start";
    for (const auto& v : violations) {
        s += "; rule " + v.rule + " on";
        for (const auto& c : v.curves) s += " " + c;
        s += " (" + v.detail + ")";
    }
    return s;
}

namespace {

void apply(CurveConfiguration& cfg, const ScriptStep& st, std::size_t i) {
    try {
        if (st.op == "blow_down") {
            cfg = blow_down(cfg, st.args.at("curve").get<std::string>());
        } else if (st.op == "set_flag") {
            std::string f = st.args.at("flag").get<std::string>();
            bool v = st.args.at("value").get<bool>();
            if (f == "minimal")
                cfg.minimal = v;
            else if (f == "kodaira_dimension_one")
                cfg.kodaira_dimension_one = v;
            else
                throw IllegalStep(i, "unknown flag '" + f + "'");
        } else if (st.op == "assert_kx") {
            std::string c = st.args.at("curve").get<std::string>();
            Rational want(st.args.at("value").get<std::string>());
            want.canonicalize();
            Rational got = kx_pairing(cfg, c);
            if (got != want) throw IllegalStep(i, "K_X." + c + " is " + got.get_str() + ", not " + want.get_str());
        } else if (st.op == "assert_minus_one_curves") {
            long want = st.args.at("at_least").get<long>();
            long n = 0;
            for (const auto& c : cfg.curves()) n += c.self_intersection == -1 && c.genus == 0;
            if (n < want)
                throw IllegalStep(i, "only " + std::to_string(n) + " (-1)-curves, at least " + std::to_string(want) + " asserted");
        } else if (st.op == "assert_ktilde") {
            long n = st.args.at("blowups").get<long>();
            std::vector<std::vector<long>> chains;
            for (const auto& s : cfg.strings) {
                auto ch = chain_of(cfg, s);
                if (!ch) throw IllegalStep(i, "a carried string is no longer a chain");
                chains.push_back(*ch);
            }
            Rational k = ktilde_squared(chains);
            if (k != -n) throw IllegalStep(i, "1 + sum Delta^2 = " + k.get_str() + ", not -" + std::to_string(n));
            if (cfg.k_squared && *cfg.k_squared != -n)
                throw IllegalStep(i, "ambient K^2 is " + std::to_string(*cfg.k_squared));
        } else {
            throw IllegalStep(i, "unknown operation '" + st.op + "'");
        }
    } catch (const IllegalStep&) {
        throw;
    } catch (const std::exception& e) {
        throw IllegalStep(i, st.str() + ": " + e.what());
    }
}

}  // namespace

Verdict replay_script(const CurveConfiguration& start, const std::vector<ScriptStep>& steps) {
    Verdict v;
    CurveConfiguration cfg = start;
    cfg.validate();
    v.violations = check_rules(cfg);
    for (std::size_t i = 0; v.violations.empty() && i < steps.size(); ++i) {
        apply(cfg, steps[i], i);
        cfg.validate();
        v.trace.push_back(steps[i].str());
        v.violations = check_rules(cfg);
        if (!v.violations.empty()) v.at_step = i;
    }
    v.contradiction = !v.violations.empty();
    v.final_configuration = std::move(cfg);
    return v;
}

Verdict replay_script(const Script& script, const nlohmann::json& recipes) {
    CurveConfiguration start;
    if (script.start.contains("configuration"))
        start = CurveConfiguration::from_json(script.start.at("configuration"));
    else if (script.start.contains("recipe"))
        start = build_example(find_recipe(recipes, script.start.at("recipe").get<std::string>())).configuration;
    else
        throw std::invalid_argument(script.name + ": start needs a configuration or a recipe");
    return replay_script(start, script.steps);
}

}  // namespace tsurf
