#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tsurf/curves/configuration.hpp"
#include "tsurf/curves/rules.hpp"

namespace tsurf {

struct IllegalStep : Error {
    std::size_t step;
    IllegalStep(std::size_t s, const std::string& what)
        : Error("step " + std::to_string(s + 1) + ": " + what), step(s) {}
};

// Steps of a replay script:
//   {"op": "blow_down", "curve": C}
//   {"op": "set_flag", "flag": "minimal" | "kodaira_dimension_one", "value": bool}
//   {"op": "assert_kx", "curve": C, "value": "1/10"}
//   {"op": "assert_minus_one_curves", "at_least": k}   (rational (-1)-curves present)
//   {"op": "assert_ktilde", "blowups": n}                (1 + sum Delta^2 = -n over the strings)
// The rules are evaluated on the start configuration and after every step;
// the first violation ends the replay.
struct ScriptStep {
    std::string op;
    nlohmann::json args;
    std::string str() const;
};

struct Script {
    std::string name;
    std::string profile;  // empty for construction scripts
    std::string note;
    nlohmann::json start;  // {"configuration": ...} or {"recipe": name}
    std::vector<ScriptStep> steps;
    std::string expect;  // "contradiction" or "survives"

    static Script from_json(const nlohmann::json& j);
};

struct Verdict {
    bool contradiction = false;
    std::optional<std::size_t> at_step;  // index of the step after which it fired; none = at the start
    std::vector<Violation> violations;
    std::vector<std::string> trace;
    CurveConfiguration final_configuration;

    std::string str() const;
};

Verdict replay_script(const CurveConfiguration& start, const std::vector<ScriptStep>& steps);

// resolves the start (recipes from `recipes`) and replays
Verdict replay_script(const Script& script, const nlohmann::json& recipes);

}  // namespace tsurf
