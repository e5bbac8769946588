#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "tsurf/core/errors.hpp"
#include "tsurf/core/polynomial.hpp"

namespace tsurf::cli {

struct UnknownScenario : Error {
    using Error::Error;
};
// bad --param: unknown name, or a value that does not parse as its type
struct ParameterError : Error {
    using Error::Error;
};

namespace provenance {
inline constexpr const char* published = "published";    // value printed in the source
inline constexpr const char* elementary = "elementary";  // follows by inspection
inline constexpr const char* computed = "computed";      // derived here, not printed
}  // namespace provenance

struct Check {
    std::string desc;
    std::string expected;
    std::string actual;
    std::string provenance;
    bool passed = false;
};

enum class Status { Pass, Fail, Error };
std::string to_string(Status s);

struct Report {
    std::string scenario;
    Status status = Status::Error;
    std::vector<Check> checks;
    std::map<std::string, std::string> params;  // every parameter, defaults filled in
    std::uint64_t seed = 0;
    int order = 10;
    std::string error;         // set when status is Error
    double elapsed_ms = -1;    // negative: timing disabled

    nlohmann::json to_json() const;
    std::string text() const;
    int exit_code() const;  // 0 pass, 1 fail, 2 error
};

struct RunOptions {
    std::uint64_t seed = 0;
    int order = 10;
    std::map<std::string, std::string> params;  // overrides
    bool timing = true;
    std::string data_dir;  // empty: the compiled-in default
};

enum class ParamType { Rational, Integer };

struct ParamSpec {
    std::string name;
    ParamType type;
    std::string default_value;
    std::string description;
};

class Context;

struct Scenario {
    std::string name;
    std::vector<std::string> tags;
    std::string anchor;  // the statement being checked, in a few words
    std::string description;
    std::vector<ParamSpec> params;
    std::function<void(Context&)> body;
};

// what a scenario body sees: parameters, fixtures and the check sink
class Context {
public:
    Context(const Scenario& s, const RunOptions& opts, std::map<std::string, std::string> params);

    std::uint64_t seed() const { return opts_.seed; }
    int order() const { return opts_.order; }
    Rational rational(const std::string& name) const;
    long integer(const std::string& name) const;
    nlohmann::json data(const std::string& file) const;

    void check(const std::string& desc, const std::string& expected, const std::string& actual, const char* prov);
    void check(const std::string& desc, bool ok, const std::string& expected, const std::string& actual,
               const char* prov);

    std::vector<Check> checks;

private:
    const Scenario& scenario_;
    const RunOptions& opts_;
    std::map<std::string, std::string> params_;
};

// registry order is the listing order; names are unique
const std::vector<Scenario>& scenarios();
const Scenario& find_scenario(const std::string& name);  // UnknownScenario

// every entry when tag is empty
nlohmann::json list_scenarios(const std::string& tag = "");

// UnknownScenario / ParameterError before anything runs; exceptions from the
// scenario body become status Error
Report run(const std::string& name, const RunOptions& opts = {});
// all scenarios, on `jobs` threads, reports in name order
std::vector<Report> run_all(const RunOptions& opts = {}, unsigned jobs = 1);

std::string default_data_dir();

}  // namespace tsurf::cli
