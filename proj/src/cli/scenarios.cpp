#include "tsurf/cli/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "tsurf/cli/catalog.hpp"

namespace tsurf::cli {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Error: return "error";
    }
    return "error";
}

nlohmann::json Report::to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks)
        cs.push_back({{"desc", c.desc},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"provenance", c.provenance},
                      {"passed", c.passed}});
    nlohmann::json j{{"scenario", scenario}, {"status", to_string(status)}, {"checks", cs},
                     {"seed", seed},         {"order", order},              {"params", params}};
    j["elapsed_ms"] = elapsed_ms < 0 ? nlohmann::json(nullptr) : nlohmann::json(elapsed_ms);
    j["anchor"] = find_scenario(scenario).anchor;
    if (status == Status::Error) j["error"] = error;
    return j;
}

std::string Report::text() const {
    std::ostringstream os;
    os << scenario << ": " << to_string(status);
    if (elapsed_ms >= 0) os << " (" << static_cast<long>(elapsed_ms) << " ms)";
    os << "\n";
    for (const auto& c : checks) {
        os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.desc << " {" << c.provenance << "}\n";
        if (!c.passed) os << "      expected: " << c.expected << "\n      actual:   " << c.actual << "\n";
    }
    if (status == Status::Error) os << "  error: " << error << "\n";
    return os.str();
}

int Report::exit_code() const {
    switch (status) {
        case Status::Pass: return 0;
        case Status::Fail: return 1;
        case Status::Error: return 2;
    }
    return 2;
}

Context::Context(const Scenario& s, const RunOptions& opts, std::map<std::string, std::string> params)
    : scenario_(s), opts_(opts), params_(std::move(params)) {}

Rational Context::rational(const std::string& name) const {
    auto it = params_.find(name);
    if (it == params_.end()) throw std::logic_error(scenario_.name + " reads undeclared parameter " + name);
    Rational q(it->second);
    q.canonicalize();
    return q;
}

long Context::integer(const std::string& name) const {
    auto it = params_.find(name);
    if (it == params_.end()) throw std::logic_error(scenario_.name + " reads undeclared parameter " + name);
    return std::stol(it->second);
}

nlohmann::json Context::data(const std::string& file) const {
    std::string dir = opts_.data_dir.empty() ? default_data_dir() : opts_.data_dir;
    std::ifstream in(dir + "/" + file);
    if (!in) throw Error("cannot read data file " + dir + "/" + file);
    return nlohmann::json::parse(in);
}

void Context::check(const std::string& desc, const std::string& expected, const std::string& actual,
                    const char* prov) {
    check(desc, expected == actual, expected, actual, prov);
}

void Context::check(const std::string& desc, bool ok, const std::string& expected, const std::string& actual,
                    const char* prov) {
    checks.push_back({desc, expected, actual, prov, ok});
}

const std::vector<Scenario>& scenarios() {
    static const std::vector<Scenario> all = [] {
        auto v = build_catalog();
        std::vector<std::string> names;
        for (const auto& s : v) names.push_back(s.name);
        std::sort(names.begin(), names.end());
        if (std::adjacent_find(names.begin(), names.end()) != names.end())
            throw std::logic_error("duplicate scenario name");
        return v;
    }();
    return all;
}

const Scenario& find_scenario(const std::string& name) {
    for (const auto& s : scenarios())
        if (s.name == name) return s;
    throw UnknownScenario("no scenario named '" + name + "'");
}

nlohmann::json list_scenarios(const std::string& tag) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : scenarios()) {
        if (!tag.empty() && std::find(s.tags.begin(), s.tags.end(), tag) == s.tags.end()) continue;
        nlohmann::json ps = nlohmann::json::array();
        for (const auto& p : s.params)
            ps.push_back({{"name", p.name},
                          {"type", p.type == ParamType::Rational ? "rational" : "integer"},
                          {"default", p.default_value},
                          {"description", p.description}});
        out.push_back({{"name", s.name},
                       {"tags", s.tags},
                       {"anchor", s.anchor},
                       {"description", s.description},
                       {"params", ps}});
    }
    return out;
}

namespace {

void validate_value(const ParamSpec& p, const std::string& value) {
    try {
        if (p.type == ParamType::Rational) {
            Rational q(value);
            if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        } else {
            std::size_t used = 0;
            std::stol(value, &used);
            if (used != value.size()) throw std::invalid_argument("trailing characters");
        }
    } catch (const std::exception&) {
        throw ParameterError("parameter " + p.name + " expects " +
                             (p.type == ParamType::Rational ? "a rational such as -3/2" : "an integer") + ", got '" +
                             value + "'");
    }
}

std::map<std::string, std::string> bind(const Scenario& s, const std::map<std::string, std::string>& overrides,
                                        bool ignore_foreign) {
    std::map<std::string, std::string> out;
    for (const auto& p : s.params) out[p.name] = p.default_value;
    for (const auto& [k, v] : overrides) {
        auto it = std::find_if(s.params.begin(), s.params.end(), [&](const ParamSpec& p) { return p.name == k; });
        if (it == s.params.end()) {
            if (ignore_foreign) continue;
            throw ParameterError("scenario " + s.name + " has no parameter '" + k + "'");
        }
        validate_value(*it, v);
        out[k] = v;
    }
    return out;
}

Report execute(const Scenario& s, const RunOptions& opts, std::map<std::string, std::string> params) {
    Report r;
    r.scenario = s.name;
    r.seed = opts.seed;
    r.order = opts.order;
    r.params = params;
    Context ctx(s, opts, std::move(params));
    auto start = std::chrono::steady_clock::now();
    try {
        s.body(ctx);
        r.checks = std::move(ctx.checks);
        if (r.checks.empty()) throw std::logic_error("scenario made no checks");
        r.status = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.passed; })
                       ? Status::Pass
                       : Status::Fail;
    } catch (const std::exception& e) {
        r.checks = std::move(ctx.checks);
        r.status = Status::Error;
        r.error = e.what();
    }
    if (opts.timing)
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

Report run(const std::string& name, const RunOptions& opts) {
    const Scenario& s = find_scenario(name);
    if (opts.order < 1) throw ParameterError("--order must be positive");
    return execute(s, opts, bind(s, opts.params, false));
}

std::vector<Report> run_all(const RunOptions& opts, unsigned jobs) {
    if (opts.order < 1) throw ParameterError("--order must be positive");
    const auto& all = scenarios();
    for (const auto& [k, v] : opts.params) {
        bool known = std::any_of(all.begin(), all.end(), [&](const Scenario& s) {
            return std::any_of(s.params.begin(), s.params.end(), [&](const ParamSpec& p) { return p.name == k; });
        });
        if (!known) throw ParameterError("no scenario has a parameter '" + k + "'");
    }
    std::vector<std::map<std::string, std::string>> bound;
    for (const auto& s : all) bound.push_back(bind(s, opts.params, true));

    std::vector<Report> out(all.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < all.size(); i = next++) out[i] = execute(all[i], opts, bound[i]);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(all.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::sort(out.begin(), out.end(), [](const Report& a, const Report& b) { return a.scenario < b.scenario; });
    return out;
}

std::string default_data_dir() {
    if (const char* env = std::getenv("TSURF_DATA_DIR")) return env;
    return TSURF_DATA_DIR;
}

}  // namespace tsurf::cli
