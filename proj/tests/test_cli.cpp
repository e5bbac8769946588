#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "tsurf/cli/scenarios.hpp"

using namespace tsurf;
using namespace tsurf::cli;

namespace {

RunOptions quiet() {
    RunOptions o;
    o.timing = false;
    return o;
}

bool all_checks_pass(const Report& r) {
    return std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.passed; });
}

int tool(const std::string& args, const std::string& out_file = "") {
    std::string cmd = std::string("\"") + TSURF_TOOL + "\" " + args + " > " + (out_file.empty() ? "/dev/null" : out_file) +
                      " 2>/dev/null";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("tsurf-cli-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("catalog holds the named scenarios once each") {
    std::set<std::string> names;
    for (const auto& s : scenarios()) {
        CHECK_MESSAGE(names.insert(s.name).second, s.name);
        CHECK_FALSE(s.anchor.empty());
        CHECK_FALSE(s.tags.empty());
        for (const auto& p : s.params) CHECK_FALSE(p.default_value.empty());
    }
    for (const std::string n : {"table1", "table2", "gale-rays", "generators", "binomials", "derive-r11", "cor-pfaffian",
                                "lemma-smoothing", "hilbert-series", "wps51", "family-munu", "prop-no-5-2",
                                "examples-figures"})
        CHECK_MESSAGE(names.count(n), n);
    CHECK(names.size() >= 13);
}

TEST_CASE("listing is stable, filterable and round-trips through JSON") {
    auto a = list_scenarios(), b = list_scenarios();
    CHECK(a == b);
    CHECK(nlohmann::json::parse(a.dump()) == a);
    CHECK(a.size() == scenarios().size());
    auto two = list_scenarios("two-singularities");
    std::set<std::string> got;
    for (const auto& e : two) got.insert(e["name"].get<std::string>());
    CHECK(got == std::set<std::string>{"table2", "family-munu", "prop-no-5-2", "examples-figures"});
    CHECK(list_scenarios("no-such-tag").empty());
    CHECK(a[0]["anchor"].is_string());
}

TEST_CASE("named scenarios pass") {
    for (const std::string n : {"table1", "cor-pfaffian", "prop-no-5-2"}) {
        Report r = run(n, quiet());
        CHECK_MESSAGE(r.status == Status::Pass, r.text());
        CHECK(r.exit_code() == 0);
    }
}

TEST_CASE("printed formulas that disagree with the relations fail their scenarios") {
    Report a = run("lemma-smoothing", quiet());
    CHECK(a.status == Status::Fail);
    CHECK(a.exit_code() == 1);
    auto bad = std::count_if(a.checks.begin(), a.checks.end(), [](const Check& c) { return !c.passed; });
    CHECK(bad == 1);
    Report b = run("smoothing-elimination", quiet());
    CHECK(b.status == Status::Fail);
}

TEST_CASE("unknown scenarios and bad parameters are usage errors") {
    CHECK_THROWS_AS(run("table3"), UnknownScenario);
    RunOptions o = quiet();
    o.params = {{"kappa", "1"}};
    CHECK_THROWS_AS(run("wps51", o), ParameterError);
    o.params = {{"theta", "two"}};
    CHECK_THROWS_AS(run("wps51", o), ParameterError);
    o.params = {{"theta", "1/0"}};
    CHECK_THROWS_AS(run("wps51", o), ParameterError);
    o.params = {{"theta", "1"}};
    CHECK_THROWS_AS(run("table1", o), ParameterError);  // table1 takes none
    CHECK_THROWS_AS(run_all(RunOptions{0, 10, {{"kappa", "1"}}, false, ""}), ParameterError);
    RunOptions z = quiet();
    z.order = 0;
    CHECK_THROWS_AS(run("table1", z), ParameterError);
}

TEST_CASE("a missing fixture directory is an error report") {
    RunOptions o = quiet();
    o.data_dir = "/nonexistent";
    Report r = run("binomials", o);
    CHECK(r.status == Status::Error);
    CHECK(r.exit_code() == 2);
    CHECK(r.error.find("/nonexistent") != std::string::npos);
    CHECK(r.to_json().contains("error"));
}

TEST_CASE("report schema") {
    Report r = run("table2", quiet());
    auto j = r.to_json();
    for (const std::string k : {"scenario", "status", "checks", "seed", "elapsed_ms"}) CHECK_MESSAGE(j.contains(k), k);
    CHECK(j["elapsed_ms"].is_null());
    CHECK(j["status"] == "pass");
    for (const auto& c : j["checks"]) {
        for (const std::string k : {"desc", "expected", "actual", "provenance"}) CHECK(c.contains(k));
        std::string p = c["provenance"];
        CHECK((p == "published" || p == "elementary" || p == "computed"));
    }
    RunOptions timed;
    CHECK(run("table2", timed).to_json()["elapsed_ms"].is_number());
}

TEST_CASE("parameter overrides change the regimes checked") {
    RunOptions o = quiet();
    o.params = {{"theta", "0"}, {"tau", "-7/2"}};
    Report r = run("wps51", o);
    CHECK_MESSAGE(r.status == Status::Pass, r.text());
    CHECK(r.params.at("tau") == "-7/2");
    o.params = {{"mu", "5"}, {"nu", "0"}};
    Report m = run("family-munu", o);
    CHECK_MESSAGE(m.status == Status::Pass, m.text());
    CHECK(m.checks.front().expected == "1/4(1,1)");
    o.params = {{"nu", "2"}};
    CHECK(run("family-munu", o).checks.front().expected == "not on the surface");
}

TEST_CASE("property: seeded scenarios pass for other seeds") {
    for (std::uint64_t seed : {1u, 2u, 17u}) {
        RunOptions o = quiet();
        o.seed = seed;
        for (const std::string n : {"wps51", "canonical-charts", "family-munu"}) {
            Report r = run(n, o);
            CHECK_MESSAGE(r.status == Status::Pass, "seed " << seed << "\n" << r.text());
        }
    }
}

TEST_CASE("property: status is pass exactly when every check passes; the suite is deterministic") {
    auto a = run_all(quiet());
    auto b = run_all(quiet(), 4);
    REQUIRE(a.size() == scenarios().size());
    REQUIRE(b.size() == a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) CHECK(a[i - 1].scenario < a[i].scenario);
        CHECK(a[i].status != Status::Error);
        CHECK((a[i].status == Status::Pass) == all_checks_pass(a[i]));
        CHECK(a[i].to_json().dump() == b[i].to_json().dump());
    }
}

TEST_CASE("command line: exit codes, outputs, DOT export") {
    CHECK(tool("--scenario table1") == 0);
    CHECK(tool("--scenario lemma-smoothing") == 1);
    CHECK(tool("--scenario nope") == 2);
    CHECK(tool("--scenario wps51 --param theta=x") == 2);
    CHECK(tool("--scenario wps51 --param theta") == 2);
    CHECK(tool("--scenario table1 --format yaml") == 2);
    CHECK(tool("") == 2);
    CHECK(tool("--list --scenario table1") == 2);

    auto list = scratch("list.json");
    REQUIRE(tool("--list --format json --tag toric", list.string()) == 0);
    auto j = nlohmann::json::parse(slurp(list));
    CHECK(j.size() == 3);

    auto report = scratch("report.json");
    REQUIRE(tool("--scenario wps51 --seed 3 --param tau=0 --format json --no-timing --out " + report.string()) == 0);
    auto r = nlohmann::json::parse(slurp(report));
    CHECK(r["scenario"] == "wps51");
    CHECK(r["seed"] == 3);
    CHECK(r["params"]["tau"] == "0");

    auto dot = scratch("g.dot");
    REQUIRE(tool("--dot III-fiber", dot.string()) == 0);
    CHECK(slurp(dot).rfind("graph \"III-fiber\" {", 0) == 0);
    CHECK(tool("--dot nowhere") == 2);
    std::filesystem::remove_all(report.parent_path());
}
