#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "tsurf/cli/scenarios.hpp"
#include "tsurf/curves/examples.hpp"

using namespace tsurf;
using namespace tsurf::cli;

namespace {

int emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out);
    if (!f) {
        std::cerr << "cannot write " << out << "\n";
        return 2;
    }
    f << text;
    return f ? 0 : 2;
}

std::string listing_text(const nlohmann::json& list) {
    std::string s;
    for (const auto& e : list) {
        s += e["name"].get<std::string>() + "  [";
        bool first = true;
        for (const auto& t : e["tags"]) {
            s += (first ? "" : ", ") + t.get<std::string>();
            first = false;
        }
        s += "]\n    " + e["anchor"].get<std::string>() + "\n";
        for (const auto& p : e["params"])
            s += "    --param " + p["name"].get<std::string>() + "=" + p["default"].get<std::string>() + "  (" +
                 p["description"].get<std::string>() + ")\n";
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for T-singular I-surfaces, run as named scenarios"};
    std::string scenario, format = "text", out, tag, dot_recipe, data_dir;
    std::vector<std::string> params;
    std::uint64_t seed = 0;
    int order = 10;
    unsigned jobs = 1;
    bool list = false, no_timing = false;

    app.add_option("--scenario", scenario, "scenario to run, or 'all'");
    app.add_flag("--list", list, "list the scenarios");
    app.add_option("--tag", tag, "with --list: only scenarios carrying this tag");
    app.add_option("--param", params, "override a parameter, k=v (repeatable)");
    app.add_option("--seed", seed, "seed for sampled general forms")->capture_default_str();
    app.add_option("--order", order, "truncation order for germ classification")->capture_default_str();
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_option("--out", out, "write the report here instead of stdout");
    app.add_flag("--no-timing", no_timing, "leave elapsed_ms null so reports compare byte for byte");
    app.add_option("--jobs", jobs, "with --scenario all: worker threads")->capture_default_str();
    app.add_option("--data-dir", data_dir, "fixture directory (default: built-in path or $TSURF_DATA_DIR)");
    app.add_option("--dot", dot_recipe, "print the dual graph of an example recipe in DOT format");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    int modes = (list ? 1 : 0) + (scenario.empty() ? 0 : 1) + (dot_recipe.empty() ? 0 : 1);
    if (modes != 1) {
        std::cerr << "give exactly one of --scenario, --list, --dot\n" << app.help();
        return 2;
    }

    try {
        if (list) {
            auto l = list_scenarios(tag);
            return emit(format == "json" ? l.dump(2) + "\n" : listing_text(l), out);
        }
        RunOptions opts;
        opts.seed = seed;
        opts.order = order;
        opts.timing = !no_timing;
        opts.data_dir = data_dir;
        if (!dot_recipe.empty()) {
            std::string dir = data_dir.empty() ? default_data_dir() : data_dir;
            std::ifstream in(dir + "/recipes.json");
            if (!in) throw Error("cannot read " + dir + "/recipes.json");
            auto ex = build_example(find_recipe(nlohmann::json::parse(in), dot_recipe));
            return emit(ex.configuration.to_dot(dot_recipe), out);
        }
        for (const auto& p : params) {
            auto eq = p.find('=');
            if (eq == std::string::npos || eq == 0) throw ParameterError("--param expects k=v, got '" + p + "'");
            opts.params[p.substr(0, eq)] = p.substr(eq + 1);
        }
        std::vector<Report> reports;
        if (scenario == "all")
            reports = run_all(opts, jobs);
        else
            reports.push_back(run(scenario, opts));

        std::string text;
        if (format == "json") {
            nlohmann::json j;
            if (scenario == "all") {
                j = nlohmann::json::array();
                for (const auto& r : reports) j.push_back(r.to_json());
            } else {
                j = reports.front().to_json();
            }
            text = j.dump(2) + "\n";
        } else {
            for (const auto& r : reports) text += r.text();
            if (reports.size() > 1) {
                std::size_t pass = 0;
                for (const auto& r : reports) pass += r.status == Status::Pass;
                text += std::to_string(pass) + " of " + std::to_string(reports.size()) + " scenarios pass\n";
            }
        }
        int written = emit(text, out);
        if (written) return written;
        int code = 0;
        for (const auto& r : reports) code = std::max(code, r.exit_code());
        return code;
    } catch (const std::exception& e) {
        // unknown scenario, bad parameter, unreadable fixture
        std::cerr << e.what() << "\n";
        return 2;
    }
}
