#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "kgvac/suite.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

struct CommonOpts {
    double tolerance_scale = 1.0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int jobs = 1;
    std::string format = "json";
    std::string out_dir;
    bool timing = false;
};

std::string output_dir(const CommonOpts& o) {
    if (!o.out_dir.empty()) return o.out_dir;
    if (const char* env = std::getenv("KGVAC_OUT_DIR")) return env;
    return ".";
}

kgvac::Scenario load_with_overrides(const std::string& path, const CommonOpts& o) {
    kgvac::Scenario sc = kgvac::load_scenario_file(path);
    sc.tolerance_scale *= o.tolerance_scale;
    if (o.seed_set) sc.seed = o.seed;
    return sc;
}

int write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return 2;
    }
    out << text;
    return 0;
}

void print_summary(const kgvac::SuiteReport& rep) {
    for (const auto& c : rep.checks) {
        std::string status = c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL");
        std::cout << "[" << status << "] " << rep.scenario.name << " :: " << c.id;
        if (!c.skipped)
            std::cout << "  value=" << c.value << " tol" << (c.greater_is_pass ? ">" : "<=")
                      << c.tolerance;
        if (!c.note.empty()) std::cout << "  (" << c.note << ")";
        std::cout << "\n";
    }
    std::cout << (rep.passed ? "PASSED" : "FAILED") << " " << rep.scenario.name << " in "
              << rep.elapsed_seconds << " s\n";
}

// Runs scenarios (possibly across workers); reports are merged in input order.
std::vector<kgvac::SuiteReport> run_all(const std::vector<kgvac::Scenario>& scenarios,
                                        int jobs) {
    std::vector<kgvac::SuiteReport> reports(scenarios.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < scenarios.size(); ++i) reports[i] = kgvac::run_suite(scenarios[i]);
        return reports;
    }
    std::vector<std::future<kgvac::SuiteReport>> futs;
    for (const auto& sc : scenarios)
        futs.push_back(std::async(std::launch::async, [sc] { return kgvac::run_suite(sc); }));
    for (size_t i = 0; i < futs.size(); ++i) reports[i] = futs[i].get();
    return reports;
}

int emit_reports(const std::vector<kgvac::SuiteReport>& reports, const CommonOpts& opts) {
    fs::create_directories(output_dir(opts));
    bool all_pass = true;
    for (const auto& rep : reports) {
        print_summary(rep);
        ordered_json j = kgvac::report_to_json(rep, opts.timing);
        fs::path out = fs::path(output_dir(opts)) / (rep.scenario.name + ".report.json");
        if (int rc = write_text(out.string(), j.dump(2) + "\n")) return rc;
        if (!rep.passed) all_pass = false;
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"conserved complex structures for lattice Klein-Gordon fields"};
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--tolerance-scale", opts.tolerance_scale,
                   "multiply every check tolerance");
    auto* seed_opt = app.add_option("--seed", opts.seed, "override the scenario RNG seed");
    app.add_option("--jobs", opts.jobs, "scenario-level worker count");
    app.add_option("--format", opts.format, "report format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", opts.out_dir, "output directory (default $KGVAC_OUT_DIR or .)");
    app.add_flag("--timing", opts.timing, "include wall-clock in the JSON report");

    std::vector<std::string> verify_files;
    auto* verify = app.add_subcommand("verify", "run the verification suite on scenarios");
    verify->add_option("scenarios", verify_files, "scenario files")->required();

    std::string sweep_file, sweep_param;
    auto* sweep = app.add_subcommand("sweep", "run a scenario over a parameter range");
    sweep->add_option("scenario", sweep_file, "scenario file")->required();
    sweep->add_option("--param", sweep_param, "key=a:b:n over a numeric scenario key")
        ->required();

    std::string modes_file, modes_csv_path;
    auto* modes = app.add_subcommand("modes", "emit per-mode trajectories");
    modes->add_option("scenario", modes_file, "scenario file")->required();
    modes->add_option("--csv", modes_csv_path, "output CSV path")->required();

    std::vector<std::string> merge_files;
    auto* report_cmd = app.add_subcommand("report", "merge report files");
    report_cmd->add_option("--merge", merge_files, "report JSON files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    opts.seed_set = seed_opt->count() > 0;

    try {
        if (*verify) {
            std::vector<kgvac::Scenario> scenarios;
            for (const auto& f : verify_files) scenarios.push_back(load_with_overrides(f, opts));
            return emit_reports(run_all(scenarios, opts.jobs), opts);
        }
        if (*sweep) {
            size_t eq = sweep_param.find('=');
            size_t c1 = sweep_param.find(':', eq);
            size_t c2 = sweep_param.find(':', c1 + 1);
            if (eq == std::string::npos || c1 == std::string::npos || c2 == std::string::npos)
                throw std::invalid_argument("--param expects key=a:b:n");
            std::string key = sweep_param.substr(0, eq);
            double a = std::stod(sweep_param.substr(eq + 1, c1 - eq - 1));
            double b = std::stod(sweep_param.substr(c1 + 1, c2 - c1 - 1));
            int count = std::stoi(sweep_param.substr(c2 + 1));
            if (count < 1) throw std::invalid_argument("--param needs n >= 1");
            kgvac::Scenario base = load_with_overrides(sweep_file, opts);
            std::vector<kgvac::Scenario> scenarios;
            for (int i = 0; i < count; ++i) {
                double v = count == 1 ? a : a + (b - a) * i / (count - 1.0);
                kgvac::Scenario sc = base;
                if (key == "mass") sc.mass = v;
                else if (key == "coupling") sc.coupling = v;
                else if (key == "hubble") sc.hubble = v;
                else if (key == "curvature_offset") sc.curvature_offset = v;
                else if (key == "points") sc.points = static_cast<int>(v);
                else if (key == "length") sc.length = v;
                else throw std::invalid_argument("unsupported sweep key '" + key + "'");
                std::ostringstream nm;
                nm << base.name << "." << key << "=" << v;
                sc.name = nm.str();
                scenarios.push_back(sc);
            }
            return emit_reports(run_all(scenarios, opts.jobs), opts);
        }
        if (*modes) {
            kgvac::Scenario sc = load_with_overrides(modes_file, opts);
            return write_text(modes_csv_path, kgvac::modes_csv(sc));
        }
        if (*report_cmd) {
            std::vector<ordered_json> parts;
            for (const auto& f : merge_files) {
                std::ifstream in(f);
                if (!in) throw std::runtime_error("cannot open report '" + f + "'");
                parts.push_back(ordered_json::parse(in));
            }
            ordered_json merged = kgvac::merge_reports(parts);
            fs::create_directories(output_dir(opts));
            fs::path out = fs::path(output_dir(opts)) / "merged.report.json";
            if (int rc = write_text(out.string(), merged.dump(2) + "\n")) return rc;
            std::cout << out.string() << "\n";
            return merged["passed"].get<bool>() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
