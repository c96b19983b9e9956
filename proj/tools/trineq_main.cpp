// trineq — verification and exploration toolkit for matrix rearrangement and
// trace inequalities.
//
//   trineq verify <suite>|all   seeded-ensemble checks of the proved statements
//   trineq eval <id> ...        one checker evaluation from matrix files
//   trineq hunt --config f      randomized counterexample search
//   trineq registry [--id ID]   the machine-readable inequality catalog
//
// Exit codes are stable API: 0 holds, 1 conjecture-violation evidence,
// 2 proved-statement violation (a numerics defect), 3 usage/config error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "trineq/hunter.hpp"
#include "trineq/matrix_io.hpp"
#include "trineq/suites.hpp"
#include "trineq/version.hpp"

namespace fs = std::filesystem;
using namespace trineq;

namespace {

std::string utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

fs::path default_out_dir() {
    if (const char* env = std::getenv("TRINEQ_OUT_DIR")) return fs::path(env);
    return fs::current_path();
}

// "2..6" or "2,4,5"
std::vector<int> parse_dims(const std::string& s) {
    std::vector<int> dims;
    const auto dots = s.find("..");
    if (dots != std::string::npos) {
        const int lo = std::stoi(s.substr(0, dots));
        const int hi = std::stoi(s.substr(dots + 2));
        if (lo < 1 || hi < lo) throw ConfigError("bad dims range: " + s);
        for (int d = lo; d <= hi; ++d) dims.push_back(d);
        return dims;
    }
    std::size_t pos = 0;
    while (pos < s.size()) {
        const auto comma = s.find(',', pos);
        const std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        dims.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (dims.empty()) throw ConfigError("empty dims list");
    return dims;
}

// "1,1.5,2" with "inf" accepted.
std::vector<double> parse_list(const std::string& s) {
    std::vector<double> vals;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto comma = s.find(',', pos);
        const std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok == "inf" || tok == "Inf" || tok == "INF")
            vals.push_back(std::numeric_limits<double>::infinity());
        else
            vals.push_back(std::stod(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (vals.empty()) throw ConfigError("empty value list");
    return vals;
}

json load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid JSON config: ") + e.what());
    }
    return j;
}

void write_manifest(const fs::path& results_path, const std::string& command,
                    const std::string& config_path, const json& overrides,
                    const json& effective_config) {
    const json manifest{{"command", command},
                        {"config_path", config_path.empty() ? json() : json(config_path)},
                        {"overrides", overrides},
                        {"started_at", utc_now()},
                        {"tool_version", kVersion},
                        {"results_path", results_path.string()},
                        {"effective_config", effective_config}};
    fs::path mpath = results_path;
    mpath += ".manifest.json";
    std::ofstream out(mpath);
    out << manifest.dump(2) << "\n";
}

int fail_usage(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 3;
}

// ── verify ────────────────────────────────────────────────────────────────

struct VerifyCli {
    std::string suite = "all";
    std::string dims, p, r, s, t;
    int samples = -1;
    std::uint64_t seed = 0;
    bool seed_set = false;
    double tol = -1.0, scale = -1.0;
    int panels = -1;
    double u_min = std::nan(""), u_max = std::nan(""), quad_tol = -1.0;
    std::string out_path, config_path;
};

int cmd_verify(const VerifyCli& cli) {
    VerifyConfig cfg;
    json overrides = json::object();
    if (!cli.config_path.empty()) {
        const json file = load_config_file(cli.config_path);
        if (file.contains("tolerances") && file["tolerances"].contains("verdict"))
            cfg.tolerance = file["tolerances"]["verdict"].get<double>();
        if (file.contains("quadrature")) cfg.quad = QuadratureConfig::from_json(file["quadrature"]);
        if (file.contains("ensembles") && file["ensembles"].contains("scale"))
            cfg.scale = file["ensembles"]["scale"].get<double>();
        if (file.contains("verify")) {
            const json& v = file["verify"];
            if (v.contains("dims")) cfg.dims = v["dims"].get<std::vector<int>>();
            if (v.contains("samples")) cfg.samples = v["samples"].get<int>();
            if (v.contains("seed")) cfg.seed = v["seed"].get<std::uint64_t>();
        }
    }
    if (!cli.dims.empty()) { cfg.dims = parse_dims(cli.dims); overrides["dims"] = cli.dims; }
    if (cli.samples >= 0) { cfg.samples = cli.samples; overrides["samples"] = cli.samples; }
    if (cli.seed_set) { cfg.seed = cli.seed; overrides["seed"] = cli.seed; }
    if (cli.tol > 0) { cfg.tolerance = cli.tol; overrides["tol"] = cli.tol; }
    if (cli.scale > 0) { cfg.scale = cli.scale; overrides["scale"] = cli.scale; }
    if (!cli.p.empty()) { cfg.p_values = parse_list(cli.p); overrides["p"] = cli.p; }
    if (!cli.r.empty()) { cfg.r_values = parse_list(cli.r); overrides["r"] = cli.r; }
    if (!cli.s.empty()) { cfg.s_values = parse_list(cli.s); overrides["s"] = cli.s; }
    if (!cli.t.empty()) { cfg.t_values = parse_list(cli.t); overrides["t"] = cli.t; }
    if (cli.panels > 0) { cfg.quad.panels = cli.panels; overrides["panels"] = cli.panels; }
    if (!std::isnan(cli.u_min)) { cfg.quad.u_min = cli.u_min; overrides["umin"] = cli.u_min; }
    if (!std::isnan(cli.u_max)) { cfg.quad.u_max = cli.u_max; overrides["umax"] = cli.u_max; }
    if (cli.quad_tol > 0) {
        cfg.quad.target_rel_error = cli.quad_tol;
        overrides["quad-tol"] = cli.quad_tol;
    }

    fs::path out = cli.out_path.empty() ? default_out_dir() / "verify_results.ndjson"
                                        : fs::path(cli.out_path);

    // Validate the suite name and all grids before touching the filesystem.
    validate_suite_config(cli.suite, cfg);

    std::ofstream results(out);
    if (!results) throw ConfigError("cannot open results file: " + out.string());
    write_manifest(out, "verify " + cli.suite, cli.config_path, overrides, cfg.to_json());

    const std::uint64_t violations = run_verify(cli.suite, cfg, results);
    std::cout << "verify " << cli.suite << ": " << (violations == 0 ? "ok" : "VIOLATIONS")
              << " (results: " << out.string() << ")\n";
    return violations == 0 ? 0 : 2;
}

// ── eval ──────────────────────────────────────────────────────────────────

struct EvalCli {
    std::string id;
    std::string file_a, file_b, file_c;
    double p = std::nan(""), r = std::nan(""), s = std::nan(""), t = std::nan("");
    double lambda = std::nan("");
    double tol = kDefaultTol;
};

int cmd_eval(const EvalCli& cli) {
    const RegistryEntry* entry = find_entry(cli.id);
    if (!entry) throw UnknownInequality(cli.id);
    std::vector<ComplexMatrix> mats;
    for (const std::string* f : {&cli.file_a, &cli.file_b, &cli.file_c})
        if (!f->empty()) mats.push_back(load_matrix_file(*f));
    if (mats.size() != entry->input_names.size())
        throw ConfigError(cli.id + " expects " + std::to_string(entry->input_names.size()) +
                          " matrix inputs (--A/--B/--C), got " + std::to_string(mats.size()));
    ParamMap params;
    if (!std::isnan(cli.p)) params["p"] = cli.p;
    if (!std::isnan(cli.r)) params["r"] = cli.r;
    if (!std::isnan(cli.s)) params["s"] = cli.s;
    if (!std::isnan(cli.t)) params["t"] = cli.t;
    if (!std::isnan(cli.lambda)) params["lambda"] = cli.lambda;

    const InequalityReport rep = evaluate_entry(cli.id, mats, params, cli.tol);
    std::cout << rep.to_json().dump(2) << "\n";
    return rep.verdict == Verdict::violated ? 1 : 0;
}

// ── hunt ──────────────────────────────────────────────────────────────────

struct HuntCli {
    std::string config_path;
    int restarts = -1, steps = -1, workers = 1;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string out_path;
    bool quiet = false;
};

int cmd_hunt(const HuntCli& cli) {
    if (cli.config_path.empty()) throw ConfigError("hunt requires --config FILE");
    json file = load_config_file(cli.config_path);
    const json hunt_json = file.contains("hunt") ? file["hunt"] : file;
    HuntConfig cfg = HuntConfig::from_json(hunt_json);
    json overrides = json::object();
    if (cli.restarts > 0) { cfg.restarts = cli.restarts; overrides["restarts"] = cli.restarts; }
    if (cli.steps > 0) { cfg.steps_per_restart = cli.steps; overrides["steps"] = cli.steps; }
    if (cli.seed_set) { cfg.seed = cli.seed; overrides["seed"] = cli.seed; }
    cfg.validate();

    fs::path out = cli.out_path.empty() ? default_out_dir() / "hunt_results.ndjson"
                                        : fs::path(cli.out_path);
    write_manifest(out, "hunt " + cfg.inequality_id, cli.config_path, overrides, cfg.to_json());

    HuntObserver observer;
    if (!cli.quiet && cli.workers == 1)
        observer = [](int restart, int step, double objective) {
            if (step == 0)
                std::cout << json{{"type", "restart"},
                                  {"index", restart},
                                  {"initial_objective", objective}}
                                 .dump()
                          << "\n";
        };
    const HuntRecord record = hunt(cfg, cli.workers, observer);

    std::ofstream log(out, std::ios::app); // records append to the results log
    if (!log) throw ConfigError("cannot open results file: " + out.string());
    log << record.to_json().dump() << "\n";

    std::cout << json{{"type", "hunt_summary"},
                      {"inequality_id", cfg.inequality_id},
                      {"trials", record.trials},
                      {"violations", record.violations},
                      {"min_relative_slack", record.best_report.relative_slack},
                      {"provenance",
                       {{"seed", cfg.seed},
                        {"restart", record.best_restart},
                        {"step", record.best_step}}},
                      {"results_path", out.string()}}
                     .dump()
              << "\n";

    if (record.violations == 0) return 0;
    // Confirm by replay before claiming anything.
    const InequalityReport replayed = replay(record);
    if (replayed.verdict != Verdict::violated) {
        std::cerr << "warning: violation did not replay; treating as noise\n";
        return 0;
    }
    const RegistryEntry* entry = find_entry(cfg.inequality_id);
    const bool proved = entry && entry->status == IneqStatus::proved;
    return proved ? 2 : 1;
}

// ── registry ──────────────────────────────────────────────────────────────

int cmd_registry(const std::string& id) {
    if (id.empty()) {
        std::cout << registry_json().dump(2) << "\n";
        return 0;
    }
    const RegistryEntry* e = find_entry(id);
    if (!e) throw UnknownInequality(id);
    const json one{{"inequality_id", e->id},
                   {"statement_ref", e->statement},
                   {"orientation", e->orientation},
                   {"param_domains", e->param_domains},
                   {"status", to_string(e->status)},
                   {"evidence_only", e->evidence_only},
                   {"inputs", e->input_names}};
    std::cout << one.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matrix rearrangement / trace inequality toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    VerifyCli vcli;
    auto* verify = app.add_subcommand("verify", "run seeded verification suites");
    verify->add_option("suite", vcli.suite, "suite name or 'all'");
    verify->add_option("--dims", vcli.dims, "dimension range a..b or list");
    verify->add_option("--samples", vcli.samples, "samples per suite");
    verify->add_option("--seed", vcli.seed, "base seed")->each([&](const std::string&) {
        vcli.seed_set = true;
    });
    verify->add_option("--p", vcli.p, "override p grid (comma list, 'inf' allowed)");
    verify->add_option("--r", vcli.r, "override r grid");
    verify->add_option("--s", vcli.s, "override s grid");
    verify->add_option("--t", vcli.t, "override t grid");
    verify->add_option("--tol", vcli.tol, "verdict tolerance");
    verify->add_option("--scale", vcli.scale, "ensemble scale");
    verify->add_option("--panels", vcli.panels, "quadrature panels");
    verify->add_option("--umin", vcli.u_min, "quadrature window lower edge");
    verify->add_option("--umax", vcli.u_max, "quadrature window upper edge");
    verify->add_option("--quad-tol", vcli.quad_tol, "quadrature target relative error");
    verify->add_option("--out", vcli.out_path, "results path (NDJSON)");
    verify->add_option("--config", vcli.config_path, "config file (JSON)");

    EvalCli ecli;
    auto* eval = app.add_subcommand("eval", "evaluate one checker on matrix files");
    eval->add_option("id", ecli.id, "inequality id (see 'registry')")->required();
    eval->add_option("--A", ecli.file_a, "first matrix input");
    eval->add_option("--B", ecli.file_b, "second matrix input");
    eval->add_option("--C", ecli.file_c, "third matrix input (curvature probe segments)");
    eval->add_option("--p", ecli.p, "parameter p");
    eval->add_option("--r", ecli.r, "parameter r");
    eval->add_option("--s", ecli.s, "parameter s");
    eval->add_option("--t", ecli.t, "parameter t");
    eval->add_option("--lambda", ecli.lambda, "mixing weight for curvature probes");
    eval->add_option("--tol", ecli.tol, "verdict tolerance");

    HuntCli hcli;
    auto* huntc = app.add_subcommand("hunt", "randomized counterexample search");
    huntc->add_option("--config", hcli.config_path, "hunt config file (JSON)")->required();
    huntc->add_option("--restarts", hcli.restarts, "override restarts");
    huntc->add_option("--steps", hcli.steps, "override steps per restart");
    huntc->add_option("--seed", hcli.seed, "override seed")->each([&](const std::string&) {
        hcli.seed_set = true;
    });
    huntc->add_option("--workers", hcli.workers, "worker threads (deterministic merge)");
    huntc->add_option("--out", hcli.out_path, "results log path (NDJSON, appended)");
    huntc->add_flag("--quiet", hcli.quiet, "suppress per-restart progress lines");

    std::string reg_id;
    auto* reg = app.add_subcommand("registry", "print the inequality catalog");
    reg->add_option("--id", reg_id, "print a single entry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 3;
    }

    try {
        if (*verify) return cmd_verify(vcli);
        if (*eval) return cmd_eval(ecli);
        if (*huntc) return cmd_hunt(hcli);
        if (*reg) return cmd_registry(reg_id);
    } catch (const Error& e) {
        return fail_usage(e.what());
    } catch (const std::exception& e) {
        return fail_usage(e.what());
    }
    return 3;
}
