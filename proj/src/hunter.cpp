#include "trineq/hunter.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <thread>

#include "trineq/matrix_io.hpp"

namespace trineq {

namespace {

const RegistryEntry& entry_for(const std::string& id) {
    const RegistryEntry* e = find_entry(id);
    if (!e) throw UnknownInequality(id);
    return *e;
}

// Cartesian product of the grid in sorted parameter-name order.
std::vector<ParamMap> expand_grid(const std::map<std::string, std::vector<double>>& grid) {
    std::vector<ParamMap> points = {ParamMap{}};
    for (const auto& [name, values] : grid) {
        if (values.empty()) throw ConfigError("param_grid entry '" + name + "' is empty");
        std::vector<ParamMap> next;
        next.reserve(points.size() * values.size());
        for (const auto& base : points)
            for (double v : values) {
                ParamMap p = base;
                p[name] = v;
                next.push_back(std::move(p));
            }
        points = std::move(next);
    }
    return points;
}

std::vector<ComplexMatrix> draw_inputs(EnsembleKind kind, int dim, double scale,
                                       std::size_t arity, CounterRng& rng) {
    if (is_pair_kind(kind)) return sample_with_rng(kind, dim, scale, rng);
    std::vector<ComplexMatrix> mats;
    mats.reserve(arity);
    for (std::size_t i = 0; i < arity; ++i) {
        auto one = sample_with_rng(kind, dim, scale, rng);
        mats.push_back(std::move(one[0]));
    }
    return mats;
}

// Pair kinds move as a constrained pair; independent inputs move one by one.
std::vector<ComplexMatrix> perturb_inputs(EnsembleKind kind,
                                          const std::vector<ComplexMatrix>& mats,
                                          CounterRng& rng, double magnitude) {
    if (is_pair_kind(kind)) return perturb(kind, mats, rng, magnitude);
    std::vector<ComplexMatrix> out;
    out.reserve(mats.size());
    for (const auto& m : mats) out.push_back(perturb(kind, {m}, rng, magnitude)[0]);
    return out;
}

// Kinds whose matrices are Hermitian by class constraint; used to
// re-symmetrize a candidate violation before confirming it.
bool hermitian_class(EnsembleKind k) {
    return k != EnsembleKind::general_complex && k != EnsembleKind::unitary;
}

struct RestartResult {
    InequalityReport best;
    double best_objective = std::numeric_limits<double>::infinity();
    int best_step = 0;
    std::uint64_t trials = 0;
    std::uint64_t violations = 0;
};

} // namespace

void HuntConfig::validate() const {
    const RegistryEntry& e = entry_for(inequality_id);
    if (restarts < 1 || steps_per_restart < 1)
        throw ConfigError("hunt requires restarts >= 1 and steps_per_restart >= 1");
    if (dims.empty()) throw ConfigError("hunt requires a nonempty dims list");
    for (int d : dims)
        if (d < 1) throw ConfigError("hunt dims must be >= 1");
    if (!(initial_magnitude > 0.0)) throw ConfigError("initial_magnitude must be > 0");
    if (!(shrink_factor > 0.0 && shrink_factor < 1.0))
        throw ConfigError("shrink_factor must lie in (0, 1)");
    if (!(scale > 0.0)) throw ConfigError("scale must be > 0");
    if (!(tolerance > 0.0)) throw ConfigError("tolerance must be > 0");
    const auto& ck = e.compatible_kinds;
    if (std::find(ck.begin(), ck.end(), ensemble_kind) == ck.end())
        throw IncompatibleEnsemble(std::string(to_string(ensemble_kind)) +
                                   " does not satisfy the preconditions of " + inequality_id);
    for (const auto& [name, dom] : e.param_domains.items())
        if (!param_grid.count(name))
            throw ConfigError("param_grid missing '" + name + "' (domain " + dom.dump() + ")");
    for (const auto& [name, values] : param_grid) {
        if (!e.param_domains.contains(name))
            throw ConfigError("param_grid has unknown parameter '" + name + "'");
        if (values.empty()) throw ConfigError("param_grid entry '" + name + "' is empty");
    }
}

nlohmann::json HuntConfig::to_json() const {
    return {{"inequality_id", inequality_id},
            {"param_grid", param_grid},
            {"dims", dims},
            {"restarts", restarts},
            {"steps_per_restart", steps_per_restart},
            {"initial_magnitude", initial_magnitude},
            {"shrink_factor", shrink_factor},
            {"seed", seed},
            {"ensemble_kind", to_string(ensemble_kind)},
            {"scale", scale},
            {"tolerance", tolerance}};
}

HuntConfig HuntConfig::from_json(const nlohmann::json& j) {
    HuntConfig c;
    c.inequality_id = j.at("inequality_id").get<std::string>();
    if (j.contains("param_grid"))
        c.param_grid = j["param_grid"].get<std::map<std::string, std::vector<double>>>();
    if (j.contains("dims")) c.dims = j["dims"].get<std::vector<int>>();
    c.restarts = j.value("restarts", c.restarts);
    c.steps_per_restart = j.value("steps_per_restart", c.steps_per_restart);
    c.initial_magnitude = j.value("initial_magnitude", c.initial_magnitude);
    c.shrink_factor = j.value("shrink_factor", c.shrink_factor);
    c.seed = j.value("seed", c.seed);
    if (j.contains("ensemble_kind"))
        c.ensemble_kind = ensemble_kind_from_string(j["ensemble_kind"].get<std::string>());
    c.scale = j.value("scale", c.scale);
    c.tolerance = j.value("tolerance", c.tolerance);
    return c;
}

nlohmann::json HuntRecord::to_json() const {
    return {{"config", config.to_json()},
            {"best_report", best_report.to_json()},
            {"trials", trials},
            {"violations", violations},
            {"provenance", {{"seed", config.seed}, {"restart", best_restart}, {"step", best_step}}},
            {"wall_time_s", wall_time_s}};
}

HuntRecord HuntRecord::from_json(const nlohmann::json& j) {
    HuntRecord r;
    r.config = HuntConfig::from_json(j.at("config"));
    const nlohmann::json& b = j.at("best_report");
    r.best_report.inequality_id = b.at("inequality_id").get<std::string>();
    r.best_report.params = b.at("params").get<std::map<std::string, double>>();
    r.best_report.lhs = b.at("lhs").get<double>();
    r.best_report.rhs = b.at("rhs").get<double>();
    r.best_report.slack = b.at("slack").get<double>();
    r.best_report.relative_slack = b.at("relative_slack").get<double>();
    r.best_report.tolerance = b.at("tolerance").get<double>();
    r.best_report.witness = b.at("witness");
    if (b.contains("flags")) r.best_report.flags = b["flags"].get<std::map<std::string, bool>>();
    if (b.contains("seed")) r.best_report.seed = b["seed"].get<std::uint64_t>();
    const std::string v = b.at("verdict").get<std::string>();
    r.best_report.verdict = v == "violated" ? Verdict::violated
                            : v == "equality_within_tol" ? Verdict::equality_within_tol
                                                         : Verdict::holds;
    r.trials = j.at("trials").get<std::uint64_t>();
    r.violations = j.at("violations").get<std::uint64_t>();
    r.best_restart = j.at("provenance").at("restart").get<std::uint64_t>();
    r.best_step = j.at("provenance").at("step").get<std::uint64_t>();
    r.wall_time_s = j.value("wall_time_s", 0.0);
    return r;
}

HuntRecord hunt(const HuntConfig& cfg, int workers, const HuntObserver& observer) {
    cfg.validate();
    const RegistryEntry& entry = entry_for(cfg.inequality_id);
    const std::vector<ParamMap> grid = expand_grid(cfg.param_grid);
    const std::size_t arity = entry.input_names.size();
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<RestartResult> results(static_cast<std::size_t>(cfg.restarts));

    auto run_restart = [&](int restart) {
        RestartResult& res = results[static_cast<std::size_t>(restart)];
        CounterRng rng(cfg.seed, static_cast<std::uint64_t>(restart) + 1);
        const int dim = cfg.dims[static_cast<std::size_t>(restart) % cfg.dims.size()];

        // Objective of one input set: the grid point of minimum relative
        // slack. Candidate violations are confirmed on a re-symmetrized
        // witness at a tolerance no looser than the 1e-10 noise floor.
        auto evaluate = [&](const std::vector<ComplexMatrix>& mats)
            -> std::pair<double, InequalityReport> {
            InequalityReport best;
            double best_obj = std::numeric_limits<double>::infinity();
            for (const ParamMap& params : grid) {
                InequalityReport rep = entry.evaluate(mats, params, cfg.tolerance);
                ++res.trials;
                if (rep.relative_slack < -cfg.tolerance) {
                    std::vector<ComplexMatrix> resym = mats;
                    if (hermitian_class(cfg.ensemble_kind))
                        for (auto& m : resym) m = hermitize(m);
                    const InequalityReport check = entry.evaluate(resym, params, cfg.tolerance);
                    if (check.relative_slack < -std::max(cfg.tolerance, 1e-10)) ++res.violations;
                }
                if (rep.relative_slack < best_obj) {
                    best_obj = rep.relative_slack;
                    best = std::move(rep);
                }
            }
            return {best_obj, std::move(best)};
        };

        std::vector<ComplexMatrix> current =
            draw_inputs(cfg.ensemble_kind, dim, cfg.scale, arity, rng);
        auto [cur_obj, cur_best] = evaluate(current);
        res.best_objective = cur_obj;
        res.best = cur_best;
        res.best_step = 0;
        if (observer && workers == 1) observer(restart, 0, cur_obj);

        double magnitude = cfg.initial_magnitude;
        int rejects = 0;
        for (int step = 1; step <= cfg.steps_per_restart; ++step) {
            std::vector<ComplexMatrix> candidate =
                perturb_inputs(cfg.ensemble_kind, current, rng, magnitude);
            auto [obj, best] = evaluate(candidate);
            if (obj < cur_obj) {
                current = std::move(candidate);
                cur_obj = obj;
                res.best_objective = obj;
                res.best = std::move(best);
                res.best_step = step;
                rejects = 0;
                if (observer && workers == 1) observer(restart, step, cur_obj);
            } else if (++rejects == 10) {
                magnitude *= cfg.shrink_factor;
                rejects = 0;
            }
        }

        res.best.seed = cfg.seed;
        res.best.witness["ensemble"] = {{"kind", to_string(cfg.ensemble_kind)},
                                        {"dim", dim},
                                        {"seed", cfg.seed},
                                        {"scale", cfg.scale},
                                        {"stream", restart + 1}};
    };

    if (workers <= 1) {
        for (int r = 0; r < cfg.restarts; ++r) run_restart(r);
    } else {
        std::atomic<int> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        std::vector<std::thread> pool;
        const int nthreads = std::min(workers, cfg.restarts);
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int w = 0; w < nthreads; ++w)
            pool.emplace_back([&] {
                try {
                    for (int r = next.fetch_add(1); r < cfg.restarts; r = next.fetch_add(1))
                        run_restart(r);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    // Deterministic merge: lexicographic (relative_slack, restart, step).
    HuntRecord record;
    record.config = cfg;
    int winner = 0;
    for (int r = 1; r < cfg.restarts; ++r) {
        const auto& a = results[static_cast<std::size_t>(r)];
        const auto& b = results[static_cast<std::size_t>(winner)];
        if (a.best_objective < b.best_objective) winner = r;
    }
    const RestartResult& w = results[static_cast<std::size_t>(winner)];
    record.best_report = w.best;
    record.best_restart = static_cast<std::uint64_t>(winner);
    record.best_step = static_cast<std::uint64_t>(w.best_step);
    for (const auto& res : results) {
        record.trials += res.trials;
        record.violations += res.violations;
    }
    record.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return record;
}

InequalityReport replay(const HuntRecord& record) {
    const RegistryEntry& entry = entry_for(record.best_report.inequality_id);
    const nlohmann::json& w = record.best_report.witness;
    if (!w.is_object() || !w.contains("inputs") || !w["inputs"].is_object())
        throw CorruptWitness("witness has no 'inputs' object");
    std::vector<ComplexMatrix> mats;
    try {
        for (const auto& name : entry.input_names) {
            if (!w["inputs"].contains(name))
                throw CorruptWitness("witness missing input '" + name + "'");
            mats.push_back(matrix_from_json(w["inputs"][name]));
        }
    } catch (const ParseError& e) {
        throw CorruptWitness(e.what());
    }
    ParamMap params;
    if (w.contains("params")) {
        if (!w["params"].is_object()) throw CorruptWitness("witness 'params' is not an object");
        for (const auto& [k, v] : w["params"].items()) {
            if (!v.is_number()) throw CorruptWitness("witness parameter '" + k + "' not numeric");
            params[k] = v.get<double>();
        }
    }
    try {
        return entry.evaluate(mats, params, record.best_report.tolerance);
    } catch (const DimMismatch& e) {
        throw CorruptWitness(e.what());
    }
}

} // namespace trineq
