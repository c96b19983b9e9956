#include "trineq/suites.hpp"

#include <cmath>
#include <functional>
#include <ostream>

#include "trineq/matrix_io.hpp"
#include "trineq/rearrange.hpp"

namespace trineq {

nlohmann::json VerifyConfig::to_json() const {
    nlohmann::json j{{"dims", dims},      {"samples", samples}, {"seed", seed},
                     {"tolerance", tolerance}, {"scale", scale},
                     {"quadrature", quad.to_json()}};
    if (p_values) j["p"] = *p_values;
    if (r_values) j["r"] = *r_values;
    if (s_values) j["s"] = *s_values;
    if (t_values) j["t"] = *t_values;
    return j;
}

nlohmann::json SuiteResult::summary_json() const {
    return {{"type", "suite_summary"},
            {"suite", name},
            {"evals", evals},
            {"violations", violations},
            {"min_slack", min_slack},
            {"min_relative_slack", min_relative_slack},
            {"min_eval", min_report.to_json()}};
}

namespace {

std::vector<double> values_or(const std::optional<std::vector<double>>& ov,
                              std::vector<double> def) {
    return ov ? *ov : std::move(def);
}

void require_range(const std::vector<double>& vs, double lo, double hi, const char* pname,
                   const std::string& suite, bool open_interval = false) {
    for (double v : vs) {
        const bool ok = open_interval ? (v > lo && v < hi) : (v >= lo && v <= hi);
        if (!ok)
            throw ConfigError(suite + ": " + pname + " = " + std::to_string(v) +
                              " outside the proved range");
    }
}

std::vector<ParamMap> single_grid(const char* name, const std::vector<double>& vals) {
    std::vector<ParamMap> g;
    g.reserve(vals.size());
    for (double v : vals) g.push_back({{std::string(name), v}});
    return g;
}

std::vector<ParamMap> cross_grid(const char* n1, const std::vector<double>& v1, const char* n2,
                                 const std::vector<double>& v2) {
    std::vector<ParamMap> g;
    g.reserve(v1.size() * v2.size());
    for (double a : v1)
        for (double b : v2) g.push_back({{std::string(n1), a}, {std::string(n2), b}});
    return g;
}

using GridFn = std::function<std::vector<ParamMap>(const VerifyConfig&)>;
using EvalFn = std::function<InequalityReport(const std::vector<ComplexMatrix>&, const ParamMap&,
                                              const VerifyConfig&)>;

struct SuitePart {
    EnsembleKind kind;
    GridFn grid; // empty result skips the part
};

struct SuiteDef {
    std::string name;
    std::size_t arity;
    std::vector<SuitePart> parts;
    EvalFn eval;
};

EvalFn registry_eval(std::string id) {
    return [id = std::move(id)](const std::vector<ComplexMatrix>& mats, const ParamMap& params,
                                const VerifyConfig& cfg) {
        return evaluate_entry(id, mats, params, cfg.tolerance);
    };
}

const std::vector<double> kThmP = {1.0, 1.1, 1.25, 1.5, 1.75, 1.9, 2.0};

// Hanner known regions for unrestricted pairs: [1, 4/3] ∪ {2} ∪ [4, ∞].
bool hanner_unrestricted_known(double p) {
    return (p >= 1.0 && p <= 4.0 / 3.0) || p == 2.0 || p >= 4.0;
}

// Relative Frobenius distance between the quadrature route and the spectral
// route for C^p; reported so that positive slack means "within budget".
InequalityReport integral_rep_eval(const std::vector<ComplexMatrix>& mats,
                                   const ParamMap& params, const VerifyConfig& cfg) {
    const double p = params.at("p");
    // Positive-definite input: shift the PSD sample by a fraction of its
    // mean eigenvalue (callers of the integral shift explicitly by design).
    const ComplexMatrix& s = mats[0];
    const double mean_ev = s.trace().real() / static_cast<double>(s.rows());
    const ComplexMatrix shifted =
        s + std::max(0.05 * mean_ev, 1e-3) * ComplexMatrix::Identity(s.rows(), s.cols());
    const PsdMatrix c = PsdMatrix::from_matrix(hermitize(shifted));
    const ComplexMatrix via_integral = matrix_power_via_integral(c, p, cfg.quad);
    const ComplexMatrix via_spectrum = matrix_power(c, p).matrix();
    const double dist = (via_integral - via_spectrum).norm() / via_spectrum.norm();
    const double budget = std::max(cfg.quad.target_rel_error, 1e-6);
    InequalityReport r = make_report(
        "integral_rep", {{"p", p}}, dist, budget, budget - dist, cfg.tolerance,
        nlohmann::json{{"inputs", {{"C", matrix_to_json(c.matrix())}}}, {"params", {{"p", p}}}});
    return r;
}

std::vector<SuiteDef> build_suites() {
    std::vector<SuiteDef> suites;

    suites.push_back({"theorem1",
                      2,
                      {{EnsembleKind::ordered_pair,
                        [](const VerifyConfig& c) {
                            auto ps = values_or(c.p_values, kThmP);
                            require_range(ps, 1.0, 2.0, "p", "theorem1");
                            return single_grid("p", ps);
                        }}},
                      registry_eval("conjecture1")});
    suites.push_back({"theorem2",
                      2,
                      {{EnsembleKind::dominated_pair,
                        [](const VerifyConfig& c) {
                            auto ps = values_or(c.p_values, kThmP);
                            require_range(ps, 1.0, 2.0, "p", "theorem2");
                            return single_grid("p", ps);
                        }}},
                      registry_eval("conjecture2")});
    suites.push_back({"updown1",
                      2,
                      {{EnsembleKind::psd,
                        [](const VerifyConfig& c) {
                            auto rs = values_or(c.r_values, {0.0, 0.5, 1.0, 2.0});
                            auto ss = values_or(c.s_values, {1.0, 1.5, 2.0, 3.5});
                            require_range(rs, 0.0, 1e9, "r", "updown1");
                            require_range(ss, 1.0, 1e9, "s", "updown1");
                            return cross_grid("r", rs, "s", ss);
                        }}},
                      registry_eval("updown1")});
    suites.push_back({"updown2",
                      2,
                      {{EnsembleKind::psd,
                        [](const VerifyConfig& c) {
                            auto rs = values_or(c.r_values, {0.0, 0.5, 1.0, 2.0});
                            auto ss = values_or(c.s_values, {1.0, 2.0, 3.0});
                            require_range(rs, 0.0, 1e9, "r", "updown2");
                            for (double s : ss)
                                if (std::abs(s - std::round(s)) > 1e-9 || s < 1.0)
                                    throw ConfigError(
                                        "updown2: s = " + std::to_string(s) +
                                        " rejected, the statement requires an integer s >= 1");
                            return cross_grid("r", rs, "s", ss);
                        }}},
                      registry_eval("updown2")});
    suites.push_back({"lemma-otherway",
                      2,
                      {{EnsembleKind::dominated_pair,
                        [](const VerifyConfig& c) {
                            auto ps = values_or(c.p_values, {1.0, 1.5, 2.0});
                            require_range(ps, 1.0, 2.0, "p", "lemma-otherway");
                            return single_grid("p", ps);
                        }}},
                      registry_eval("lemma_otherway")});
    suites.push_back({"weyl-monotone",
                      2,
                      {{EnsembleKind::dominated_pair,
                        [](const VerifyConfig&) {
                            return std::vector<ParamMap>{ParamMap{}};
                        }}},
                      [](const std::vector<ComplexMatrix>& m, const ParamMap&,
                         const VerifyConfig& c) {
                          return weyl_monotone_check(m[0], m[1], c.tolerance);
                      }});
    suites.push_back({"lieb-thirring",
                      2,
                      {{EnsembleKind::psd,
                        [](const VerifyConfig& c) {
                            auto ss = values_or(c.s_values, {1.0, 1.5, 2.0, 3.0});
                            require_range(ss, 1.0, 1e9, "s", "lieb-thirring");
                            return single_grid("s", ss);
                        }}},
                      registry_eval("lieb_thirring")});
    suites.push_back({"reverse-lt-half",
                      2,
                      {{EnsembleKind::psd,
                        [](const VerifyConfig&) {
                            return std::vector<ParamMap>{ParamMap{}};
                        }}},
                      registry_eval("reverse_lt_half")});
    suites.push_back({"integral-rep",
                      1,
                      {{EnsembleKind::psd,
                        [](const VerifyConfig& c) {
                            auto ps = values_or(c.p_values, {1.25, 1.5, 1.75});
                            require_range(ps, 1.0, 2.0, "p", "integral-rep",
                                          /*open_interval=*/true);
                            return single_grid("p", ps);
                        }}},
                      integral_rep_eval});
    suites.push_back({"resolvent",
                      2,
                      {{EnsembleKind::ordered_pair,
                        [](const VerifyConfig& c) {
                            auto ts = values_or(c.t_values, {0.1, 1.0, 10.0});
                            for (double t : ts)
                                if (!(t > 0.0))
                                    throw ConfigError("resolvent: t must be > 0");
                            return single_grid("t", ts);
                        }}},
                      registry_eval("resolvent_suffice")});
    suites.push_back(
        {"hanner-matrix",
         2,
         {{EnsembleKind::general_complex,
           [](const VerifyConfig& c) {
               auto ps = values_or(c.p_values, {1.0, 1.25, 4.0 / 3.0, 4.0, 6.0});
               std::vector<double> known;
               for (double p : ps) {
                   if (hanner_unrestricted_known(p)) known.push_back(p);
                   else if (!(p >= 1.0 && p <= 2.0))
                       throw ConfigError("hanner-matrix: p = " + std::to_string(p) +
                                         " is not in a proved region");
               }
               return single_grid("p", known);
           }},
          {EnsembleKind::dominated_pair, // Hermitian A ≥ |B| forces A±B PSD
           [](const VerifyConfig& c) {
               auto ps = values_or(c.p_values, {1.0, 1.5, 2.0});
               std::vector<double> in_range;
               for (double p : ps)
                   if (p >= 1.0 && p <= 2.0) in_range.push_back(p);
               return single_grid("p", in_range);
           }}},
         registry_eval("hanner_matrix")});
    suites.push_back({"chiti-tartar",
                      2,
                      {{EnsembleKind::general_complex,
                        [](const VerifyConfig& c) {
                            auto ps = values_or(
                                c.p_values,
                                {1.0, 2.0, std::numeric_limits<double>::infinity()});
                            for (double p : ps)
                                if (std::isnan(p) || p < 1.0)
                                    throw ConfigError("chiti-tartar: p must be >= 1 or inf");
                            return single_grid("p", ps);
                        }}},
                      registry_eval("chiti_tartar_matrix")});
    return suites;
}

const std::vector<SuiteDef>& suites() {
    static const std::vector<SuiteDef> defs = build_suites();
    return defs;
}

std::vector<ComplexMatrix> draw_for_suite(EnsembleKind kind, int dim, double scale,
                                          std::size_t arity, CounterRng& rng) {
    if (is_pair_kind(kind)) return sample_with_rng(kind, dim, scale, rng);
    std::vector<ComplexMatrix> mats;
    mats.reserve(arity);
    for (std::size_t i = 0; i < arity; ++i)
        mats.push_back(sample_with_rng(kind, dim, scale, rng)[0]);
    return mats;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& s : suites()) n.push_back(s.name);
        return n;
    }();
    return names;
}

void validate_suite_config(const std::string& suite_or_all, const VerifyConfig& cfg) {
    if (cfg.samples < 1) throw ConfigError("samples must be >= 1");
    if (cfg.dims.empty()) throw ConfigError("dims must be nonempty");
    for (int d : cfg.dims)
        if (d < 1) throw ConfigError("dims must be >= 1");
    if (!(cfg.tolerance > 0.0)) throw ConfigError("tolerance must be > 0");
    if (!(cfg.scale > 0.0)) throw ConfigError("scale must be > 0");
    cfg.quad.validate();
    bool found = false;
    for (const auto& def : suites()) {
        if (suite_or_all != "all" && def.name != suite_or_all) continue;
        found = true;
        for (const auto& part : def.parts) part.grid(cfg); // throws on bad overrides
    }
    if (!found) throw ConfigError("unknown suite: " + suite_or_all);
}

SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg, std::ostream* out) {
    const SuiteDef* def = nullptr;
    for (const auto& s : suites())
        if (s.name == name) def = &s;
    if (!def) throw ConfigError("unknown suite: " + name);
    if (cfg.samples < 1) throw ConfigError("samples must be >= 1");
    if (cfg.dims.empty()) throw ConfigError("dims must be nonempty");

    SuiteResult result;
    result.name = name;
    bool have_min = false;
    for (std::size_t part_idx = 0; part_idx < def->parts.size(); ++part_idx) {
        const SuitePart& part = def->parts[part_idx];
        const std::vector<ParamMap> grid = part.grid(cfg); // may throw ConfigError
        if (grid.empty()) continue;
        for (int i = 0; i < cfg.samples; ++i) {
            const std::uint64_t stream =
                static_cast<std::uint64_t>(part_idx) * static_cast<std::uint64_t>(cfg.samples) +
                static_cast<std::uint64_t>(i);
            CounterRng rng(cfg.seed, stream);
            const int dim = cfg.dims[static_cast<std::size_t>(i) % cfg.dims.size()];
            const std::vector<ComplexMatrix> mats =
                draw_for_suite(part.kind, dim, cfg.scale, def->arity, rng);
            for (const ParamMap& params : grid) {
                InequalityReport rep = def->eval(mats, params, cfg);
                rep.seed = cfg.seed;
                rep.witness["ensemble"] = {{"kind", to_string(part.kind)},
                                           {"dim", dim},
                                           {"seed", cfg.seed},
                                           {"scale", cfg.scale},
                                           {"stream", stream}};
                ++result.evals;
                if (rep.verdict == Verdict::violated) ++result.violations;
                if (out) {
                    nlohmann::json line = rep.to_json_brief();
                    line["type"] = "eval";
                    line["suite"] = name;
                    line["sample"] = i;
                    line["dim"] = dim;
                    *out << line.dump() << "\n";
                    if (rep.verdict == Verdict::violated) {
                        nlohmann::json vio = rep.to_json();
                        vio["type"] = "violation";
                        vio["suite"] = name;
                        vio["sample"] = i;
                        vio["dim"] = dim;
                        *out << vio.dump() << "\n";
                    }
                }
                if (!have_min || rep.relative_slack < result.min_relative_slack) {
                    have_min = true;
                    result.min_relative_slack = rep.relative_slack;
                    result.min_slack = rep.slack;
                    result.min_report = std::move(rep);
                }
            }
        }
    }
    return result;
}

std::uint64_t run_verify(const std::string& suite_or_all, const VerifyConfig& cfg,
                         std::ostream& out) {
    std::vector<std::string> names;
    if (suite_or_all == "all")
        names = suite_names();
    else
        names.push_back(suite_or_all);

    std::uint64_t total_violations = 0;
    std::uint64_t total_evals = 0;
    for (const auto& name : names) {
        SuiteResult res = run_suite(name, cfg, &out);
        out << res.summary_json().dump() << "\n";
        total_violations += res.violations;
        total_evals += res.evals;
    }
    out << nlohmann::json{{"type", "run_summary"},
                          {"suites", names.size()},
                          {"total_evals", total_evals},
                          {"total_violations", total_violations}}
               .dump()
        << "\n";
    return total_violations;
}

} // namespace trineq
