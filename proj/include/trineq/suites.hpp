#pragma once

#include <iosfwd>
#include <limits>
#include <optional>

#include "trineq/catalog.hpp"
#include "trineq/integral_rep.hpp"

namespace trineq {

// One seeded-ensemble verification run over the proved statements. Each suite
// draws `samples` input sets (sample i at dims[i mod |dims|], substream
// (seed, i)), evaluates its checker over the suite's parameter grid, and
// reports min slack plus violation counts.
struct VerifyConfig {
    std::vector<int> dims = {2, 3, 4, 5, 6};
    int samples = 100;
    std::uint64_t seed = 1;
    double tolerance = kDefaultTol;
    double scale = 1.0;
    QuadratureConfig quad;
    // Optional grid overrides (--p/--r/--s/--t); suites that do not use the
    // parameter ignore the override.
    std::optional<std::vector<double>> p_values;
    std::optional<std::vector<double>> r_values;
    std::optional<std::vector<double>> s_values;
    std::optional<std::vector<double>> t_values;

    nlohmann::json to_json() const;
};

struct SuiteResult {
    std::string name;
    std::uint64_t evals = 0;
    std::uint64_t violations = 0; // verdicts of "violated" at tolerance
    double min_slack = std::numeric_limits<double>::infinity();
    double min_relative_slack = std::numeric_limits<double>::infinity();
    InequalityReport min_report; // witness of the minimum-slack evaluation

    nlohmann::json summary_json() const;
};

// The named suites, in report order: theorem1, theorem2, updown1, updown2,
// lemma-otherway, weyl-monotone, lieb-thirring, reverse-lt-half,
// integral-rep, resolvent, hanner-matrix, chiti-tartar.
const std::vector<std::string>& suite_names();

// Builds the suite's parameter grids without evaluating anything; throws
// ConfigError for unknown names or invalid overrides (e.g. a non-integer s
// for updown2).
void validate_suite_config(const std::string& suite_or_all, const VerifyConfig& cfg);

// Runs one suite; per-evaluation NDJSON lines (without witnesses) stream to
// `out` when given, violations stream with full witnesses. Throws
// ConfigError for unknown names or invalid overrides.
SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg,
                      std::ostream* out = nullptr);

// Runs one suite or all twelve, streaming lines plus per-suite summaries and
// a final run summary. Returns the number of violated proved-statement
// evaluations across run suites.
std::uint64_t run_verify(const std::string& suite_or_all, const VerifyConfig& cfg,
                         std::ostream& out);

} // namespace trineq
