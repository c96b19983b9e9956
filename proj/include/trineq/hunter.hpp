#pragma once

#include <functional>

#include "trineq/catalog.hpp"

namespace trineq {

// Randomized counterexample search: multi-restart sampling plus factor-space
// local perturbation descent, minimizing the relative slack of one registry
// inequality over a parameter grid.
struct HuntConfig {
    std::string inequality_id;
    // Parameter name → grid values; the step objective is evaluated on the
    // full Cartesian product.
    std::map<std::string, std::vector<double>> param_grid;
    std::vector<int> dims = {2, 3, 4};
    int restarts = 100;
    int steps_per_restart = 50;
    double initial_magnitude = 0.5;
    double shrink_factor = 0.5; // applied after 10 consecutive rejections
    std::uint64_t seed = 1;
    EnsembleKind ensemble_kind = EnsembleKind::psd;
    double scale = 1.0;
    double tolerance = kDefaultTol;

    void validate() const; // also checks ensemble/checker compatibility
    nlohmann::json to_json() const;
    static HuntConfig from_json(const nlohmann::json& j);
};

struct HuntRecord {
    HuntConfig config;
    InequalityReport best_report; // minimum relative_slack found
    std::uint64_t trials = 0;     // total checker evaluations
    std::uint64_t violations = 0; // confirmed relative_slack < −tolerance
    std::uint64_t best_restart = 0;
    std::uint64_t best_step = 0;
    double wall_time_s = 0.0; // excluded from determinism comparisons

    nlohmann::json to_json() const;
    static HuntRecord from_json(const nlohmann::json& j);
};

// Test hook: called once per accepted step with the restart's current best
// objective (nonincreasing within a restart by construction).
using HuntObserver = std::function<void(int restart, int step, double objective)>;

// Runs the search. Restarts are independent units on substream
// (seed, restart+1); results merge by (relative_slack, restart, step)
// lexicographic order, so the winner is identical for any worker count.
// Candidate violations are confirmed on a re-symmetrized witness before
// being counted.
HuntRecord hunt(const HuntConfig& cfg, int workers = 1, const HuntObserver& observer = {});

// Re-evaluates the checker on the record's stored witness; the result must
// match the stored lhs/rhs to 1e-12 relative. Structural damage to the
// witness raises CorruptWitness; value changes simply re-evaluate.
InequalityReport replay(const HuntRecord& record);

} // namespace trineq
