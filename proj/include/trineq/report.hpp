#pragma once

#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "trineq/matrix.hpp"

namespace trineq {

// Default relative tolerance for verdicts. Double-precision
// eigendecomposition at desk-scale dimensions keeps errors well below this.
inline constexpr double kDefaultTol = 1e-8;

enum class Verdict { holds, equality_within_tol, violated };

const char* to_string(Verdict v);

// One checker evaluation. Slack is oriented per registry entry so that
// slack ≥ 0 always means "inequality holds"; where a statement reverses with
// the p-regime, the orientation flips with it. relative_slack is
// slack / max(|lhs|, |rhs|, 1).
struct InequalityReport {
    std::string inequality_id;
    std::map<std::string, double> params;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double relative_slack = 0.0;
    double tolerance = kDefaultTol;
    Verdict verdict = Verdict::holds;
    std::map<std::string, bool> flags;
    nlohmann::json witness; // serialized inputs, replayable
    std::optional<std::uint64_t> seed;

    nlohmann::json to_json() const;
    // Compact form without the witness, for streaming logs.
    nlohmann::json to_json_brief() const;
};

// Fills slack-derived fields and classifies the verdict:
//   violated            iff relative_slack < −tolerance
//   equality_within_tol iff |relative_slack| ≤ tolerance
//   holds               otherwise
InequalityReport make_report(std::string id, std::map<std::string, double> params,
                             double lhs, double rhs, double slack, double tolerance,
                             nlohmann::json witness);

} // namespace trineq
