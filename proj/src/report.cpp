#include "trineq/report.hpp"

namespace trineq {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds:               return "holds";
        case Verdict::equality_within_tol: return "equality_within_tol";
        case Verdict::violated:            return "violated";
    }
    return "?";
}

InequalityReport make_report(std::string id, std::map<std::string, double> params,
                             double lhs, double rhs, double slack, double tolerance,
                             nlohmann::json witness) {
    InequalityReport r;
    r.inequality_id = std::move(id);
    r.params = std::move(params);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = slack;
    r.relative_slack = slack / rel_scale(lhs, rhs);
    r.tolerance = tolerance;
    r.witness = std::move(witness);
    if (r.relative_slack < -tolerance)
        r.verdict = Verdict::violated;
    else if (std::abs(r.relative_slack) <= tolerance)
        r.verdict = Verdict::equality_within_tol;
    else
        r.verdict = Verdict::holds;
    return r;
}

nlohmann::json InequalityReport::to_json_brief() const {
    nlohmann::json j{
        {"inequality_id", inequality_id},
        {"params", params},
        {"lhs", lhs},
        {"rhs", rhs},
        {"slack", slack},
        {"relative_slack", relative_slack},
        {"tolerance", tolerance},
        {"verdict", to_string(verdict)},
    };
    if (!flags.empty()) j["flags"] = flags;
    if (seed) j["seed"] = *seed;
    return j;
}

nlohmann::json InequalityReport::to_json() const {
    nlohmann::json j = to_json_brief();
    j["witness"] = witness;
    return j;
}

} // namespace trineq
