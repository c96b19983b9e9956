#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "trineq/ensembles.hpp"
#include "trineq/linalg.hpp"
#include "trineq/report.hpp"

namespace trineq {

// ── Commutative (vector) checkers ─────────────────────────────────────────
//
// Vectors are functions on {1, …, n}; the matrix statements reduce to these
// on diagonal matrices.

// ‖f+g‖_p^p + ‖f−g‖_p^p  vs  (‖f‖_p+‖g‖_p)^p + |‖f‖_p−‖g‖_p|^p.
// Holds with ≥ for 1 ≤ p ≤ 2 and reverses for p ≥ 2; slack is oriented so
// that ≥ 0 means the regime's inequality holds.
InequalityReport hanner_vector(const ComplexVector& f, const ComplexVector& g, double p,
                               double tolerance = kDefaultTol);

// Same left side vs the rearranged pair f*, g* (moduli sorted nonincreasing);
// ≥ for p ≤ 2, reversed for p > 2.
InequalityReport rearrangement_vector(const ComplexVector& f, const ComplexVector& g, double p,
                                      double tolerance = kDefaultTol);

// Same left side vs 2‖f‖_p^p + 2‖g‖_p^p (the parallelogram identity as an
// inequality): ≤ for p ≤ 2, reversed for p > 2.
InequalityReport parallelogram_bound_vector(const ComplexVector& f, const ComplexVector& g,
                                            double p, double tolerance = kDefaultTol);

// c(t) = (a²+b²+2abt)^{p/2} + (a²+b²−2abt)^{p/2} for a, b ≥ 0, |t| ≤ 1.
// Strictly concave in t for p < 2, convex for p > 2, critical at t = 0, so
// t = ±1 minimizes c for p < 2 and maximizes it for p > 2.
double scalar_curve(double a, double b, double p, double t);

// The companion pointwise bound: c(t) ≥ c(±1) for p < 2, c(t) ≤ c(±1) for
// p > 2 (trivially true at p = 2).
bool scalar_curve_extremal_ok(double a, double b, double p, double t,
                              double tolerance = kDefaultTol);

// ── Matrix rearrangement family ───────────────────────────────────────────

// Schatten-norm version of the two-point inequality:
//   ‖A+B‖_p^p + ‖A−B‖_p^p  vs  (‖A‖_p+‖B‖_p)^p + |‖A‖_p−‖B‖_p|^p,
// ≥ for 1 ≤ p ≤ 2, reversed for p ≥ 2. Proved regions are flagged via
// flags["known_region"]: p ∈ [1, 4/3] ∪ [4, ∞] or p = 2 unconditionally,
// plus pairs with A±B PSD for 1 ≤ p ≤ 2 (the PSD-pair case for p > 2 is
// deliberately left unflagged). At p = ∞ the p-th-power form degenerates and
// the limit statement max(‖A+B‖_∞, ‖A−B‖_∞) ≤ ‖A‖_∞ + ‖B‖_∞ is checked.
InequalityReport hanner_matrix(const ComplexMatrix& a, const ComplexMatrix& b, double p,
                               double tolerance = kDefaultTol);

// ‖A+B‖_p^p + ‖A−B‖_p^p  vs  the same with Σ↑(A), Σ↑(B): conjectured ≥ for
// p ≤ 2 and reversed for p > 2; proved for Hermitian A ≥ B ≥ 0
// (flags["theorem1_applies"]) and, reversed, for every even integer p
// without restriction (flags["even_p_reverse"]).
InequalityReport conjecture1(const ComplexMatrix& a, const ComplexMatrix& b, double p,
                             double tolerance = kDefaultTol);

// ‖A+B‖_p^p + ‖A−B‖_p^p  vs  the same with Σ↑(A), Σ↓(B): conjectured ≤ for
// p ≤ 2 and reversed for p > 2; proved for Hermitian A ≥ |B|
// (flags["theorem2_applies"]).
InequalityReport conjecture2(const ComplexMatrix& a, const ComplexMatrix& b, double p,
                             double tolerance = kDefaultTol);

// For Hermitian A ≥ |B| and 1 ≤ p ≤ 2:
//   Tr((A+B)^p + (A−B)^p) ≤ Tr((A+|B|)^p + (A−|B|)^p).
InequalityReport lemma_otherway(const ComplexMatrix& a, const ComplexMatrix& b, double p,
                                double tolerance = kDefaultTol);

// Tr(B^r (B^{1/2} A B^{1/2})^s) ≥ Tr(Σ↑(A)^s Σ↓(B)^{s+r}) for PSD A, B,
// r ≥ 0, real s ≥ 1 (opposite rearrangement decreases alternating traces).
InequalityReport updown1(const PsdMatrix& a, const PsdMatrix& b, double r, double s,
                         double tolerance = kDefaultTol);

// Tr(Σ↑(A)^s Σ↑(B)^{s+r}) ≥ Tr(B^r (B^{1/2} A B^{1/2})^s) for PSD A, B,
// r ≥ 0 and INTEGER s ≥ 1 (hard-validated; the non-integer version is the
// liebth2_probe conjecture).
InequalityReport updown2(const PsdMatrix& a, const PsdMatrix& b, double r, double s,
                         double tolerance = kDefaultTol);

// Tr((Y^{1/2} X Y^{1/2})^s) ≤ Tr(X^s Y^s) for PSD X, Y and s ≥ 1.
InequalityReport lieb_thirring(const PsdMatrix& x, const PsdMatrix& y, double s,
                               double tolerance = kDefaultTol);

// Tr(A^{1/2} B^{1/2}) ≤ Tr((B^{1/2} A B^{1/2})^{1/2}) — the s = 1/2 reverse.
InequalityReport reverse_lt_half(const PsdMatrix& a, const PsdMatrix& b,
                                 double tolerance = kDefaultTol);

// Conjectured reverse for 1/2 < s < 1: Tr(A^s B^s) ≤ Tr((B^{1/2} A B^{1/2})^s).
// Evidence only — a hunting target, not a theorem.
InequalityReport rev_probe(const PsdMatrix& a, const PsdMatrix& b, double s,
                           double tolerance = kDefaultTol);

// Conjectured generalization Tr(Y^r (Y^{1/2} X Y^{1/2})^s) ≤ Tr(X^s Y^{s+r})
// for r > 0, s ≥ 1 (non-integer s is the interesting regime).
InequalityReport liebth2_probe(const PsdMatrix& x, const PsdMatrix& y, double r, double s,
                               double tolerance = kDefaultTol);

// Trace-function curvature probe for f_s(A) = Tr((B^{1/2} A^{1/s} B^{1/2})^s):
// concavity for s ≥ 1 (proved), convexity for s ∈ [1/2, 1) (proved at 1/2
// where f_{1/2}(A) = ‖A B^{1/2}‖₁, conjectured in between). Slack is the
// curvature gap on the segment [A1, A2] at mixing weight lambda, oriented so
// ≥ 0 means the regime's statement holds.
InequalityReport epstein_probe(const PsdMatrix& b, double s, const PsdMatrix& a1,
                               const PsdMatrix& a2, double lambda,
                               double tolerance = kDefaultTol);

// ‖A − B‖_p ≥ ‖Σ↓(A) − Σ↓(B)‖_p for every p ∈ [1, ∞] (holds for every
// unitarily invariant norm; equally-ranked singular values are paired).
InequalityReport chiti_tartar_matrix(const ComplexMatrix& a, const ComplexMatrix& b, double p,
                                     double tolerance = kDefaultTol);

// For Hermitian A ≥ B ≥ 0 and t > 0:
//   Tr((t+A+B)^{−1} + (t+A−B)^{−1})
//     ≥ Tr((t+Σ↑(A)+Σ↑(B))^{−1} + (t+Σ↑(A)−Σ↑(B))^{−1}).
InequalityReport resolvent_suffice(const ComplexMatrix& a, const ComplexMatrix& b, double t,
                                   double tolerance = kDefaultTol);

// ── Registry ──────────────────────────────────────────────────────────────

enum class IneqStatus { proved, conjecture, known_region, planted_false };

const char* to_string(IneqStatus s);

using ParamMap = std::map<std::string, double>;

// One catalog entry: stable id, the statement as a formula, slack
// orientation, parameter domains, proof status, and an evaluation adapter
// for witness replay / hunting. Entries with evidence_only = true never
// assert their verdicts as mathematical claims.
struct RegistryEntry {
    std::string id;
    std::string statement;
    std::string orientation;
    nlohmann::json param_domains;
    IneqStatus status = IneqStatus::proved;
    bool evidence_only = false;
    // Names of the matrix inputs in witness order, e.g. {"A", "B"}.
    std::vector<std::string> input_names;
    // Ensemble kinds whose samples satisfy the checker's preconditions.
    std::vector<EnsembleKind> compatible_kinds;
    // Evaluates the checker on named matrices; null for vector-only entries.
    std::function<InequalityReport(const std::vector<ComplexMatrix>&, const ParamMap&, double)>
        evaluate;
};

// The paper-statement catalog (16 entries), in registration order.
const std::vector<RegistryEntry>& registry();

// Lookup including hunt-only targets (the planted-false soundness canary);
// returns nullptr if unknown.
const RegistryEntry* find_entry(const std::string& id);

// Machine-readable export of the 16 catalog entries.
nlohmann::json registry_json();

// Evaluate an entry by id on named inputs. Throws UnknownInequality.
InequalityReport evaluate_entry(const std::string& id, const std::vector<ComplexMatrix>& mats,
                                const ParamMap& params, double tolerance = kDefaultTol);

// Id of the deliberately false hunt target (the s = 2 reversal of the
// alternating-trace inequality), used to prove the hunter can find real
// violations. Not part of the exported catalog.
inline constexpr const char* kPlantedFalseId = "lieb_thirring_reversed";

} // namespace trineq
