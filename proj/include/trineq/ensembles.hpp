#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "trineq/matrix.hpp"
#include "trineq/rng.hpp"

namespace trineq {

// Hypothesis classes for the inequality checkers. Constrained kinds are
// generated in factor space (Gaussian factors), so the class constraint holds
// by construction instead of by projection:
//
//   general_complex  G                      i.i.d. complex Gaussian entries
//   hermitian        (G+G*)/2
//   psd              G*G
//   ordered_pair     B = G₁*G₁, A = B + G₂*G₂           (A ≥ B ≥ 0)
//   dominated_pair   B = (G₁+G₁*)/2, A = |B| + G₂*G₂    (A ≥ |B|, A,B Hermitian)
//   diagonal_psd     diag of |N(0,σ)| sorted nonincreasing
//   unitary          Gram–Schmidt of G, first nonzero entry of each
//                    column made real positive
enum class EnsembleKind {
    general_complex,
    hermitian,
    psd,
    ordered_pair,
    dominated_pair,
    diagonal_psd,
    unitary,
};

const char* to_string(EnsembleKind k);
EnsembleKind ensemble_kind_from_string(const std::string& s);

// True for kinds whose sample is a pair (A, B).
bool is_pair_kind(EnsembleKind k);

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::general_complex;
    int dim = 2;
    std::uint64_t seed = 0;
    double scale = 1.0;

    void validate() const;
    nlohmann::json to_json() const;
    static EnsembleSpec from_json(const nlohmann::json& j);
};

// One or two matrices depending on the kind. Identical spec → identical
// output, bit for bit: a fresh substream (seed, stream 0) drives the draw.
std::vector<ComplexMatrix> sample(const EnsembleSpec& spec);

// Same draw against a caller-owned stream (hunters use substreams per
// restart). Scale is applied as a final scalar multiply — by c for linear
// kinds, c² for Gram kinds — so scale covariance is exact.
std::vector<ComplexMatrix> sample_with_rng(EnsembleKind kind, int dim, double scale,
                                           CounterRng& rng);

// Local move that stays inside the kind's constraint set: Hermitian stays
// Hermitian, PSD matrices are perturbed through a square-root factor, pair
// constraints are re-derived from perturbed factors. magnitude = 0 returns
// the input bit-exactly.
std::vector<ComplexMatrix> perturb(EnsembleKind kind, const std::vector<ComplexMatrix>& mats,
                                   CounterRng& rng, double magnitude);

} // namespace trineq
