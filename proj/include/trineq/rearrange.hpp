#pragma once

#include <vector>

#include "trineq/linalg.hpp"
#include "trineq/report.hpp"

namespace trineq {

// ── Rearrangement operators ───────────────────────────────────────────────
//
// Arrow semantics (fixed by the defining displays, counterintuitive as the
// names read):
//
//   Σ↑(A) = diag(σ₁, σ₂, …, σ_n)   LARGEST singular value at position 1
//   Σ↓(A) = diag(σ_n, …, σ₂, σ₁)   smallest at position 1
//
// Both carry exactly the singular values of A on the diagonal.

ComplexMatrix sigma_up(const ComplexMatrix& a);
ComplexMatrix sigma_down(const ComplexMatrix& a);

// ── Layer-cake decomposition ──────────────────────────────────────────────
//
// A PSD matrix C with eigenvalues λ₁ ≥ … ≥ λ_n decomposes as
//
//   C = Σ_j c_j P_j,   c_j = λ_j − λ_{j+1} (c_n = λ_n),
//
// where P_j projects onto the span of the top j eigenvectors. All c_j ≥ 0
// and Σ c_j = λ₁, so a positive contraction with λ₁ = 1 is presented as a
// convex combination of nested projections. No normalization is applied
// here; callers that need λ₁ = 1 rescale explicitly.
struct LayerCake {
    RealVector coefficients;                // c_1 … c_n ≥ 0
    std::vector<ComplexMatrix> projections; // nested, rank(P_j) = j
};

LayerCake layer_cake(const PsdMatrix& c);

// ── Weyl-type monotonicity ────────────────────────────────────────────────
//
// For Hermitian A, B with A ≥ |B|: σ_i(A) ≥ σ_i(B) for every i, i.e.
// Σ↑(A) ≥ Σ↑(B) and Σ↓(A) ≥ Σ↓(B) as diagonal matrices. Slack is the
// minimum componentwise gap; lhs/rhs are the singular values at the argmin.
InequalityReport weyl_monotone_check(const ComplexMatrix& a, const ComplexMatrix& b,
                                     double tolerance = kDefaultTol);

} // namespace trineq
