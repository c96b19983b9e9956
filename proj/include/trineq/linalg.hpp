#pragma once

#include <utility>

#include "trineq/matrix.hpp"

namespace trineq {

// ── Spectral data ─────────────────────────────────────────────────────────

// Eigensystem of a Hermitian matrix. Eigenvalues are sorted nonincreasing;
// ties keep the eigensolver's deterministic order (stable sort), so repeated
// runs on the same input produce identical output.
struct SpectralDecomposition {
    RealVector eigenvalues;     // λ₁ ≥ λ₂ ≥ … ≥ λ_n
    ComplexMatrix eigenvectors; // orthonormal columns, column i ↔ λ_i
};

// A positive-semidefinite matrix with its spectral decomposition cached.
//
// Construction symmetrizes, decomposes, and clamps eigenvalues in
// [−εclamp, 0) to exactly 0 with εclamp = 1e-12·max(λ_max, 1). Anything more
// negative is a genuine negative eigenvalue and construction fails. The clamp
// exists because fractional powers of tiny negative roundoff eigenvalues
// would produce NaN.
class PsdMatrix {
  public:
    // Validates Hermitian symmetry (‖M − M*‖_F ≤ 1e-12·(1+‖M‖_F)) and
    // positive semidefiniteness up to the clamp.
    static PsdMatrix from_matrix(const ComplexMatrix& m);

    // Trusted path for callers that already hold a valid decomposition
    // (e.g. |A| assembled from an SVD). Eigenvalues must be nonnegative
    // and nonincreasing.
    static PsdMatrix from_spectral(ComplexMatrix m, SpectralDecomposition s);

    const ComplexMatrix& matrix() const { return mat_; }
    const SpectralDecomposition& spectral() const { return spec_; }
    const RealVector& eigenvalues() const { return spec_.eigenvalues; }
    Eigen::Index dim() const { return mat_.rows(); }

  private:
    PsdMatrix(ComplexMatrix m, SpectralDecomposition s)
        : mat_(std::move(m)), spec_(std::move(s)) {}
    ComplexMatrix mat_;
    SpectralDecomposition spec_;
};

// ── Operations ────────────────────────────────────────────────────────────

// Hermitian eigendecomposition. The input is symmetrized to (H+H*)/2 first;
// if the correction exceeds 1e-10·(1+‖H‖_F) the input was not Hermitian and
// NotHermitian is thrown.
SpectralDecomposition eig_hermitian(const ComplexMatrix& h);

// |A| = √(A*A). Computed from the singular value decomposition A = UΣV* as
// |A| = VΣV*, so the eigenvalues of the result are exactly the singular
// values of A.
PsdMatrix abs_matrix(const ComplexMatrix& a);

// Singular values of A, nonincreasing, all ≥ 0.
RealVector singular_values(const ComplexMatrix& a);

// Spectral functional calculus: V diag(λ^q) V* for q ≥ 0, with the
// convention 0^0 = 0 on the kernel.
PsdMatrix matrix_power(const PsdMatrix& m, double q);

// Σ λ_i^q over the spectrum, same conventions as matrix_power. Cheaper than
// assembling the matrix when only the trace is needed.
double trace_power(const PsdMatrix& m, double q);

// Schatten p-norm (Σ σ_i^p)^{1/p}; p = 1 trace norm, p = 2 Frobenius,
// p = +inf operator norm (largest singular value). BadExponent for p < 1.
double schatten_norm(const ComplexMatrix& a, double p);

// Jordan decomposition of a Hermitian matrix: B = X − Y, |B| = X + Y with
// X, Y PSD and XY = YX = 0.
std::pair<PsdMatrix, PsdMatrix> positive_negative_parts(const ComplexMatrix& b);

// Re Tr(AB) for this project's trace functionals (A, B Hermitian makes the
// trace real; the imaginary part is roundoff and discarded).
inline double trace_product_real(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a * b).trace().real();
}

} // namespace trineq
