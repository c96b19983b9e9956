#include "trineq/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <numeric>
#include <vector>

namespace trineq {

namespace {

// Reorder an increasing Eigen eigensystem to nonincreasing, keeping the
// solver's order within ties (stable sort on the original index).
SpectralDecomposition sort_nonincreasing(const RealVector& vals, const ComplexMatrix& vecs) {
    const Eigen::Index n = vals.size();
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return vals(i) > vals(j); });
    SpectralDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.eigenvalues(k) = vals(idx[static_cast<std::size_t>(k)]);
        out.eigenvectors.col(k) = vecs.col(idx[static_cast<std::size_t>(k)]);
    }
    return out;
}

} // namespace

SpectralDecomposition eig_hermitian(const ComplexMatrix& h) {
    require_square_finite(h, "eig_hermitian");
    const ComplexMatrix sym = hermitize(h);
    const double defect = (h - sym).norm();
    if (defect > 1e-10 * (1.0 + h.norm()))
        throw NotHermitian("symmetrization correction " + std::to_string(defect) +
                           " exceeds tolerance");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailure("Hermitian eigensolver did not converge");
    return sort_nonincreasing(solver.eigenvalues(), solver.eigenvectors());
}

PsdMatrix PsdMatrix::from_matrix(const ComplexMatrix& m) {
    require_square_finite(m, "PsdMatrix");
    if (hermitian_defect(m) > 1e-12 * (1.0 + m.norm()))
        throw NotHermitian("matrix is not Hermitian within PSD tolerance");
    SpectralDecomposition spec = eig_hermitian(m);
    const double lmax = spec.eigenvalues.size() ? spec.eigenvalues(0) : 0.0;
    const double clamp = 1e-12 * std::max(lmax, 1.0);
    for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
        double& lam = spec.eigenvalues(i);
        if (lam < -clamp)
            throw NegativeEigenvalue("eigenvalue " + std::to_string(lam) +
                                     " below clamp " + std::to_string(-clamp));
        if (lam < 0.0) lam = 0.0;
    }
    return PsdMatrix(hermitize(m), std::move(spec));
}

PsdMatrix PsdMatrix::from_spectral(ComplexMatrix m, SpectralDecomposition s) {
    return PsdMatrix(std::move(m), std::move(s));
}

PsdMatrix abs_matrix(const ComplexMatrix& a) {
    require_square_finite(a, "abs_matrix");
    Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullV);
    SpectralDecomposition spec;
    spec.eigenvalues = svd.singularValues(); // nonincreasing, ≥ 0
    spec.eigenvectors = svd.matrixV();
    ComplexMatrix abs = hermitize(spec.eigenvectors *
                                  spec.eigenvalues.asDiagonal() *
                                  spec.eigenvectors.adjoint());
    return PsdMatrix::from_spectral(std::move(abs), std::move(spec));
}

RealVector singular_values(const ComplexMatrix& a) {
    require_square_finite(a, "singular_values");
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    return svd.singularValues();
}

PsdMatrix matrix_power(const PsdMatrix& m, double q) {
    if (!(q >= 0.0))
        throw BadExponent("matrix_power requires q >= 0");
    const RealVector& lam = m.eigenvalues();
    SpectralDecomposition spec;
    spec.eigenvalues.resize(lam.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        spec.eigenvalues(i) = (lam(i) == 0.0) ? 0.0 : std::pow(lam(i), q); // 0^0 = 0
    spec.eigenvectors = m.spectral().eigenvectors;
    ComplexMatrix out = hermitize(spec.eigenvectors *
                                  spec.eigenvalues.asDiagonal() *
                                  spec.eigenvectors.adjoint());
    return PsdMatrix::from_spectral(std::move(out), std::move(spec));
}

double trace_power(const PsdMatrix& m, double q) {
    if (!(q >= 0.0))
        throw BadExponent("trace_power requires q >= 0");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < m.eigenvalues().size(); ++i) {
        const double lam = m.eigenvalues()(i);
        sum += (lam == 0.0) ? 0.0 : std::pow(lam, q);
    }
    return sum;
}

double schatten_norm(const ComplexMatrix& a, double p) {
    require_square_finite(a, "schatten_norm");
    if (std::isnan(p) || p < 1.0)
        throw BadExponent("schatten_norm requires p >= 1 (or p = inf)");
    const RealVector sigma = singular_values(a);
    if (std::isinf(p))
        return sigma.size() ? sigma(0) : 0.0;
    double sum = 0.0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) sum += std::pow(sigma(i), p);
    return std::pow(sum, 1.0 / p);
}

std::pair<PsdMatrix, PsdMatrix> positive_negative_parts(const ComplexMatrix& b) {
    require_square_finite(b, "positive_negative_parts");
    if (hermitian_defect(b) > 1e-10 * (1.0 + b.norm()))
        throw NotHermitian("positive_negative_parts requires a Hermitian matrix");
    const SpectralDecomposition spec = eig_hermitian(b);
    const Eigen::Index n = spec.eigenvalues.size();
    RealVector pos(n), neg(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        pos(i) = std::max(spec.eigenvalues(i), 0.0);
        neg(i) = std::max(-spec.eigenvalues(i), 0.0);
    }
    const ComplexMatrix& v = spec.eigenvectors;
    ComplexMatrix x = hermitize(v * pos.asDiagonal() * v.adjoint());
    ComplexMatrix y = hermitize(v * neg.asDiagonal() * v.adjoint());
    return {PsdMatrix::from_matrix(x), PsdMatrix::from_matrix(y)};
}

} // namespace trineq
