#include "trineq/rearrange.hpp"

#include "trineq/matrix_io.hpp"

namespace trineq {

ComplexMatrix sigma_up(const ComplexMatrix& a) {
    const RealVector sigma = singular_values(a); // nonincreasing
    ComplexMatrix d = ComplexMatrix::Zero(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < sigma.size(); ++i) d(i, i) = sigma(i);
    return d;
}

ComplexMatrix sigma_down(const ComplexMatrix& a) {
    const RealVector sigma = singular_values(a);
    const Eigen::Index n = sigma.size();
    ComplexMatrix d = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) d(i, i) = sigma(n - 1 - i);
    return d;
}

LayerCake layer_cake(const PsdMatrix& c) {
    const RealVector& lam = c.eigenvalues(); // λ₁ ≥ … ≥ λ_n ≥ 0
    const ComplexMatrix& v = c.spectral().eigenvectors;
    const Eigen::Index n = lam.size();
    LayerCake out;
    out.coefficients.resize(n);
    out.projections.reserve(static_cast<std::size_t>(n));
    ComplexMatrix accum = ComplexMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        accum += v.col(j) * v.col(j).adjoint();
        out.projections.push_back(hermitize(accum));
        out.coefficients(j) = (j + 1 < n) ? lam(j) - lam(j + 1) : lam(n - 1);
        // Repeated eigenvalues give c_j = 0; clamp the roundoff remainder.
        if (out.coefficients(j) < 0.0) out.coefficients(j) = 0.0;
    }
    return out;
}

InequalityReport weyl_monotone_check(const ComplexMatrix& a, const ComplexMatrix& b,
                                     double tolerance) {
    require_same_dim(a, b, "weyl_monotone_check");
    if (hermitian_defect(a) > 1e-10 * (1.0 + a.norm()) ||
        hermitian_defect(b) > 1e-10 * (1.0 + b.norm()))
        throw NotHermitian("weyl_monotone_check requires Hermitian A and B");
    const ComplexMatrix gap = hermitize(a - abs_matrix(b).matrix());
    const SpectralDecomposition gap_spec = eig_hermitian(gap);
    const double gmin = gap_spec.eigenvalues(gap_spec.eigenvalues.size() - 1);
    if (gmin < -1e-10 * (1.0 + gap.norm()))
        throw PreconditionViolated("weyl_monotone_check: A - |B| has eigenvalue " +
                                   std::to_string(gmin));

    const RealVector sa = singular_values(a);
    const RealVector sb = singular_values(b);
    Eigen::Index argmin = 0;
    for (Eigen::Index i = 1; i < sa.size(); ++i)
        if (sa(i) - sb(i) < sa(argmin) - sb(argmin)) argmin = i;

    nlohmann::json witness = {
        {"inputs", {{"A", matrix_to_json(a)}, {"B", matrix_to_json(b)}}},
        {"params", nlohmann::json::object()},
    };
    return make_report("weyl_monotone", {}, sa(argmin), sb(argmin),
                       sa(argmin) - sb(argmin), tolerance, std::move(witness));
}

} // namespace trineq
