#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "trineq/errors.hpp"

namespace trineq {

// The universal operand: a dense n×n complex matrix. Vectors appear only in
// the commutative checkers (functions on {1,…,n}).
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector    = Eigen::VectorXd;
using Complex       = std::complex<double>;

inline bool all_finite(const ComplexMatrix& m) {
    return m.allFinite();
}

inline void require_square_finite(const ComplexMatrix& m, const char* who) {
    if (m.rows() < 1 || m.rows() != m.cols())
        throw DimMismatch(std::string(who) + ": matrix must be square, n >= 1");
    if (!m.allFinite())
        throw DomainError(std::string(who) + ": matrix has non-finite entries");
}

inline void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* who) {
    require_square_finite(a, who);
    require_square_finite(b, who);
    if (a.rows() != b.rows())
        throw DimMismatch(std::string(who) + ": operands have different dimensions");
}

inline double frobenius(const ComplexMatrix& m) { return m.norm(); }

// Deviation from Hermitian symmetry, ‖M − M*‖_F.
inline double hermitian_defect(const ComplexMatrix& m) {
    return (m - m.adjoint()).norm();
}

// (M + M*)/2 — the Hermitian part.
inline ComplexMatrix hermitize(const ComplexMatrix& m) {
    return 0.5 * (m + m.adjoint());
}

// Comparison scale used throughout: max(|a|, |b|, 1).
inline double rel_scale(double a, double b) {
    return std::max({std::abs(a), std::abs(b), 1.0});
}

} // namespace trineq
