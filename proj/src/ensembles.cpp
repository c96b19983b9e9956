#include "trineq/ensembles.hpp"

#include <algorithm>

#include "trineq/linalg.hpp"

namespace trineq {

const char* to_string(EnsembleKind k) {
    switch (k) {
        case EnsembleKind::general_complex: return "general_complex";
        case EnsembleKind::hermitian:       return "hermitian";
        case EnsembleKind::psd:             return "psd";
        case EnsembleKind::ordered_pair:    return "ordered_pair";
        case EnsembleKind::dominated_pair:  return "dominated_pair";
        case EnsembleKind::diagonal_psd:    return "diagonal_psd";
        case EnsembleKind::unitary:         return "unitary";
    }
    return "?";
}

EnsembleKind ensemble_kind_from_string(const std::string& s) {
    if (s == "general_complex") return EnsembleKind::general_complex;
    if (s == "hermitian")       return EnsembleKind::hermitian;
    if (s == "psd")             return EnsembleKind::psd;
    if (s == "ordered_pair")    return EnsembleKind::ordered_pair;
    if (s == "dominated_pair")  return EnsembleKind::dominated_pair;
    if (s == "diagonal_psd")    return EnsembleKind::diagonal_psd;
    if (s == "unitary")         return EnsembleKind::unitary;
    throw BadSpec("unknown ensemble kind: " + s);
}

bool is_pair_kind(EnsembleKind k) {
    return k == EnsembleKind::ordered_pair || k == EnsembleKind::dominated_pair;
}

void EnsembleSpec::validate() const {
    if (dim < 1) throw BadSpec("ensemble dim must be >= 1");
    if (!(scale > 0.0)) throw BadSpec("ensemble scale must be > 0");
}

nlohmann::json EnsembleSpec::to_json() const {
    return {{"kind", to_string(kind)}, {"dim", dim}, {"seed", seed}, {"scale", scale}};
}

EnsembleSpec EnsembleSpec::from_json(const nlohmann::json& j) {
    EnsembleSpec s;
    s.kind = ensemble_kind_from_string(j.at("kind").get<std::string>());
    s.dim = j.at("dim").get<int>();
    s.seed = j.at("seed").get<std::uint64_t>();
    s.scale = j.value("scale", 1.0);
    s.validate();
    return s;
}

namespace {

// Entries are drawn row-major; the draw order is part of the pinned format.
ComplexMatrix gaussian(int n, CounterRng& rng) {
    ComplexMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
    return g;
}

// Modified Gram–Schmidt with a second reorthogonalization pass, then the
// phase convention: first entry of nonzero modulus made real positive.
ComplexMatrix orthonormalize(const ComplexMatrix& g) {
    const Eigen::Index n = g.rows();
    ComplexMatrix q = g;
    for (Eigen::Index j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index k = 0; k < j; ++k)
                q.col(j) -= q.col(k).dot(q.col(j)) * q.col(k);
        q.col(j).normalize();
        for (Eigen::Index i = 0; i < n; ++i) {
            const Complex v = q.col(j)(i);
            if (std::abs(v) > 0.0) {
                q.col(j) *= std::conj(v) / std::abs(v);
                break;
            }
        }
    }
    return q;
}

RealVector half_gaussian_sorted(int n, CounterRng& rng) {
    RealVector d(n);
    for (int i = 0; i < n; ++i) d(i) = std::abs(rng.normal());
    std::sort(d.data(), d.data() + n, std::greater<double>());
    return d;
}

// Hermitian square root used as the factor-space coordinate of a PSD matrix:
// M = F*F with F = M^{1/2}.
ComplexMatrix psd_factor(const ComplexMatrix& m) {
    return matrix_power(PsdMatrix::from_matrix(m), 0.5).matrix();
}

} // namespace

std::vector<ComplexMatrix> sample_with_rng(EnsembleKind kind, int dim, double scale,
                                           CounterRng& rng) {
    if (dim < 1) throw BadSpec("ensemble dim must be >= 1");
    if (!(scale > 0.0)) throw BadSpec("ensemble scale must be > 0");
    const double s2 = scale * scale;
    switch (kind) {
        case EnsembleKind::general_complex:
            return {scale * gaussian(dim, rng)};
        case EnsembleKind::hermitian:
            return {scale * hermitize(gaussian(dim, rng))};
        case EnsembleKind::psd: {
            const ComplexMatrix g = gaussian(dim, rng);
            // Evaluate the Gram product before scaling: scale covariance is
            // then an exact entrywise multiply.
            const ComplexMatrix gram = g.adjoint() * g;
            return {s2 * gram};
        }
        case EnsembleKind::ordered_pair: {
            const ComplexMatrix g1 = gaussian(dim, rng);
            const ComplexMatrix g2 = gaussian(dim, rng);
            const ComplexMatrix b = g1.adjoint() * g1;
            const ComplexMatrix a = b + g2.adjoint() * g2;
            return {s2 * a, s2 * b};
        }
        case EnsembleKind::dominated_pair: {
            const ComplexMatrix b = scale * hermitize(gaussian(dim, rng));
            const ComplexMatrix g = gaussian(dim, rng);
            const ComplexMatrix gram = g.adjoint() * g;
            const ComplexMatrix a = abs_matrix(b).matrix() + s2 * gram;
            return {a, b};
        }
        case EnsembleKind::diagonal_psd: {
            const RealVector d = scale * half_gaussian_sorted(dim, rng);
            ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
            for (int i = 0; i < dim; ++i) m(i, i) = d(i);
            return {m};
        }
        case EnsembleKind::unitary:
            return {orthonormalize(gaussian(dim, rng))};
    }
    throw BadSpec("unhandled ensemble kind");
}

std::vector<ComplexMatrix> sample(const EnsembleSpec& spec) {
    spec.validate();
    CounterRng rng(spec.seed, 0);
    return sample_with_rng(spec.kind, spec.dim, spec.scale, rng);
}

std::vector<ComplexMatrix> perturb(EnsembleKind kind, const std::vector<ComplexMatrix>& mats,
                                   CounterRng& rng, double magnitude) {
    if (!(magnitude >= 0.0)) throw BadSpec("perturb magnitude must be >= 0");
    if (mats.size() != (is_pair_kind(kind) ? 2u : 1u))
        throw BadSpec("perturb: matrix count does not match ensemble kind");
    if (magnitude == 0.0) return mats;
    const int n = static_cast<int>(mats[0].rows());
    switch (kind) {
        case EnsembleKind::general_complex:
            return {mats[0] + magnitude * gaussian(n, rng)};
        case EnsembleKind::hermitian:
            return {mats[0] + magnitude * hermitize(gaussian(n, rng))};
        case EnsembleKind::psd: {
            const ComplexMatrix f = psd_factor(mats[0]) + magnitude * gaussian(n, rng);
            return {f.adjoint() * f};
        }
        case EnsembleKind::ordered_pair: {
            const ComplexMatrix f1 = psd_factor(mats[1]) + magnitude * gaussian(n, rng);
            const ComplexMatrix f2 = psd_factor(mats[0] - mats[1]) + magnitude * gaussian(n, rng);
            const ComplexMatrix b = f1.adjoint() * f1;
            return {b + f2.adjoint() * f2, b};
        }
        case EnsembleKind::dominated_pair: {
            const ComplexMatrix b = mats[1] + magnitude * hermitize(gaussian(n, rng));
            const ComplexMatrix gap = mats[0] - abs_matrix(mats[1]).matrix();
            const ComplexMatrix f = psd_factor(hermitize(gap)) + magnitude * gaussian(n, rng);
            return {abs_matrix(b).matrix() + f.adjoint() * f, b};
        }
        case EnsembleKind::diagonal_psd: {
            RealVector d(n);
            for (int i = 0; i < n; ++i)
                d(i) = std::abs(mats[0](i, i).real() + magnitude * rng.normal());
            std::sort(d.data(), d.data() + n, std::greater<double>());
            ComplexMatrix m = ComplexMatrix::Zero(n, n);
            for (int i = 0; i < n; ++i) m(i, i) = d(i);
            return {m};
        }
        case EnsembleKind::unitary:
            return {orthonormalize(mats[0] + magnitude * gaussian(n, rng))};
    }
    throw BadSpec("unhandled ensemble kind");
}

} // namespace trineq
