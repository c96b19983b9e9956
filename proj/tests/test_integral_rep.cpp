#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "oracles.hpp"
#include "trineq/ensembles.hpp"
#include "trineq/integral_rep.hpp"

using namespace trineq;

namespace {

// Implementer-derived closed form, validated against quadrature here before
// being trusted anywhere: k_p = sin((p−1)π)/π.
double kp_closed_form(double p) {
    return std::sin((p - 1.0) * std::numbers::pi) / std::numbers::pi;
}

PsdMatrix positive_definite(int dim, std::uint64_t seed) {
    const ComplexMatrix s = sample({EnsembleKind::psd, dim, seed, 1.0})[0];
    const double mean_ev = s.trace().real() / dim;
    return PsdMatrix::from_matrix(
        hermitize(s + 0.05 * mean_ev * ComplexMatrix::Identity(dim, dim)));
}

} // namespace

TEST_CASE("kp_constant(1.5) is 1/pi, matching the closed form to 1e-8") {
    const double kp = kp_constant(1.5);
    CHECK(kp == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-10));
    CHECK(std::abs(kp - kp_closed_form(1.5)) <= 1e-8);
}

TEST_CASE("kp_constant matches the closed form across the open interval") {
    for (double p : {1.2, 1.25, 1.4, 1.6, 1.75, 1.8})
        CHECK(kp_constant(p) == doctest::Approx(kp_closed_form(p)).epsilon(1e-6));
    // Near the endpoints the truncated tail decays like e^{u_max(p-2)}, so
    // the default window only reaches ~1e-4 there; a wider window recovers.
    for (double p : {1.1, 1.9}) {
        CHECK(kp_constant(p) == doctest::Approx(kp_closed_form(p)).epsilon(1e-4));
        QuadratureConfig wide;
        wide.u_min = -160.0;
        wide.u_max = 160.0;
        wide.panels = 640;
        CHECK(kp_constant(p, wide) == doctest::Approx(kp_closed_form(p)).epsilon(1e-7));
    }
}

TEST_CASE("kp_constant symmetry about p = 3/2") {
    CHECK(std::abs(kp_constant(1.2) - kp_constant(1.8)) <= 1e-8);
    CHECK(std::abs(kp_constant(1.3) - kp_constant(1.7)) <= 1e-8);
}

TEST_CASE("scalar identity: normalized integrand reproduces c^p at c = 4") {
    const QuadratureConfig cfg;
    for (double p : {1.25, 1.75}) {
        const double got = scalar_power_via_integral(4.0, p, cfg);
        CHECK(std::abs(got - std::pow(4.0, p)) <=
              cfg.target_rel_error * std::pow(4.0, p));
    }
}

TEST_CASE("kp_constant rejects the endpoints") {
    CHECK_THROWS_AS(kp_constant(1.0), BadExponent);
    CHECK_THROWS_AS(kp_constant(2.0), BadExponent);
    CHECK_THROWS_AS(kp_constant(0.5), BadExponent);
    CHECK_THROWS_AS(kp_constant(2.5), BadExponent);
}

TEST_CASE("matrix integral: identity maps to identity") {
    const PsdMatrix id = PsdMatrix::from_matrix(ComplexMatrix::Identity(3, 3));
    const ComplexMatrix out = matrix_power_via_integral(id, 1.5);
    CHECK((out - ComplexMatrix::Identity(3, 3)).norm() <= 1e-10);
}

TEST_CASE("matrix integral: diag(4,1) at p = 1.5 gives diag(8,1)") {
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 4.0;
    d(1, 1) = 1.0;
    const ComplexMatrix out = matrix_power_via_integral(PsdMatrix::from_matrix(d), 1.5);
    CHECK(out(0, 0).real() == doctest::Approx(8.0).epsilon(1e-6));
    CHECK(out(1, 1).real() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(out(0, 1)) <= 1e-10);
}

TEST_CASE("matrix integral matches the spectral route on seeded input") {
    const PsdMatrix c = positive_definite(4, 73);
    for (double p : {1.25, 1.5, 1.75}) {
        const ComplexMatrix via_int = matrix_power_via_integral(c, p);
        const ComplexMatrix via_spec = matrix_power(c, p).matrix();
        CHECK((via_int - via_spec).norm() / via_spec.norm() <= 1e-6);
    }
}

TEST_CASE("quadrature output is Hermitian and PSD for positive definite input") {
    const PsdMatrix c = positive_definite(4, 74);
    const ComplexMatrix out = matrix_power_via_integral(c, 1.3);
    CHECK(hermitian_defect(out) <= 1e-10 * (1.0 + out.norm()));
    CHECK_NOTHROW(PsdMatrix::from_matrix(out));
}

TEST_CASE("quadrature commutes with unitary conjugation") {
    const PsdMatrix c = positive_definite(4, 75);
    CounterRng rng(76);
    const ComplexMatrix u = oracle::random_unitary(4, rng);
    const PsdMatrix cu = PsdMatrix::from_matrix(hermitize(u * c.matrix() * u.adjoint()));
    const ComplexMatrix lhs = matrix_power_via_integral(cu, 1.5);
    const ComplexMatrix rhs = u * matrix_power_via_integral(c, 1.5) * u.adjoint();
    CHECK((lhs - rhs).norm() <= 1e-8 * (1.0 + rhs.norm()));
}

TEST_CASE("doubling panels reduces the error against the spectral oracle") {
    for (std::uint64_t seed : {81u, 82u, 83u}) {
        const PsdMatrix c = positive_definite(3, seed);
        const ComplexMatrix exact = matrix_power(c, 1.4).matrix();
        double prev = std::numeric_limits<double>::infinity();
        for (int panels : {24, 48, 96}) {
            QuadratureConfig cfg;
            cfg.panels = panels;
            const double err =
                (matrix_power_via_integral(c, 1.4, cfg) - exact).norm() / exact.norm();
            CHECK(err < prev);
            prev = err;
        }
    }
}

TEST_CASE("singular input and hopeless truncation are rejected") {
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 1.0; // λ_min = 0
    CHECK_THROWS_AS(matrix_power_via_integral(PsdMatrix::from_matrix(d), 1.5),
                    SingularMatrix);

    const PsdMatrix c = positive_definite(3, 84);
    QuadratureConfig tight;
    tight.u_min = -4.0;
    tight.u_max = 4.0; // tails nowhere near converged
    CHECK_THROWS_AS(matrix_power_via_integral(c, 1.5, tight), TruncationError);

    QuadratureConfig bad;
    bad.panels = 2;
    CHECK_THROWS_AS(matrix_power_via_integral(c, 1.5, bad), ConfigError);
    CHECK_THROWS_AS(matrix_power_via_integral(c, 0.9), BadExponent);
}
