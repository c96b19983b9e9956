#include "trineq/integral_rep.hpp"

#include <Eigen/Cholesky>
#include <array>
#include <cmath>
#include <numbers>

namespace trineq {

namespace {

// Order-8 Gauss–Legendre nodes and weights on [−1, 1].
struct GaussNode {
    double x, w;
};
constexpr std::array<GaussNode, 8> kGauss8 = {{
    {-0.9602898564975362, 0.1012285362903763},
    {-0.7966664774136267, 0.2223810344533745},
    {-0.5255324099163290, 0.3137066458778873},
    {-0.1834346424956498, 0.3626837833783620},
    {0.1834346424956498, 0.3626837833783620},
    {0.5255324099163290, 0.3137066458778873},
    {0.7966664774136267, 0.2223810344533745},
    {0.9602898564975362, 0.1012285362903763},
}};

void require_open_interval(double p) {
    if (!(p > 1.0) || !(p < 2.0))
        throw BadExponent("integral representation requires 1 < p < 2 strictly");
}

// After t = e^u the scalar integrand (c/t² − 1/t + 1/(t+c)) t^p dt collapses
// to c²·e^{u(p−1)}/(t+c) du. The collapsed form is evaluated directly: the
// three-term form cancels catastrophically for t ≪ c.
double scalar_integral(double c, double p, const QuadratureConfig& cfg) {
    const double h = (cfg.u_max - cfg.u_min) / cfg.panels;
    double sum = 0.0;
    for (int panel = 0; panel < cfg.panels; ++panel) {
        const double mid = cfg.u_min + (panel + 0.5) * h;
        double acc = 0.0;
        for (const auto& node : kGauss8) {
            const double u = mid + 0.5 * h * node.x;
            const double t = std::exp(u);
            acc += node.w * c * c / (t + c) * std::exp(u * (p - 1.0));
        }
        sum += 0.5 * h * acc;
    }
    return sum;
}

} // namespace

void QuadratureConfig::validate() const {
    if (!(u_min < u_max)) throw ConfigError("quadrature requires u_min < u_max");
    if (panels < 4) throw ConfigError("quadrature requires panels >= 4");
    if (!(target_rel_error > 0.0)) throw ConfigError("quadrature requires target_rel_error > 0");
    if (u_max > 400.0 || u_min < -400.0)
        throw ConfigError("quadrature window beyond |u| = 400 overflows double range");
}

nlohmann::json QuadratureConfig::to_json() const {
    return {{"panels", panels},
            {"u_min", u_min},
            {"u_max", u_max},
            {"target_rel_error", target_rel_error}};
}

QuadratureConfig QuadratureConfig::from_json(const nlohmann::json& j) {
    QuadratureConfig c;
    c.panels = j.value("panels", c.panels);
    c.u_min = j.value("u_min", c.u_min);
    c.u_max = j.value("u_max", c.u_max);
    c.target_rel_error = j.value("target_rel_error", c.target_rel_error);
    c.validate();
    return c;
}

double kp_constant(double p, const QuadratureConfig& cfg) {
    require_open_interval(p);
    cfg.validate();
    return 1.0 / scalar_integral(1.0, p, cfg);
}

double scalar_power_via_integral(double c, double p, const QuadratureConfig& cfg) {
    require_open_interval(p);
    cfg.validate();
    if (!(c > 0.0)) throw SingularMatrix("scalar integral requires c > 0");
    return scalar_integral(c, p, cfg) / scalar_integral(1.0, p, cfg);
}

ComplexMatrix matrix_power_via_integral(const PsdMatrix& c, double p,
                                        const QuadratureConfig& cfg) {
    require_open_interval(p);
    cfg.validate();
    const Eigen::Index n = c.dim();
    const double lambda_min = c.eigenvalues()(n - 1);
    if (!(lambda_min > 0.0))
        throw SingularMatrix("matrix_power_via_integral requires lambda_min > 0, got " +
                             std::to_string(lambda_min));

    // Conservative truncation estimate (no credit for the k_p cancellation):
    // the integrand tail beyond t_max is ≲ λ_max²·t^{p−3} and below t_min is
    // ≲ λ_max·t^{p−2}, both relative to ‖C^p‖ ≥ (‖C‖_F/√n)^p.
    const double kp_est = std::sin((p - 1.0) * std::numbers::pi) / std::numbers::pi;
    const double lmax_ub = c.matrix().norm();
    const double lmax_lb = lmax_ub / std::sqrt(static_cast<double>(n));
    const double tail_hi =
        kp_est * lmax_ub * lmax_ub * std::exp(cfg.u_max * (p - 2.0)) / (2.0 - p);
    const double tail_lo = kp_est * lmax_ub * std::exp(cfg.u_min * (p - 1.0)) / (p - 1.0);
    const double tail_rel = (tail_hi + tail_lo) / std::pow(lmax_lb, p);
    if (tail_rel > cfg.target_rel_error)
        throw TruncationError("estimated truncation tail " + std::to_string(tail_rel) +
                              " exceeds target " + std::to_string(cfg.target_rel_error) +
                              "; widen [u_min, u_max]");

    // Collapsed matrix integrand: C²(tI+C)^{−1}·e^{u(p−1)}, resolved with a
    // Cholesky solve per node. Panels are summed in fixed order.
    const ComplexMatrix& m = c.matrix();
    const ComplexMatrix m2 = m * m;
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    const double h = (cfg.u_max - cfg.u_min) / cfg.panels;
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (int panel = 0; panel < cfg.panels; ++panel) {
        const double mid = cfg.u_min + (panel + 0.5) * h;
        ComplexMatrix acc = ComplexMatrix::Zero(n, n);
        for (const auto& node : kGauss8) {
            const double u = mid + 0.5 * h * node.x;
            const double t = std::exp(u);
            Eigen::LLT<ComplexMatrix> llt(t * id + m);
            if (llt.info() != Eigen::Success)
                throw SingularMatrix("resolvent factorization failed at t = " +
                                     std::to_string(t));
            acc += (node.w * std::exp(u * (p - 1.0))) * llt.solve(m2);
        }
        sum += 0.5 * h * acc;
    }
    const double norm_const = scalar_integral(1.0, p, cfg); // 1/k_p, same config
    return hermitize(sum / norm_const);
}

} // namespace trineq
