#include "trineq/catalog.hpp"

#include <algorithm>
#include <cmath>

#include "trineq/matrix_io.hpp"
#include "trineq/rearrange.hpp"

namespace trineq {

namespace {

// ── small helpers ─────────────────────────────────────────────────────────

double powsum(const RealVector& v, double p) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) s += std::pow(std::abs(v(i)), p);
    return s;
}

double powsum_abs(const ComplexVector& v, double p) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) s += std::pow(std::abs(v(i)), p);
    return s;
}

double lp_norm(const ComplexVector& v, double p) {
    return std::pow(powsum_abs(v, p), 1.0 / p);
}

RealVector moduli_sorted_desc(const ComplexVector& v) {
    RealVector m(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) m(i) = std::abs(v(i));
    std::sort(m.data(), m.data() + m.size(), std::greater<double>());
    return m;
}

void require_finite_p(double p, const char* who) {
    if (std::isnan(p) || std::isinf(p) || p < 1.0)
        throw BadExponent(std::string(who) + " requires finite p >= 1");
}

// Slack for statements that hold with ">=" for p <= 2 and reverse for p > 2.
double orient_ge_le(double p, double lhs, double rhs) {
    return (p <= 2.0) ? lhs - rhs : rhs - lhs;
}

bool is_hermitian_tol(const ComplexMatrix& m) {
    return hermitian_defect(m) <= 1e-10 * (1.0 + m.norm());
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
    const SpectralDecomposition s = eig_hermitian(hermitian);
    return s.eigenvalues(s.eigenvalues.size() - 1);
}

bool is_psd_tol(const ComplexMatrix& m) {
    return is_hermitian_tol(m) && min_eigenvalue(hermitize(m)) >= -1e-10 * (1.0 + m.norm());
}

bool is_even_integer(double p) {
    const double r = std::round(p);
    return std::abs(p - r) < 1e-9 && std::abs(std::remainder(r, 2.0)) < 0.5;
}

json mat_witness(std::initializer_list<std::pair<const char*, const ComplexMatrix*>> mats,
                 const std::map<std::string, double>& params) {
    json in = json::object();
    for (const auto& [name, m] : mats) in[name] = matrix_to_json(*m);
    return json{{"inputs", std::move(in)}, {"params", params}};
}

// Σ λ_i^p of a Hermitian matrix known to be PSD up to the stated tolerance;
// small negative roundoff is clamped, anything worse violates the caller's
// precondition.
double trace_power_psd_tol(const ComplexMatrix& m, double p, const char* who) {
    const SpectralDecomposition s = eig_hermitian(hermitize(m));
    const double floor = -1e-10 * (1.0 + m.norm());
    double sum = 0.0;
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
        double lam = s.eigenvalues(i);
        if (lam < floor)
            throw PreconditionViolated(std::string(who) + ": matrix expected PSD has eigenvalue " +
                                       std::to_string(lam));
        if (lam < 0.0) lam = 0.0;
        sum += (lam == 0.0) ? 0.0 : std::pow(lam, p);
    }
    return sum;
}

} // namespace

// ── commutative checkers ──────────────────────────────────────────────────

InequalityReport hanner_vector(const ComplexVector& f, const ComplexVector& g, double p,
                               double tolerance) {
    if (f.size() != g.size()) throw LengthMismatch("hanner_vector: |f| != |g|");
    require_finite_p(p, "hanner_vector");
    const double lhs = powsum_abs(f + g, p) + powsum_abs(f - g, p);
    const double nf = lp_norm(f, p), ng = lp_norm(g, p);
    const double rhs = std::pow(nf + ng, p) + std::pow(std::abs(nf - ng), p);
    json w = {{"inputs",
               {{"f", matrix_to_json(ComplexMatrix(f.asDiagonal()))},
                {"g", matrix_to_json(ComplexMatrix(g.asDiagonal()))}}},
              {"params", {{"p", p}}}};
    return make_report("hanner_vector", {{"p", p}}, lhs, rhs, orient_ge_le(p, lhs, rhs),
                       tolerance, std::move(w));
}

InequalityReport rearrangement_vector(const ComplexVector& f, const ComplexVector& g, double p,
                                      double tolerance) {
    if (f.size() != g.size()) throw LengthMismatch("rearrangement_vector: |f| != |g|");
    require_finite_p(p, "rearrangement_vector");
    const double lhs = powsum_abs(f + g, p) + powsum_abs(f - g, p);
    const RealVector fs = moduli_sorted_desc(f);
    const RealVector gs = moduli_sorted_desc(g);
    const double rhs = powsum(fs + gs, p) + powsum(fs - gs, p);
    json w = {{"inputs",
               {{"f", matrix_to_json(ComplexMatrix(f.asDiagonal()))},
                {"g", matrix_to_json(ComplexMatrix(g.asDiagonal()))}}},
              {"params", {{"p", p}}}};
    return make_report("rearrangement_vector", {{"p", p}}, lhs, rhs, orient_ge_le(p, lhs, rhs),
                       tolerance, std::move(w));
}

InequalityReport parallelogram_bound_vector(const ComplexVector& f, const ComplexVector& g,
                                            double p, double tolerance) {
    if (f.size() != g.size()) throw LengthMismatch("parallelogram_bound_vector: |f| != |g|");
    require_finite_p(p, "parallelogram_bound_vector");
    const double lhs = powsum_abs(f + g, p) + powsum_abs(f - g, p);
    const double rhs = 2.0 * powsum_abs(f, p) + 2.0 * powsum_abs(g, p);
    json w = {{"inputs",
               {{"f", matrix_to_json(ComplexMatrix(f.asDiagonal()))},
                {"g", matrix_to_json(ComplexMatrix(g.asDiagonal()))}}},
              {"params", {{"p", p}}}};
    // The parallelogram bound runs the other way: <= for p <= 2.
    return make_report("parallelogram_bound_vector", {{"p", p}}, lhs, rhs,
                       orient_ge_le(p, rhs, lhs), tolerance, std::move(w));
}

double scalar_curve(double a, double b, double p, double t) {
    if (a < 0.0 || b < 0.0) throw DomainError("scalar_curve requires a, b >= 0");
    if (p < 1.0) throw BadExponent("scalar_curve requires p >= 1");
    const double base = a * a + b * b;
    double up = base + 2.0 * a * b * t;
    double dn = base - 2.0 * a * b * t;
    const double eps = 1e-12 * (base + 1.0);
    if (up < -eps || dn < -eps)
        throw DomainError("scalar_curve: a^2+b^2±2abt negative beyond roundoff");
    up = std::max(up, 0.0);
    dn = std::max(dn, 0.0);
    return std::pow(up, p / 2.0) + std::pow(dn, p / 2.0);
}

bool scalar_curve_extremal_ok(double a, double b, double p, double t, double tolerance) {
    const double ct = scalar_curve(a, b, p, t);
    const double c1 = scalar_curve(a, b, p, 1.0);
    const double tol = tolerance * std::max({std::abs(ct), std::abs(c1), 1.0});
    if (p < 2.0) return ct >= c1 - tol;
    if (p > 2.0) return ct <= c1 + tol;
    return std::abs(ct - c1) <= tol;
}

// ── matrix rearrangement family ───────────────────────────────────────────

InequalityReport hanner_matrix(const ComplexMatrix& a, const ComplexMatrix& b, double p,
                               double tolerance) {
    require_same_dim(a, b, "hanner_matrix");
    if (std::isnan(p) || p < 1.0) throw BadExponent("hanner_matrix requires p >= 1");

    double lhs, rhs, slack;
    if (std::isinf(p)) {
        // p → ∞ limit of the reversed regime: max(‖A+B‖, ‖A−B‖) ≤ ‖A‖ + ‖B‖.
        lhs = std::max(schatten_norm(a + b, p), schatten_norm(a - b, p));
        rhs = schatten_norm(a, p) + schatten_norm(b, p);
        slack = rhs - lhs;
    } else {
        lhs = powsum(singular_values(a + b), p) + powsum(singular_values(a - b), p);
        const double na = schatten_norm(a, p), nb = schatten_norm(b, p);
        rhs = std::pow(na + nb, p) + std::pow(std::abs(na - nb), p);
        slack = orient_ge_le(p, lhs, rhs);
    }

    bool psd_sum_pair = false;
    if (is_hermitian_tol(a) && is_hermitian_tol(b))
        psd_sum_pair = is_psd_tol(hermitize(a + b)) && is_psd_tol(hermitize(a - b));
    bool known = std::isinf(p) || (p >= 1.0 && p <= 4.0 / 3.0) || p >= 4.0 || p == 2.0;
    // PSD-pair region asserted only for p <= 2; for p > 2 the record is
    // uncertain and the flag stays false.
    if (psd_sum_pair && p <= 2.0) known = true;

    InequalityReport r = make_report("hanner_matrix", {{"p", p}}, lhs, rhs, slack, tolerance,
                                     mat_witness({{"A", &a}, {"B", &b}}, {{"p", p}}));
    r.flags["known_region"] = known;
    r.flags["psd_sum_pair"] = psd_sum_pair;
    return r;
}

InequalityReport conjecture1(const ComplexMatrix& a, const ComplexMatrix& b, double p,
                             double tolerance) {
    require_same_dim(a, b, "conjecture1");
    require_finite_p(p, "conjecture1");
    const double lhs = powsum(singular_values(a + b), p) + powsum(singular_values(a - b), p);
    const RealVector sa = singular_values(a);
    const RealVector sb = singular_values(b);
    const double rhs = powsum(sa + sb, p) + powsum(sa - sb, p);

    bool thm1 = false;
    if (is_hermitian_tol(a) && is_hermitian_tol(b)) {
        const double scale = 1.0 + std::max(a.norm(), b.norm());
        thm1 = min_eigenvalue(hermitize(b)) >= -1e-10 * scale &&
               min_eigenvalue(hermitize(a - b)) >= -1e-10 * scale;
    }
    InequalityReport r =
        make_report("conjecture1", {{"p", p}}, lhs, rhs, orient_ge_le(p, lhs, rhs), tolerance,
                    mat_witness({{"A", &a}, {"B", &b}}, {{"p", p}}));
    r.flags["theorem1_applies"] = thm1;
    r.flags["even_p_reverse"] = is_even_integer(p);
    r.flags["evidence_only"] = !(thm1 && p <= 2.0) && !(is_even_integer(p) && p >= 2.0);
    return r;
}

InequalityReport conjecture2(const ComplexMatrix& a, const ComplexMatrix& b, double p,
                             double tolerance) {
    require_same_dim(a, b, "conjecture2");
    require_finite_p(p, "conjecture2");
    const double lhs = powsum(singular_values(a + b), p) + powsum(singular_values(a - b), p);
    const RealVector sa = singular_values(a);          // σ₁ ≥ … ≥ σ_n
    const RealVector sb = singular_values(b).reverse(); // σ_n ≤ … ≤ σ₁
    const double rhs = powsum(sa + sb, p) + powsum(sa - sb, p);

    bool thm2 = false;
    if (is_hermitian_tol(a) && is_hermitian_tol(b)) {
        const ComplexMatrix gap = hermitize(a - abs_matrix(b).matrix());
        thm2 = min_eigenvalue(gap) >= -1e-10 * (1.0 + std::max(a.norm(), b.norm()));
    }
    // The statement runs "<=" for p <= 2 here, so the orientation flips
    // relative to conjecture1.
    InequalityReport r =
        make_report("conjecture2", {{"p", p}}, lhs, rhs, orient_ge_le(p, rhs, lhs), tolerance,
                    mat_witness({{"A", &a}, {"B", &b}}, {{"p", p}}));
    r.flags["theorem2_applies"] = thm2;
    r.flags["evidence_only"] = !(thm2 && p <= 2.0) && p != 2.0;
    return r;
}

InequalityReport lemma_otherway(const ComplexMatrix& a, const ComplexMatrix& b, double p,
                                double tolerance) {
    require_same_dim(a, b, "lemma_otherway");
    if (std::isnan(p) || p < 1.0 || p > 2.0)
        throw BadExponent("lemma_otherway requires 1 <= p <= 2");
    if (!is_hermitian_tol(a) || !is_hermitian_tol(b))
        throw NotHermitian("lemma_otherway requires Hermitian A and B");
    const ComplexMatrix abs_b = abs_matrix(b).matrix();
    const ComplexMatrix gap = hermitize(a - abs_b);
    if (min_eigenvalue(gap) < -1e-10 * (1.0 + a.norm() + b.norm()))
        throw PreconditionViolated("lemma_otherway requires A >= |B|");

    const double lhs = trace_power_psd_tol(a + b, p, "lemma_otherway") +
                       trace_power_psd_tol(a - b, p, "lemma_otherway");
    const double rhs = trace_power_psd_tol(a + abs_b, p, "lemma_otherway") +
                       trace_power_psd_tol(a - abs_b, p, "lemma_otherway");
    return make_report("lemma_otherway", {{"p", p}}, lhs, rhs, rhs - lhs, tolerance,
                       mat_witness({{"A", &a}, {"B", &b}}, {{"p", p}}));
}

namespace {

// Tr(B^r (B^{1/2} A B^{1/2})^s), the alternating-product trace.
double alternating_trace(const PsdMatrix& a, const PsdMatrix& b, double r, double s) {
    const ComplexMatrix root_b = matrix_power(b, 0.5).matrix();
    const PsdMatrix inner = PsdMatrix::from_matrix(hermitize(root_b * a.matrix() * root_b));
    if (r == 0.0) return trace_power(inner, s);
    return trace_product_real(matrix_power(b, r).matrix(), matrix_power(inner, s).matrix());
}

// Σ_i λ_i(A)^s · λ_{ρ(i)}(B)^{s+r} with ρ the identity (similar ordering)
// or the reversal (opposite ordering).
double rearranged_trace(const PsdMatrix& a, const PsdMatrix& b, double r, double s,
                        bool opposite) {
    const RealVector& la = a.eigenvalues();
    const RealVector& lb = b.eigenvalues();
    const Eigen::Index n = la.size();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = la(i);
        const double y = lb(opposite ? n - 1 - i : i);
        const double xs = (x == 0.0) ? 0.0 : std::pow(x, s);
        const double ys = (y == 0.0) ? 0.0 : std::pow(y, s + r);
        sum += xs * ys;
    }
    return sum;
}

} // namespace

InequalityReport updown1(const PsdMatrix& a, const PsdMatrix& b, double r, double s,
                         double tolerance) {
    if (a.dim() != b.dim()) throw DimMismatch("updown1: operands differ in dimension");
    if (!(r >= 0.0)) throw BadExponent("updown1 requires r >= 0");
    if (!(s >= 1.0)) throw BadExponent("updown1 requires s >= 1");
    const double lhs = alternating_trace(a, b, r, s);
    const double rhs = rearranged_trace(a, b, r, s, /*opposite=*/true);
    return make_report("updown1", {{"r", r}, {"s", s}}, lhs, rhs, lhs - rhs, tolerance,
                       mat_witness({{"A", &a.matrix()}, {"B", &b.matrix()}},
                                   {{"r", r}, {"s", s}}));
}

InequalityReport updown2(const PsdMatrix& a, const PsdMatrix& b, double r, double s,
                         double tolerance) {
    if (a.dim() != b.dim()) throw DimMismatch("updown2: operands differ in dimension");
    if (!(r >= 0.0)) throw BadExponent("updown2 requires r >= 0");
    if (std::abs(s - std::round(s)) > 1e-9 || std::round(s) < 1.0)
        throw NonIntegerS("updown2 requires an integer s >= 1, got " + std::to_string(s));
    const double si = std::round(s);
    const double lhs = rearranged_trace(a, b, r, si, /*opposite=*/false);
    const double rhs = alternating_trace(a, b, r, si);
    return make_report("updown2", {{"r", r}, {"s", si}}, lhs, rhs, lhs - rhs, tolerance,
                       mat_witness({{"A", &a.matrix()}, {"B", &b.matrix()}},
                                   {{"r", r}, {"s", si}}));
}

InequalityReport lieb_thirring(const PsdMatrix& x, const PsdMatrix& y, double s,
                               double tolerance) {
    if (x.dim() != y.dim()) throw DimMismatch("lieb_thirring: operands differ in dimension");
    if (!(s >= 1.0)) throw BadExponent("lieb_thirring requires s >= 1");
    const double lhs = alternating_trace(x, y, 0.0, s); // Tr((Y^{1/2}XY^{1/2})^s)
    const double rhs =
        trace_product_real(matrix_power(x, s).matrix(), matrix_power(y, s).matrix());
    return make_report("lieb_thirring", {{"s", s}}, lhs, rhs, rhs - lhs, tolerance,
                       mat_witness({{"X", &x.matrix()}, {"Y", &y.matrix()}}, {{"s", s}}));
}

InequalityReport reverse_lt_half(const PsdMatrix& a, const PsdMatrix& b, double tolerance) {
    if (a.dim() != b.dim()) throw DimMismatch("reverse_lt_half: operands differ in dimension");
    const double lhs = alternating_trace(a, b, 0.0, 0.5); // Tr((B^{1/2}AB^{1/2})^{1/2})
    const double rhs =
        trace_product_real(matrix_power(a, 0.5).matrix(), matrix_power(b, 0.5).matrix());
    return make_report("reverse_lt_half", {}, lhs, rhs, lhs - rhs, tolerance,
                       mat_witness({{"A", &a.matrix()}, {"B", &b.matrix()}}, {}));
}

InequalityReport rev_probe(const PsdMatrix& a, const PsdMatrix& b, double s, double tolerance) {
    if (a.dim() != b.dim()) throw DimMismatch("rev_probe: operands differ in dimension");
    if (!(s > 0.5) || !(s < 1.0)) throw BadExponent("rev_probe requires 1/2 < s < 1");
    const double lhs = alternating_trace(a, b, 0.0, s);
    const double rhs =
        trace_product_real(matrix_power(a, s).matrix(), matrix_power(b, s).matrix());
    InequalityReport r =
        make_report("rev_probe", {{"s", s}}, lhs, rhs, lhs - rhs, tolerance,
                    mat_witness({{"A", &a.matrix()}, {"B", &b.matrix()}}, {{"s", s}}));
    r.flags["evidence_only"] = true;
    return r;
}

InequalityReport liebth2_probe(const PsdMatrix& x, const PsdMatrix& y, double r, double s,
                               double tolerance) {
    if (x.dim() != y.dim()) throw DimMismatch("liebth2_probe: operands differ in dimension");
    if (!(r > 0.0)) throw BadExponent("liebth2_probe requires r > 0");
    if (!(s >= 1.0)) throw BadExponent("liebth2_probe requires s >= 1");
    const double lhs = alternating_trace(x, y, r, s); // Tr(Y^r (Y^{1/2}XY^{1/2})^s)
    const double rhs =
        trace_product_real(matrix_power(x, s).matrix(), matrix_power(y, s + r).matrix());
    InequalityReport rep =
        make_report("liebth2_probe", {{"r", r}, {"s", s}}, lhs, rhs, rhs - lhs, tolerance,
                    mat_witness({{"X", &x.matrix()}, {"Y", &y.matrix()}}, {{"r", r}, {"s", s}}));
    rep.flags["evidence_only"] = std::abs(s - std::round(s)) > 1e-9; // integer s is A.2 territory
    return rep;
}

namespace {

double epstein_f(const PsdMatrix& b, double s, const PsdMatrix& a) {
    const ComplexMatrix root_b = matrix_power(b, 0.5).matrix();
    const ComplexMatrix inner = matrix_power(a, 1.0 / s).matrix();
    const PsdMatrix w = PsdMatrix::from_matrix(hermitize(root_b * inner * root_b));
    return trace_power(w, s);
}

} // namespace

InequalityReport epstein_probe(const PsdMatrix& b, double s, const PsdMatrix& a1,
                               const PsdMatrix& a2, double lambda, double tolerance) {
    if (b.dim() != a1.dim() || b.dim() != a2.dim())
        throw DimMismatch("epstein_probe: operands differ in dimension");
    if (!(s >= 0.5)) throw BadExponent("epstein_probe requires s >= 1/2");
    if (!(lambda >= 0.0) || !(lambda <= 1.0))
        throw DomainError("epstein_probe requires lambda in [0, 1]");

    const PsdMatrix mix =
        PsdMatrix::from_matrix(lambda * a1.matrix() + (1.0 - lambda) * a2.matrix());
    const double f_mix = epstein_f(b, s, mix);
    const double f_seg = lambda * epstein_f(b, s, a1) + (1.0 - lambda) * epstein_f(b, s, a2);
    const bool concave_mode = s >= 1.0;
    const double slack = concave_mode ? f_mix - f_seg : f_seg - f_mix;

    InequalityReport r =
        make_report("epstein_probe", {{"s", s}, {"lambda", lambda}}, f_mix, f_seg, slack,
                    tolerance,
                    mat_witness({{"B", &b.matrix()}, {"A1", &a1.matrix()}, {"A2", &a2.matrix()}},
                                {{"s", s}, {"lambda", lambda}}));
    r.flags["concavity_mode"] = concave_mode;
    r.flags["evidence_only"] = !concave_mode && s != 0.5; // convexity proved only at s = 1/2
    return r;
}

InequalityReport chiti_tartar_matrix(const ComplexMatrix& a, const ComplexMatrix& b, double p,
                                     double tolerance) {
    require_same_dim(a, b, "chiti_tartar_matrix");
    if (std::isnan(p) || p < 1.0) throw BadExponent("chiti_tartar_matrix requires p >= 1");
    const double lhs = schatten_norm(a - b, p);
    const RealVector diff = singular_values(a) - singular_values(b); // ranks paired
    double rhs;
    if (std::isinf(p)) {
        rhs = diff.size() ? diff.cwiseAbs().maxCoeff() : 0.0;
    } else {
        rhs = std::pow(powsum(diff, p), 1.0 / p);
    }
    return make_report("chiti_tartar_matrix", {{"p", p}}, lhs, rhs, lhs - rhs, tolerance,
                       mat_witness({{"A", &a}, {"B", &b}}, {{"p", p}}));
}

InequalityReport resolvent_suffice(const ComplexMatrix& a, const ComplexMatrix& b, double t,
                                   double tolerance) {
    require_same_dim(a, b, "resolvent_suffice");
    if (!(t > 0.0)) throw DomainError("resolvent_suffice requires t > 0");
    if (!is_hermitian_tol(a) || !is_hermitian_tol(b))
        throw NotHermitian("resolvent_suffice requires Hermitian A and B");
    const double scale = 1.0 + std::max(a.norm(), b.norm());
    if (min_eigenvalue(hermitize(b)) < -1e-10 * scale ||
        min_eigenvalue(hermitize(a - b)) < -1e-10 * scale)
        throw PreconditionViolated("resolvent_suffice requires A >= B >= 0");

    const auto resolvent_trace = [&](const RealVector& lam) {
        double sum = 0.0;
        for (Eigen::Index i = 0; i < lam.size(); ++i) {
            const double d = t + lam(i);
            if (d <= 0.0)
                throw SingularShift("resolvent_suffice: shifted eigenvalue " + std::to_string(d));
            sum += 1.0 / d;
        }
        return sum;
    };
    const double lhs = resolvent_trace(eig_hermitian(hermitize(a + b)).eigenvalues) +
                       resolvent_trace(eig_hermitian(hermitize(a - b)).eigenvalues);
    const RealVector sa = singular_values(a);
    const RealVector sb = singular_values(b);
    const double rhs = resolvent_trace(sa + sb) + resolvent_trace(sa - sb);
    return make_report("resolvent_suffice", {{"t", t}}, lhs, rhs, lhs - rhs, tolerance,
                       mat_witness({{"A", &a}, {"B", &b}}, {{"t", t}}));
}

// ── registry ──────────────────────────────────────────────────────────────

const char* to_string(IneqStatus s) {
    switch (s) {
        case IneqStatus::proved:        return "proved";
        case IneqStatus::conjecture:    return "conjecture";
        case IneqStatus::known_region:  return "known_region";
        case IneqStatus::planted_false: return "planted_false";
    }
    return "?";
}

namespace {

double need_param(const ParamMap& p, const char* name) {
    const auto it = p.find(name);
    if (it == p.end()) throw ConfigError(std::string("missing parameter '") + name + "'");
    return it->second;
}

const ComplexMatrix& arg(const std::vector<ComplexMatrix>& mats, std::size_t i,
                         const char* id) {
    if (i >= mats.size())
        throw BadSpec(std::string(id) + ": expected more matrix inputs than given");
    return mats[i];
}

ComplexVector diag_of(const ComplexMatrix& m) { return m.diagonal(); }

std::vector<RegistryEntry> build_registry() {
    using Kind = EnsembleKind;
    const std::vector<Kind> any_pair = {Kind::general_complex, Kind::hermitian, Kind::psd,
                                        Kind::ordered_pair, Kind::dominated_pair,
                                        Kind::diagonal_psd, Kind::unitary};
    const std::vector<Kind> vec_kinds = {Kind::general_complex, Kind::hermitian,
                                         Kind::diagonal_psd};
    const std::vector<Kind> psd_only = {Kind::psd, Kind::diagonal_psd};

    std::vector<RegistryEntry> reg;

    reg.push_back({"hanner_vector",
                   "|f+g|_p^p + |f-g|_p^p >= (|f|_p + |g|_p)^p + ||f|_p - |g|_p|^p",
                   "slack = lhs - rhs for p <= 2, rhs - lhs for p >= 2",
                   {{"p", "[1, inf)"}},
                   IneqStatus::proved,
                   false,
                   {"f", "g"},
                   vec_kinds,
                   [](const auto& m, const ParamMap& pp, double tol) {
                       return hanner_vector(diag_of(arg(m, 0, "hanner_vector")),
                                            diag_of(arg(m, 1, "hanner_vector")),
                                            need_param(pp, "p"), tol);
                   }});
    reg.push_back({"rearrangement_vector",
                   "|f+g|_p^p + |f-g|_p^p >= |f*+g*|_p^p + |f*-g*|_p^p, f* = moduli sorted "
                   "nonincreasing",
                   "slack = lhs - rhs for p <= 2, rhs - lhs for p > 2",
                   {{"p", "[1, inf)"}},
                   IneqStatus::proved,
                   false,
                   {"f", "g"},
                   vec_kinds,
                   [](const auto& m, const ParamMap& pp, double tol) {
                       return rearrangement_vector(diag_of(arg(m, 0, "rearrangement_vector")),
                                                   diag_of(arg(m, 1, "rearrangement_vector")),
                                                   need_param(pp, "p"), tol);
                   }});
    reg.push_back({"parallelogram_bound_vector",
                   "|f+g|_p^p + |f-g|_p^p <= 2|f|_p^p + 2|g|_p^p",
                   "slack = rhs - lhs for p <= 2, lhs - rhs for p > 2",
                   {{"p", "[1, inf)"}},
                   IneqStatus::proved,
                   false,
                   {"f", "g"},
                   vec_kinds,
                   [](const auto& m, const ParamMap& pp, double tol) {
                       return parallelogram_bound_vector(
                           diag_of(arg(m, 0, "parallelogram_bound_vector")),
                           diag_of(arg(m, 1, "parallelogram_bound_vector")),
                           need_param(pp, "p"), tol);
                   }});
    reg.push_back({"hanner_matrix",
                   "|A+B|_p^p + |A-B|_p^p >= (|A|_p + |B|_p)^p + ||A|_p - |B|_p|^p (Schatten)",
                   "slack = lhs - rhs for p <= 2, rhs - lhs for p >= 2",
                   {{"p", "[1, inf]"}},
                   IneqStatus::known_region,
                   false,
                   {"A", "B"},
                   any_pair,
                   [](const auto& m, const ParamMap& pp, double tol) {
                       return hanner_matrix(arg(m, 0, "hanner_matrix"), arg(m, 1, "hanner_matrix"),
                                            need_param(pp, "p"), tol);
                   }});
    reg.push_back({"conjecture1",
                   "|A+B|_p^p + |A-B|_p^p >= |up(A)+up(B)|_p^p + |up(A)-up(B)|_p^p",
                   "slack = lhs - rhs for p <= 2, rhs - lhs for p > 2",
                   {{"p", "[1, inf)"}},
                   IneqStatus::conjecture,
                   true,
                   {"A", "B"},
                   any_pair,
                   [](const auto& m, const ParamMap& pp, double tol) {
                       return conjecture1(arg(m, 0, "conjecture1"), arg(m, 1, "conjecture1"),
                                          need_param(pp, "p"), tol);
                   }});
    reg.push_back({"conjecture2",
                   "|A+B|_p^p + |A-B|_p^p <= |up(A)+down(B)|_p^p + |up(A)-down(B)|_p^p",
                   "slack = rhs - lhs for p <= 2, lhs - rhs for p > 2",
                   {{"p", "[1, inf)"}},
                   IneqStatus::conjecture,
                   true,
                   {"A", "B"},
                   any_pair,
                   [](const auto& m, const ParamMap& pp, double tol) {
                       return conjecture2(arg(m, 0, "conjecture2"), arg(m, 1, "conjecture2"),
                                          need_param(pp, "p"), tol);
                   }});
    reg.push_back({"lemma_otherway",
                   "tr((A+B)^p + (A-B)^p) <= tr((A+|B|)^p + (A-|B|)^p) for Hermitian A >= |B|",
                   "slack = rhs - lhs",
                   {{"p", "[1, 2]"}},
                   IneqStatus::proved,
                   false,
                   {"A", "B"},
                   {Kind::dominated_pair},
                   [](const auto& m, const ParamMap& pp, double tol) {
                       return lemma_otherway(arg(m, 0, "lemma_otherway"),
                                             arg(m, 1, "lemma_otherway"), need_param(pp, "p"),
                                             tol);
                   }});
    reg.push_back({"updown1",
                   "tr(B^r (B^(1/2) A B^(1/2))^s) >= tr(up(A)^s down(B)^(s+r)) for psd A, B",
                   "slack = lhs - rhs",
                   {{"r", "[0, inf)"}, {"s", "[1, inf)"}},
                   IneqStatus::proved,
                   false,
                   {"A", "B"},
                   psd_only,
                   [](const auto& m, const ParamMap& pp, double tol) {
                       return updown1(PsdMatrix::from_matrix(arg(m, 0, "updown1")),
                                      PsdMatrix::from_matrix(arg(m, 1, "updown1")),
                                      need_param(pp, "r"), need_param(pp, "s"), tol);
                   }});
    reg.push_back({"updown2",
                   "tr(up(A)^s up(B)^(s+r)) >= tr(B^r (B^(1/2) A B^(1/2))^s) for psd A, B, "
                   "integer s",
                   "slack = lhs - rhs",
                   {{"r", "[0, inf)"}, {"s", "integers >= 1"}},
                   IneqStatus::proved,
                   false,
                   {"A", "B"},
                   psd_only,
                   [](const auto& m, const ParamMap& pp, double tol) {
                       return updown2(PsdMatrix::from_matrix(arg(m, 0, "updown2")),
                                      PsdMatrix::from_matrix(arg(m, 1, "updown2")),
                                      need_param(pp, "r"), need_param(pp, "s"), tol);
                   }});
    reg.push_back({"lieb_thirring",
                   "tr((Y^(1/2) X Y^(1/2))^s) <= tr(X^s Y^s) for psd X, Y, s >= 1",
                   "slack = rhs - lhs",
                   {{"s", "[1, inf)"}},
                   IneqStatus::proved,
                   false,
                   {"X", "Y"},
                   psd_only,
                   [](const auto& m, const ParamMap& pp, double tol) {
                       return lieb_thirring(PsdMatrix::from_matrix(arg(m, 0, "lieb_thirring")),
                                            PsdMatrix::from_matrix(arg(m, 1, "lieb_thirring")),
                                            need_param(pp, "s"), tol);
                   }});
    reg.push_back({"reverse_lt_half",
                   "tr(A^(1/2) B^(1/2)) <= tr((B^(1/2) A B^(1/2))^(1/2)) for psd A, B",
                   "slack = lhs - rhs with lhs = tr((B^(1/2) A B^(1/2))^(1/2))",
                   json::object(),
                   IneqStatus::proved,
                   false,
                   {"A", "B"},
                   psd_only,
                   [](const auto& m, const ParamMap&, double tol) {
                       return reverse_lt_half(
                           PsdMatrix::from_matrix(arg(m, 0, "reverse_lt_half")),
                           PsdMatrix::from_matrix(arg(m, 1, "reverse_lt_half")), tol);
                   }});
    reg.push_back({"rev_probe",
                   "tr(A^s B^s) <= tr((B^(1/2) A B^(1/2))^s) for psd A, B, 1/2 < s < 1",
                   "slack = lhs - rhs with lhs = tr((B^(1/2) A B^(1/2))^s)",
                   {{"s", "(1/2, 1)"}},
                   IneqStatus::conjecture,
                   true,
                   {"A", "B"},
                   psd_only,
                   [](const auto& m, const ParamMap& pp, double tol) {
                       return rev_probe(PsdMatrix::from_matrix(arg(m, 0, "rev_probe")),
                                        PsdMatrix::from_matrix(arg(m, 1, "rev_probe")),
                                        need_param(pp, "s"), tol);
                   }});
    reg.push_back({"liebth2_probe",
                   "tr(Y^r (Y^(1/2) X Y^(1/2))^s) <= tr(X^s Y^(s+r)) for psd X, Y, r > 0, s >= 1",
                   "slack = rhs - lhs",
                   {{"r", "(0, inf)"}, {"s", "[1, inf)"}},
                   IneqStatus::conjecture,
                   true,
                   {"X", "Y"},
                   psd_only,
                   [](const auto& m, const ParamMap& pp, double tol) {
                       return liebth2_probe(PsdMatrix::from_matrix(arg(m, 0, "liebth2_probe")),
                                            PsdMatrix::from_matrix(arg(m, 1, "liebth2_probe")),
                                            need_param(pp, "r"), need_param(pp, "s"), tol);
                   }});
    reg.push_back({"epstein_probe",
                   "f_s(A) = tr((B^(1/2) A^(1/s) B^(1/2))^s): concave in A for s >= 1, convex "
                   "at s = 1/2, conjectured convex for 1/2 < s < 1",
                   "slack = f(mix) - mix(f) for s >= 1, mix(f) - f(mix) for 1/2 <= s < 1",
                   {{"s", "[1/2, inf)"}, {"lambda", "[0, 1]"}},
                   IneqStatus::known_region,
                   false,
                   {"B", "A1", "A2"},
                   psd_only,
                   [](const auto& m, const ParamMap& pp, double tol) {
                       return epstein_probe(PsdMatrix::from_matrix(arg(m, 0, "epstein_probe")),
                                            need_param(pp, "s"),
                                            PsdMatrix::from_matrix(arg(m, 1, "epstein_probe")),
                                            PsdMatrix::from_matrix(arg(m, 2, "epstein_probe")),
                                            need_param(pp, "lambda"), tol);
                   }});
    reg.push_back({"chiti_tartar_matrix",
                   "|A - B|_p >= |down(A) - down(B)|_p (equally ranked singular values paired)",
                   "slack = lhs - rhs",
                   {{"p", "[1, inf]"}},
                   IneqStatus::proved,
                   false,
                   {"A", "B"},
                   any_pair,
                   [](const auto& m, const ParamMap& pp, double tol) {
                       return chiti_tartar_matrix(arg(m, 0, "chiti_tartar_matrix"),
                                                  arg(m, 1, "chiti_tartar_matrix"),
                                                  need_param(pp, "p"), tol);
                   }});
    reg.push_back({"resolvent_suffice",
                   "tr((t+A+B)^-1 + (t+A-B)^-1) >= tr((t+up(A)+up(B))^-1 + (t+up(A)-up(B))^-1) "
                   "for Hermitian A >= B >= 0, t > 0",
                   "slack = lhs - rhs",
                   {{"t", "(0, inf)"}},
                   IneqStatus::proved,
                   false,
                   {"A", "B"},
                   {Kind::ordered_pair},
                   [](const auto& m, const ParamMap& pp, double tol) {
                       return resolvent_suffice(arg(m, 0, "resolvent_suffice"),
                                                arg(m, 1, "resolvent_suffice"),
                                                need_param(pp, "t"), tol);
                   }});
    return reg;
}

RegistryEntry build_planted_entry() {
    return {kPlantedFalseId,
            "PLANTED-FALSE soundness canary: tr((Y^(1/2) X Y^(1/2))^s) >= tr(X^s Y^s) for "
            "s > 1 — the reversed orientation, generically violated",
            "slack = lhs - rhs with lhs = tr((Y^(1/2) X Y^(1/2))^s)",
            {{"s", "[1, inf)"}},
            IneqStatus::planted_false,
            true,
            {"X", "Y"},
            {EnsembleKind::psd, EnsembleKind::diagonal_psd},
            [](const std::vector<ComplexMatrix>& m, const ParamMap& pp, double tol) {
                const PsdMatrix x = PsdMatrix::from_matrix(arg(m, 0, kPlantedFalseId));
                const PsdMatrix y = PsdMatrix::from_matrix(arg(m, 1, kPlantedFalseId));
                const double s = need_param(pp, "s");
                if (!(s >= 1.0)) throw BadExponent("planted target requires s >= 1");
                const double lhs = alternating_trace(x, y, 0.0, s);
                const double rhs = trace_product_real(matrix_power(x, s).matrix(),
                                                      matrix_power(y, s).matrix());
                InequalityReport r = make_report(kPlantedFalseId, {{"s", s}}, lhs, rhs,
                                                 lhs - rhs, tol,
                                                 mat_witness({{"X", &x.matrix()},
                                                              {"Y", &y.matrix()}},
                                                             {{"s", s}}));
                r.flags["evidence_only"] = true;
                return r;
            }};
}

} // namespace

const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> reg = build_registry();
    return reg;
}

const RegistryEntry* find_entry(const std::string& id) {
    for (const auto& e : registry())
        if (e.id == id) return &e;
    static const RegistryEntry planted = build_planted_entry();
    if (id == kPlantedFalseId) return &planted;
    return nullptr;
}

nlohmann::json registry_json() {
    json out = json::array();
    for (const auto& e : registry()) {
        out.push_back({{"inequality_id", e.id},
                       {"statement_ref", e.statement},
                       {"orientation", e.orientation},
                       {"param_domains", e.param_domains},
                       {"status", to_string(e.status)},
                       {"evidence_only", e.evidence_only},
                       {"inputs", e.input_names}});
    }
    return out;
}

InequalityReport evaluate_entry(const std::string& id, const std::vector<ComplexMatrix>& mats,
                                const ParamMap& params, double tolerance) {
    const RegistryEntry* e = find_entry(id);
    if (!e) throw UnknownInequality(id);
    if (!e->evaluate) throw UnknownInequality(id + " has no evaluation adapter");
    return e->evaluate(mats, params, tolerance);
}

} // namespace trineq
