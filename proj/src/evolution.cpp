#include "kgvac/evolution.hpp"

#include <cmath>
#include <stdexcept>

#include "kgvac/vacua.hpp"

namespace kgvac {

namespace {

struct ModeState {
    double u;
    double v; // du/dt
};

// one RK4 step for u'' + f(t) u' + w2(t) u = 0
ModeState rk4_step(const SpacetimeSpec& spec, double k2, const ModeState& s, double t,
                   double h) {
    auto rhs = [&](double tt, const ModeState& st) {
        double f = friction(spec, tt);
        double w2 = wsq_from_core(spec, tt, k2);
        return ModeState{st.v, -f * st.v - w2 * st.u};
    };
    ModeState k1 = rhs(t, s);
    ModeState k2s = rhs(t + 0.5 * h, {s.u + 0.5 * h * k1.u, s.v + 0.5 * h * k1.v});
    ModeState k3 = rhs(t + 0.5 * h, {s.u + 0.5 * h * k2s.u, s.v + 0.5 * h * k2s.v});
    ModeState k4 = rhs(t + h, {s.u + h * k3.u, s.v + h * k3.v});
    return {s.u + h / 6.0 * (k1.u + 2 * k2s.u + 2 * k3.u + k4.u),
            s.v + h / 6.0 * (k1.v + 2 * k2s.v + 2 * k3.v + k4.v)};
}

int step_count(double t1, double t2, double step) {
    double span = std::abs(t2 - t1);
    if (span == 0.0) return 0;
    if (!(step > 0.0)) throw std::invalid_argument("evolve: step must be positive");
    if (step > span + 1e-15)
        throw std::invalid_argument("evolve: step larger than the integration interval");
    return std::max(1, static_cast<int>(std::llround(span / step)));
}

ModeState integrate_mode(const SpacetimeSpec& spec, double k2, ModeState s, double t1,
                         double t2, double step) {
    int n = step_count(t1, t2, step);
    if (n == 0) return s;
    double h = (t2 - t1) / n;
    double t = t1;
    for (int i = 0; i < n; ++i) {
        s = rk4_step(spec, k2, s, t, h);
        t = t1 + (i + 1) * h;
    }
    return s;
}

} // namespace

PhaseVector evolve(const SpacetimeSpec& spec, const PhaseVector& state, double t1, double t2,
                   double step) {
    require_in_interval(spec, t1);
    require_in_interval(spec, t2);
    SpectralOperator op = build_spatial_operator(spec, t1);
    if (state.size() != op.n) throw std::invalid_argument("evolve: dimension mismatch");
    Eigen::MatrixXd Vinv = op.basis_inverse();
    Eigen::VectorXd rho1 = momentum_weight(spec, t1);
    Eigen::VectorXd rho2 = momentum_weight(spec, t2);

    Eigen::VectorXd u = Vinv * state.phi;
    Eigen::VectorXd v = Vinv * (state.pi.array() / rho1.array()).matrix();
    for (int k = 0; k < op.n; ++k) {
        ModeState s = integrate_mode(spec, op.core_eigenvalues(k), {u(k), v(k)}, t1, t2, step);
        u(k) = s.u;
        v(k) = s.v;
    }
    PhaseVector out;
    out.time_tag = t2;
    out.phi = op.eigenvectors * u;
    out.pi = (rho2.array() * (op.eigenvectors * v).array()).matrix();
    return out;
}

BlockMatrix2 evolution_matrix(const SpacetimeSpec& spec, double t1, double t2, double step) {
    require_in_interval(spec, t1);
    require_in_interval(spec, t2);
    SpectralOperator op = build_spatial_operator(spec, t1);
    const int n = op.n;
    Eigen::VectorXd s11(n), s12(n), s21(n), s22(n);
    for (int k = 0; k < n; ++k) {
        double k2 = op.core_eigenvalues(k);
        ModeState a = integrate_mode(spec, k2, {1.0, 0.0}, t1, t2, step);
        ModeState b = integrate_mode(spec, k2, {0.0, 1.0}, t1, t2, step);
        s11(k) = a.u;
        s21(k) = a.v;
        s12(k) = b.u;
        s22(k) = b.v;
    }
    Eigen::MatrixXd V = op.eigenvectors;
    Eigen::MatrixXd Vinv = op.basis_inverse();
    Eigen::VectorXd rho1 = momentum_weight(spec, t1);
    Eigen::VectorXd rho2 = momentum_weight(spec, t2);
    Eigen::MatrixXd r1inv = rho1.cwiseInverse().asDiagonal();
    Eigen::MatrixXd r2 = rho2.asDiagonal();
    return BlockMatrix2::from_blocks(
        V * s11.asDiagonal() * Vinv, V * s12.asDiagonal() * Vinv * r1inv,
        r2 * V * s21.asDiagonal() * Vinv, r2 * V * s22.asDiagonal() * Vinv * r1inv);
}

double symplectic_preservation(const SpacetimeSpec& spec, double t1, double t2, double step,
                               int pairs, std::mt19937_64& rng) {
    const int n = spec.spatial.num_points;
    const double dx = spec.spatial.dx();
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int p = 0; p < pairs; ++p) {
        PhaseVector a, b;
        a.phi.resize(n);
        a.pi.resize(n);
        b.phi.resize(n);
        b.pi.resize(n);
        for (int i = 0; i < n; ++i) {
            a.phi(i) = u(rng);
            a.pi(i) = u(rng);
            b.phi(i) = u(rng);
            b.pi(i) = u(rng);
        }
        double before = symplectic_form(a, b, dx);
        if (std::abs(before) < 1e-6) continue;
        PhaseVector ea = evolve(spec, a, t1, t2, step);
        PhaseVector eb = evolve(spec, b, t1, t2, step);
        double after = symplectic_form(ea, eb, dx);
        worst = std::max(worst, std::abs(after - before) / std::abs(before));
    }
    return worst;
}

TransportResult transport_residual(const SpacetimeSpec& spec, double t1, double t2,
                                   double step) {
    SpectralOperator op1 = build_spatial_operator(spec, t1);
    SpectralOperator op2 = build_spatial_operator(spec, t2);
    BlockMatrix2 j1 = assemble_J(vacua::catalog_blocks(spec, op1, t1));
    BlockMatrix2 j2 = assemble_J(vacua::catalog_blocks(spec, op2, t2));
    TransportResult r;
    r.naive = (j1 - j2).frobenius() / j1.frobenius();
    r.transported = transport_residual_for(spec, j1, j2, t1, t2, step);
    return r;
}

double transport_residual_for(const SpacetimeSpec& spec, const BlockMatrix2& j1,
                              const BlockMatrix2& j2, double t1, double t2, double step) {
    BlockMatrix2 e = evolution_matrix(spec, t1, t2, step);
    Eigen::MatrixXd transported = e.m.partialPivLu().solve(j2.m * e.m);
    return (j1.m - transported).norm() / j1.m.norm();
}

} // namespace kgvac
