#include "kgvac/conservation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kgvac {

double ResidualCurves::max_abs() const {
    double m = 0.0;
    for (const auto& c : curves)
        for (double v : c) m = std::max(m, std::abs(v));
    return m;
}

double MatrixResiduals::max() const { return std::max(std::max(eq1, eq2), std::max(eq3, eq4)); }

double fd_d1_order4(const std::vector<double>& y, int i, double h) {
    return (-y[i + 2] + 8 * y[i + 1] - 8 * y[i - 1] + y[i - 2]) / (12 * h);
}
double fd_d2_order4(const std::vector<double>& y, int i, double h) {
    return (-y[i + 2] + 16 * y[i + 1] - 30 * y[i] + 16 * y[i - 1] - y[i - 2]) / (12 * h * h);
}
double fd_d3_order2(const std::vector<double>& y, int i, double h) {
    return (y[i + 2] - 2 * y[i + 1] + 2 * y[i - 1] - y[i - 2]) / (2 * h * h * h);
}

namespace {

struct Derivs {
    std::vector<int> idx;        // indices into traj.times carrying residuals
    std::vector<double> dY, d2Y, d3Y, dZ, d2Z;
};

double grid_step(const ModeTrajectory& traj) {
    if (traj.times.size() < 2) throw std::invalid_argument("trajectory needs >= 2 points");
    double h = traj.times[1] - traj.times[0];
    for (size_t i = 1; i + 1 < traj.times.size(); ++i) {
        double hi = traj.times[i + 1] - traj.times[i];
        if (std::abs(hi - h) > 1e-9 * std::max(1.0, std::abs(h)))
            throw std::invalid_argument("finite-difference mode needs a uniform grid");
    }
    if (!(h > 0.0)) throw std::invalid_argument("time grid must be strictly increasing");
    return h;
}

Derivs make_derivs(const ModeTrajectory& traj, DerivativeMode mode, int margin) {
    Derivs d;
    const int n = static_cast<int>(traj.times.size());
    if (mode == DerivativeMode::Analytic) {
        if (!traj.analytic())
            throw std::invalid_argument("trajectory carries no analytic derivatives");
        for (int i = 0; i < n; ++i) d.idx.push_back(i);
        d.dY = traj.dY;
        d.d2Y = traj.d2Y;
        d.d3Y = traj.d3Y;
        d.dZ = traj.dZ;
        d.d2Z = traj.d2Z;
        return d;
    }
    if (n < 2 * margin + 1)
        throw std::invalid_argument("finite-difference mode needs at least " +
                                    std::to_string(2 * margin + 1) + " grid points");
    double h = grid_step(traj);
    for (int i = margin; i < n - margin; ++i) {
        d.idx.push_back(i);
        d.dY.push_back(fd_d1_order4(traj.Y, i, h));
        d.d2Y.push_back(fd_d2_order4(traj.Y, i, h));
        d.d3Y.push_back(fd_d3_order2(traj.Y, i, h));
        d.dZ.push_back(fd_d1_order4(traj.Z, i, h));
        d.d2Z.push_back(fd_d2_order4(traj.Z, i, h));
    }
    return d;
}

} // namespace

ResidualCurves residuals_conservation(const ModeTrajectory& traj, const SpacetimeSpec& spec,
                                      DerivativeMode mode) {
    Derivs d = make_derivs(traj, mode, 2);
    ResidualCurves out;
    out.curves.assign(4, {});
    for (size_t j = 0; j < d.idx.size(); ++j) {
        int i = d.idx[j];
        double t = traj.times[i];
        double Y = traj.Y[i], Z = traj.Z[i];
        if (Y == 0.0) throw std::domain_error("residuals: singular Y(t)");
        double f = friction(spec, t);
        double w2 = wsq_from_core(spec, t, traj.kappa_sq);
        out.times.push_back(t);
        out.curves[0].push_back(d.dZ[j] - (-Y * w2 + (1.0 + Z * Z) / Y));
        out.curves[1].push_back(d.dY[j] - (Z + Y * f + Z));
        out.curves[2].push_back(0.0); // commutators vanish in scalar form
        out.curves[3].push_back(0.0);
    }
    return out;
}

ResidualCurves residuals_kg_pair(const ModeTrajectory& traj, const SpacetimeSpec& spec,
                                 DerivativeMode mode) {
    Derivs d = make_derivs(traj, mode, 2);
    ResidualCurves out;
    out.curves.assign(2, {});
    for (size_t j = 0; j < d.idx.size(); ++j) {
        int i = d.idx[j];
        double t = traj.times[i];
        double Y = traj.Y[i];
        double f = friction(spec, t);
        double fd = friction_d1(spec, t);
        double w2 = wsq_from_core(spec, t, traj.kappa_sq);
        double w2dt = wsq_dt_from_core(spec, t, traj.kappa_sq);
        out.times.push_back(t);
        out.curves[0].push_back(d.d2Z[j] + f * d.dZ[j] + 2.0 * d.dY[j] * w2 + Y * w2dt);
        out.curves[1].push_back(2.0 * d.dZ[j] - d.d2Y[j] + d.dY[j] * f + Y * fd);
    }
    return out;
}

ResidualCurves residual_gelfand_dikii(const ModeTrajectory& traj, const SpacetimeSpec& spec,
                                      DerivativeMode mode) {
    Derivs d = make_derivs(traj, mode, 2);
    ResidualCurves out;
    out.curves.assign(1, {});
    for (size_t j = 0; j < d.idx.size(); ++j) {
        int i = d.idx[j];
        double t = traj.times[i];
        double Y = traj.Y[i];
        double f = friction(spec, t);
        double fd = friction_d1(spec, t);
        double w2 = wsq_from_core(spec, t, traj.kappa_sq);
        double g = fd + 0.5 * f * f - 2.0 * w2;
        out.times.push_back(t);
        out.curves[0].push_back(Y * d.d2Y[j] - 0.5 * d.dY[j] * d.dY[j] - Y * Y * g - 2.0);
    }
    return out;
}

ResidualCurves residual_third_order(const ModeTrajectory& traj, const SpacetimeSpec& spec,
                                    DerivativeMode mode) {
    Derivs d = make_derivs(traj, mode, 3);
    ResidualCurves out;
    out.curves.assign(1, {});
    for (size_t j = 0; j < d.idx.size(); ++j) {
        int i = d.idx[j];
        double t = traj.times[i];
        double Y = traj.Y[i];
        double f = friction(spec, t);
        double fd = friction_d1(spec, t);
        double fdd = friction_d2(spec, t);
        double w2 = wsq_from_core(spec, t, traj.kappa_sq);
        double w2dt = wsq_dt_from_core(spec, t, traj.kappa_sq);
        double g = fd + 0.5 * f * f - 2.0 * w2;
        double gdt = fdd + f * fd - 2.0 * w2dt;
        out.times.push_back(t);
        out.curves[0].push_back(d.d3Y[j] - 2.0 * d.dY[j] * g - Y * gdt);
    }
    return out;
}

std::vector<double> derived_Z_from_Y(const ModeTrajectory& traj, const SpacetimeSpec& spec,
                                     DerivativeMode mode) {
    std::vector<double> z;
    if (mode == DerivativeMode::Analytic) {
        if (!traj.analytic())
            throw std::invalid_argument("trajectory carries no analytic derivatives");
        for (size_t i = 0; i < traj.times.size(); ++i)
            z.push_back(0.5 * (traj.dY[i] - traj.Y[i] * friction(spec, traj.times[i])));
        return z;
    }
    const int n = static_cast<int>(traj.times.size());
    if (n < 5) throw std::invalid_argument("finite-difference mode needs >= 5 points");
    double h = grid_step(traj);
    for (int i = 2; i < n - 2; ++i)
        z.push_back(0.5 * (fd_d1_order4(traj.Y, i, h) -
                           traj.Y[i] * friction(spec, traj.times[i])));
    return z;
}

MatrixResiduals residuals_conservation_matrix(const SpacetimeSpec& spec,
                                              const SpectralOperator& op, double t,
                                              const Eigen::VectorXd& Ymodes,
                                              const Eigen::VectorXd& dYmodes,
                                              const Eigen::VectorXd& Zmodes,
                                              const Eigen::VectorXd& dZmodes) {
    const int n = op.n;
    Eigen::VectorXd w2modes(n);
    for (int k = 0; k < n; ++k) w2modes(k) = wsq_from_core(spec, t, op.core_eigenvalues(k));
    double f = friction(spec, t);

    Eigen::MatrixXd Y = op.assemble(Ymodes);
    Eigen::MatrixXd dY = op.assemble(dYmodes);
    Eigen::MatrixXd Z = op.assemble(Zmodes);
    Eigen::MatrixXd dZ = op.assemble(dZmodes);
    Eigen::MatrixXd W2 = op.assemble(w2modes);
    Eigen::MatrixXd Yinv = op.assemble(Ymodes.cwiseInverse());
    Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);

    double yn = Y.norm();
    MatrixResiduals r;
    r.eq1 = (dZ - (-Y * W2 + Yinv * (I + Z * Z))).norm() / yn;
    r.eq2 = (dY - (Yinv * Z * Y + f * Y + Z)).norm() / yn;
    // f is spatially constant here, so [Y, f] = 0 and (III) reads [Z, Y^2] = 0
    Eigen::MatrixXd Y2 = Y * Y;
    r.eq3 = (Z * Y2 - Y2 * Z).norm() / yn;
    Eigen::MatrixXd lhs = Yinv * (I + Z * Z);
    Eigen::MatrixXd rhs = Y * W2;
    r.eq4 = ((Z * lhs - lhs * Z) - (Z * rhs - rhs * Z)).norm() / yn;
    return r;
}

} // namespace kgvac
