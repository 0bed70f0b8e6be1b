#pragma once

#include <Eigen/Dense>

#include "kgvac/catalog.hpp"

namespace kgvac {

// Cauchy data on the lattice: field values phi and momentum-density values pi.
struct PhaseVector {
    Eigen::VectorXd phi;
    Eigen::VectorXd pi;
    double time_tag = 0.0;

    int size() const { return static_cast<int>(phi.size()); }
    Eigen::VectorXd stacked() const;
    static PhaseVector from_stacked(const Eigen::VectorXd& v, double time_tag = 0.0);
};

// Linear map on phase space stored as a dense 2n x 2n matrix in (phi, pi)
// block order.
struct BlockMatrix2 {
    int n = 0;
    Eigen::MatrixXd m; // 2n x 2n

    static BlockMatrix2 identity(int n);
    static BlockMatrix2 from_blocks(const Eigen::MatrixXd& ul, const Eigen::MatrixXd& ur,
                                    const Eigen::MatrixXd& ll, const Eigen::MatrixXd& lr);

    Eigen::Block<const Eigen::MatrixXd> ul() const { return m.block(0, 0, n, n); }
    Eigen::Block<const Eigen::MatrixXd> ur() const { return m.block(0, n, n, n); }
    Eigen::Block<const Eigen::MatrixXd> ll() const { return m.block(n, 0, n, n); }
    Eigen::Block<const Eigen::MatrixXd> lr() const { return m.block(n, n, n, n); }

    BlockMatrix2 inverse() const;
    PhaseVector apply(const PhaseVector& v) const;
    double frobenius() const { return m.norm(); }
};

BlockMatrix2 operator*(const BlockMatrix2& a, const BlockMatrix2& b);
BlockMatrix2 operator*(double s, const BlockMatrix2& a);
BlockMatrix2 operator+(const BlockMatrix2& a, const BlockMatrix2& b);
BlockMatrix2 operator-(const BlockMatrix2& a, const BlockMatrix2& b);

// Omega(P1, P2) = sum_i (pi1_i phi2_i - pi2_i phi1_i) dx
double symplectic_form(const PhaseVector& a, const PhaseVector& b, double dx);

// Same value through the auxiliary pairing <eps P1, P2> with
// eps = [[0, 1], [-1, 0]] acting blockwise and the unweighted dx sum.
double epsilon_product(const PhaseVector& a, const PhaseVector& b, double dx);

// blockwise eps and eps^T as phase-space maps
BlockMatrix2 epsilon_matrix(int n);

// T = diag(1, N / sqrt(h)) sitewise at time t.
BlockMatrix2 measure_transform(const SpacetimeSpec& spec, double t);

// Site values tau_i = N / sqrt(h) and rho_i = sqrt(h) / N at time t.
Eigen::VectorXd density_ratio(const SpacetimeSpec& spec, double t);    // tau
Eigen::VectorXd momentum_weight(const SpacetimeSpec& spec, double t);  // rho

// Conformal transformation on the density phase space:
// X = [[a, 0], [Nbar^-1 sqrt(hbar) da/dt, a^-1]], Nbar = N / a.
BlockMatrix2 conformal_map(const SpacetimeSpec& spec, double t);

// Scalar-frame companion X_T = Tbar X T^-1 = [[a, 0], [da/dt, a]].
BlockMatrix2 conformal_map_scalar(const SpacetimeSpec& spec, double t);

// Spec of the conformally transformed companion spacetime (Nbar = N/a,
// static spatial metric): used by the similarity battery.
SpacetimeSpec conformal_companion_spec(const SpacetimeSpec& spec);

// Adjoint w.r.t. weighted pairings: source weights on the domain, target
// weights on the codomain (the same vector is used for both components).
BlockMatrix2 adjoint_weighted(const BlockMatrix2& b, const Eigen::VectorXd& w_src,
                              const Eigen::VectorXd& w_tgt);
// Euclidean (unweighted) adjoint.
BlockMatrix2 adjoint_plain(const BlockMatrix2& b);

} // namespace kgvac
