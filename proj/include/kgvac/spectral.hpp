#pragma once

#include <Eigen/Dense>
#include <optional>

#include "kgvac/catalog.hpp"

namespace kgvac {

// Discretized spatial operator H_V at one time: spectrum and mu-orthonormal
// eigenbasis w.r.t. the weighted measure mu_i = N^-1 sqrt(h) dx.
struct SpectralOperator {
    int n = 0;
    double dx = 0.0;
    double time_tag = 0.0;
    Eigen::VectorXd weights;          // mu_i (includes dx)
    Eigen::VectorXd eigenvalues;      // H_V(t) spectrum, ascending
    Eigen::VectorXd core_eigenvalues; // time-independent core (-Delta) spectrum
    Eigen::MatrixXd eigenvectors;     // columns mu-orthonormal

    // V^-1 = V^T diag(mu)
    Eigen::MatrixXd basis_inverse() const;
    // dense H_V: V diag(lambda) V^-1
    Eigen::MatrixXd matrix() const;
    // dense matrix of g(H_V) for per-mode values g_k
    Eigen::MatrixXd assemble(const Eigen::VectorXd& mode_values) const;
};

struct SobolevOrder {
    double s = 1.0;
    std::optional<double> shift; // rho >= 1 when present
};

// Builds the family operator H_V(t) on the periodic lattice. The kinetic part
// uses the conservative three-point stencil with half-site coefficients.
SpectralOperator build_spatial_operator(const SpacetimeSpec& spec, double t);

// Dense matrix of H_V^s via the spectral calculus. Negative powers require a
// strictly positive spectrum.
Eigen::MatrixXd spectral_power(const SpectralOperator& op, double s);

// || (H_V + rho)^s psi ||_{L^2(mu)}
double sobolev_norm(const SpectralOperator& op, const Eigen::VectorXd& psi,
                    const SobolevOrder& order);

// max of ||H_V||_{W^{2s} -> W^{2s-2}} and ||H_V^-1||_{W^{2s-2} -> W^{2s}};
// identically 1 in finite dimensions, returned as a computed check.
double operator_bound_check(const SpectralOperator& op, double s);

// ||(H_V + rho)^{-s}|| as a map on L^2(mu), computed from the spectrum.
double shifted_resolvent_norm(const SpectralOperator& op, double s, double rho);

// mu-weighted inner product of site vectors.
double mu_dot(const SpectralOperator& op, const Eigen::VectorXd& u, const Eigen::VectorXd& v);

// Test helper: re-orthonormalizes eigenvectors inside (near-)degenerate
// eigenvalue clusters with a random rotation. Downstream results must not
// depend on this choice.
SpectralOperator reshuffle_degenerate_basis(const SpectralOperator& op, unsigned seed);

} // namespace kgvac
