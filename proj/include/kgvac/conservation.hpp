#pragma once

#include <vector>

#include "kgvac/catalog.hpp"
#include "kgvac/spectral.hpp"

namespace kgvac {

// Per-mode trajectory of the structure blocks Y(t), Z(t) on a time grid.
// Analytic derivative data is carried when the producing family supplies it;
// otherwise residual operations fall back to 4th-order finite differences on
// the grid (2nd order for third derivatives).
struct ModeTrajectory {
    double kappa_sq = 0.0; // core Laplacian eigenvalue of this mode
    std::string provenance;
    std::vector<double> times;
    std::vector<double> Y, Z;
    // analytic derivatives (same length as times when present)
    std::vector<double> dY, d2Y, d3Y, dZ, d2Z;
    bool analytic() const { return !dY.empty(); }
};

enum class DerivativeMode { Analytic, FiniteDifference };

struct ResidualCurves {
    std::vector<double> times;               // interior grid where residuals exist
    std::vector<std::vector<double>> curves; // one curve per equation
    double max_abs() const;
};

// The four coupled equations characterizing conserved structures:
//   (I)   dZ/dt  = -Y w^2 + Y^-1 (1 + Z^2)
//   (II)  dY/dt  = Y^-1 Z Y + Y f + Z
//   (III) [Z, Y^2] = Y^2 [Y, f]
//   (IV)  [Z, Y^-1 (1 + Z^2)] = [Z, Y w^2]
// Scalar (per-mode) form; (III)/(IV) vanish identically here and are reported
// by the matrix-valued variant below.
ResidualCurves residuals_conservation(const ModeTrajectory& traj, const SpacetimeSpec& spec,
                                      DerivativeMode mode);

// The two second-order equations obtained from the field equation:
//   d2Z/dt2 + f dZ/dt + [w^2, Z] + 2 (dY/dt) w^2 + [f, Y] w^2 + Y d(w^2)/dt = 0
//   2 dZ/dt + [f, Z] - d2Y/dt2 + (dY/dt) f + Y df/dt + [dY/dt, f] + [Y, w^2]
//     + [f, Y] f = 0
ResidualCurves residuals_kg_pair(const ModeTrajectory& traj, const SpacetimeSpec& spec,
                                 DerivativeMode mode);

// Y d2Y/dt2 - (1/2)(dY/dt)^2 - Y^2 (df/dt + f^2/2 - 2 w^2) - 2 = 0
ResidualCurves residual_gelfand_dikii(const ModeTrajectory& traj, const SpacetimeSpec& spec,
                                      DerivativeMode mode);

// d3Y/dt3 - 2 (dY/dt)(df/dt + f^2/2 - 2 w^2) - Y (d2f/dt2 + f df/dt
//   - 2 d(w^2)/dt) = 0
ResidualCurves residual_third_order(const ModeTrajectory& traj, const SpacetimeSpec& spec,
                                    DerivativeMode mode);

// Z(t) = (1/2)(dY/dt - Y f), the commuting-case closure.
std::vector<double> derived_Z_from_Y(const ModeTrajectory& traj, const SpacetimeSpec& spec,
                                     DerivativeMode mode);

// Matrix-valued residuals of (I)-(IV) for blocks that are spectral functions;
// Frobenius norms normalized by ||Y||_F. Commutator equations are evaluated
// with the stated operator ordering.
struct MatrixResiduals {
    double eq1 = 0.0, eq2 = 0.0, eq3 = 0.0, eq4 = 0.0;
    double max() const;
};
MatrixResiduals residuals_conservation_matrix(const SpacetimeSpec& spec,
                                              const SpectralOperator& op, double t,
                                              const Eigen::VectorXd& Ymodes,
                                              const Eigen::VectorXd& dYmodes,
                                              const Eigen::VectorXd& Zmodes,
                                              const Eigen::VectorXd& dZmodes);

// finite-difference helpers (uniform grid)
double fd_d1_order4(const std::vector<double>& y, int i, double h);
double fd_d2_order4(const std::vector<double>& y, int i, double h);
double fd_d3_order2(const std::vector<double>& y, int i, double h);

} // namespace kgvac
