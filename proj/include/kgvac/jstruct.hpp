#pragma once

#include <complex>
#include <random>
#include <string>

#include "kgvac/phase.hpp"
#include "kgvac/spectral.hpp"

namespace kgvac {

// Operator blocks of a complex structure at one time. A and the scalar-frame
// block Ycal are functions of a single spectral operator (commuting case);
// the density-frame blocks B, C, D follow from the closure relations.
struct ComplexStructureBlocks {
    int n = 0;
    double dx = 0.0;
    double time_tag = 0.0;
    int sigma = +1; // orientation applied to the assembled structure
    std::string provenance;

    Eigen::VectorXd mode_A;    // per-mode values of A
    Eigen::VectorXd mode_Y;    // per-mode values of the scalar-frame block
    Eigen::VectorXd mu;        // site weights (with dx)
    Eigen::VectorXd tau;       // N / sqrt(h) per site
    Eigen::MatrixXd basis;     // mu-orthonormal eigenvectors
    Eigen::MatrixXd basis_inv;

    // raw-matrix escape hatch for negative controls; when set, the matrices
    // below are used verbatim instead of the spectral representation
    bool raw = false;
    Eigen::MatrixXd raw_A, raw_Ymat;

    Eigen::MatrixXd A() const;
    Eigen::MatrixXd Ymat() const;
    Eigen::MatrixXd B() const;
    Eigen::MatrixXd C() const;
    Eigen::MatrixXd D() const;
};

// Blocks from per-mode scalars on a spectral operator's eigenbasis. mode_Y
// must be strictly positive.
ComplexStructureBlocks blocks_from_modes(const SpectralOperator& op,
                                         const SpacetimeSpec& spec, double t,
                                         const Eigen::VectorXd& mode_Y,
                                         const Eigen::VectorXd& mode_A,
                                         std::string provenance);

ComplexStructureBlocks blocks_from_raw(const Eigen::MatrixXd& A, const Eigen::MatrixXd& Ymat,
                                       const Eigen::VectorXd& mu, const Eigen::VectorXd& tau,
                                       double dx);

// sigma * [[-A, -B], [-D, -C]] acting on (phi, pi).
BlockMatrix2 assemble_J(const ComplexStructureBlocks& blocks);

// Scalar-frame structure: for sigma = -1 this is literally
// [[A, Y], [-Y^-1 (1 + A^2), -Y^-1 A Y]]; equals T J T^-1 for any sigma.
BlockMatrix2 assemble_JY(const ComplexStructureBlocks& blocks);

// Max residual of the four closure relations
// A^2 + BD = -1, C^2 + DB = -1, AB + BC = 0, DA + CD = 0 (Frobenius, relative).
double check_block_relations(const ComplexStructureBlocks& blocks);

// || eps JY^dag eps^T + JY ||_F / ||JY||_F with the mu-weighted adjoint.
double check_adjoint(const ComplexStructureBlocks& blocks);
// Same in the density frame with the unweighted adjoint.
double check_adjoint_density(const ComplexStructureBlocks& blocks);
// || T J T^-1 - JY ||_F / ||JY||_F (the two assembly routes must agree).
double check_frames_agree(const ComplexStructureBlocks& blocks);

// {P1, P2} = 2 Omega(P1, J P2) + 2 i Omega(P1, P2)
std::complex<double> inner_product(const ComplexStructureBlocks& blocks,
                                   const PhaseVector& a, const PhaseVector& b);

// Chooses sigma in {+1, -1} so that Q(P) = Omega(P, sigma J P) is positive
// definite; throws if neither sign works. Returns the minimal Gram eigenvalue
// achieved alongside the sign.
struct OrientationResult {
    int sigma = 0;
    double gram_min_eigenvalue = 0.0;
};
OrientationResult select_orientation(const ComplexStructureBlocks& blocks);

// ||J1 - X^-1 J2 X||_F / ||J1||_F
double similarity_check(const BlockMatrix2& j1, const BlockMatrix2& j2, const BlockMatrix2& x);

// Operator norm of JY on W^{2s+1} x W^{2s} (finite-dimensional, mode-wise).
double sobolev_boundedness(const ComplexStructureBlocks& blocks, const SpectralOperator& op,
                           double s);

// Max symplectic-compatibility residual |Omega(JP1,JP2) - Omega(P1,P2)| /
// max(1,|Omega(P1,P2)|) over random pairs.
double symplectic_compatibility(const ComplexStructureBlocks& blocks, int pairs,
                                std::mt19937_64& rng);

// Gram matrix of {.,.} in the canonical basis (Hermitian 2n x 2n); its
// minimal eigenvalue must be positive for an admissible structure.
double gram_min_eigenvalue(const ComplexStructureBlocks& blocks);

} // namespace kgvac
