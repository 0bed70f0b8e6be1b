#include "kgvac/jstruct.hpp"

#include <cmath>
#include <stdexcept>

namespace kgvac {

namespace {

Eigen::MatrixXd spectral_assemble(const ComplexStructureBlocks& b, const Eigen::VectorXd& vals) {
    return b.basis * vals.asDiagonal() * b.basis_inv;
}

} // namespace

Eigen::MatrixXd ComplexStructureBlocks::A() const {
    return raw ? raw_A : spectral_assemble(*this, mode_A);
}

Eigen::MatrixXd ComplexStructureBlocks::Ymat() const {
    return raw ? raw_Ymat : spectral_assemble(*this, mode_Y);
}

Eigen::MatrixXd ComplexStructureBlocks::B() const { return Ymat() * tau.asDiagonal(); }

Eigen::MatrixXd ComplexStructureBlocks::C() const {
    if (raw) {
        Eigen::MatrixXd Bm = B();
        return -Bm.partialPivLu().solve(raw_A * Bm);
    }
    return tau.cwiseInverse().asDiagonal() * (-spectral_assemble(*this, mode_A)) *
           tau.asDiagonal();
}

Eigen::MatrixXd ComplexStructureBlocks::D() const {
    if (raw) {
        Eigen::MatrixXd one_plus = Eigen::MatrixXd::Identity(n, n) + raw_A * raw_A;
        return -B().partialPivLu().solve(one_plus);
    }
    Eigen::VectorXd vals =
        (Eigen::VectorXd::Ones(n).array() + mode_A.array().square()) / mode_Y.array();
    return tau.cwiseInverse().asDiagonal() * (-spectral_assemble(*this, vals));
}

ComplexStructureBlocks blocks_from_modes(const SpectralOperator& op,
                                         const SpacetimeSpec& spec, double t,
                                         const Eigen::VectorXd& mode_Y,
                                         const Eigen::VectorXd& mode_A,
                                         std::string provenance) {
    if (mode_Y.size() != op.n || mode_A.size() != op.n)
        throw std::invalid_argument("blocks_from_modes: mode count != dimension");
    for (int i = 0; i < op.n; ++i)
        if (!(mode_Y(i) > 0.0))
            throw std::domain_error("blocks_from_modes: non-positive Y at mode " +
                                    std::to_string(i));
    ComplexStructureBlocks b;
    b.n = op.n;
    b.dx = op.dx;
    b.time_tag = t;
    b.provenance = std::move(provenance);
    b.mode_A = mode_A;
    b.mode_Y = mode_Y;
    b.mu = op.weights;
    b.tau = density_ratio(spec, t);
    b.basis = op.eigenvectors;
    b.basis_inv = op.basis_inverse();
    return b;
}

ComplexStructureBlocks blocks_from_raw(const Eigen::MatrixXd& A, const Eigen::MatrixXd& Ymat,
                                       const Eigen::VectorXd& mu, const Eigen::VectorXd& tau,
                                       double dx) {
    ComplexStructureBlocks b;
    b.n = static_cast<int>(A.rows());
    b.dx = dx;
    b.raw = true;
    b.raw_A = A;
    b.raw_Ymat = Ymat;
    b.mu = mu;
    b.tau = tau;
    return b;
}

BlockMatrix2 assemble_J(const ComplexStructureBlocks& blocks) {
    double s = blocks.sigma;
    return BlockMatrix2::from_blocks(-s * blocks.A(), -s * blocks.B(), -s * blocks.D(),
                                     -s * blocks.C());
}

BlockMatrix2 assemble_JY(const ComplexStructureBlocks& blocks) {
    double s = -blocks.sigma;
    Eigen::MatrixXd A = blocks.A();
    Eigen::MatrixXd Y = blocks.Ymat();
    Eigen::MatrixXd lower_left, lower_right;
    if (blocks.raw) {
        Eigen::MatrixXd one_plus = Eigen::MatrixXd::Identity(blocks.n, blocks.n) + A * A;
        lower_left = -Y.partialPivLu().solve(one_plus);
        lower_right = -Y.partialPivLu().solve(A * Y);
    } else {
        Eigen::VectorXd vals = (Eigen::VectorXd::Ones(blocks.n).array() +
                                blocks.mode_A.array().square()) /
                               blocks.mode_Y.array();
        lower_left = -spectral_assemble(blocks, vals);
        lower_right = -A;
    }
    return BlockMatrix2::from_blocks(s * A, s * Y, s * lower_left, s * lower_right);
}

double check_block_relations(const ComplexStructureBlocks& blocks) {
    const int n = blocks.n;
    Eigen::MatrixXd A = blocks.A(), B = blocks.B(), C = blocks.C(), D = blocks.D();
    Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
    double in = I.norm();
    double r1 = (A * A + B * D + I).norm() / in;
    double r2 = (C * C + D * B + I).norm() / in;
    double scale3 = std::max(1.0, (A * B).norm());
    double r3 = (A * B + B * C).norm() / scale3;
    double scale4 = std::max(1.0, (D * A).norm());
    double r4 = (D * A + C * D).norm() / scale4;
    return std::max(std::max(r1, r2), std::max(r3, r4));
}

double check_adjoint(const ComplexStructureBlocks& blocks) {
    BlockMatrix2 jy = assemble_JY(blocks);
    BlockMatrix2 eps = epsilon_matrix(blocks.n);
    BlockMatrix2 adj = adjoint_weighted(jy, blocks.mu, blocks.mu);
    BlockMatrix2 r = eps * adj * adjoint_plain(eps) + jy;
    return r.frobenius() / jy.frobenius();
}

double check_adjoint_density(const ComplexStructureBlocks& blocks) {
    BlockMatrix2 j = assemble_J(blocks);
    BlockMatrix2 eps = epsilon_matrix(blocks.n);
    BlockMatrix2 r = eps * adjoint_plain(j) * adjoint_plain(eps) + j;
    return r.frobenius() / j.frobenius();
}

double check_frames_agree(const ComplexStructureBlocks& blocks) {
    BlockMatrix2 j = assemble_J(blocks);
    BlockMatrix2 jy = assemble_JY(blocks);
    Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(blocks.n, blocks.n);
    BlockMatrix2 T = BlockMatrix2::from_blocks(Eigen::MatrixXd::Identity(blocks.n, blocks.n),
                                               Z, Z, Eigen::MatrixXd(blocks.tau.asDiagonal()));
    BlockMatrix2 r = T * j * T.inverse() - jy;
    return r.frobenius() / jy.frobenius();
}

std::complex<double> inner_product(const ComplexStructureBlocks& blocks,
                                   const PhaseVector& a, const PhaseVector& b) {
    BlockMatrix2 j = assemble_J(blocks);
    double re = 2.0 * symplectic_form(a, j.apply(b), blocks.dx);
    double im = 2.0 * symplectic_form(a, b, blocks.dx);
    return {re, im};
}

namespace {

Eigen::MatrixXd symplectic_gram(const ComplexStructureBlocks& blocks, int sigma) {
    const int n = blocks.n;
    ComplexStructureBlocks tmp = blocks;
    tmp.sigma = sigma;
    BlockMatrix2 j = assemble_J(tmp);
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    S.block(0, n, n, n) = -blocks.dx * Eigen::MatrixXd::Identity(n, n);
    S.block(n, 0, n, n) = blocks.dx * Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd q = S * j.m;
    return 0.5 * (q + q.transpose());
}

} // namespace

OrientationResult select_orientation(const ComplexStructureBlocks& blocks) {
    Eigen::MatrixXd g = symplectic_gram(blocks, +1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
    double lo = es.eigenvalues().minCoeff();
    double hi = es.eigenvalues().maxCoeff();
    OrientationResult out;
    if (lo > 0.0) {
        out.sigma = +1;
        out.gram_min_eigenvalue = lo;
    } else if (hi < 0.0) {
        out.sigma = -1;
        out.gram_min_eigenvalue = -hi;
    } else {
        throw std::runtime_error(
            "select_orientation: quadratic form indefinite for both signs "
            "(symmetry/positivity conditions violated)");
    }
    return out;
}

double similarity_check(const BlockMatrix2& j1, const BlockMatrix2& j2, const BlockMatrix2& x) {
    if (j1.n != j2.n || j1.n != x.n)
        throw std::invalid_argument("similarity_check: dimension mismatch");
    Eigen::MatrixXd conj = x.m.partialPivLu().solve(j2.m * x.m);
    return (j1.m - conj).norm() / j1.m.norm();
}

double sobolev_boundedness(const ComplexStructureBlocks& blocks, const SpectralOperator& op,
                           double s) {
    if (blocks.raw)
        throw std::invalid_argument("sobolev_boundedness needs spectral-form blocks");
    double norm = 0.0;
    for (int k = 0; k < blocks.n; ++k) {
        double lam = op.eigenvalues(k);
        if (!(lam > 0.0))
            throw std::domain_error("sobolev_boundedness: non-positive eigenvalue at mode " +
                                    std::to_string(k));
        double a = blocks.mode_A(k), y = blocks.mode_Y(k);
        double rl = std::sqrt(lam);
        (void)s; // the spectral weights cancel mode-wise for every order
        Eigen::Matrix2d mk;
        mk << a, y * rl, -(1.0 + a * a) / (y * rl), -a;
        Eigen::JacobiSVD<Eigen::Matrix2d> svd(mk);
        norm = std::max(norm, svd.singularValues()(0));
    }
    return norm;
}

double symplectic_compatibility(const ComplexStructureBlocks& blocks, int pairs,
                                std::mt19937_64& rng) {
    BlockMatrix2 j = assemble_J(blocks);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int p = 0; p < pairs; ++p) {
        PhaseVector a, b;
        a.phi.resize(blocks.n);
        a.pi.resize(blocks.n);
        b.phi.resize(blocks.n);
        b.pi.resize(blocks.n);
        for (int i = 0; i < blocks.n; ++i) {
            a.phi(i) = u(rng);
            a.pi(i) = u(rng);
            b.phi(i) = u(rng);
            b.pi(i) = u(rng);
        }
        double before = symplectic_form(a, b, blocks.dx);
        double after = symplectic_form(j.apply(a), j.apply(b), blocks.dx);
        worst = std::max(worst, std::abs(after - before) / std::max(1.0, std::abs(before)));
    }
    return worst;
}

double gram_min_eigenvalue(const ComplexStructureBlocks& blocks) {
    const int n = blocks.n;
    BlockMatrix2 j = assemble_J(blocks);
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    S.block(0, n, n, n) = -blocks.dx * Eigen::MatrixXd::Identity(n, n);
    S.block(n, 0, n, n) = blocks.dx * Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXcd g =
        2.0 * (S * j.m).cast<std::complex<double>>() +
        std::complex<double>(0.0, 2.0) * S.cast<std::complex<double>>();
    Eigen::MatrixXcd herm = 0.5 * (g + g.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

} // namespace kgvac
