#include "kgvac/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace kgvac {

Eigen::MatrixXd SpectralOperator::basis_inverse() const {
    return eigenvectors.transpose() * weights.asDiagonal();
}

Eigen::MatrixXd SpectralOperator::matrix() const { return assemble(eigenvalues); }

Eigen::MatrixXd SpectralOperator::assemble(const Eigen::VectorXd& mode_values) const {
    if (mode_values.size() != n)
        throw std::invalid_argument("assemble: mode value count != dimension");
    return eigenvectors * mode_values.asDiagonal() * basis_inverse();
}

namespace {

// Symmetric eigendecomposition of the mu-self-adjoint matrix W:
// conjugate by diag(sqrt(mu)), solve, map back. Guarantees a real spectrum and
// mu-orthonormal eigenvectors.
void weighted_eigs(const Eigen::MatrixXd& W, const Eigen::VectorXd& mu,
                   Eigen::VectorXd& evals, Eigen::MatrixXd& evecs) {
    const int n = static_cast<int>(mu.size());
    Eigen::VectorXd sq = mu.array().sqrt();
    Eigen::MatrixXd S = sq.asDiagonal() * W * sq.cwiseInverse().asDiagonal();
    S = 0.5 * (S + S.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(S);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("weighted_eigs: eigensolver failed");
    evals = solver.eigenvalues();
    evecs = sq.cwiseInverse().asDiagonal() * solver.eigenvectors();
    (void)n;
}

// Full conservative-stencil build for the static family (spatial profiles).
SpectralOperator build_static(const SpacetimeSpec& spec, double t) {
    const int n = spec.spatial.num_points;
    const double dx = spec.spatial.dx();
    auto Nx = [&](double x) {
        return spec.spatial.lapse_profile ? spec.spatial.lapse_profile(x) : 1.0;
    };
    auto hx = [&](double x) {
        return spec.spatial.metric_profile ? spec.spatial.metric_profile(x) : 1.0;
    };

    Eigen::VectorXd N(n), sqh(n), hinv(n);
    for (int i = 0; i < n; ++i) {
        double x = i * dx;
        double Nv = Nx(x);
        double hv = hx(x);
        if (!(Nv > 0.0)) {
            std::ostringstream os;
            os << "non-positive lapse at site " << i;
            throw std::invalid_argument(os.str());
        }
        N(i) = Nv;
        sqh(i) = std::sqrt(hv);
        hinv(i) = 1.0 / hv;
    }

    // half-site coefficient c_{i+1/2} = (sqrt(h) N h^xx) at the midpoint
    Eigen::VectorXd chalf(n);
    for (int i = 0; i < n; ++i) {
        double x = (i + 0.5) * dx;
        chalf(i) = std::sqrt(hx(x)) * Nx(x) / hx(x);
    }

    double m2 = spec.mass * spec.mass;
    double pot = m2 + spec.spatial.curvature_offset;

    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        int ip = (i + 1) % n;
        int im = (i + n - 1) % n;
        double pref = N(i) / sqh(i) / (dx * dx);
        double cp = chalf(i);
        double cm = chalf(im);
        W(i, ip) += -pref * cp;
        W(i, im) += -pref * cm;
        W(i, i) += pref * (cp + cm) + N(i) * N(i) * pot;
    }

    SpectralOperator op;
    op.n = n;
    op.dx = dx;
    op.time_tag = t;
    op.weights = (sqh.array() / N.array()).matrix() * dx;
    weighted_eigs(W, op.weights, op.eigenvalues, op.eigenvectors);
    op.core_eigenvalues = op.eigenvalues;
    return op;
}

} // namespace

SpectralOperator build_spatial_operator(const SpacetimeSpec& spec, double t) {
    require_in_interval(spec, t);
    if (spec.family == Family::Static) return build_static(spec, t);

    const int n = spec.spatial.num_points;
    const double dx = spec.spatial.dx();
    double N = spec.lapse.value(t);
    double a = spec.scale.value(t);
    if (!(N > 0.0)) throw std::invalid_argument("non-positive lapse");

    // flat periodic core: -Delta with the three-point stencil, unit measure
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        int ip = (i + 1) % n;
        int im = (i + n - 1) % n;
        K(i, ip) += -1.0 / (dx * dx);
        K(i, im) += -1.0 / (dx * dx);
        K(i, i) += 2.0 / (dx * dx);
    }
    Eigen::VectorXd unit = Eigen::VectorXd::Constant(n, dx);
    Eigen::VectorXd k2;
    Eigen::MatrixXd V;
    weighted_eigs(K, unit, k2, V);
    // clamp the constant-mode eigenvalue to exactly zero
    for (int i = 0; i < n; ++i)
        if (std::abs(k2(i)) < 1e-12) k2(i) = std::max(k2(i), 0.0);

    SpectralOperator op;
    op.n = n;
    op.dx = dx;
    op.time_tag = t;
    op.core_eigenvalues = k2;
    op.eigenvalues.resize(n);
    for (int i = 0; i < n; ++i) op.eigenvalues(i) = hv_from_core(spec, t, k2(i));
    double ad = std::pow(a, spec.dim_weight);
    op.weights = Eigen::VectorXd::Constant(n, ad / N * dx);
    op.eigenvectors = V * std::sqrt(N / ad);
    return op;
}

Eigen::MatrixXd spectral_power(const SpectralOperator& op, double s) {
    if (s == 0.0) return Eigen::MatrixXd::Identity(op.n, op.n);
    Eigen::VectorXd vals(op.n);
    for (int i = 0; i < op.n; ++i) {
        double lam = op.eigenvalues(i);
        if (lam <= 0.0 && s < 0.0) {
            std::ostringstream os;
            os << "spectral_power: eigenvalue " << lam << " at mode " << i
               << " blocks negative power " << s;
            throw std::domain_error(os.str());
        }
        vals(i) = std::pow(lam, s);
    }
    return op.assemble(vals);
}

double mu_dot(const SpectralOperator& op, const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    return (u.array() * op.weights.array() * v.array()).sum();
}

double sobolev_norm(const SpectralOperator& op, const Eigen::VectorXd& psi,
                    const SobolevOrder& order) {
    if (psi.size() != op.n) throw std::invalid_argument("sobolev_norm: size mismatch");
    double rho = order.shift.value_or(0.0);
    if (order.shift && rho < 1.0)
        throw std::invalid_argument("sobolev_norm: shift requires rho >= 1");
    Eigen::VectorXd coeff = op.basis_inverse() * psi;
    double acc = 0.0;
    for (int i = 0; i < op.n; ++i) {
        double lam = op.eigenvalues(i) + rho;
        if (lam <= 0.0 && order.s < 0.0) {
            std::ostringstream os;
            os << "sobolev_norm: eigenvalue " << op.eigenvalues(i) << " at mode " << i
               << " blocks order " << order.s;
            throw std::domain_error(os.str());
        }
        double w = (order.s == 0.0) ? 1.0 : std::pow(lam, order.s);
        acc += w * w * coeff(i) * coeff(i);
    }
    return std::sqrt(acc);
}

double operator_bound_check(const SpectralOperator& op, double s) {
    (void)s; // the spectral weights cancel mode-wise for every s
    double fwd = 0.0, inv = 0.0;
    for (int i = 0; i < op.n; ++i) {
        double lam = op.eigenvalues(i);
        if (lam <= 0.0)
            throw std::domain_error("operator_bound_check requires a strictly positive spectrum");
        // ratio of W^{2s-2} weight of (lambda * c) to the W^{2s} weight of c
        fwd = std::max(fwd, std::pow(lam, s - 1.0) * lam / std::pow(lam, s));
        inv = std::max(inv, std::pow(lam, s) / (lam * std::pow(lam, s - 1.0)));
    }
    return std::max(fwd, inv);
}

double shifted_resolvent_norm(const SpectralOperator& op, double s, double rho) {
    if (rho < 1.0) throw std::invalid_argument("shifted resolvent norm requires rho >= 1");
    double norm = 0.0;
    for (int i = 0; i < op.n; ++i) {
        double lam = op.eigenvalues(i);
        if (lam < 0.0) throw std::domain_error("negative eigenvalue in shifted resolvent");
        norm = std::max(norm, std::pow(lam + rho, -s));
    }
    return norm;
}

SpectralOperator reshuffle_degenerate_basis(const SpectralOperator& op, unsigned seed) {
    SpectralOperator out = op;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    int i = 0;
    while (i < op.n) {
        int j = i + 1;
        while (j < op.n && std::abs(op.eigenvalues(j) - op.eigenvalues(i)) <
                               1e-9 * (1.0 + std::abs(op.eigenvalues(i))))
            ++j;
        if (j - i == 2) {
            double th = angle(rng);
            Eigen::VectorXd u = op.eigenvectors.col(i), v = op.eigenvectors.col(i + 1);
            out.eigenvectors.col(i) = std::cos(th) * u + std::sin(th) * v;
            out.eigenvectors.col(i + 1) = -std::sin(th) * u + std::cos(th) * v;
        }
        i = j;
    }
    return out;
}

} // namespace kgvac
