#include "kgvac/phase.hpp"

#include <cmath>
#include <stdexcept>

namespace kgvac {

Eigen::VectorXd PhaseVector::stacked() const {
    Eigen::VectorXd v(2 * size());
    v.head(size()) = phi;
    v.tail(size()) = pi;
    return v;
}

PhaseVector PhaseVector::from_stacked(const Eigen::VectorXd& v, double time_tag) {
    if (v.size() % 2 != 0) throw std::invalid_argument("stacked phase vector has odd length");
    PhaseVector p;
    int n = static_cast<int>(v.size()) / 2;
    p.phi = v.head(n);
    p.pi = v.tail(n);
    p.time_tag = time_tag;
    return p;
}

BlockMatrix2 BlockMatrix2::identity(int n) {
    BlockMatrix2 b;
    b.n = n;
    b.m = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    return b;
}

BlockMatrix2 BlockMatrix2::from_blocks(const Eigen::MatrixXd& ul, const Eigen::MatrixXd& ur,
                                       const Eigen::MatrixXd& ll, const Eigen::MatrixXd& lr) {
    const int n = static_cast<int>(ul.rows());
    if (ul.cols() != n || ur.rows() != n || ur.cols() != n || ll.rows() != n ||
        ll.cols() != n || lr.rows() != n || lr.cols() != n)
        throw std::invalid_argument("from_blocks: inconsistent block dimensions");
    BlockMatrix2 b;
    b.n = n;
    b.m.resize(2 * n, 2 * n);
    b.m.block(0, 0, n, n) = ul;
    b.m.block(0, n, n, n) = ur;
    b.m.block(n, 0, n, n) = ll;
    b.m.block(n, n, n, n) = lr;
    return b;
}

BlockMatrix2 BlockMatrix2::inverse() const {
    BlockMatrix2 b;
    b.n = n;
    b.m = m.partialPivLu().inverse();
    return b;
}

PhaseVector BlockMatrix2::apply(const PhaseVector& v) const {
    if (v.size() != n) throw std::invalid_argument("BlockMatrix2::apply: dimension mismatch");
    return PhaseVector::from_stacked(m * v.stacked(), v.time_tag);
}

BlockMatrix2 operator*(const BlockMatrix2& a, const BlockMatrix2& b) {
    if (a.n != b.n) throw std::invalid_argument("BlockMatrix2: dimension mismatch");
    BlockMatrix2 c;
    c.n = a.n;
    c.m = a.m * b.m;
    return c;
}

BlockMatrix2 operator*(double s, const BlockMatrix2& a) {
    BlockMatrix2 c;
    c.n = a.n;
    c.m = s * a.m;
    return c;
}

BlockMatrix2 operator+(const BlockMatrix2& a, const BlockMatrix2& b) {
    if (a.n != b.n) throw std::invalid_argument("BlockMatrix2: dimension mismatch");
    BlockMatrix2 c;
    c.n = a.n;
    c.m = a.m + b.m;
    return c;
}

BlockMatrix2 operator-(const BlockMatrix2& a, const BlockMatrix2& b) {
    if (a.n != b.n) throw std::invalid_argument("BlockMatrix2: dimension mismatch");
    BlockMatrix2 c;
    c.n = a.n;
    c.m = a.m - b.m;
    return c;
}

double symplectic_form(const PhaseVector& a, const PhaseVector& b, double dx) {
    if (a.size() != b.size()) throw std::invalid_argument("symplectic_form: dimension mismatch");
    return dx * (a.pi.dot(b.phi) - b.pi.dot(a.phi));
}

double epsilon_product(const PhaseVector& a, const PhaseVector& b, double dx) {
    if (a.size() != b.size()) throw std::invalid_argument("epsilon_product: dimension mismatch");
    // eps (phi, pi) = (pi, -phi); pairing <eps a, b> with unweighted dx sums
    return dx * (a.pi.dot(b.phi) - a.phi.dot(b.pi));
}

BlockMatrix2 epsilon_matrix(int n) {
    Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(n, n);
    return BlockMatrix2::from_blocks(Z, I, -I, Z);
}

Eigen::VectorXd density_ratio(const SpacetimeSpec& spec, double t) {
    const int n = spec.spatial.num_points;
    const double dx = spec.spatial.dx();
    Eigen::VectorXd tau(n);
    if (spec.family == Family::Static) {
        for (int i = 0; i < n; ++i) {
            double x = i * dx;
            double N = spec.spatial.lapse_profile ? spec.spatial.lapse_profile(x) : 1.0;
            double h = spec.spatial.metric_profile ? spec.spatial.metric_profile(x) : 1.0;
            if (!(N > 0.0) || !(h > 0.0))
                throw std::domain_error("non-positive metric data at a lattice site");
            tau(i) = N / std::sqrt(h);
        }
        return tau;
    }
    require_in_interval(spec, t);
    double N = spec.lapse.value(t);
    double a = spec.scale.value(t);
    tau.setConstant(N / std::pow(a, spec.dim_weight));
    return tau;
}

Eigen::VectorXd momentum_weight(const SpacetimeSpec& spec, double t) {
    return density_ratio(spec, t).cwiseInverse();
}

BlockMatrix2 measure_transform(const SpacetimeSpec& spec, double t) {
    Eigen::VectorXd tau = density_ratio(spec, t);
    const int n = static_cast<int>(tau.size());
    Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(n, n);
    return BlockMatrix2::from_blocks(Eigen::MatrixXd::Identity(n, n), Z, Z,
                                     Eigen::MatrixXd(tau.asDiagonal()));
}

namespace {

void require_conformal(const SpacetimeSpec& spec) {
    if (spec.family == Family::Static)
        throw std::invalid_argument("conformal map: family has no conformal structure");
}

} // namespace

BlockMatrix2 conformal_map(const SpacetimeSpec& spec, double t) {
    require_conformal(spec);
    require_in_interval(spec, t);
    const int n = spec.spatial.num_points;
    double a = spec.scale.value(t);
    double da = spec.scale.d1(t);
    double Nbar = spec.lapse.value(t) / a;
    Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(n, n);
    return BlockMatrix2::from_blocks(a * I, Z, (da / Nbar) * I, (1.0 / a) * I);
}

BlockMatrix2 conformal_map_scalar(const SpacetimeSpec& spec, double t) {
    require_conformal(spec);
    require_in_interval(spec, t);
    const int n = spec.spatial.num_points;
    double a = spec.scale.value(t);
    double da = spec.scale.d1(t);
    Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(n, n);
    return BlockMatrix2::from_blocks(a * I, Z, da * I, a * I);
}

SpacetimeSpec conformal_companion_spec(const SpacetimeSpec& spec) {
    require_conformal(spec);
    SpacetimeSpec bar = spec;
    bar.family = Family::Expanding;
    bar.scale = TimeFunction::one();
    // Nbar = N / a; the built-in profiles do not close under quotients, so the
    // companion lapse is carried as a tabulated function with FD derivatives.
    TimeFunction N = spec.lapse, A = spec.scale;
    if (N == A) {
        bar.lapse = TimeFunction::one();
    } else if (N.kind() == TimeFunction::Kind::ExpRate &&
               A.kind() == TimeFunction::Kind::ExpRate) {
        bar.lapse = TimeFunction::exp_rate(N.param() - A.param());
    } else if (A.kind() == TimeFunction::Kind::One) {
        bar.lapse = N;
    } else if (N.kind() == TimeFunction::Kind::One &&
               A.kind() == TimeFunction::Kind::ExpRate) {
        bar.lapse = TimeFunction::exp_rate(-A.param());
    } else {
        bar.lapse = TimeFunction::tabulated(
            [N, A](double t) { return N.value(t) / A.value(t); });
    }
    // companion carries the conserved-operator content: -Delta + xi Rbar + m^2
    // with the original curvature offset and the family's mass shift
    bar.mass = std::sqrt(std::max(0.0, hv_extra_shift(spec)));
    bar.coupling = 0.0;
    return bar;
}

BlockMatrix2 adjoint_weighted(const BlockMatrix2& b, const Eigen::VectorXd& w_src,
                              const Eigen::VectorXd& w_tgt) {
    if (w_src.size() != b.n || w_tgt.size() != b.n)
        throw std::invalid_argument("adjoint_weighted: weight size mismatch");
    Eigen::VectorXd winv = w_src.cwiseInverse();
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(2 * b.n, 2 * b.n);
    Eigen::MatrixXd Winv = Eigen::MatrixXd::Zero(2 * b.n, 2 * b.n);
    W.diagonal().head(b.n) = w_tgt;
    W.diagonal().tail(b.n) = w_tgt;
    Winv.diagonal().head(b.n) = winv;
    Winv.diagonal().tail(b.n) = winv;
    BlockMatrix2 out;
    out.n = b.n;
    out.m = Winv * b.m.transpose() * W;
    return out;
}

BlockMatrix2 adjoint_plain(const BlockMatrix2& b) {
    BlockMatrix2 out;
    out.n = b.n;
    out.m = b.m.transpose();
    return out;
}

} // namespace kgvac
