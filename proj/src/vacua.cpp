#include "kgvac/vacua.hpp"

#include <cmath>
#include <stdexcept>

#include "kgvac/specfun.hpp"

namespace kgvac::vacua {

namespace {

using specfun::cplx;

constexpr double kPi = 3.14159265358979323846;

bool is_mode_family(Family f) {
    return f == Family::DeSitterModesL10 || f == Family::RadiationModesL10b ||
           f == Family::DeSitterCosmicL11 || f == Family::RadiationCosmicL11b;
}

// assembles Y and its derivatives from the fundamental pair (u1, u2) of the
// frictionless mode equation u'' + q u = 0 and quadratic coefficients
// Y = cA u1 u2 + cB u1^2 + cC u2^2
struct QuadForm {
    cplx cA, cB, cC;
    cplx u1, du1, u2, du2;
    double q, dq;

    cplx value() const { return cA * u1 * u2 + cB * u1 * u1 + cC * u2 * u2; }
    cplx d1() const {
        return cA * (du1 * u2 + u1 * du2) + 2.0 * cB * u1 * du1 + 2.0 * cC * u2 * du2;
    }
    cplx pair2() const { return cA * du1 * du2 + cB * du1 * du1 + cC * du2 * du2; }
    cplx d2() const { return -2.0 * q * value() + 2.0 * pair2(); }
    cplx d3() const { return -4.0 * q * d1() - 2.0 * dq * value(); }
};

double require_real(cplx v, const char* what) {
    if (std::abs(v.imag()) > 1e-9 * std::max(1.0, std::abs(v.real())))
        throw std::domain_error(std::string("mode solution screening: ") + what +
                                " has a non-negligible imaginary part (constants do not "
                                "form a real branch)");
    return v.real();
}

ModeSample sample_from_quadform(const QuadForm& qf, const SpacetimeSpec& spec, double t) {
    ModeSample s;
    s.Y = require_real(qf.value(), "Y");
    if (!(s.Y > 0.0))
        throw std::domain_error("mode solution screening: Y(t) not strictly positive");
    s.dY = require_real(qf.d1(), "dY");
    s.d2Y = require_real(qf.d2(), "d2Y");
    s.d3Y = require_real(qf.d3(), "d3Y");
    double f = friction(spec, t);
    double fd = friction_d1(spec, t);
    double fdd = friction_d2(spec, t);
    s.Z = 0.5 * (s.dY - s.Y * f);
    s.dZ = 0.5 * (s.d2Y - s.dY * f - s.Y * fd);
    s.d2Z = 0.5 * (s.d3Y - s.d2Y * f - 2.0 * s.dY * fd - s.Y * fdd);
    return s;
}

} // namespace

ModeConstants default_constants(const SpacetimeSpec& spec, double kappa_sq) {
    ModeConstants c;
    double coff = spec.spatial.curvature_offset;
    switch (spec.family) {
        case Family::DeSitterModesL10: {
            double lam2 = kappa_sq + coff +
                          (6.0 * spec.coupling - 1.0) * spec.hubble * spec.hubble;
            if (!(lam2 > 0.0))
                throw std::domain_error("default_constants: mode operator not positive");
            c.c1 = 1.0 / std::sqrt(lam2);
            break;
        }
        case Family::DeSitterCosmicL11: {
            double M2 = spec.mass * spec.mass +
                        2.0 * (6.0 * spec.coupling - 9.0 / 8.0) * spec.hubble * spec.hubble;
            if (!(M2 > 0.0))
                throw std::domain_error("default_constants: shifted mass not positive");
            c.c1 = 1.0 / std::sqrt(M2);
            break;
        }
        case Family::RadiationModesL10b: {
            double s = kPi * std::pow(spec.mass, -2.0 / 3.0);
            c.c1 = s;
            c.c3 = s;
            break;
        }
        case Family::RadiationCosmicL11b:
            c.abs_square_default = true;
            break;
        default:
            // closed-form families have no branch constants
            break;
    }
    return c;
}

ModeSolution::ModeSolution(const SpacetimeSpec& spec, double kappa_sq,
                           std::optional<ModeConstants> constants)
    : spec_(spec), kappa_sq_(kappa_sq) {
    constants_ = constants ? *constants : default_constants(spec, kappa_sq);
    provenance_ = std::string(family_name(spec.family)) + "-vacuum";
    double coff = spec.spatial.curvature_offset;
    switch (spec_.family) {
        case Family::DeSitterModesL10: {
            if (!(spec_.mass > 0.0))
                throw std::invalid_argument("l10 modes need m > 0");
            double lam2 =
                kappa_sq + coff + (6.0 * spec_.coupling - 1.0) * spec_.hubble * spec_.hubble;
            if (!(lam2 > 0.0)) throw std::domain_error("l10: mode operator not positive");
            lam_ = std::sqrt(lam2);
            break;
        }
        case Family::DeSitterCosmicL11: {
            double lam2 = kappa_sq + coff;
            if (!(lam2 > 0.0)) throw std::domain_error("l11: mode operator not positive");
            lam_ = std::sqrt(lam2);
            double M2 = spec_.mass * spec_.mass +
                        2.0 * (6.0 * spec_.coupling - 9.0 / 8.0) * spec_.hubble * spec_.hubble;
            if (!(M2 > 0.0)) throw std::domain_error("l11: shifted mass not positive");
            mass_like_ = std::sqrt(M2);
            break;
        }
        case Family::RadiationModesL10b: {
            double lam2 = kappa_sq + coff;
            if (lam2 < 0.0) throw std::domain_error("l10b: mode operator negative");
            lam_ = std::sqrt(lam2);
            break;
        }
        case Family::RadiationCosmicL11b: {
            double lam2 = kappa_sq + coff;
            if (lam2 < 0.0) throw std::domain_error("l11b: mode operator negative");
            lam_ = std::sqrt(lam2);
            if (constants_.abs_square_default) {
                // Wronskian of (Re u, Im u) for u = M_{alpha,1/4}(2 i m t),
                // constant in t; fixes the exact normalization of |u|^2.
                double m = spec_.mass;
                cplx alpha(0.0, -lam2 / (2.0 * m));
                double tref = 0.5 * (spec_.t_min + spec_.t_max);
                cplx z(0.0, 2.0 * m * tref);
                cplx u = specfun::whittaker_m(alpha, 0.25, z);
                cplx du = specfun::whittaker_m_deriv(alpha, 0.25, z) * cplx(0.0, 2.0 * m);
                double wron = std::imag(std::conj(u) * du);
                if (std::abs(wron) < 1e-14)
                    throw std::domain_error("l11b: degenerate mode normalization");
                whittaker_scale_ = 1.0 / std::abs(wron);
            }
            break;
        }
        default:
            break;
    }
}

ModeSample ModeSolution::eval(double t) const {
    require_in_interval(spec_, t);
    if (!is_mode_family(spec_.family)) return eval_closed_form(t);
    return eval_modes(t);
}

ModeSample ModeSolution::eval_closed_form(double t) const {
    double hv = hv_from_core(spec_, t, kappa_sq_);
    if (!(hv > 0.0))
        throw std::domain_error("closed-form vacuum: zero or negative mode of the spatial "
                                "operator");
    ModeSample s;
    s.Y = 1.0 / std::sqrt(hv);
    double L = hv_scale_logd1(spec_, t);
    double Ld = hv_scale_logd2(spec_, t);
    double Ldd = hv_scale_logd3(spec_, t);
    s.dY = -0.5 * L * s.Y;
    s.d2Y = (-0.5 * Ld + 0.25 * L * L) * s.Y;
    s.d3Y = (-0.5 * Ldd + 0.75 * L * Ld - 0.125 * L * L * L) * s.Y;
    double f = friction(spec_, t);
    double fd = friction_d1(spec_, t);
    double fdd = friction_d2(spec_, t);
    s.Z = 0.5 * (s.dY - s.Y * f);
    s.dZ = 0.5 * (s.d2Y - s.dY * f - s.Y * fd);
    s.d2Z = 0.5 * (s.d3Y - s.d2Y * f - 2.0 * s.dY * fd - s.Y * fdd);
    return s;
}

ModeSample ModeSolution::eval_modes(double t) const {
    QuadForm qf;
    qf.q = q_mode(spec_, t, kappa_sq_);
    qf.dq = q_mode_dt(spec_, t, kappa_sq_);
    const ModeConstants& c = constants_;
    switch (spec_.family) {
        case Family::DeSitterModesL10:
        case Family::DeSitterCosmicL11: {
            double H = spec_.hubble;
            bool conformal = spec_.family == Family::DeSitterModesL10;
            cplx alpha = conformal ? cplx(0.0, lam_ / H) : cplx(0.0, -mass_like_ / H);
            double z = conformal ? (spec_.mass / H) * std::exp(H * t)
                                 : (lam_ / H) * std::exp(-H * t);
            double dz = conformal ? H * z : -H * z;
            qf.u1 = specfun::bessel_j(alpha, z);
            qf.u2 = specfun::bessel_j(-alpha, z);
            qf.du1 = specfun::bessel_j_deriv(alpha, z) * dz;
            qf.du2 = specfun::bessel_j_deriv(-alpha, z) * dz;
            cplx gp = specfun::gamma(1.0 + alpha);
            cplx gm = specfun::gamma(1.0 - alpha);
            qf.cA = c.c1 * gm * gp;
            qf.cB = c.c3 * std::pow(cplx(4.0, 0.0), alpha) * gp * gp;
            qf.cC = c.c2 * std::pow(cplx(4.0, 0.0), -alpha) * gm * gm;
            break;
        }
        case Family::RadiationModesL10b: {
            double m = spec_.mass;
            double m23 = std::pow(m, 2.0 / 3.0);
            double z = -(lam_ * lam_ + m * m * t) / (m23 * m23);
            double dz = -m23;
            auto ai = specfun::airy(z);
            qf.u1 = ai.ai;
            qf.u2 = ai.bi;
            qf.du1 = ai.ai_deriv * dz;
            qf.du2 = ai.bi_deriv * dz;
            qf.cA = c.c2;
            qf.cB = c.c1;
            qf.cC = c.c3;
            break;
        }
        case Family::RadiationCosmicL11b: {
            double m = spec_.mass;
            cplx alpha(0.0, -lam_ * lam_ / (2.0 * m));
            cplx z(0.0, 2.0 * m * t);
            cplx dz(0.0, 2.0 * m);
            cplx u = specfun::whittaker_m(alpha, 0.25, z);
            cplx du = specfun::whittaker_m_deriv(alpha, 0.25, z) * dz;
            if (c.abs_square_default) {
                qf.u1 = u;
                qf.du1 = du;
                qf.u2 = std::conj(u);
                qf.du2 = std::conj(du);
                qf.cA = whittaker_scale_;
                qf.cB = 0.0;
                qf.cC = 0.0;
            } else {
                qf.u1 = u;
                qf.du1 = du;
                qf.u2 = specfun::whittaker_w(alpha, 0.25, z);
                qf.du2 = specfun::whittaker_w_deriv(alpha, 0.25, z) * dz;
                qf.cA = c.c2;
                qf.cB = c.c1;
                qf.cC = c.c3;
            }
            break;
        }
        default:
            throw std::logic_error("eval_modes: not a mode family");
    }
    return sample_from_quadform(qf, spec_, t);
}

ComplexStructureBlocks catalog_blocks(const SpacetimeSpec& spec, const SpectralOperator& op,
                                      double t) {
    const int n = op.n;
    Eigen::VectorXd Y(n), A(n);
    if (is_mode_family(spec.family)) {
        for (int k = 0; k < n; ++k) {
            ModeSolution sol(spec, op.core_eigenvalues(k));
            ModeSample s = sol.eval(t);
            Y(k) = s.Y;
            A(k) = -s.Z;
        }
    } else {
        double ga = spec.scale.d1(t) / spec.scale.value(t);
        for (int k = 0; k < n; ++k) {
            double hv = op.eigenvalues(k);
            if (!(hv > 0.0))
                throw std::domain_error("catalog vacuum: zero mode of the spatial operator");
            Y(k) = 1.0 / std::sqrt(hv);
            A(k) = ga * Y(k);
        }
    }
    ComplexStructureBlocks b = blocks_from_modes(
        op, spec, t, Y, A, std::string(family_name(spec.family)) + "-vacuum");
    b.sigma = select_orientation(b).sigma;
    return b;
}

ModeTrajectory make_mode_trajectory(const SpacetimeSpec& spec, double kappa_sq,
                                    const std::vector<double>& times,
                                    std::optional<ModeConstants> constants) {
    ModeSolution sol(spec, kappa_sq, constants);
    ModeTrajectory traj;
    traj.kappa_sq = kappa_sq;
    traj.provenance = sol.provenance();
    traj.times = times;
    for (double t : times) {
        ModeSample s = sol.eval(t);
        traj.Y.push_back(s.Y);
        traj.Z.push_back(s.Z);
        traj.dY.push_back(s.dY);
        traj.d2Y.push_back(s.d2Y);
        traj.d3Y.push_back(s.d3Y);
        traj.dZ.push_back(s.dZ);
        traj.d2Z.push_back(s.d2Z);
    }
    return traj;
}

double static_general_Y(double w, std::complex<double> c1, double t) {
    if (!(w > 0.0)) throw std::domain_error("static_general_Y needs w > 0");
    double norm = std::abs(c1);
    return (2.0 * std::real(c1 * std::exp(cplx(0.0, 2.0 * w * t))) +
            std::sqrt(1.0 + 4.0 * norm * norm)) /
           w;
}

ModeTrajectory static_general_trajectory(double w, std::complex<double> c1,
                                         const std::vector<double>& times) {
    if (!(w > 0.0)) throw std::domain_error("static_general_trajectory needs w > 0");
    ModeTrajectory traj;
    traj.kappa_sq = w * w;
    traj.provenance = "static-general";
    traj.times = times;
    double c3 = std::sqrt(1.0 + 4.0 * std::norm(c1));
    for (double t : times) {
        QuadForm qf;
        qf.q = w * w;
        qf.dq = 0.0;
        qf.u1 = std::exp(cplx(0.0, w * t));
        qf.u2 = std::exp(cplx(0.0, -w * t));
        qf.du1 = cplx(0.0, w) * qf.u1;
        qf.du2 = cplx(0.0, -w) * qf.u2;
        qf.cA = c3 / w;
        qf.cB = c1 / w;
        qf.cC = std::conj(c1) / w;
        double Y = require_real(qf.value(), "Y");
        if (!(Y > 0.0))
            throw std::domain_error("static general solution: positivity screening failed");
        traj.Y.push_back(Y);
        traj.dY.push_back(require_real(qf.d1(), "dY"));
        traj.d2Y.push_back(require_real(qf.d2(), "d2Y"));
        traj.d3Y.push_back(require_real(qf.d3(), "d3Y"));
        // f = 0 in the static family
        traj.Z.push_back(0.5 * traj.dY.back());
        traj.dZ.push_back(0.5 * traj.d2Y.back());
        traj.d2Z.push_back(0.5 * traj.d3Y.back());
    }
    return traj;
}

Calibration calibrate_scale(const SpacetimeSpec& spec, double kappa_sq,
                            const ModeConstants& direction,
                            const std::vector<double>& ref_times) {
    if (ref_times.empty()) throw std::invalid_argument("calibrate_scale: no reference times");
    ModeSolution sol(spec, kappa_sq, direction);
    double sq = 0.0, sq2 = 0.0, worst_before = 0.0;
    std::vector<double> qs;
    for (double t : ref_times) {
        ModeSample s = sol.eval(t);
        double f = friction(spec, t);
        double fd = friction_d1(spec, t);
        double w2 = wsq_from_core(spec, t, kappa_sq);
        double g = fd + 0.5 * f * f - 2.0 * w2;
        double Q = s.Y * s.d2Y - 0.5 * s.dY * s.dY - s.Y * s.Y * g;
        qs.push_back(Q);
        sq += Q;
        sq2 += Q * Q;
        worst_before = std::max(worst_before, std::abs(Q - 2.0));
    }
    Calibration cal;
    cal.residual_before = worst_before;
    if (sq2 <= 0.0 || sq <= 0.0)
        throw std::domain_error("calibrate_scale: branch cannot satisfy the quadratic "
                                "normalization (degenerate constants)");
    double s2 = 2.0 * sq / sq2;
    cal.scale = std::sqrt(s2);
    for (double Q : qs)
        cal.residual_after = std::max(cal.residual_after, std::abs(s2 * Q - 2.0));
    return cal;
}

} // namespace kgvac::vacua
