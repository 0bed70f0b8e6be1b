#include "kgvac/specfun.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kgvac::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool near_nonpositive_integer(cplx z, long* which) {
    if (std::abs(z.imag()) > 1e-12) return false;
    double r = std::round(z.real());
    if (r > 0.5) return false;
    if (std::abs(z.real() - r) > 1e-12 * std::max(1.0, std::abs(z.real()))) return false;
    if (which) *which = static_cast<long>(r);
    return true;
}

// Lanczos coefficients, g = 7, n = 9
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

cplx gamma_core(cplx z) {
    // requires Re z >= 0.5
    cplx zm1 = z - 1.0;
    cplx acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (zm1 + static_cast<double>(i));
    cplx t = zm1 + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, zm1 + 0.5) * std::exp(-t) * acc;
}

} // namespace

cplx gamma(cplx z) {
    long pole = 0;
    if (near_nonpositive_integer(z, &pole)) {
        std::ostringstream os;
        os << "gamma: pole at nonpositive integer " << pole;
        throw std::domain_error(os.str());
    }
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return kPi / (std::sin(kPi * z) * gamma_core(1.0 - z));
    }
    return gamma_core(z);
}

namespace {

// shared series for J (alternating) and I (monotone)
cplx bessel_series(cplx nu, cplx z, double sign) {
    if (std::abs(z) > 50.0)
        throw std::domain_error("bessel: |z| > 50 outside the series range");
    // negative integer order: reflect to positive order
    if (std::abs(nu.imag()) < 1e-14) {
        double r = std::round(nu.real());
        if (r < 0.0 && std::abs(nu.real() - r) < 1e-14) {
            double flip = (sign < 0.0 && std::fmod(-r, 2.0) == 1.0) ? -1.0 : 1.0;
            return flip * bessel_series(-nu, z, sign);
        }
    }
    if (z == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu.real() > 0.0) return 0.0;
        throw std::domain_error("bessel: z = 0 with non-positive order");
    }
    cplx half = 0.5 * z;
    cplx term = std::pow(half, nu) / gamma(nu + 1.0);
    cplx sum = term;
    cplx ratio_base = sign * half * half;
    for (int k = 1; k <= 200; ++k) {
        term *= ratio_base / (static_cast<double>(k) * (nu + static_cast<double>(k)));
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum) && k > 4) return sum;
    }
    throw std::runtime_error("bessel: series budget of 200 terms exhausted");
}

} // namespace

cplx bessel_j(cplx nu, cplx z) { return bessel_series(nu, z, -1.0); }
cplx bessel_i(cplx nu, cplx z) { return bessel_series(nu, z, +1.0); }

cplx bessel_j_deriv(cplx nu, cplx z) {
    if (z == 0.0) throw std::domain_error("bessel_j_deriv: z = 0");
    return bessel_j(nu - 1.0, z) - (nu / z) * bessel_j(nu, z);
}

namespace {

// One Taylor step for u'' = z u: advances (u, u') from z0 by h.
void airy_taylor_step(double z0, double h, double& u, double& du) {
    double a_km1 = 0.0; // a_{k-1}
    double a_k = u;     // a_k at k = 0
    double a_k1 = du;   // a_{k+1} at k = 0
    double sum = a_k + a_k1 * h;
    double dsum = a_k1;
    double hk = h;    // h^{k+1}
    double pw = h * h; // h^{k+2}
    for (int k = 0; k + 2 <= 40; ++k) {
        double a_k2 = (z0 * a_k + a_km1) / ((k + 1.0) * (k + 2.0));
        // shift window
        a_km1 = a_k;
        a_k = a_k1;
        a_k1 = a_k2;
        sum += a_k2 * pw;
        dsum += (k + 2.0) * a_k2 * hk;
        hk *= h;
        if (std::abs(a_k2 * pw) < 1e-18 * (std::abs(sum) + 1e-30) && k > 6) break;
        pw *= h;
    }
    u = sum;
    du = dsum;
}

void airy_march(double target, double& u, double& du) {
    double z = 0.0;
    while (z != target) {
        double remaining = target - z;
        double h = std::min(1.0, 1.5 / (1.0 + std::sqrt(std::abs(z))));
        if (std::abs(remaining) < h) h = std::abs(remaining);
        h = (remaining > 0) ? h : -h;
        airy_taylor_step(z, h, u, du);
        z += h;
    }
}

} // namespace

AiryResult airy(double z) {
    if (std::abs(z) > 25.0)
        throw std::domain_error("airy: |z| > 25 outside the supported range");
    static const double g13 = std::tgamma(1.0 / 3.0);
    static const double g23 = std::tgamma(2.0 / 3.0);
    AiryResult r;
    r.ai = std::pow(3.0, -2.0 / 3.0) / g23;
    r.ai_deriv = -std::pow(3.0, -1.0 / 3.0) / g13;
    r.bi = std::pow(3.0, -1.0 / 6.0) / g23;
    r.bi_deriv = std::pow(3.0, 1.0 / 6.0) / g13;
    if (z != 0.0) {
        airy_march(z, r.ai, r.ai_deriv);
        airy_march(z, r.bi, r.bi_deriv);
    }
    return r;
}

cplx hyp1f1(cplx a, cplx b, cplx z) {
    long pole = 0;
    if (near_nonpositive_integer(b, &pole)) {
        // terminate early when a hits the same or an earlier nonpositive integer
        long apole = 0;
        bool a_terminates = near_nonpositive_integer(a, &apole) && apole >= pole;
        if (!a_terminates)
            throw std::domain_error("hyp1f1: b at a nonpositive integer");
    }
    cplx term = 1.0, sum = 1.0;
    for (int k = 0; k < 300; ++k) {
        cplx ak = a + static_cast<double>(k);
        if (ak == 0.0) return sum; // terminating polynomial case
        term *= ak * z / ((b + static_cast<double>(k)) * (k + 1.0));
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum) && k > 4) return sum;
    }
    throw std::runtime_error("hyp1f1: series budget of 300 terms exhausted");
}

namespace {

void whittaker_guard(cplx mu, cplx z) {
    if (std::abs(z) > 30.0)
        throw std::domain_error("whittaker: |z| > 30 outside the series range");
    long pole = 0;
    if (near_nonpositive_integer(1.0 + 2.0 * mu, &pole))
        throw std::domain_error("whittaker_m: 1 + 2 mu at a nonpositive integer");
}

cplx whittaker_m_impl(cplx kappa, cplx mu, cplx z, bool deriv) {
    cplx a = mu - kappa + 0.5;
    cplx b = 1.0 + 2.0 * mu;
    cplx pre = std::exp(-0.5 * z) * std::pow(z, mu + 0.5);
    cplx f = hyp1f1(a, b, z);
    if (!deriv) return pre * f;
    cplx fprime = (a / b) * hyp1f1(a + 1.0, b + 1.0, z);
    return pre * ((-0.5 + (mu + 0.5) / z) * f + fprime);
}

// connection coefficients of W in terms of M_{kappa,mu} and M_{kappa,-mu}
void w_connection(cplx kappa, cplx mu, cplx& c_plus, cplx& c_minus) {
    c_plus = gamma(-2.0 * mu) / gamma(0.5 - mu - kappa);
    c_minus = gamma(2.0 * mu) / gamma(0.5 + mu - kappa);
}

cplx whittaker_w_generic(cplx kappa, cplx mu, cplx z, bool deriv) {
    cplx cp, cm;
    w_connection(kappa, mu, cp, cm);
    cplx mp = whittaker_m_impl(kappa, mu, z, deriv);
    cplx mm = whittaker_m_impl(kappa, -mu, z, deriv);
    return cp * mp + cm * mm;
}

// When 2*mu is (near-)integral the connection coefficients have Gamma poles
// whose divergences cancel between the two branches; evaluate the analytic
// limit by Richardson extrapolation in mu.
cplx whittaker_w_impl(cplx kappa, cplx mu, cplx z, bool deriv) {
    double two_mu = 2.0 * mu.real();
    bool integral = std::abs(mu.imag()) < 1e-8 &&
                    std::abs(two_mu - std::round(two_mu)) < 1e-6;
    if (!integral) {
        long pole = 0;
        if (near_nonpositive_integer(0.5 - mu - kappa, &pole) ||
            near_nonpositive_integer(0.5 + mu - kappa, &pole))
            throw std::domain_error("whittaker_w: degenerate parameters (Gamma pole in the "
                                    "connection formula)");
        return whittaker_w_generic(kappa, mu, z, deriv);
    }
    auto avg = [&](double d) {
        return 0.5 * (whittaker_w_generic(kappa, mu + d, z, deriv) +
                      whittaker_w_generic(kappa, mu - d, z, deriv));
    };
    const double d = 1e-3;
    return (4.0 * avg(0.5 * d) - avg(d)) / 3.0;
}

} // namespace

cplx whittaker_m(cplx kappa, cplx mu, cplx z) {
    whittaker_guard(mu, z);
    return whittaker_m_impl(kappa, mu, z, false);
}

cplx whittaker_m_deriv(cplx kappa, cplx mu, cplx z) {
    whittaker_guard(mu, z);
    return whittaker_m_impl(kappa, mu, z, true);
}

cplx whittaker_w(cplx kappa, cplx mu, cplx z) {
    if (std::abs(z) > 30.0)
        throw std::domain_error("whittaker: |z| > 30 outside the series range");
    return whittaker_w_impl(kappa, mu, z, false);
}

cplx whittaker_w_deriv(cplx kappa, cplx mu, cplx z) {
    if (std::abs(z) > 30.0)
        throw std::domain_error("whittaker: |z| > 30 outside the series range");
    return whittaker_w_impl(kappa, mu, z, true);
}

} // namespace kgvac::specfun
