#pragma once

#include <complex>

namespace kgvac::specfun {

using cplx = std::complex<double>;

// Gamma function for complex argument (Lanczos approximation, reflection for
// Re z < 1/2). Throws std::domain_error at nonpositive-integer poles.
cplx gamma(cplx z);

// Bessel function of the first kind with complex order and argument, by the
// ascending power series (terms built recursively). Throws on |z| > 50 or
// when the 200-term budget is exhausted.
cplx bessel_j(cplx nu, cplx z);
// d/dz J_nu(z) = J_{nu-1}(z) - (nu/z) J_nu(z)
cplx bessel_j_deriv(cplx nu, cplx z);
// Modified Bessel function of the first kind (same series without the sign
// alternation); used by the rotation-identity checks.
cplx bessel_i(cplx nu, cplx z);

// Airy functions with first derivatives, by Taylor recentering along the real
// axis. Accurate over the oscillatory range; for growing arguments Bi stays
// accurate while Ai degrades beyond z ~ +5 (documented range guard at |z|<=25).
struct AiryResult {
    double ai, bi, ai_deriv, bi_deriv;
};
AiryResult airy(double z);

// Whittaker functions with first derivatives. M via the confluent series;
// W via the two-M connection formula (limit in mu when 2*mu is integral).
// Guards: 1 + 2*mu at a nonpositive integer, |z| > 30, degenerate connection
// coefficients.
cplx whittaker_m(cplx kappa, cplx mu, cplx z);
cplx whittaker_m_deriv(cplx kappa, cplx mu, cplx z);
cplx whittaker_w(cplx kappa, cplx mu, cplx z);
cplx whittaker_w_deriv(cplx kappa, cplx mu, cplx z);

// Kummer's confluent hypergeometric 1F1(a; b; z) by series.
cplx hyp1f1(cplx a, cplx b, cplx z);

} // namespace kgvac::specfun
