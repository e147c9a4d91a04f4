#pragma once

#include "exsf/numkernel.hpp"

namespace exsf {

// Parameters shared by the extended beta / hypergeometric family.  The
// kernel is I_{v+1/2}(q; -p/(t^mu (1-t)^sigma)).
struct ExtBetaParams {
    ComplexValue v;
    ComplexValue q;
    ComplexValue p;
    double mu = 1.0;
    double sigma = 1.0;
};

enum class HypRoute { Auto, Series, Integral };

// Kummer confluent hypergeometric 1F1(a; b; x).  Series with term-ratio
// recurrence; Kummer transformation for Re x < 0; large-|x| expansion when
// the transformed series would be too long.
ComplexValue kummer_1f1(ComplexValue a, ComplexValue b, ComplexValue x);

// |x| beyond which the large-argument expansion of 1F1(a; b; x) is used.
double kummer_asymptotic_threshold(ComplexValue a, ComplexValue b);

// 1F1(a; b; x) for x = -exp(log_minus_x); Re(log_minus_x) may lie far
// beyond double range.  Valid when |x| exceeds the asymptotic threshold
// (and for the two terminating cases, any |x|).  When Im(log_minus_x) is
// a signed zero, -0.0 selects the branch where x sits on the upper edge
// of the negative real axis (the principal side).
ScaledValue kummer_1f1_asymptotic_parts(ComplexValue a, ComplexValue b,
                                        ComplexValue log_minus_x);

// Gauss hypergeometric 2F1(a, b; c; z): series for |z| < 1, Euler integral
// (Re c > Re b > 0, z off [1, infinity)) otherwise or when forced.
ComplexValue gauss_2f1(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue z,
                       HypRoute route = HypRoute::Auto);

// Extended beta
//   B^{(mu,sigma)}_{v,q}(x, y; p)
//     = sqrt(2/pi) integral_0^1 t^x (1-t)^y I_{v+1/2}(q; -p/(t^mu (1-t)^sigma)) dt.
// The exponents are t^x and (1-t)^y exactly as written.  Requires Re p > 0,
// mu, sigma >= 0, Re(v+q+1/2) > 0, Re(2v+q+3/2) > 0, Re(x + mu q) > -1 and
// Re(y + sigma q) > -1.
ComplexValue ext_beta(ComplexValue x, ComplexValue y, const ExtBetaParams& prm,
                      double tol = 1e-12);

// Extended Gauss hypergeometric
//   F^{(mu,sigma)}_{v,q;p}(a, b; c; z)
//     = sum_n (a)_n [B_ext(b+n, c-b; p) / B(b, c-b)] z^n / n!
// with the Euler-type integral route carrying (1-zt)^(-a) under the
// extended-beta kernel.  Series requires |z| < 1.
ComplexValue ext_gauss_hyp(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue z,
                           const ExtBetaParams& prm, HypRoute route = HypRoute::Auto);

// Extended confluent hypergeometric: as above without (a)_n, kernel e^(zt).
ComplexValue ext_confluent(ComplexValue b, ComplexValue c, ComplexValue z,
                           const ExtBetaParams& prm, HypRoute route = HypRoute::Auto);

// Extended gamma
//   Gamma_p^{v,q}(x) = integral_0^1 t^(x-1) I_{v+1/2}(q; -(t + p/t)) dt;
// requires Re p > 0, Re x > 0, Re(v+q) > -1/2, Re(2v+q) > -3/2.
ComplexValue ext_gamma(ComplexValue x, ComplexValue v, ComplexValue q, ComplexValue p,
                       double tol = 1e-12);

// Generating relation for Kummer functions:
//   sum_k [Gamma(k+alpha)/Gamma(k+1)] 1F1(alpha+k; beta; x) z^k
//     = (1-z)^(-alpha) Gamma(alpha) 1F1(alpha; beta; x/(1-z)),
// truncated at k <= k_max; requires |z| < 1.
IdentityPair kummer_generating_check(ComplexValue alpha, ComplexValue beta, ComplexValue x,
                                     ComplexValue z, int k_max);

}  // namespace exsf
