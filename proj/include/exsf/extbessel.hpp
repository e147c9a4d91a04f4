#pragma once

#include "exsf/numkernel.hpp"

namespace exsf {

// Parameters of the two-parameter extended modified Bessel function
// I_v(q; x).  The integral representation
//
//   I_v(q;x) = (x/2)^v 2^(2v+q-1/2) / (sqrt(pi) Gamma(v+1/2))
//              * integral_0^1 t^(v+q-1) (1-t)^(v-1/2) e^(2xt) dt
//
// requires Re(v+q) > 0 and Re(v) > -1/2.  The series and hypergeometric
// routes only need the Gamma arguments v+q and 2v+q+1/2 away from poles.
struct BesselParams {
    ComplexValue v;
    ComplexValue q;
};

enum class EvalRoute { Integral, Series, Hypergeometric };

// I_v(q; x) by the requested route.  Powers of x take principal branches,
// so negative real x yields complex values for non-integer v.
ComplexValue ext_bessel(const BesselParams& prm, ComplexValue x,
                        EvalRoute route = EvalRoute::Integral);

// e^(-2x) I_v(q; x) for real x >= 0; stays in double range for large x.
ComplexValue ext_bessel_scaled(const BesselParams& prm, double x);

// I_v(q; x) split as exp(log_scale) * mantissa, hypergeometric route.  The
// prefactor power of x and the algebraic large-argument decay cancel in log
// space, so arguments far out on the negative axis stay inside double range.
ScaledValue ext_bessel_parts(const BesselParams& prm, ComplexValue x);

// Same for x = -exp(log_minus_x) where Re(log_minus_x) may exceed double
// range (arguments like -p / (t^mu (1-t)^sigma) at extreme t).  A real
// log_minus_x places x on the upper edge of the negative real axis.
ScaledValue ext_bessel_parts_negarg(const BesselParams& prm, ComplexValue log_minus_x);

// Closed form at v = 1/2:
//   I_{1/2}(q;x) = (-x)^(-q-1/2) sqrt(x/(2 pi)) (Gamma(q+1/2) - Gamma(q+1/2, -2x)),
// evaluated through the lower incomplete gamma.  Requires Re(q) > -1/2.
ComplexValue ext_bessel_closed_half(ComplexValue q, ComplexValue x);

// C(v,q) = Gamma(v+q) / (sqrt(2 pi) Gamma(v+1/2)), the constant in
// I_v(q;x) ~ C(v,q) / x^q for x -> -infinity.
ComplexValue asymptotic_constant(const BesselParams& prm);

// Bilateral generating relation
//   sum_{n=-inf}^{inf} I_{n+1/2}(-n+1/2; x) z^n = sqrt(2/(pi x)) e^(xz) / (z-2)
// truncated at |n| <= n_max; requires |2/z| < 1 and x > 0.
IdentityPair generating_bilateral(double x, ComplexValue z, int n_max);

// Shift generating relation
//   sum_k I_{v-k}(q+2k; x) t^k / k! = (1 - 2t/x)^(-q) I_v(q; x^2/(x-2t))
// truncated at k <= k_max; requires |2t/x| < 1.
IdentityPair generating_shift(const BesselParams& prm, ComplexValue x, ComplexValue t,
                              int k_max);

// Macdonald-function combination at q = 1/2:
//   (pi e^(-x) / (2 sin(v pi))) * (I_{-v}(1/2;x) - I_v(1/2;x)),
// which equals K_v(x); v must not be an integer.
ComplexValue macdonald_check(ComplexValue v, ComplexValue x);

}  // namespace exsf
