#pragma once

#include <complex>
#include <functional>

#include "exsf/errors.hpp"

namespace exsf {

using ComplexValue = std::complex<double>;

inline constexpr double kDefaultQuadTol = 1e-10;
inline constexpr double kDefaultSeriesRelTol = 1e-12;
inline constexpr int kDefaultEvalBudget = 200000;

struct QuadResult {
    ComplexValue value{0.0, 0.0};
    double abs_err = 0.0;
    int evals = 0;
    bool converged = false;
};

struct SeriesResult {
    ComplexValue value{0.0, 0.0};
    int terms = 0;
    bool converged = false;
};

// Both sides of a checked identity, evaluated independently.
struct IdentityPair {
    ComplexValue lhs;
    ComplexValue rhs;
};

// A value carried as exp(log_scale) * mantissa so magnitudes far outside
// double range survive intermediate steps.
struct ScaledValue {
    ComplexValue log_scale{0.0, 0.0};
    ComplexValue mantissa{0.0, 0.0};
    ComplexValue combine() const { return std::exp(log_scale) * mantissa; }
};

// True when z is within tol of a nonpositive integer (0, -1, -2, ...).
bool is_nonpositive_integer(ComplexValue z, double tol = 1e-12);

// Principal branch of ln Gamma(z); real on the positive real axis.
// Lanczos approximation, reflection for Re z < 1/2.  Throws PoleError at
// the poles z = 0, -1, -2, ...
ComplexValue log_gamma(ComplexValue z);

// exp(log_gamma(z)).
ComplexValue gamma_fn(ComplexValue z);

// 1 / Gamma(z); entire, zero at nonpositive integers.
ComplexValue recip_gamma(ComplexValue z);

// Gamma(a) / Gamma(b) evaluated as exp of a log difference; requires a and b
// off the poles.
ComplexValue gamma_ratio(ComplexValue a, ComplexValue b);

// Euler beta B(x, y) = Gamma(x)Gamma(y)/Gamma(x+y).  Throws PoleError when
// x or y is a nonpositive integer and the quotient is not finite.
ComplexValue beta(ComplexValue x, ComplexValue y);

// Rising factorial (a)_n, n >= 0.
ComplexValue pochhammer(ComplexValue a, int n);

// Integrand on (0,1).  Both t and 1-t are supplied so endpoint factors like
// (1-t)^c can be formed without cancellation.
using UnitIntegrand = std::function<ComplexValue(double t, double one_minus_t)>;

// Tanh-sinh quadrature over (0,1).  left_exponent / right_exponent declare
// the algebraic endpoint behaviour t^left, (1-t)^right of the integrand;
// both must be > -1 (DomainError otherwise).  No node is placed exactly at
// an endpoint.  Throws NoConvergence when refinement stalls above tol with
// the evaluation budget exhausted.
QuadResult integrate_unit(const UnitIntegrand& f,
                          double left_exponent,
                          double right_exponent,
                          double tol = kDefaultQuadTol,
                          int budget = kDefaultEvalBudget);

using HalflineIntegrand = std::function<ComplexValue(double x)>;

// Quadrature over (0, infinity) for integrands with a decaying tail:
// the axis is split at the scale point and the tail mapped back onto (0,1).
// Throws DivergenceSuspected when partial sums keep growing, NoConvergence
// on budget exhaustion.
QuadResult integrate_halfline(const HalflineIntegrand& f,
                              double tol = kDefaultQuadTol,
                              double scale = 1.0,
                              int budget = kDefaultEvalBudget);

using TermFn = std::function<ComplexValue(int n)>;

// Compensated (Neumaier) summation of term(0) + term(1) + ...  Stops after
// three consecutive terms below rel_tol * max(1, |sum|); throws
// NoConvergence when max_terms is reached first.
SeriesResult sum_series(const TermFn& term,
                        double rel_tol = kDefaultSeriesRelTol,
                        int max_terms = 100000);

}  // namespace exsf
