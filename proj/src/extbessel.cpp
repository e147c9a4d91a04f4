#include "exsf/extbessel.hpp"

#include <cmath>

#include "exsf/exthyp.hpp"

namespace exsf {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLn2 = 0.69314718055994530941723212145817657;
constexpr double kLnPi = 1.14472988584940017414342735135305871;

// log of (x/2)^v 2^(2v+q-1/2) / sqrt(pi); x must be nonzero.
ComplexValue prefactor_log(const BesselParams& prm, ComplexValue x) {
    return prm.v * std::log(0.5 * x) + (2.0 * prm.v + prm.q - 0.5) * kLn2 - 0.5 * kLnPi;
}

void require_integral_route(const BesselParams& prm) {
    if (!((prm.v + prm.q).real() > 0.0))
        throw DomainError("integral route requires Re(v+q) > 0");
    if (!(prm.v.real() > -0.5))
        throw DomainError("integral route requires Re(v) > -1/2");
}

void require_series_route(const BesselParams& prm) {
    if (is_nonpositive_integer(prm.v + prm.q))
        throw DomainError("series route requires v+q away from 0, -1, -2, ...");
    if (is_nonpositive_integer(2.0 * prm.v + prm.q + 0.5))
        throw DomainError("series route requires 2v+q+1/2 away from 0, -1, -2, ...");
}

// Handles x == 0 for every route; returns true when the value is decided.
bool zero_argument(const BesselParams& prm, ComplexValue x, ComplexValue* out) {
    if (x != ComplexValue(0.0, 0.0)) return false;
    if (prm.v == ComplexValue(0.0, 0.0)) {
        // (x/2)^0 = 1; the series collapses to its first term
        *out = std::exp(prm.q * kLn2 - 0.5 * kLn2 - 0.5 * kLnPi) *
               gamma_ratio(prm.q, prm.q + 0.5);
        return true;
    }
    if (prm.v.real() > 0.0) {
        *out = ComplexValue(0.0, 0.0);
        return true;
    }
    throw DomainError("x = 0 requires Re(v) >= 0");
}

ComplexValue eval_integral(const BesselParams& prm, ComplexValue x) {
    require_integral_route(prm);
    ComplexValue out;
    if (zero_argument(prm, x, &out)) return out;
    ComplexValue a = prm.v + prm.q;          // t exponent + 1
    ComplexValue b = prm.v + 0.5;            // (1-t) exponent + 1
    double growth = std::exp(std::min(280.0, 2.0 * std::max(0.0, x.real())));
    double tol = std::max(1e-280, 1e-13 * growth);
    QuadResult quad = integrate_unit(
        [&](double t, double omt) {
            return std::exp((a - 1.0) * std::log(t) + (b - 1.0) * std::log(omt) +
                            2.0 * x * t);
        },
        a.real() - 1.0, b.real() - 1.0, tol);
    return std::exp(prefactor_log(prm, x) - log_gamma(b)) * quad.value;
}

ComplexValue eval_series(const BesselParams& prm, ComplexValue x) {
    require_series_route(prm);
    ComplexValue out;
    if (zero_argument(prm, x, &out)) return out;
    ComplexValue a = prm.v + prm.q;
    ComplexValue c = 2.0 * prm.v + prm.q + 0.5;
    ComplexValue term = gamma_ratio(a, c);
    ComplexValue cur = term;
    SeriesResult s = sum_series(
        [&](int n) {
            if (n == 0) return cur;
            double m = static_cast<double>(n - 1);
            cur *= (a + m) * (2.0 * x) / ((c + m) * (m + 1.0));
            return cur;
        },
        1e-15, 2000);
    return std::exp(prefactor_log(prm, x)) * s.value;
}

// Parts evaluation for x = -exp(L)/2 ... given log(-2x) = L2; the power of x
// in the prefactor and the algebraic decay of 1F1 cancel inside log_scale.
ScaledValue far_negative_parts(const BesselParams& prm, ComplexValue log_minus_2x) {
    ComplexValue a = prm.v + prm.q;
    ComplexValue c = 2.0 * prm.v + prm.q + 0.5;
    double s = std::signbit(log_minus_2x.imag()) ? kPi : -kPi;
    ComplexValue logx = log_minus_2x - kLn2 + ComplexValue(0.0, s);
    ComplexValue pref = prm.v * (logx - kLn2) + (2.0 * prm.v + prm.q - 0.5) * kLn2 -
                        0.5 * kLnPi + log_gamma(a) - log_gamma(c);
    ScaledValue f = kummer_1f1_asymptotic_parts(a, c, log_minus_2x);
    return {pref + f.log_scale, f.mantissa};
}

}  // namespace

ScaledValue ext_bessel_parts(const BesselParams& prm, ComplexValue x) {
    require_series_route(prm);
    ComplexValue out;
    if (zero_argument(prm, x, &out)) return {{0.0, 0.0}, out};
    ComplexValue a = prm.v + prm.q;
    ComplexValue c = 2.0 * prm.v + prm.q + 0.5;
    ComplexValue two_x = 2.0 * x;
    if (two_x.real() < 0.0 && std::abs(two_x) > kummer_asymptotic_threshold(a, c))
        return far_negative_parts(prm, std::log(-two_x));
    return {prefactor_log(prm, x) + log_gamma(a) - log_gamma(c), kummer_1f1(a, c, two_x)};
}

ScaledValue ext_bessel_parts_negarg(const BesselParams& prm, ComplexValue log_minus_x) {
    require_series_route(prm);
    if (log_minus_x.imag() == 0.0)
        log_minus_x = ComplexValue(log_minus_x.real(), -0.0);  // principal-side x
    if (log_minus_x.real() < 600.0)
        return ext_bessel_parts(prm, -std::exp(log_minus_x));
    return far_negative_parts(prm, log_minus_x + kLn2);
}

ComplexValue ext_bessel(const BesselParams& prm, ComplexValue x, EvalRoute route) {
    switch (route) {
        case EvalRoute::Integral: return eval_integral(prm, x);
        case EvalRoute::Series: return eval_series(prm, x);
        case EvalRoute::Hypergeometric: return ext_bessel_parts(prm, x).combine();
    }
    throw DomainError("unknown evaluation route");
}

ComplexValue ext_bessel_scaled(const BesselParams& prm, double x) {
    require_integral_route(prm);
    if (x < 0.0) throw DomainError("ext_bessel_scaled requires x >= 0");
    ComplexValue out;
    if (zero_argument(prm, ComplexValue(x, 0.0), &out)) return out;
    ComplexValue a = prm.v + prm.q;
    ComplexValue b = prm.v + 0.5;
    QuadResult quad = integrate_unit(
        [&](double t, double omt) {
            return std::exp((a - 1.0) * std::log(t) + (b - 1.0) * std::log(omt) -
                            2.0 * x * omt);
        },
        a.real() - 1.0, b.real() - 1.0, 1e-14);
    return std::exp(prefactor_log(prm, ComplexValue(x, 0.0)) - log_gamma(b)) * quad.value;
}

ComplexValue ext_bessel_closed_half(ComplexValue q, ComplexValue x) {
    if (!(q.real() > -0.5))
        throw DomainError("closed form at v = 1/2 requires Re(q) > -1/2");
    if (x == ComplexValue(0.0, 0.0)) return {0.0, 0.0};
    ComplexValue a = q + 0.5;
    ComplexValue w = -2.0 * x;
    // lower incomplete gamma: gamma(a, w) = w^a / a * 1F1(a; a+1; -w)
    ComplexValue lower = std::pow(w, a) / a * kummer_1f1(a, a + 1.0, -w);
    return std::pow(-x, -a) * std::sqrt(x / (2.0 * kPi)) * lower;
}

ComplexValue asymptotic_constant(const BesselParams& prm) {
    return std::exp(log_gamma(prm.v + prm.q) - log_gamma(prm.v + 0.5) -
                    0.5 * std::log(2.0 * kPi));
}

IdentityPair generating_bilateral(double x, ComplexValue z, int n_max) {
    if (!(x > 0.0)) throw DomainError("bilateral relation requires x > 0");
    if (!(std::abs(2.0 / z) < 1.0))
        throw DomainError("bilateral relation requires |2/z| < 1");
    if (n_max < 1) throw DomainError("n_max must be >= 1");

    // I_{n+1/2}(-n+1/2; x) = sqrt(2/pi) x^(n+1/2) sum_k (2x)^k / Gamma(n+k+2);
    // for n <= -2 the first terms vanish through 1/Gamma at the poles.
    auto summand = [&](int n) {
        int k0 = std::max(0, -n - 1);
        ComplexValue term = std::pow(2.0 * x, k0) * recip_gamma(n + k0 + 2.0);
        ComplexValue acc(0.0, 0.0);
        for (int k = k0; k < k0 + 600; ++k) {
            acc += term;
            term *= 2.0 * x / (n + k + 2.0);
            // relative cutoff: the whole k-sum can sit far below 1 in magnitude
            if (std::abs(term) < 1e-17 * std::abs(acc) && k > k0 + 2) break;
        }
        return std::sqrt(2.0 / kPi) * std::pow(x, n + 0.5) * acc;
    };

    ComplexValue lhs(0.0, 0.0);
    for (int n = -n_max; n <= n_max; ++n) lhs += summand(n) * std::pow(z, n);
    ComplexValue rhs = std::sqrt(2.0 / (kPi * x)) * std::exp(x * z) / (z - 2.0);
    return {lhs, rhs};
}

IdentityPair generating_shift(const BesselParams& prm, ComplexValue x, ComplexValue t,
                              int k_max) {
    if (!(std::abs(2.0 * t / x) < 1.0))
        throw DomainError("shift relation requires |2t/x| < 1");
    if (k_max < 1) throw DomainError("k_max must be >= 1");
    ComplexValue lhs(0.0, 0.0);
    ComplexValue tk(1.0, 0.0);
    for (int k = 0; k <= k_max; ++k) {
        BesselParams shifted{prm.v - static_cast<double>(k),
                             prm.q + 2.0 * static_cast<double>(k)};
        lhs += ext_bessel(shifted, x, EvalRoute::Series) * tk * recip_gamma(k + 1.0);
        tk *= t;
    }
    ComplexValue rhs = std::pow(1.0 - 2.0 * t / x, -prm.q) *
                       ext_bessel(prm, x * x / (x - 2.0 * t), EvalRoute::Integral);
    return {lhs, rhs};
}

ComplexValue macdonald_check(ComplexValue v, ComplexValue x) {
    ComplexValue s = std::sin(kPi * v);
    if (std::abs(s) < 1e-12)
        throw DomainError("Macdonald relation requires non-integer v");
    BesselParams plus{v, 0.5}, minus{-v, 0.5};
    EvalRoute route =
        (std::abs(v.real()) < 0.5) ? EvalRoute::Integral : EvalRoute::Series;
    ComplexValue im = ext_bessel(minus, x, route);
    ComplexValue ip = ext_bessel(plus, x, route);
    return kPi * std::exp(-x) / (2.0 * s) * (im - ip);
}

}  // namespace exsf
