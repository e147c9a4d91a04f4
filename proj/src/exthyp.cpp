#include "exsf/exthyp.hpp"

#include <cmath>

#include "exsf/extbessel.hpp"

namespace exsf {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

ComplexValue hyp1f1_series(ComplexValue a, ComplexValue b, ComplexValue x) {
    ComplexValue cur(1.0, 0.0);
    SeriesResult s = sum_series(
        [&](int n) {
            if (n == 0) return cur;
            double m = static_cast<double>(n - 1);
            cur *= (a + m) * x / ((b + m) * (m + 1.0));
            return cur;
        },
        1e-15, 4000);
    return s.value;
}

// sum_j (p)_j (r)_j inv^j / j!, truncated where the terms stop shrinking.
ComplexValue watson_sum(ComplexValue p, ComplexValue r, ComplexValue inv) {
    ComplexValue term(1.0, 0.0), acc(1.0, 0.0);
    double best = 1.0;
    for (int j = 0; j < 64; ++j) {
        double m = static_cast<double>(j);
        ComplexValue next = term * (p + m) * (r + m) * inv / (m + 1.0);
        if (j > 2 && std::abs(next) >= best) break;
        acc += next;
        term = next;
        best = std::min(best, std::abs(term));
        if (std::abs(term) < 1e-17 * std::abs(acc)) break;
    }
    return acc;
}

ComplexValue hyp2f1_series(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue z) {
    ComplexValue cur(1.0, 0.0);
    SeriesResult s = sum_series(
        [&](int n) {
            if (n == 0) return cur;
            double m = static_cast<double>(n - 1);
            cur *= (a + m) * (b + m) * z / ((c + m) * (m + 1.0));
            return cur;
        },
        1e-15, 30000);
    return s.value;
}

ComplexValue hyp2f1_euler_integral(ComplexValue a, ComplexValue b, ComplexValue c,
                                   ComplexValue z) {
    if (!(c.real() > b.real() && b.real() > 0.0))
        throw DomainError("Euler integral for 2F1 requires Re(c) > Re(b) > 0");
    QuadResult quad = integrate_unit(
        [&](double t, double omt) {
            return std::exp((b - 1.0) * std::log(t) + (c - b - 1.0) * std::log(omt) -
                            a * std::log(1.0 - z * t));
        },
        b.real() - 1.0, (c - b).real() - 1.0, 1e-13);
    return quad.value / beta(b, c - b);
}

void require_kernel_params(const ExtBetaParams& prm) {
    if (!(prm.p.real() > 0.0)) throw DomainError("extended-beta kernel requires Re(p) > 0");
    if (prm.mu < 0.0 || prm.sigma < 0.0)
        throw DomainError("extended-beta kernel requires mu >= 0 and sigma >= 0");
    if (!((prm.v + prm.q + 0.5).real() > 0.0))
        throw DomainError("extended-beta kernel requires Re(v+q+1/2) > 0");
    if (!((2.0 * prm.v + prm.q + 1.5).real() > 0.0))
        throw DomainError("extended-beta kernel requires Re(2v+q+3/2) > 0");
}

void require_euler_exponents(ComplexValue b, ComplexValue c, const ExtBetaParams& prm) {
    if (!(b.real() + prm.mu * prm.q.real() > -1.0))
        throw DomainError("integral representation requires Re(b + mu q) > -1");
    if (!((c - b).real() + prm.sigma * prm.q.real() > -1.0))
        throw DomainError("integral representation requires Re(c - b + sigma q) > -1");
}

// I_{v+1/2}(q; -p/(t^mu (1-t)^sigma)) folded together with exp(outer_log);
// the kernel argument and the kernel's algebraic decay are handled in log
// space so extreme quadrature nodes stay inside double range.
ComplexValue kernel_term(const ExtBetaParams& prm, double t, double omt,
                         ComplexValue outer_log) {
    ComplexValue lw =
        std::log(prm.p) - ComplexValue(prm.mu * std::log(t) + prm.sigma * std::log(omt), 0.0);
    ScaledValue k = ext_bessel_parts_negarg({prm.v + 0.5, prm.q}, lw);
    return std::exp(outer_log + k.log_scale) * k.mantissa;
}

}  // namespace

double kummer_asymptotic_threshold(ComplexValue a, ComplexValue b) {
    double m = std::abs(a) + std::abs(b - a);
    return 140.0 + 2.0 * m * m;
}

ScaledValue kummer_1f1_asymptotic_parts(ComplexValue a, ComplexValue b,
                                        ComplexValue log_minus_x) {
    if (is_nonpositive_integer(b))
        throw PoleError("1F1 requires b away from 0, -1, -2, ...");
    const ComplexValue L = log_minus_x;
    // x = -exp(L); the lower edge of L maps to the principal (upper) side of
    // the negative real axis.
    double s = std::signbit(L.imag()) ? kPi : -kPi;
    ComplexValue logx = L + ComplexValue(0.0, s);

    if (is_nonpositive_integer(a)) {
        // terminating series of degree n; factor x^n out of the polynomial
        int n = static_cast<int>(-std::llround(a.real()));
        if (n > 1000) throw NoConvergence("terminating 1F1 degree too large");
        ComplexValue coef(1.0, 0.0), mant(0.0, 0.0);
        for (int j = 0; j <= n; ++j) {
            double m = static_cast<double>(j);
            if (j > 0) coef *= (a + (m - 1.0)) / ((b + (m - 1.0)) * m);
            mant += coef * std::exp((m - n) * logx);
        }
        return {static_cast<double>(n) * logx, mant};
    }
    if (is_nonpositive_integer(b - a)) {
        // e^x times a terminating series in -x = exp(L)
        int n = static_cast<int>(-std::llround((b - a).real()));
        if (n > 1000) throw NoConvergence("terminating 1F1 degree too large");
        if (L.real() > 690.0) return {{0.0, 0.0}, {0.0, 0.0}};  // e^x below every scale
        ComplexValue x = -std::exp(L);
        ComplexValue coef(1.0, 0.0), mant(0.0, 0.0);
        for (int j = 0; j <= n; ++j) {
            double m = static_cast<double>(j);
            if (j > 0) coef *= (b - a + (m - 1.0)) / ((b + (m - 1.0)) * m);
            mant += coef * std::exp((m - n) * L);
        }
        return {x + static_cast<double>(n) * L, mant};
    }

    ComplexValue inv = std::exp(-L);  // -1/x; may underflow to 0 harmlessly
    ComplexValue log1 = log_gamma(b) - log_gamma(b - a) - a * L;
    ComplexValue mant = watson_sum(a, a - b + 1.0, inv);
    if (L.real() <= 690.0) {
        // exponential branch, negligible for large -Re x but kept for honesty
        ComplexValue x = -std::exp(L);
        ComplexValue log2 = log_gamma(b) - log_gamma(a) + x + (a - b) * logx;
        ComplexValue rel = std::exp(log2 - log1);
        if (std::isfinite(rel.real()) && std::isfinite(rel.imag()))
            mant += rel * watson_sum(b - a, 1.0 - a, -inv);
    }
    return {log1, mant};
}

ComplexValue kummer_1f1(ComplexValue a, ComplexValue b, ComplexValue x) {
    if (is_nonpositive_integer(b))
        throw PoleError("1F1 requires b away from 0, -1, -2, ...");
    if (x == ComplexValue(0.0, 0.0)) return {1.0, 0.0};
    if (is_nonpositive_integer(a)) return hyp1f1_series(a, b, x);  // terminating
    if (x.real() >= 0.0) return hyp1f1_series(a, b, x);
    if (std::abs(x) > kummer_asymptotic_threshold(a, b))
        return kummer_1f1_asymptotic_parts(a, b, std::log(-x)).combine();
    return std::exp(x) * hyp1f1_series(b - a, b, -x);
}

ComplexValue gauss_2f1(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue z,
                       HypRoute route) {
    if (is_nonpositive_integer(c))
        throw PoleError("2F1 requires c away from 0, -1, -2, ...");
    bool terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    if (z == ComplexValue(1.0, 0.0) && !terminating) {
        if (!((c - a - b).real() > 0.0))
            throw DomainError("2F1 at z = 1 requires Re(c-a-b) > 0");
        return gamma_fn(c) * gamma_fn(c - a - b) * recip_gamma(c - a) * recip_gamma(c - b);
    }
    if (route == HypRoute::Series || terminating ||
        (route == HypRoute::Auto && std::abs(z) < 0.995)) {
        if (std::abs(z) >= 1.0 && !terminating)
            throw DomainError("2F1 series requires |z| < 1");
        return hyp2f1_series(a, b, c, z);
    }
    if (z.imag() == 0.0 && z.real() >= 1.0)
        throw DomainError("2F1 integral route requires z off [1, infinity)");
    bool direct_ok = c.real() > b.real() && b.real() > 0.0;
    bool swapped_ok = c.real() > a.real() && a.real() > 0.0;
    if (direct_ok) return hyp2f1_euler_integral(a, b, c, z);
    if (swapped_ok) return hyp2f1_euler_integral(b, a, c, z);
    if (route == HypRoute::Auto && std::abs(z) < 1.0) return hyp2f1_series(a, b, c, z);
    throw DomainError("2F1 integral route requires Re(c) > Re(b) > 0 in some order");
}

ComplexValue ext_beta(ComplexValue x, ComplexValue y, const ExtBetaParams& prm, double tol) {
    require_kernel_params(prm);
    double left = x.real() + prm.mu * prm.q.real();
    double right = y.real() + prm.sigma * prm.q.real();
    if (!(left > -1.0)) throw DomainError("ext_beta requires Re(x + mu q) > -1");
    if (!(right > -1.0)) throw DomainError("ext_beta requires Re(y + sigma q) > -1");
    QuadResult quad = integrate_unit(
        [&](double t, double omt) {
            return kernel_term(prm, t, omt, x * std::log(t) + y * std::log(omt));
        },
        left, right, tol);
    return std::sqrt(2.0 / kPi) * quad.value;
}

ComplexValue ext_gauss_hyp(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue z,
                           const ExtBetaParams& prm, HypRoute route) {
    require_kernel_params(prm);
    ComplexValue bn = beta(b, c - b);
    if (route == HypRoute::Series) {
        if (!(std::abs(z) < 1.0)) throw DomainError("series route requires |z| < 1");
        ComplexValue coeff(1.0, 0.0);
        SeriesResult s = sum_series(
            [&](int n) {
                if (n > 0) {
                    double m = static_cast<double>(n - 1);
                    coeff *= (a + m) * z / (m + 1.0);
                }
                return coeff * ext_beta(b + static_cast<double>(n), c - b, prm) / bn;
            },
            1e-11, 400);
        return s.value;
    }
    if (z.imag() == 0.0 && z.real() >= 1.0)
        throw DomainError("integral route requires z off [1, infinity)");
    require_euler_exponents(b, c, prm);
    QuadResult quad = integrate_unit(
        [&](double t, double omt) {
            return kernel_term(prm, t, omt,
                               b * std::log(t) + (c - b) * std::log(omt) -
                                   a * std::log(1.0 - z * t));
        },
        b.real() + prm.mu * prm.q.real(), (c - b).real() + prm.sigma * prm.q.real(), 1e-12);
    return std::sqrt(2.0 / kPi) * quad.value / bn;
}

ComplexValue ext_confluent(ComplexValue b, ComplexValue c, ComplexValue z,
                           const ExtBetaParams& prm, HypRoute route) {
    require_kernel_params(prm);
    ComplexValue bn = beta(b, c - b);
    if (route == HypRoute::Series) {
        ComplexValue coeff(1.0, 0.0);
        SeriesResult s = sum_series(
            [&](int n) {
                if (n > 0) coeff *= z / static_cast<double>(n);
                return coeff * ext_beta(b + static_cast<double>(n), c - b, prm) / bn;
            },
            1e-11, 400);
        return s.value;
    }
    require_euler_exponents(b, c, prm);
    QuadResult quad = integrate_unit(
        [&](double t, double omt) {
            return kernel_term(prm, t, omt, b * std::log(t) + (c - b) * std::log(omt) + z * t);
        },
        b.real() + prm.mu * prm.q.real(), (c - b).real() + prm.sigma * prm.q.real(), 1e-12);
    return std::sqrt(2.0 / kPi) * quad.value / bn;
}

ComplexValue ext_gamma(ComplexValue x, ComplexValue v, ComplexValue q, ComplexValue p,
                       double tol) {
    if (!(p.real() > 0.0)) throw DomainError("ext_gamma requires Re(p) > 0");
    if (!(x.real() > 0.0)) throw DomainError("ext_gamma requires Re(x) > 0");
    if (!((v + q).real() > -0.5)) throw DomainError("ext_gamma requires Re(v+q) > -1/2");
    if (!((2.0 * v + q).real() > -1.5)) throw DomainError("ext_gamma requires Re(2v+q) > -3/2");
    if (!((x + q).real() > 0.0))
        throw DomainError("ext_gamma integral requires Re(x + q) > 0");
    BesselParams kprm{v + 0.5, q};
    QuadResult quad = integrate_unit(
        [&](double t, double omt) {
            (void)omt;
            // -(t + p/t), as log of the negated argument to keep small t safe
            ComplexValue lw = (t < 1e-150) ? std::log(p) - std::log(t)
                                           : std::log(ComplexValue(t, 0.0) + p / t);
            ScaledValue k = ext_bessel_parts_negarg(kprm, lw);
            return std::exp((x - 1.0) * std::log(t) + k.log_scale) * k.mantissa;
        },
        x.real() - 1.0 + q.real(), 0.0, tol);
    return quad.value;
}

IdentityPair kummer_generating_check(ComplexValue alpha, ComplexValue beta_, ComplexValue x,
                                     ComplexValue z, int k_max) {
    if (!(std::abs(z) < 1.0)) throw DomainError("generating relation requires |z| < 1");
    if (k_max < 1) throw DomainError("k_max must be >= 1");
    ComplexValue lhs(0.0, 0.0);
    ComplexValue zk(1.0, 0.0);
    for (int k = 0; k <= k_max; ++k) {
        double kk = static_cast<double>(k);
        lhs += std::exp(log_gamma(alpha + kk) - log_gamma(kk + 1.0)) *
               kummer_1f1(alpha + kk, beta_, x) * zk;
        zk *= z;
    }
    ComplexValue rhs = std::pow(1.0 - z, -alpha) * gamma_fn(alpha) *
                       kummer_1f1(alpha, beta_, x / (1.0 - z));
    return {lhs, rhs};
}

}  // namespace exsf
