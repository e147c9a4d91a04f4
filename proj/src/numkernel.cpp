#include "exsf/numkernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace exsf {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640561764;

// Lanczos coefficients, g = 607/128, N = 15 (Godfrey's table).
constexpr double kLanczosG = 4.7421875;
constexpr std::array<double, 15> kLanczosC = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// ln Gamma for Re z >= 1/2 via the Lanczos sum.
ComplexValue log_gamma_lanczos(ComplexValue z) {
    ComplexValue w = z - 1.0;
    ComplexValue acc(kLanczosC[0], 0.0);
    for (std::size_t k = 1; k < kLanczosC.size(); ++k)
        acc += kLanczosC[k] / (w + static_cast<double>(k));
    ComplexValue t = w + (kLanczosG + 0.5);
    return (w + 0.5) * std::log(t) - t + kLogSqrt2Pi + std::log(acc);
}

// log(sin(pi z)); fine for |Im z| up to ~200 before overflow.
ComplexValue log_sin_pi(ComplexValue z) {
    return std::log(std::sin(kPi * z));
}

// ---------------------------------------------------------------------------
// tanh-sinh node tables

struct TsNode {
    double t;    // abscissa in (0,1), the side closer to 1
    double omt;  // 1 - t, computed without cancellation
    double w;    // dt/du at the node
};

constexpr int kTsMaxLevel = 11;
constexpr double kTsUmax = 6.8;

struct TsTables {
    // level 0 holds u = h, 2h, ... with h = 1; level L >= 1 holds the odd
    // multiples of h = 2^-L.  Only u > 0 is stored; the u < 0 nodes are the
    // mirror images.  center_w is the u = 0 weight.
    std::array<std::vector<TsNode>, kTsMaxLevel + 1> level;
    double center_w = kPi / 4.0;
};

TsNode make_node(double u) {
    double y = 0.5 * kPi * std::sinh(u);
    double e2y = std::exp(-2.0 * y);
    double t = 1.0 / (1.0 + e2y);
    double omt = e2y / (1.0 + e2y);
    // log(cosh y) without overflow
    double lcosh = y + std::log1p(e2y) - 0.6931471805599453094;
    double w = 0.25 * kPi * std::cosh(u) * std::exp(-2.0 * lcosh);
    return TsNode{t, omt, w};
}

const TsTables& ts_tables() {
    static const TsTables tables = [] {
        TsTables tb;
        for (int lvl = 0; lvl <= kTsMaxLevel; ++lvl) {
            double h = std::ldexp(1.0, -lvl);
            std::vector<TsNode> nodes;
            if (lvl == 0) {
                for (int j = 1; j * h <= kTsUmax; ++j) nodes.push_back(make_node(j * h));
            } else {
                for (int j = 1; j * h <= kTsUmax; j += 2) nodes.push_back(make_node(j * h));
            }
            tb.level[lvl] = std::move(nodes);
        }
        return tb;
    }();
    return tables;
}

struct NeumaierAcc {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double get() const { return sum + comp; }
};

struct ComplexAcc {
    NeumaierAcc re, im;
    void add(ComplexValue v) {
        re.add(v.real());
        im.add(v.imag());
    }
    ComplexValue get() const { return {re.get(), im.get()}; }
};

// Shared tanh-sinh driver.  clip skips nodes whose distance to either
// endpoint falls below it (used by the half-line tail map, where extreme
// abscissas would push the integrand outside double range).
QuadResult ts_integrate(const UnitIntegrand& f, double tol, int budget, double clip) {
    const TsTables& tb = ts_tables();
    int evals = 0;
    double tail_bound = 0.0;

    auto eval_level = [&](int lvl) {
        ComplexAcc acc;
        for (const TsNode& nd : tb.level[lvl]) {
            if (nd.w == 0.0) continue;
            if (nd.omt <= clip || nd.t <= clip) {
                continue;
            }
            ComplexValue a = f(nd.t, nd.omt);
            ComplexValue b = f(nd.omt, nd.t);
            acc.add((a + b) * nd.w);
            evals += 2;
            double edge = std::max(std::abs(a), std::abs(b)) * nd.w;
            if (&nd == &tb.level[lvl].back()) tail_bound = std::max(tail_bound, edge);
        }
        return acc.get();
    };

    ComplexValue center = f(0.5, 0.5) * tb.center_w;
    ++evals;

    double h = 1.0;
    ComplexValue partial = center + eval_level(0);
    ComplexValue s_prev2(0.0), s_prev(0.0), s = h * partial;
    double err = std::abs(s);

    for (int lvl = 1; lvl <= kTsMaxLevel; ++lvl) {
        if (evals >= budget) break;
        h *= 0.5;
        partial += eval_level(lvl);
        s_prev2 = s_prev;
        s_prev = s;
        s = h * partial;
        double d1 = std::abs(s - s_prev);
        double d2 = std::abs(s_prev - s_prev2);
        if (lvl >= 2) {
            err = d1;
            if (d2 > 0.0 && d1 > 0.0) err = std::min(d1, d1 * d1 / d2);
            err = std::max(err, std::numeric_limits<double>::epsilon() * std::abs(s));
            err += h * tail_bound;
            if (err <= tol) return QuadResult{s, err, evals, true};
        }
    }
    if (err <= tol) return QuadResult{s, err, evals, true};
    throw NoConvergence("quadrature on (0,1) stalled at error " + std::to_string(err) +
                        " above tolerance " + std::to_string(tol));
}

}  // namespace

bool is_nonpositive_integer(ComplexValue z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    double r = std::round(z.real());
    return r <= 0.5 && std::abs(z.real() - r) <= tol;
}

ComplexValue log_gamma(ComplexValue z) {
    if (is_nonpositive_integer(z, 1e-13))
        throw PoleError("log_gamma evaluated at a nonpositive integer z = " +
                        std::to_string(z.real()));
    if (z.real() >= 0.5) return log_gamma_lanczos(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(kPi) - log_sin_pi(z) - log_gamma_lanczos(1.0 - z);
}

ComplexValue gamma_fn(ComplexValue z) { return std::exp(log_gamma(z)); }

ComplexValue recip_gamma(ComplexValue z) {
    if (is_nonpositive_integer(z, 1e-13)) return {0.0, 0.0};
    return std::exp(-log_gamma(z));
}

ComplexValue gamma_ratio(ComplexValue a, ComplexValue b) {
    return std::exp(log_gamma(a) - log_gamma(b));
}

ComplexValue beta(ComplexValue x, ComplexValue y) {
    if (is_nonpositive_integer(x, 1e-13) || is_nonpositive_integer(y, 1e-13) ||
        is_nonpositive_integer(x + y, 1e-13))
        throw PoleError("beta requires x, y and x+y away from nonpositive integers");
    return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

ComplexValue pochhammer(ComplexValue a, int n) {
    if (n < 0) throw DomainError("pochhammer requires n >= 0");
    ComplexValue p(1.0, 0.0);
    for (int k = 0; k < n; ++k) p *= a + static_cast<double>(k);
    return p;
}

QuadResult integrate_unit(const UnitIntegrand& f, double left_exponent, double right_exponent,
                          double tol, int budget) {
    if (!(left_exponent > -1.0) || !(right_exponent > -1.0))
        throw DomainError("integrate_unit requires endpoint exponents > -1");
    return ts_integrate(f, tol, budget, 0.0);
}

QuadResult integrate_halfline(const HalflineIntegrand& f, double tol, double scale, int budget) {
    if (!(scale > 0.0)) throw DomainError("integrate_halfline requires scale > 0");

    // decay probes over the tail region
    double prev = -1.0;
    int rising = 0;
    for (double m : {8.0, 32.0, 128.0, 512.0, 2048.0}) {
        double v = std::abs(f(scale * m));
        if (std::isinf(v))
            throw DivergenceSuspected("integrand grows without bound on the half line");
        if (prev >= 0.0 && v > prev * 1.0000001 && v > 0.0) ++rising;
        prev = v;
    }
    if (rising >= 4)
        throw DivergenceSuspected("integrand magnitude keeps growing along the half line");

    int half_budget = budget / 2;
    // head: x = scale * t
    QuadResult head = ts_integrate(
        [&](double t, double) { return f(scale * t) * scale; }, tol * 0.5, half_budget, 0.0);
    // tail: x = scale / t, dx = -scale/t^2 dt; clip keeps x within double range
    QuadResult tail = ts_integrate(
        [&](double t, double) { return f(scale / t) * scale / (t * t); }, tol * 0.5, half_budget,
        1e-40);

    QuadResult out;
    out.value = head.value + tail.value;
    out.abs_err = head.abs_err + tail.abs_err;
    out.evals = head.evals + tail.evals + 5;
    out.converged = head.converged && tail.converged;
    return out;
}

SeriesResult sum_series(const TermFn& term, double rel_tol, int max_terms) {
    if (!(rel_tol > 0.0)) throw DomainError("sum_series requires rel_tol > 0");
    ComplexAcc acc;
    int small_run = 0;
    for (int n = 0; n < max_terms; ++n) {
        ComplexValue t = term(n);
        acc.add(t);
        ComplexValue s = acc.get();
        if (std::abs(t) <= rel_tol * std::max(1.0, std::abs(s))) {
            if (++small_run >= 3) return SeriesResult{s, n + 1, true};
        } else {
            small_run = 0;
        }
    }
    throw NoConvergence("series did not settle within " + std::to_string(max_terms) + " terms");
}

}  // namespace exsf
