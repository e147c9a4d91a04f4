#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "exsf/numkernel.hpp"

using exsf::ComplexValue;

namespace {

double rel_err(ComplexValue got, ComplexValue want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace

TEST_CASE("log_gamma at classic points") {
    CHECK(rel_err(exsf::log_gamma(1.0), 0.0) < 1e-14);
    CHECK(rel_err(exsf::log_gamma(0.5), std::log(std::sqrt(kPi))) < 1e-14);
    CHECK(rel_err(exsf::log_gamma(5.0), std::log(24.0)) < 1e-14);
    CHECK(rel_err(exsf::gamma_fn(-0.5), -2.0 * std::sqrt(kPi)) < 1e-13);
    CHECK(rel_err(exsf::gamma_fn(-1.5), 4.0 * std::sqrt(kPi) / 3.0) < 1e-13);
}

TEST_CASE("log_gamma matches std::lgamma on the real axis") {
    for (double z = 0.5; z <= 100.0; z += 0.5) {
        double want = std::lgamma(z);
        CHECK(rel_err(exsf::log_gamma(z), want) < 1e-13);
    }
}

TEST_CASE("gamma modulus identities on the imaginary axis") {
    // |Gamma(iy)|^2 = pi / (y sinh(pi y)), |Gamma(1/2 + iy)|^2 = pi / cosh(pi y)
    for (double y : {0.25, 1.0, 3.0, 10.0}) {
        double m1 = std::abs(exsf::gamma_fn(ComplexValue(0.0, y)));
        CHECK(std::abs(m1 * m1 - kPi / (y * std::sinh(kPi * y))) <
              1e-13 * (1.0 + m1 * m1) * 10.0);
        double m2 = std::abs(exsf::gamma_fn(ComplexValue(0.5, y)));
        CHECK(std::abs(m2 * m2 - kPi / std::cosh(kPi * y)) < 1e-13);
    }
}

TEST_CASE("gamma recurrence over a random strip") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> re(0.1, 50.0), im(-20.0, 20.0);
    for (int i = 0; i < 1000; ++i) {
        ComplexValue z(re(rng), im(rng));
        ComplexValue ratio = std::exp(exsf::log_gamma(z + 1.0) - exsf::log_gamma(z));
        CHECK(std::abs(ratio - z) / std::abs(z) < 1e-12);
    }
}

TEST_CASE("legendre duplication over a random strip") {
    std::mt19937 rng(911);
    std::uniform_real_distribution<double> re(0.1, 50.0), im(-20.0, 20.0);
    double ln2 = std::log(2.0), lnpi = std::log(kPi);
    for (int i = 0; i < 1000; ++i) {
        ComplexValue z(re(rng), im(rng));
        ComplexValue lhs = exsf::log_gamma(2.0 * z);
        ComplexValue rhs = (2.0 * z - 1.0) * ln2 - 0.5 * lnpi + exsf::log_gamma(z) +
                           exsf::log_gamma(z + 0.5);
        CHECK(std::abs(std::exp(lhs - rhs) - 1.0) < 1e-11);
    }
}

TEST_CASE("log_gamma pole handling") {
    CHECK_THROWS_AS(exsf::log_gamma(0.0), exsf::PoleError);
    CHECK_THROWS_AS(exsf::log_gamma(-3.0), exsf::PoleError);
    CHECK(std::abs(exsf::recip_gamma(-7.0)) == 0.0);
}

TEST_CASE("beta values and poles") {
    CHECK(rel_err(exsf::beta(2.0, 3.0), 1.0 / 12.0) < 1e-14);
    CHECK(rel_err(exsf::beta(0.5, 0.5), kPi) < 1e-14);
    ComplexValue b = exsf::beta(ComplexValue(1.5, 0.5), ComplexValue(2.0, -0.25));
    ComplexValue direct = exsf::gamma_fn(ComplexValue(1.5, 0.5)) *
                          exsf::gamma_fn(ComplexValue(2.0, -0.25)) /
                          exsf::gamma_fn(ComplexValue(3.5, 0.25));
    CHECK(rel_err(b, direct) < 1e-13);
    CHECK_THROWS_AS(exsf::beta(-1.0, 0.5), exsf::PoleError);
}

TEST_CASE("pochhammer basics") {
    CHECK(rel_err(exsf::pochhammer(3.0, 0), 1.0) < 1e-15);
    CHECK(rel_err(exsf::pochhammer(3.0, 4), 360.0) < 1e-14);
    CHECK(std::abs(exsf::pochhammer(-2.0, 5)) == 0.0);
    ComplexValue p40 = exsf::pochhammer(0.5, 40);
    ComplexValue p41 = exsf::pochhammer(0.5, 41);
    CHECK(rel_err(p41 / p40, 40.5) < 1e-12);
    CHECK(rel_err(p40, exsf::gamma_ratio(40.5, 0.5)) < 1e-12);
    CHECK_THROWS_AS(exsf::pochhammer(1.0, -1), exsf::DomainError);
}

TEST_CASE("integrate_unit on smooth and endpoint-singular integrands") {
    auto r1 = exsf::integrate_unit([](double t, double) { return ComplexValue(t * t, 0.0); },
                                   0.0, 0.0, 1e-12);
    CHECK(rel_err(r1.value, 1.0 / 3.0) < 1e-12);
    CHECK(r1.converged);

    auto r2 = exsf::integrate_unit(
        [](double t, double omt) {
            return ComplexValue(1.0 / std::sqrt(t * omt), 0.0);
        },
        -0.5, -0.5, 1e-12);
    CHECK(rel_err(r2.value, kPi) < 1e-11);

    auto r3 = exsf::integrate_unit(
        [](double t, double omt) {
            return ComplexValue(std::pow(t, 1.5) * std::pow(omt, 2.5), 0.0);
        },
        1.5, 2.5, 1e-13);
    CHECK(rel_err(r3.value, exsf::beta(2.5, 3.5)) < 1e-12);

    CHECK_THROWS_AS(exsf::integrate_unit([](double, double) { return ComplexValue(1.0); },
                                         -1.0, 0.0, 1e-10),
                    exsf::DomainError);
}

TEST_CASE("integrate_unit reproduces beta for random complex exponents") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> re(0.08, 5.0), im(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        ComplexValue x(re(rng), im(rng)), y(re(rng), im(rng));
        auto q = exsf::integrate_unit(
            [&](double t, double omt) {
                return std::exp((x - 1.0) * std::log(t) + (y - 1.0) * std::log(omt));
            },
            x.real() - 1.0, y.real() - 1.0, 1e-12);
        CHECK(std::abs(q.value - exsf::beta(x, y)) / std::abs(exsf::beta(x, y)) < 1e-8);
    }
}

TEST_CASE("integrate_halfline on decaying integrands") {
    auto r1 = exsf::integrate_halfline(
        [](double x) { return ComplexValue(std::exp(-x), 0.0); }, 1e-12);
    CHECK(rel_err(r1.value, 1.0) < 1e-11);

    auto r2 = exsf::integrate_halfline(
        [](double x) { return ComplexValue(std::exp(-x * x), 0.0); }, 1e-12);
    CHECK(rel_err(r2.value, 0.5 * std::sqrt(kPi)) < 1e-11);

    auto r3 = exsf::integrate_halfline(
        [](double x) { return ComplexValue(std::exp(-x) / std::sqrt(x), 0.0); }, 1e-12);
    CHECK(rel_err(r3.value, std::sqrt(kPi)) < 1e-10);

    auto r4 = exsf::integrate_halfline(
        [](double x) { return ComplexValue(1.0 / ((1.0 + x) * (1.0 + x)), 0.0); }, 1e-12);
    CHECK(rel_err(r4.value, 1.0) < 1e-10);
}

TEST_CASE("integrate_halfline flags divergence") {
    CHECK_THROWS_AS(exsf::integrate_halfline(
                        [](double x) { return ComplexValue(std::exp(0.1 * x), 0.0); }, 1e-10),
                    exsf::DivergenceSuspected);
}

TEST_CASE("sum_series basics") {
    auto e = exsf::sum_series([](int n) {
        double t = 1.0;
        for (int k = 1; k <= n; ++k) t /= k;
        return ComplexValue(t, 0.0);
    });
    CHECK(rel_err(e.value, std::exp(1.0)) < 1e-12);
    CHECK(e.converged);
    CHECK_THROWS_AS(exsf::sum_series([](int) { return ComplexValue(1.0, 0.0); }, 1e-12, 500),
                    exsf::NoConvergence);
}

TEST_CASE("sum_series geometric identity for random ratios") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> mag(0.0, 0.9), arg(0.0, 2.0 * kPi);
    for (int i = 0; i < 50; ++i) {
        ComplexValue z = std::polar(mag(rng), arg(rng));
        auto s = exsf::sum_series([&](int n) { return std::pow(z, n); }, 1e-14, 20000);
        CHECK(std::abs(s.value - 1.0 / (1.0 - z)) < 1e-12 * std::abs(1.0 / (1.0 - z)) + 1e-12);
    }
}
