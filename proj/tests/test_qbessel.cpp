#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "qeuclid/qbessel.hpp"
#include "qeuclid/qpolys.hpp"

using namespace qeuclid;
using Catch::Approx;

namespace {
const QContext ctx(0.5, 3);

double qderiv(double base, auto&& f, double u) { return (f(base * u) - f(u)) / ((base - 1.0) * u); }

// brute-force series oracle for the scaled second Bessel function
double J2_oracle(double nu, double x, int terms) {
    const double q = ctx.q(), q2 = ctx.q2();
    double s = 0.0;
    for (int i = 0; i < terms; ++i) {
        s += std::pow(q2, i * (i + nu)) * ((i % 2) ? -1.0 : 1.0) /
             (q_factorial_base(q2, i) * q_gamma_base(q2, i + nu + 1.0)) *
             std::pow(x / (1.0 + q), 2.0 * i);
    }
    return std::pow(q, nu * nu) * std::pow(1.0 + q, -nu) * s;
}
}  // namespace

TEST_CASE("values at the origin") {
    const double q = ctx.q(), q2 = ctx.q2();
    for (double nu : {-0.5, 0.0, 0.5, 1.5}) {
        CHECK(besselJ2_scaled(ctx, nu, 0.0) ==
              Approx(std::pow(q, nu * nu) /
                     (std::pow(1.0 + q, nu) * q_gamma_base(q2, nu + 1.0)))
                  .epsilon(1e-13));
        CHECK(besselJ1_scaled(ctx, nu, 0.0) ==
              Approx(1.0 / (std::pow(1.0 + q, nu) * q_gamma_base(q2, nu + 1.0))).epsilon(1e-13));
    }
}

TEST_CASE("J2 against brute-force oracle") {
    for (double x : {0.4, 2.0, 7.0})
        CHECK(besselJ2_scaled(ctx, 0.5, x) == Approx(J2_oracle(0.5, x, 200)).epsilon(1e-12));
}

TEST_CASE("J1 branch overlap") {
    const double x = 0.9 / (1.0 - ctx.q());
    for (double nu : {0.0, 1.0}) {
        // direct series (inside the disc) against the q-Gaussian continuation
        const double direct = besselJ1_scaled(ctx, nu, x);
        const double cont = std::pow(ctx.q(), -nu * nu) *
                            exp_small_base(ctx.q2(), -(1.0 - ctx.q()) / (1.0 + ctx.q()) * x * x,
                                           ctx.policy()) *
                            besselJ2_scaled(ctx, nu, x);
        CHECK(direct == Approx(cont).epsilon(1e-10));
    }
}

TEST_CASE("first sign change of J1 at nu=0 exists below 4/(1-q)") {
    double lo = 0.0, hi = 4.0 / (1.0 - ctx.q());
    double flo = besselJ1_scaled(ctx, 0.0, lo);
    bool bracketed = false;
    double step = 0.25;
    for (double x = step; x <= hi; x += step) {
        if (flo * besselJ1_scaled(ctx, 0.0, x) < 0.0) {
            lo = x - step;
            hi = x;
            bracketed = true;
            break;
        }
    }
    REQUIRE(bracketed);
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (besselJ1_scaled(ctx, 0.0, lo) * besselJ1_scaled(ctx, 0.0, mid) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    CHECK(hi < 4.0 / (1.0 - ctx.q()));
    CHECK(std::abs(besselJ1_scaled(ctx, 0.0, 0.5 * (lo + hi))) < 1e-10);
}

TEST_CASE("recurrence lemmas for both kinds") {
    const double q = ctx.q();
    auto S1 = [&](double nu, double u) { return besselJ1_scaled(ctx, nu, u); };
    auto S2 = [&](double nu, double u) { return besselJ2_scaled(ctx, nu, u); };
    for (double nu : {-0.5, 0.0, 0.5, 1.5}) {
        for (double u : {0.3, 0.8, 1.4}) {
            // (i) d^q_u [u^-nu J1_nu] = -u u^-(nu+1) J1_{nu+1}
            CHECK(qderiv(q, [&](double s) { return S1(nu, s); }, u) ==
                  Approx(-u * S1(nu + 1.0, u)).margin(1e-10));
            // (i) d^{1/q}_u [u^-nu J2_nu(qu)] = -qu u^-(nu+1) J2_{nu+1}(qu)
            CHECK(qderiv(1.0 / q, [&](double s) { return std::pow(q, nu) * S2(nu, q * s); }, u) ==
                  Approx(-q * u * std::pow(q, nu + 1.0) * S2(nu + 1.0, q * u)).margin(1e-10));
            // (ii) u^2 S1(nu+1,u) + S1(nu-1,u) = [2nu]_q S1(nu, qu)
            CHECK(u * u * S1(nu + 1.0, u) + S1(nu - 1.0, u) ==
                  Approx(q_bracket_base(q, 2.0 * nu) * S1(nu, q * u)).margin(1e-10));
            // (ii) q^{nu+1} u^2 S2(nu+1,qu) + q^{nu-1} S2(nu-1,qu) = [2nu]_q q^-nu S2(nu,u)
            CHECK(std::pow(q, nu + 1.0) * u * u * S2(nu + 1.0, q * u) +
                      std::pow(q, nu - 1.0) * S2(nu - 1.0, q * u) ==
                  Approx(q_bracket_base(q, 2.0 * nu) * std::pow(q, -nu) * S2(nu, u))
                      .margin(1e-10));
            // (iii) d^q_u [u^{2nu} S1(nu,u)] = u^{2nu-1} S1(nu-1,u)
            CHECK(qderiv(q, [&](double s) { return std::pow(s, 2.0 * nu) * S1(nu, s); }, u) ==
                  Approx(std::pow(u, 2.0 * nu - 1.0) * S1(nu - 1.0, u)).margin(1e-10));
            // (iii) d^q_u [u^{2nu} S2(nu,u)] = q^{2nu-1} u^{2nu-1} S2(nu-1, qu)
            CHECK(qderiv(q, [&](double s) { return std::pow(s, 2.0 * nu) * S2(nu, s); }, u) ==
                  Approx(std::pow(q, 2.0 * nu - 1.0) * std::pow(u, 2.0 * nu - 1.0) *
                         S2(nu - 1.0, q * u))
                      .margin(1e-10));
            // corollary: d^q_u [u^{2nu} S2(nu-1,u)]
            //   = [2nu]_q u^{2nu-1} S2(nu-1,u) - q^{2nu+1} u^{2nu+1} S2(nu, qu)
            CHECK(qderiv(q, [&](double s) { return std::pow(s, 2.0 * nu) * S2(nu - 1.0, s); }, u) ==
                  Approx(q_bracket_base(q, 2.0 * nu) * std::pow(u, 2.0 * nu - 1.0) *
                             S2(nu - 1.0, u) -
                         std::pow(q, 2.0 * nu + 1.0) * std::pow(u, 2.0 * nu + 1.0) *
                             S2(nu, q * u))
                      .margin(1e-10));
        }
    }
}

TEST_CASE("Laguerre generating identities") {
    const double q = ctx.q(), q2 = ctx.q2();
    const auto& pol = ctx.policy();
    // J^(1)_a(rt|q^2) = (rt/(1+q))^a sum_j L_j^{(a)}(r^2/(1+q)|q^2)/Gamma(a+j+1)
    //                   t^{2j}/(1+q)^j e_{q^2}(-q^2 t^2/(1+q))
    const double a = 0.5, r = 0.8, t = 0.7;
    const int J = 25;
    double sum1 = 0.0;
    for (int j = 0; j < J; ++j)
        sum1 += laguerre_q2(ctx, j, a, r * r / (1.0 + q)) / q_gamma_base(q2, a + j + 1.0) *
                std::pow(t * t / (1.0 + q), static_cast<double>(j));
    sum1 *= std::pow(r * t / (1.0 + q), a) * exp_small_base(q2, -q2 * t * t / (1.0 + q), pol);
    const double lhs1 = besselJ1(ctx, a, r * t);
    const double tail1 = std::abs(laguerre_q2(ctx, J, a, r * r / (1.0 + q)) /
                                  q_gamma_base(q2, a + J + 1.0) *
                                  std::pow(t * t / (1.0 + q), static_cast<double>(J)));
    CHECK(std::abs(lhs1 - sum1) < std::max(tail1 * std::pow(r * t, a), 1e-12));

    // J^(2)_a(qrt|q^2) = (rt/(1+q))^a sum_j q^{(j+a)(j+1+a)} L_j^{(a)}(q^2t^2/(1+q)|q^-2)
    //                    /Gamma(a+j+1) r^{2j}/(1+q)^j E_{q^2}(-r^2/(1+q))
    double sum2 = 0.0;
    for (int j = 0; j < J; ++j)
        sum2 += std::pow(q, (j + a) * (j + 1.0 + a)) *
                laguerre_q2inv(ctx, j, a, q2 * t * t / (1.0 + q)) / q_gamma_base(q2, a + j + 1.0) *
                std::pow(r * r / (1.0 + q), static_cast<double>(j));
    sum2 *= std::pow(r * t / (1.0 + q), a) * exp_big_base(q2, -r * r / (1.0 + q), pol);
    const double lhs2 = besselJ2(ctx, a, q * r * t);
    CHECK(lhs2 == Approx(sum2).epsilon(1e-10));
}

TEST_CASE("e_q(iu) decomposition into half-order Bessel functions") {
    const double q = ctx.q(), q2 = ctx.q2();
    for (double u : {0.2, 0.5}) {
        const std::complex<double> lhs =
            exp_small_base(q, std::complex<double>(0.0, u), ctx.policy());
        const double g = q_gamma_base(q2, 0.5, ctx.policy());
        const double re = g * std::sqrt(u / (1.0 + q)) * std::pow(u, -0.5) *
                          besselJ1_scaled(ctx, -0.5, u);
        const double im = g * std::sqrt(u / (1.0 + q)) * std::pow(u, 0.5) *
                          besselJ1_scaled(ctx, 0.5, u);
        CHECK(lhs.real() == Approx(re).margin(1e-10));
        CHECK(lhs.imag() == Approx(im).margin(1e-10));
    }
}
