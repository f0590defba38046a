#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "qeuclid/qhankel.hpp"
#include "qeuclid/qpolys.hpp"

using namespace qeuclid;
using Catch::Approx;

namespace {
const QContext ctx(0.5, 3);

// evaluate the (qLag) sum with an arbitrary base parameter, including one > 1;
// oracle for the q <-> 1/q substitution statement
double laguerre_q2_generic(double qq, int j, double alpha, double u) {
    const double q2 = qq * qq;
    double s = 0.0;
    for (int i = 0; i <= j; ++i) {
        const int d = j - i;
        s += std::pow(q2, d * (d + 1) / 2.0) * std::pow(-u, i) /
             (q_factorial_base(q2, d) * q_factorial_base(q2, i)) *
             q_pochhammer_base(std::pow(q2, i + alpha + 1.0), q2, d) /
             std::pow(1.0 - q2, static_cast<double>(d));
    }
    return s;
}
}  // namespace

TEST_CASE("q-Hermite small degrees") {
    CHECK(hermite(ctx, 0, 0.7) == 1.0);
    for (double t : {-0.5, 0.2, 1.3})
        CHECK(hermite(ctx, 1, t) == Approx((1.0 + ctx.q()) * t).epsilon(1e-14));
    // k=2 at q=0.5, t=1: ((q+1)t)^2 - [2]_q! q^2 = 2.25 - 1.5*0.25
    CHECK(hermite(ctx, 2, 1.0) == Approx(1.875).epsilon(1e-14));
}

TEST_CASE("q-Laguerre values and domain") {
    CHECK(laguerre_q2(ctx, 0, 0.3, 1.7) == 1.0);
    CHECK(laguerre_q2inv(ctx, 0, 0.3, 1.7) == 1.0);
    CHECK_THROWS_AS(laguerre_q2(ctx, 1, -1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(laguerre_q2inv(ctx, 1, -1.5, 0.5), std::domain_error);
    // j=1: q^2 [alpha+1]_{q^2} - u
    const double alpha = 0.4, u = 0.9;
    CHECK(laguerre_q2(ctx, 1, alpha, u) ==
          Approx(ctx.q2() * q_bracket_base(ctx.q2(), alpha + 1.0) - u).epsilon(1e-14));
}

TEST_CASE("q-Laguerre substitution q -> 1/q") {
    for (int j : {1, 2, 3, 4}) {
        for (double alpha : {-0.5, 0.0, 1.5}) {
            for (double u : {0.3, 1.1}) {
                CHECK(laguerre_q2inv(ctx, j, alpha, u) ==
                      Approx(laguerre_q2_generic(1.0 / ctx.q(), j, alpha, u)).epsilon(1e-11));
            }
        }
    }
}

TEST_CASE("q-Laguerre coefficient extraction") {
    for (int j : {0, 1, 3}) {
        const double alpha = 0.7, scale = 0.45;
        const auto c = laguerre_q2_coeffs(ctx, j, alpha, scale);
        const auto ci = laguerre_q2inv_coeffs(ctx, j, alpha, scale);
        for (double u : {0.2, 0.8, 1.6}) {
            double s = 0.0, si = 0.0, up = 1.0;
            for (int i = 0; i <= j; ++i) {
                s += c[i] * up;
                si += ci[i] * up;
                up *= u;
            }
            CHECK(s == Approx(laguerre_q2(ctx, j, alpha, scale * u)).epsilon(1e-13));
            CHECK(si == Approx(laguerre_q2inv(ctx, j, alpha, scale * u)).epsilon(1e-13));
        }
    }
}

TEST_CASE("q-Gegenbauer values, parity, coefficients") {
    CHECK(gegenbauer(ctx, 0, 0.8, 0.4) == 1.0);
    // n=1: [lambda]_{q^2} (1+q) t
    const double lam = 0.8;
    for (double t : {-0.6, 0.3})
        CHECK(gegenbauer(ctx, 1, lam, t) ==
              Approx(q_bracket_base(ctx.q2(), lam) * (1.0 + ctx.q()) * t).epsilon(1e-13));
    for (int n = 0; n <= 6; ++n)
        for (double t : {0.2, 0.9})
            CHECK(gegenbauer(ctx, n, lam, -t) ==
                  Approx((n % 2 ? -1.0 : 1.0) * gegenbauer(ctx, n, lam, t)).margin(1e-12));
    // coefficients reproduce the rescaled polynomial
    for (int n : {0, 1, 4}) {
        const auto c = gegenbauer_coeffs(ctx, n, lam);
        if (n == 0) CHECK(c[0] == 1.0);
        if (n == 1)
            CHECK(c[0] == Approx(q_bracket_base(ctx.q2(), lam) * ctx.mu()).epsilon(1e-13));
        for (double t : {0.3, 0.7, 1.2}) {
            double s = 0.0;
            for (int j = 0; j <= n / 2; ++j) s += c[j] * std::pow(t, n - 2.0 * j);
            CHECK(s == Approx(gegenbauer(ctx, n, lam, ctx.mu() * t / (1.0 + ctx.q())))
                           .epsilon(1e-12));
        }
    }
}

TEST_CASE("finite Laguerre orthogonality (E-Gaussian weight)") {
    const double q = ctx.q(), q2 = ctx.q2();
    const double edge = 1.0 / std::sqrt(1.0 - q);
    // the diagonal entries shrink like q^{2(j+1)(j+alpha+1)}: exhaust the grid
    // rather than stopping at the context tolerance
    const SeriesPolicy deep{1e-300, 2000, 3};
    for (double alpha : {-0.5, 0.0, 1.5}) {
        std::vector<double> diag(6);
        for (int j = 0; j <= 5; ++j)
            diag[j] = std::pow(q2, (j + 1.0) * (j + alpha + 1.0)) *
                      q_gamma2(ctx, j + alpha + 1.0) * std::pow(1.0 + q, alpha) /
                      q_factorial_base(q2, j);
        const double scale = *std::max_element(diag.begin(), diag.end());
        for (int j = 0; j <= 5; ++j) {
            for (int k = j; k <= 5; ++k) {
                auto integrand = [&](double r) {
                    const double u = r * r / (1.0 + q);
                    return std::pow(r, 2.0 * alpha + 1.0) * laguerre_q2(ctx, j, alpha, u) *
                           laguerre_q2(ctx, k, alpha, u) * exp_big_base(q2, -u, ctx.policy());
                };
                const double got = jackson_finite(q, integrand, edge, deep);
                if (j == k)
                    CHECK(got == Approx(diag[j]).epsilon(1e-10));
                else
                    CHECK(std::abs(got) < 1e-10 * scale);
            }
        }
    }
}

TEST_CASE("infinite Laguerre orthogonality (e-Gaussian weight)") {
    const double q = ctx.q(), q2 = ctx.q2();
    const double gamma = 1.0;
    for (double alpha : {-0.5, 0.0, 1.5}) {
        const double dval = d_const(ctx, gamma / std::sqrt(1.0 + q), alpha);
        std::vector<double> diag(6);
        for (int j = 0; j <= 5; ++j)
            diag[j] = std::pow(q, -(j + alpha) * (j + alpha + 1.0)) *
                      q_gamma2(ctx, j + alpha + 1.0) * std::pow(1.0 + q, alpha) /
                      (q_factorial_base(q2, j) *
                       std::pow(q, (j + 1.0) * (j + 2.0 * alpha + 2.0))) *
                      dval;
        const double scale = *std::max_element(diag.begin(), diag.end());
        for (int j = 0; j <= 5; ++j) {
            for (int k = j; k <= 5; ++k) {
                auto integrand = [&](double t) {
                    const double u = q2 * t * t / (1.0 + q);
                    const double e = exp_small_base(q2, -u, ctx.policy());
                    if (e == 0.0) return 0.0;
                    return std::pow(t, 2.0 * alpha + 1.0) * laguerre_q2inv(ctx, j, alpha, u) *
                           laguerre_q2inv(ctx, k, alpha, u) * e;
                };
                JacksonSpec grid{gamma, {}, {}};
                const double got = jackson_infinite(q, integrand, grid, ctx.policy());
                if (j == k)
                    CHECK(got == Approx(diag[j]).epsilon(1e-10));
                else
                    CHECK(std::abs(got) < 1e-10 * scale);
            }
        }
    }
}

TEST_CASE("d-function invariance in alpha") {
    for (double alpha : {-0.3, 0.3, 1.0, 2.5}) {
        const double lam = 0.9;
        CHECK(d_const(ctx, lam, alpha + 1.0) == Approx(d_const(ctx, lam, alpha)).epsilon(1e-10));
    }
    CHECK(d_const(ctx, 1.0, 0.0) > 0.0);
    CHECK_THROWS_AS(d_const(ctx, 1.0, -1.2), std::domain_error);
    CHECK_THROWS_AS(d_const(ctx, -0.5, 0.3), std::domain_error);
}
