#pragma once

#include "qeuclid/fischer.hpp"
#include "qeuclid/qbessel.hpp"

// Quantum-sphere integration (Pizzetti formula), Gaussian-induced integration
// on the full space in radial form, Funk-Hecke coefficients and the
// reproducing-kernel identity for spherical harmonics.

namespace qeuclid {

// int_S 1 = 2 Gamma_{q^2}(1/2)^m / Gamma_{q^2}(m/2)
inline double unit_sphere_volume(const QContext& ctx) {
    return 2.0 * std::pow(q_gamma2(ctx, 0.5), ctx.m()) / q_gamma2(ctx, ctx.m() / 2.0);
}

struct SphereIntegralResult {
    double value = 0.0;
    double k0_mass = 0.0;  // sum of the k = 0 coefficients
    int nonzero_blocks_dropped = 0;
};

// Sphere integral of a polynomial-view element: blocks with k >= 1 integrate
// to zero; the k = 0 series sum a_l u^l contributes (sum_l a_l) int_S 1.
inline SphereIntegralResult sphere_integrate(const FischerElement& e) {
    detail::require_polynomial_view(e, "sphere_integrate");
    SphereIntegralResult res;
    for (const auto& [k, s] : e.blocks()) {
        if (k == 0) {
            if (s.phase % 2 != 0)
                throw std::domain_error("sphere_integrate: k=0 block carries an imaginary phase");
            double mass = 0.0;
            for (double c : s.coeffs) mass += c;
            if (s.phase == 2) mass = -mass;
            res.k0_mass = mass;
        } else {
            ++res.nonzero_blocks_dropped;
        }
    }
    res.value = res.k0_mass * unit_sphere_volume(e.ctx());
    return res;
}

// The same integral through the Pizzetti Delta-power sum
//   int_S R = sum_k 2 Gamma_{q^2}(1/2)^m / (mu^{2k} [k]_{q^2}! Gamma_{q^2}(k+m/2)) (Delta^k R)(0).
inline double sphere_integrate_pizzetti(const FischerElement& e) {
    detail::require_polynomial_view(e, "sphere_integrate_pizzetti");
    const QContext& ctx = e.ctx();
    const double q2 = ctx.q2(), mu = ctx.mu();
    const double g_half_m = std::pow(q_gamma2(ctx, 0.5), ctx.m());
    int max_deg = 0;
    for (const auto& [k, s] : e.blocks()) max_deg = std::max(max_deg, s.degree());
    double total = 0.0;
    FischerElement cur = e;
    for (int k = 0; k <= max_deg; ++k) {
        if (const RadialSeries* s0 = cur.block(0); s0 && !s0->coeffs.empty()) {
            double c0 = s0->coeffs[0];
            if (s0->phase % 2 != 0)
                throw std::domain_error("sphere_integrate_pizzetti: imaginary phase");
            if (s0->phase == 2) c0 = -c0;
            total += 2.0 * g_half_m /
                     (std::pow(mu, 2.0 * k) * q_factorial_base(q2, k) *
                      q_gamma2(ctx, k + ctx.m() / 2.0)) *
                     c0;
        }
        if (cur.empty()) break;
        cur = op_laplace(cur);
    }
    return total;
}

enum class SpaceMode { infinite, ball };

// int_{gamma.R_q^m} or int_{B(lambda)} of the element: every k >= 1 block has
// zero sphere factor; the k = 0 block contributes
//   (int_S 1) * jackson integral of r^{m-1} f(r^2).
// infinite mode requires e_small tags, ball mode e_big tags with
// lambda = sqrt(mu/((1-q^2) beta)).
inline double space_integrate(const FischerElement& e, SpaceMode mode, double gamma = 1.0) {
    const QContext& ctx = e.ctx();
    const double q = ctx.q(), q2 = ctx.q2(), mu = ctx.mu();
    const auto& pol = ctx.policy();
    double total = 0.0;
    for (const auto& [k, s] : e.blocks()) {
        if (k != 0) continue;  // sphere factor vanishes
        if (mode == SpaceMode::infinite && s.gauss.kind != GaussKind::e_small)
            throw std::domain_error("space_integrate: infinite mode requires an e_small tag");
        if (mode == SpaceMode::ball && s.gauss.kind != GaussKind::e_big)
            throw std::domain_error("space_integrate: ball mode requires an e_big tag");
        QContext c = ctx;
        RadialSeries rs = s;
        auto radial = [c, rs, m = ctx.m()](double r) {
            return std::pow(r, m - 1.0) * evaluate_radial(c, rs, r * r);
        };
        double I;
        if (mode == SpaceMode::infinite) {
            JacksonSpec grid;
            grid.gamma = gamma;
            I = jackson_infinite(q, radial, grid, pol);
        } else {
            const double lam = std::sqrt(mu / ((1.0 - q2) * s.gauss.scale));
            I = jackson_finite(q, radial, lam, pol);
        }
        total += unit_sphere_volume(ctx) * I;
    }
    return total;
}

// Funk-Hecke coefficients
//   alpha_{k,l} = 2 Gamma_{q^2}(1/2)^m [l]_q! /
//                 (mu^l [(l-k)/2]_{q^2}! Gamma_{q^2}((k+l+m)/2))
// for k+l even and l >= k; zero otherwise.
inline double funk_hecke_alpha(const QContext& ctx, int k, int l) {
    if (k < 0 || l < 0) throw std::invalid_argument("funk_hecke_alpha: k,l must be >= 0");
    if ((k + l) % 2 != 0 || l < k) return 0.0;
    const double q = ctx.q(), q2 = ctx.q2(), mu = ctx.mu();
    return 2.0 * std::pow(q_gamma2(ctx, 0.5), ctx.m()) * q_factorial_base(q, l) /
           (std::pow(mu, l) * q_factorial_base(q2, (l - k) / 2) *
            q_gamma2(ctx, (k + l + ctx.m()) / 2.0));
}

// C[l](alpha) = sum_j (-1)^j q^{j(j-1)} binom_{q^2}(l,j)
//               Gamma_{q^2}(alpha+l-j)/Gamma_{q^2}(alpha+1-j);
// vanishes for l > 0. The Gamma ratio is evaluated as the Pochhammer product
// prod_{i=1}^{l-1} [alpha+i-j]_{q^2}, which is defined for every real alpha.
inline double techgamma_sum(const QContext& ctx, int l, double alpha) {
    if (l < 0) throw std::invalid_argument("techgamma_sum: l must be >= 0");
    const double q = ctx.q(), q2 = ctx.q2();
    if (l == 0) {
        const double br = q_bracket_base(q2, alpha);
        if (br == 0.0)
            throw std::domain_error("techgamma_sum: Gamma ratio undefined at alpha = 0 for l = 0");
        return 1.0 / br;
    }
    double s = 0.0;
    for (int j = 0; j <= l; ++j) {
        const double binom = q_factorial_base(q2, l) /
                             (q_factorial_base(q2, j) * q_factorial_base(q2, l - j));
        double ratio = 1.0;
        for (int i = 1; i <= l - 1; ++i) ratio *= q_bracket_base(q2, alpha + i - j);
        s += ((j % 2) ? -1.0 : 1.0) * std::pow(q, j * (j - 1.0)) * binom * ratio;
    }
    return s;
}

// Residual of the reproducing-kernel identity
//   sum_j c_j^{n,m/2-1} alpha_{k,n-2j} - delta_{kn}/C_n,
// C_n = [m/2+n-1]_{q^2} Gamma_{q^2}(m/2-1) / (2 Gamma_{q^2}(1/2)^m).
// Gamma_{q^2}(m/2-1) is singular at m = 2; the identity is provided for m >= 3.
inline double reproducing_check(const QContext& ctx, int n, int k) {
    if (ctx.m() <= 2)
        throw std::domain_error("reproducing_check: requires m >= 3 (Gamma pole at m = 2)");
    if (n < 0 || k < 0) throw std::invalid_argument("reproducing_check: n,k must be >= 0");
    const double q2 = ctx.q2();
    const auto c = gegenbauer_coeffs(ctx, n, ctx.m() / 2.0 - 1.0);
    double s = 0.0;
    for (int j = 0; j <= n / 2; ++j) s += c[j] * funk_hecke_alpha(ctx, k, n - 2 * j);
    if (k == n) {
        const double Cn = q_bracket_base(q2, ctx.m() / 2.0 + n - 1.0) *
                          q_gamma2(ctx, ctx.m() / 2.0 - 1.0) /
                          (2.0 * std::pow(q_gamma2(ctx, 0.5), ctx.m()));
        s -= 1.0 / Cn;
    }
    return s;
}

}  // namespace qeuclid
