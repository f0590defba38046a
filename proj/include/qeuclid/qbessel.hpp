#pragma once

#include "qeuclid/qcore.hpp"

// First and second q-Bessel functions of Jackson, in the scaled form
// x^{-nu} J_nu^{(i)}(x|q^2) which is pole-free at the origin for every real
// order. J^{(2)} is entire; J^{(1)} uses its direct series inside the disc
// 0.95/(1-q) and the q-Gaussian continuation through J^{(2)} outside.
// Series coefficients use the reciprocal q-Gamma, so orders with
// i + nu + 1 <= 0 simply drop the offending terms.

namespace qeuclid {

// x^{-nu} J_nu^{(2)}(x|q^2); overflow saturates to +/-inf.
inline double besselJ2_scaled(const QContext& ctx, double nu, double x) {
    const double q = ctx.q(), q2 = ctx.q2();
    const auto& pol = ctx.policy();
    const double z2 = (x / (1.0 + q)) * (x / (1.0 + q));
    double s = 0.0;
    double term = detail::q_gamma_reciprocal_base(q2, nu + 1.0, pol);
    int small_run = 0;
    for (int i = 0; i < pol.max_terms; ++i) {
        s += term;
        if (std::abs(term) <= pol.rel_tol * std::max(1.0, std::abs(s)) && i > 3) {
            if (++small_run >= pol.consecutive_small) break;
        } else {
            small_run = 0;
        }
        if (std::abs(s) > 1e280 || std::abs(term) > 1e280)
            return s > 0 ? std::numeric_limits<double>::infinity()
                         : -std::numeric_limits<double>::infinity();
        // term_{i+1}/term_i = -q^{2(2i+1+nu)} z^2 / ([i+1]_{q^2} [i+nu+1]_{q^2})
        const double br = q_bracket_base(q2, i + nu + 1.0);
        if (br == 0.0) {
            // order hits a Gamma pole: restart the tail from the first live index
            term = detail::q_gamma_reciprocal_base(q2, i + nu + 2.0, pol) *
                   std::pow(q2, (i + 1.0) * (i + 1.0 + nu)) *
                   ((i + 1) % 2 ? -1.0 : 1.0) * std::pow(z2, i + 1.0) /
                   q_factorial_base(q2, i + 1);
            continue;
        }
        term *= -std::pow(q2, 2.0 * i + 1.0 + nu) * z2 / (q_bracket_base(q2, i + 1.0) * br);
    }
    return std::pow(q, nu * nu) * std::pow(1.0 + q, -nu) * s;
}

// x^{-nu} J_nu^{(1)}(x|q^2)
inline double besselJ1_scaled(const QContext& ctx, double nu, double x) {
    const double q = ctx.q(), q2 = ctx.q2();
    const auto& pol = ctx.policy();
    if (std::abs(x) < 0.95 / (1.0 - q)) {
        const double z2 = (x / (1.0 + q)) * (x / (1.0 + q));
        double s = 0.0;
        double term = detail::q_gamma_reciprocal_base(q2, nu + 1.0, pol);
        int small_run = 0;
        for (int i = 0; i < pol.max_terms; ++i) {
            s += term;
            if (std::abs(term) <= pol.rel_tol * std::max(1.0, std::abs(s)) && i > 3) {
                if (++small_run >= pol.consecutive_small) break;
            } else {
                small_run = 0;
            }
            const double br = q_bracket_base(q2, i + nu + 1.0);
            if (br == 0.0) {
                term = detail::q_gamma_reciprocal_base(q2, i + nu + 2.0, pol) *
                       ((i + 1) % 2 ? -1.0 : 1.0) * std::pow(z2, i + 1.0) /
                       q_factorial_base(q2, i + 1);
                continue;
            }
            term *= -z2 / (q_bracket_base(q2, i + 1.0) * br);
        }
        return std::pow(1.0 + q, -nu) * s;
    }
    // analytic continuation: J^{(1)} = q^{-nu^2} e_{q^2}(-(1-q)/(1+q) x^2) J^{(2)}
    const double gauss = exp_small_base(q2, -(1.0 - q) / (1.0 + q) * x * x, pol);
    return std::pow(q, -nu * nu) * gauss * besselJ2_scaled(ctx, nu, x);
}

// Unscaled values for x > 0.
inline double besselJ1(const QContext& ctx, double nu, double x) {
    return std::pow(x, nu) * besselJ1_scaled(ctx, nu, x);
}
inline double besselJ2(const QContext& ctx, double nu, double x) {
    return std::pow(x, nu) * besselJ2_scaled(ctx, nu, x);
}

}  // namespace qeuclid
