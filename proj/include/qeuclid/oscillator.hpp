#pragma once

#include "qeuclid/fischer.hpp"

// Harmonic-oscillator eigenstructure at Fischer-block level. The ground states
//
//   psi_0    = e_{q^2}(-x^2/(q^{m/2} mu))        (e_small, alpha_0 = q^{-m/2-2})
//   psibar_0 = E_{q^2}(-q^{m/2+2} x^2 / mu)      (e_big,   beta_0  = q^{m/2+2})
//
// generate towers of radial eigenfunctions: for harmonic degree k and Laguerre
// index j (total degree n = k+2j) the radial representative is a degree-j
// polynomial in u times the Gaussian of rate q^{-(n+m/2)}/mu (unbarred) or
// q^{n+m/2+2}/mu (barred). The polynomial is produced by a triangular solve of
// the eigenvalue equation, using the fact that the q^2-derivative preserves
// e-Gaussians of a fixed rate (and the q^{-2}-derivative E-Gaussians):
//
//   Delta(phi(u) e(-cu) S_k) = mu^2 ([a]_B D + B^a u D^2) phi . e(-cu) S_k,
//   (D phi)(u) = del_u^B phi - c phi(B u),   a = k + m/2,  B = q^{+-2}.
//
// The Fourier transform F^{+-} maps the unbarred tower onto the barred one:
//   q^{-m^2/4} F^{+-}[U_{k,j}] = (+-i)^{k+2j} Ubar_{k,j}
// once the leading coefficients are fixed to 1 (unbarred) and
// q^{k(k+m)+j(2k+2j+m+2)} (barred).

namespace qeuclid {

// eigenvalue E_n = (mu/2) [n+m/2]_{q^2} q^{-(n+m/2)}
inline double oscillator_energy(const QContext& ctx, int n) {
    const double w = n + ctx.m() / 2.0;
    return 0.5 * ctx.mu() * q_bracket_base(ctx.q2(), w) * std::pow(ctx.q(), -w);
}

// inverts the energy law: arcsinh((1-q^2) E / mu) / ln(1/q) - m/2
inline double oscillator_level_from_energy(const QContext& ctx, double energy) {
    const double s = (1.0 - ctx.q2()) / ctx.mu() * energy;
    return std::asinh(s) / std::log(1.0 / ctx.q()) - ctx.m() / 2.0;
}

inline FischerElement ground_state(const QContext& ctx, bool barred) {
    FischerElement e(ctx);
    RadialSeries s;
    s.coeffs = {1.0};
    s.gauss = barred ? GaussTag{GaussKind::e_big, std::pow(ctx.q(), ctx.m() / 2.0 + 2.0)}
                     : GaussTag{GaussKind::e_small, std::pow(ctx.q(), -ctx.m() / 2.0 - 2.0)};
    e.set_block(0, std::move(s));
    return e;
}

namespace detail {

// (D phi)(u) = del^B phi(u) - c phi(B u) on polynomial coefficients
inline std::vector<double> gauss_deriv_op(const std::vector<double>& phi, double c, double B) {
    std::vector<double> out(phi.size(), 0.0);
    for (std::size_t i = 0; i + 1 < phi.size(); ++i)
        out[i] = q_bracket_base(B, static_cast<double>(i + 1)) * phi[i + 1];
    double Bp = 1.0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        out[i] -= c * Bp * phi[i];
        Bp *= B;
    }
    return out;
}

// coefficients of (h - E_n) [phi e(-cu)] / e(-cu), a polynomial of degree j+1
inline std::vector<double> eigen_residual_poly(const QContext& ctx, const std::vector<double>& phi,
                                               double c, double B, double pref, double a,
                                               double energy) {
    const std::vector<double> d1 = gauss_deriv_op(phi, c, B);
    const std::vector<double> d2 = gauss_deriv_op(d1, c, B);
    const double bra = q_bracket_base(B, a);
    const double Ba = std::pow(B, a);
    std::vector<double> r(phi.size() + 1, 0.0);
    for (std::size_t i = 0; i < phi.size(); ++i) {
        r[i] += -0.5 * pref * bra * d1[i];       // -(pref/2) [a]_B D phi
        r[i + 1] += -0.5 * pref * Ba * d2[i];    // -(pref/2) B^a u D^2 phi
        r[i + 1] += 0.5 * phi[i];                // (1/2) u phi
        r[i] -= energy * phi[i];
    }
    return r;
}

}  // namespace detail

// The Laguerre-block eigenfunction representative of level n = k+2j.
inline FischerElement eigen_block(const QContext& ctx, int k, int j, bool barred) {
    if (k < 0 || j < 0) throw std::invalid_argument("eigen_block: k,j must be >= 0");
    const int n = k + 2 * j;
    const double q = ctx.q(), q2 = ctx.q2(), mu = ctx.mu();
    const double a = k + ctx.m() / 2.0;
    const double energy = oscillator_energy(ctx, n);

    const double B = barred ? 1.0 / q2 : q2;
    const double mubar = 1.0 + std::pow(q, ctx.m() - 2.0);
    const double pref = barred ? std::pow(q, -2.0 * ctx.m()) * mubar * mubar : mu * mu;
    const double rate = barred ? std::pow(q, n + ctx.m() / 2.0 + 2.0) / mu
                               : std::pow(q, -(n + ctx.m() / 2.0)) / mu;

    std::vector<double> phi(j + 1, 0.0);
    phi[j] = barred ? std::pow(q, k * (k + ctx.m()) + j * (2.0 * k + 2.0 * j + ctx.m() + 2.0)) : 1.0;
    for (int d = j; d >= 1; --d) {
        // the residual at degree d is affine in phi[d-1]
        auto r0 = detail::eigen_residual_poly(ctx, phi, rate, B, pref, a, energy);
        phi[d - 1] = 1.0;
        auto r1 = detail::eigen_residual_poly(ctx, phi, rate, B, pref, a, energy);
        phi[d - 1] = -r0[d] / (r1[d] - r0[d]);
    }

    FischerElement e(ctx);
    RadialSeries s;
    s.coeffs = std::move(phi);
    s.gauss = barred ? GaussTag{GaussKind::e_big, rate * mu}
                     : GaussTag{GaussKind::e_small, rate * mu / q2};
    e.set_block(k, std::move(s));
    return e;
}

struct EigencheckResult {
    double radial_residual = 0.0;  // max coefficient residual, relative to the block scale
    bool phase_ok = false;
    bool tag_ok = false;
};

// residual of  q^{-m^2/4} F^{sign}[eigen_block(k,j,unbarred)]
//              = (sign i)^{k+2j} eigen_block(k,j,barred)
inline EigencheckResult fourier_eigencheck(const QContext& ctx, int k, int j, int sign,
                                           double gamma = 1.0) {
    const FischerElement lhs_e = fourier_inverse(eigen_block(ctx, k, j, false), sign, gamma);
    const FischerElement rhs_e = eigen_block(ctx, k, j, true);
    const double norm = std::pow(ctx.q(), -ctx.m() * ctx.m() / 4.0);

    const RadialSeries* ls = lhs_e.block(k);  // phase canonicalized to {0,1} by trim()
    const RadialSeries* rs = rhs_e.block(k);
    EigencheckResult res;
    if (!ls || !rs) return res;

    // target block (sign i)^{k+2j} x barred, with the real part of the phase folded
    const int n = k + 2 * j;
    int target_phase = ((sign * n) % 4 + 4) % 4;
    double fold = 1.0;
    if (target_phase >= 2) {
        fold = -1.0;
        target_phase -= 2;
    }
    res.phase_ok = (ls->phase == target_phase);
    res.tag_ok = ls->gauss == rs->gauss;

    double scale = 0.0;
    for (double c : rs->coeffs) scale = std::max(scale, std::abs(c));
    double worst = 0.0;
    const std::size_t nmax = std::max(ls->coeffs.size(), rs->coeffs.size());
    for (std::size_t i = 0; i < nmax; ++i) {
        const double lc = i < ls->coeffs.size() ? norm * ls->coeffs[i] : 0.0;
        const double rc = i < rs->coeffs.size() ? fold * rs->coeffs[i] : 0.0;
        worst = std::max(worst, std::abs(lc - rc));
    }
    res.radial_residual = worst / scale;
    return res;
}

}  // namespace qeuclid
