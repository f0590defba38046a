#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <span>
#include <vector>

#include "qeuclid/context.hpp"

// Scalar q-calculus: brackets, factorials, Pochhammer symbols, the q-Gamma
// function, the two q-exponentials and Jackson integration. Functions in this
// header are parameterized by an explicit base b in (0,1); callers working at
// base q^2 pass ctx.q2(). The QContext overloads below implement the module
// contract at base q (exponentials, derivative, integrals) or base q^2 (Gamma).

namespace qeuclid {

// [u]_b = (b^u - 1)/(b - 1)
inline double q_bracket_base(double b, double u) {
    if (u == 0.0) return 0.0;
    return (std::pow(b, u) - 1.0) / (b - 1.0);
}

inline double q_factorial_base(double b, int k) {
    double r = 1.0;
    for (int i = 2; i <= k; ++i) r *= q_bracket_base(b, i);
    return r;
}

// (a;b)_k
inline double q_pochhammer_base(double a, double b, int k) {
    if (k < 0) throw std::invalid_argument("q_pochhammer: k must be >= 0");
    double r = 1.0;
    double f = a;
    for (int i = 0; i < k; ++i) {
        r *= (1.0 - f);
        f *= b;
    }
    return r;
}

// (a;b)_inf, truncated once factors are within rel_tol of 1
inline double q_pochhammer_inf_base(double a, double b, const SeriesPolicy& pol = {}) {
    double r = 1.0;
    double f = a;
    for (int i = 0; i < pol.max_terms; ++i) {
        r *= (1.0 - f);
        if (std::abs(f) < pol.rel_tol) return r;
        f *= b;
    }
    throw truncation_error("q_pochhammer_inf: factors did not settle within max_terms");
}

namespace detail {

// 1/Gamma_b(t), entire in t (zero at t = 0, -1, -2, ...). Used where series
// coefficients run through nonpositive Gamma arguments (Bessel orders < 0).
inline double q_gamma_reciprocal_base(double b, double t, const SeriesPolicy& pol = {}) {
    // 1/Gamma_b(t) = (b^t;b)_inf / (b;b)_inf * (1-b)^(t-1)
    double num = 1.0, den = 1.0;
    double ft = std::pow(b, t), fb = b;
    for (int i = 0; i < pol.max_terms; ++i) {
        num *= (1.0 - ft);
        den *= (1.0 - fb);
        if (std::abs(ft) < pol.rel_tol && std::abs(fb) < pol.rel_tol) break;
        ft *= b;
        fb *= b;
    }
    return num / den * std::pow(1.0 - b, t - 1.0);
}

}  // namespace detail

// Gamma_b(t) for t > 0 via the infinite product. Satisfies
// Gamma_b(t+1) = [t]_b Gamma_b(t), Gamma_b(1) = 1.
inline double q_gamma_base(double b, double t, const SeriesPolicy& pol = {}) {
    if (!(t > 0.0)) throw std::domain_error("q_gamma: argument must be > 0");
    return 1.0 / detail::q_gamma_reciprocal_base(b, t, pol);
}

// E_b(t): entire. For t >= 0 the series has positive terms; for t < 0 the
// product (-(1-b)t; b)_inf is used instead, with lattice zeros
// t = -b^{-k}/(1-b) snapped to an exact 0 so that Jackson sums against the
// E-Gaussian weight terminate where the function vanishes.
inline double exp_big_base(double b, double t, const SeriesPolicy& pol = {}) {
    if (t < 0.0) {
        double r = 1.0;
        double f = -(1.0 - b) * t;  // u b^j
        for (int i = 0; i < pol.max_terms + 400; ++i) {
            double factor = 1.0 - f;
            if (std::abs(factor) < 1e-13 * std::max(1.0, f)) return 0.0;
            r *= factor;
            if (f < pol.rel_tol) return r;
            f *= b;
        }
        return r;
    }
    double s = 1.0, term = 1.0, bp = 1.0;  // bp = b^(j-1)
    int small_run = 0;
    for (int j = 1; j < pol.max_terms + 400; ++j) {
        term *= bp * t / q_bracket_base(b, j);
        bp *= b;
        s += term;
        if (std::abs(s) > 1e280) return std::numeric_limits<double>::infinity();
        if (std::abs(term) <= pol.rel_tol * std::max(1.0, std::abs(s))) {
            if (++small_run >= pol.consecutive_small) return s;
        } else {
            small_run = 0;
        }
    }
    return s;
}

// e_b(t): series inside 0.95/(1-b), continued as 1/E_b(-t) outside; poles at
// t = b^{-k}/(1-b).
inline double exp_small_base(double b, double t, const SeriesPolicy& pol = {}) {
    const double disc = 0.95 / (1.0 - b);
    if (std::abs(t) < disc) {
        double s = 1.0, term = 1.0;
        int small_run = 0;
        for (int j = 1; j < pol.max_terms; ++j) {
            term *= t / q_bracket_base(b, j);
            s += term;
            if (std::abs(term) <= pol.rel_tol * std::max(1.0, std::abs(s))) {
                if (++small_run >= pol.consecutive_small) return s;
            } else {
                small_run = 0;
            }
        }
        throw truncation_error("exp_small: series did not converge within max_terms");
    }
    if (t > 0.0) {
        const double y = (1.0 - b) * t;
        const double kstar = std::round(std::log(y) / std::log(1.0 / b));
        if (kstar >= 0.0 && std::abs(y * std::pow(b, kstar) - 1.0) < 1e-12)
            throw std::domain_error("exp_small: argument at a pole b^{-k}/(1-b)");
    }
    const double E = exp_big_base(b, -t, pol);
    if (E == 0.0 || std::abs(E) < 1e-300)
        throw std::domain_error("exp_small: argument at or near a pole b^{-k}/(1-b)");
    return 1.0 / E;
}

inline std::complex<double> exp_big_base(double b, std::complex<double> t, const SeriesPolicy& pol = {}) {
    std::complex<double> s = 1.0, term = 1.0;
    double bp = 1.0;
    int small_run = 0;
    for (int j = 1; j < pol.max_terms + 400; ++j) {
        term *= bp * t / q_bracket_base(b, j);
        bp *= b;
        s += term;
        if (std::abs(s) > 1e280) return s;
        if (std::abs(term) <= pol.rel_tol * std::max(1.0, std::abs(s))) {
            if (++small_run >= pol.consecutive_small) return s;
        } else {
            small_run = 0;
        }
    }
    return s;
}

inline std::complex<double> exp_small_base(double b, std::complex<double> t, const SeriesPolicy& pol = {}) {
    const double disc = 0.95 / (1.0 - b);
    if (std::abs(t) < disc) {
        std::complex<double> s = 1.0, term = 1.0;
        int small_run = 0;
        for (int j = 1; j < pol.max_terms; ++j) {
            term *= t / q_bracket_base(b, j);
            s += term;
            if (std::abs(term) <= pol.rel_tol * std::max(1.0, std::abs(s))) {
                if (++small_run >= pol.consecutive_small) return s;
            } else {
                small_run = 0;
            }
        }
        throw truncation_error("exp_small: series did not converge within max_terms");
    }
    const std::complex<double> E = exp_big_base(b, -t, pol);
    if (std::abs(E) < 1e-300)
        throw std::domain_error("exp_small: argument at or near a pole");
    return 1.0 / E;
}

// (f(b t) - f(t)) / ((b - 1) t)
template <class F>
double q_derivative_base(double b, F&& f, double t) {
    if (t == 0.0)
        throw std::domain_error("q_derivative: undefined at t = 0 without series data");
    return (f(b * t) - f(t)) / ((b - 1.0) * t);
}

// d/dt at 0 of a power series sum a_l t^l is a_1; the only t = 0 case supported.
inline double q_derivative_at_zero(std::span<const double> series_coeffs) {
    return series_coeffs.size() > 1 ? series_coeffs[1] : 0.0;
}

struct QuadratureResult {
    double value = 0.0;
    double tail = 0.0;  // magnitude of the last shell examined
    int terms = 0;
    bool converged = true;
};

// (1-b) a sum_{k>=0} f(b^k a) b^k
template <class F>
QuadratureResult jackson_finite_info(double b, F&& f, double a, const SeriesPolicy& pol = {}) {
    QuadratureResult res;
    double s = 0.0;
    double w = 1.0;  // b^k
    int small_run = 0;
    for (int k = 0; k < pol.max_terms; ++k) {
        const double term = w * f(w * a);
        s += term;
        ++res.terms;
        res.tail = std::abs(term);
        if (!std::isfinite(term)) {
            res.converged = false;
            break;
        }
        if (std::abs(term) <= pol.rel_tol * std::max(1.0, std::abs(s))) {
            if (++small_run >= pol.consecutive_small && k >= 8) {
                res.value = (1.0 - b) * a * s;
                return res;
            }
        } else {
            small_run = 0;
        }
        w *= b;
    }
    res.value = (1.0 - b) * a * s;
    res.converged = false;
    return res;
}

template <class F>
double jackson_finite(double b, F&& f, double a, const SeriesPolicy& pol = {}) {
    auto r = jackson_finite_info(b, f, a, pol);
    if (!r.converged)
        throw truncation_error("jackson_finite: partial sums not converged after max_terms");
    return r.value;
}

// (1-b) gamma sum_k f(b^k gamma) b^k over k_lo..k_hi. The fine side (k large)
// defaults to ceil(log(rel_tol)/log(b)); the coarse side is extended shell by
// shell until `consecutive_small` shells in a row are negligible. A tail that
// never decays marks the result as not converged (cf. the divergence of the
// infinite integral for non-Gaussian decay).
template <class F>
QuadratureResult jackson_infinite_info(double b, F&& f, const JacksonSpec& spec,
                                       const SeriesPolicy& pol = {}) {
    spec.validate();
    QuadratureResult res;
    const int k_hi = spec.k_hi ? *spec.k_hi
                               : static_cast<int>(std::ceil(std::log(pol.rel_tol) / std::log(b)));
    const int k_floor = spec.k_lo ? *spec.k_lo : k_hi - 700;

    double s = 0.0;
    // fine side: k = k_hi down to 1, smallest terms first
    double w = std::pow(b, k_hi);
    for (int k = k_hi; k >= 1; --k) {
        s += w * f(w * spec.gamma);
        ++res.terms;
        w /= b;
    }
    // coarse side: k = 0 downward, adaptive unless k_lo was pinned
    int small_run = 0;
    double last = 0.0;
    for (int k = 0; k >= k_floor; --k) {
        if (!std::isfinite(w)) {
            res.value = (1.0 - b) * spec.gamma * s;
            res.tail = last;
            res.converged = false;
            return res;
        }
        const double term = w * f(w * spec.gamma);
        ++res.terms;
        last = std::abs(term);
        if (!std::isfinite(term)) {
            res.value = (1.0 - b) * spec.gamma * s;
            res.tail = last;
            res.converged = false;
            return res;
        }
        s += term;
        if (last <= pol.rel_tol * std::max(1.0, std::abs(s))) {
            if (++small_run >= pol.consecutive_small && !spec.k_lo) {
                res.value = (1.0 - b) * spec.gamma * s;
                res.tail = last;
                return res;
            }
        } else {
            small_run = 0;
        }
        w /= b;
    }
    res.value = (1.0 - b) * spec.gamma * s;
    res.tail = last;
    res.converged = spec.k_lo ? (small_run >= 1 || last <= pol.rel_tol * std::max(1.0, std::abs(s)))
                              : false;
    return res;
}

template <class F>
double jackson_infinite(double b, F&& f, const JacksonSpec& spec, const SeriesPolicy& pol = {}) {
    auto r = jackson_infinite_info(b, f, spec, pol);
    if (!r.converged)
        throw divergence_error("jackson_infinite: integrand not decayed at the coarse end");
    return r.value;
}

// ---- QContext-level API (module contract) ----

inline double q_bracket(const QContext& ctx, double u) { return q_bracket_base(ctx.q(), u); }

// Gamma_{q^2}
inline double q_gamma2(const QContext& ctx, double t) {
    return q_gamma_base(ctx.q2(), t, ctx.policy());
}

inline double q_pochhammer(const QContext& ctx, double u, int k) {
    return q_pochhammer_base(u, ctx.q(), k);
}

inline double q_pochhammer_inf(const QContext& ctx, double u) {
    return q_pochhammer_inf_base(u, ctx.q(), ctx.policy());
}

inline double exp_small(const QContext& ctx, double t) { return exp_small_base(ctx.q(), t, ctx.policy()); }
inline double exp_big(const QContext& ctx, double t) { return exp_big_base(ctx.q(), t, ctx.policy()); }

template <class F>
double q_derivative(const QContext& ctx, F&& f, double t) {
    return q_derivative_base(ctx.q(), std::forward<F>(f), t);
}

template <class F>
double q_integrate_finite(const QContext& ctx, F&& f, double a) {
    if (!(a > 0.0)) throw std::domain_error("q_integrate_finite: a must be > 0");
    return jackson_finite(ctx.q(), std::forward<F>(f), a, ctx.policy());
}

template <class F>
QuadratureResult q_integrate_infinite(const QContext& ctx, F&& f, const JacksonSpec& spec) {
    return jackson_infinite_info(ctx.q(), std::forward<F>(f), spec, ctx.policy());
}

}  // namespace qeuclid
