#pragma once

#include <vector>

#include "qeuclid/qcore.hpp"

// The q-orthogonal polynomial families: q-Hermite H_k^q, the two q-Laguerre
// variants L_j^(alpha)(u|q^2) and L_j^(alpha)(u|q^-2), and the q-Gegenbauer
// polynomials C_n^lambda(q;t). All are evaluated by direct summation of their
// finite defining sums; degrees in use stay small enough that cancellation is
// benign at double precision.

namespace qeuclid {

inline double hermite(const QContext& ctx, int k, double t) {
    if (k < 0) throw std::invalid_argument("hermite: k must be >= 0");
    const double q = ctx.q(), q2 = ctx.q2();
    double s = 0.0;
    for (int j = 0; j <= k / 2; ++j) {
        const double c = q_factorial_base(q, k) /
                         (q_factorial_base(q, k - 2 * j) * q_factorial_base(q2, j));
        s += ((j % 2) ? -1.0 : 1.0) * c * std::pow(q, j * (j + 1.0)) *
             std::pow((q + 1.0) * t, static_cast<double>(k - 2 * j));
    }
    return s;
}

namespace detail {

// shared factor (q^{2i+2a+2};q^2)_{j-i} / (1-q^2)^{j-i} = Gamma_{q^2}(j+a+1)/Gamma_{q^2}(i+a+1)
inline double laguerre_gamma_ratio(double q2, int j, int i, double alpha) {
    return q_pochhammer_base(std::pow(q2, i + alpha + 1.0), q2, j - i) /
           std::pow(1.0 - q2, static_cast<double>(j - i));
}

}  // namespace detail

// L_j^(alpha)(u | q^2)
inline double laguerre_q2(const QContext& ctx, int j, double alpha, double u) {
    if (j < 0) throw std::invalid_argument("laguerre_q2: j must be >= 0");
    if (!(alpha > -1.0)) throw std::domain_error("laguerre_q2: alpha must be > -1");
    const double q2 = ctx.q2();
    double s = 0.0;
    double up = 1.0;  // (-u)^i
    for (int i = 0; i <= j; ++i) {
        const int d = j - i;
        s += std::pow(q2, d * (d + 1) / 2.0) * up /
             (q_factorial_base(q2, d) * q_factorial_base(q2, i)) *
             detail::laguerre_gamma_ratio(q2, j, i, alpha);
        up *= -u;
    }
    return s;
}

// L_j^(alpha)(u | q^-2)
inline double laguerre_q2inv(const QContext& ctx, int j, double alpha, double u) {
    if (j < 0) throw std::invalid_argument("laguerre_q2inv: j must be >= 0");
    if (!(alpha > -1.0)) throw std::domain_error("laguerre_q2inv: alpha must be > -1");
    const double q2 = ctx.q2();
    double s = 0.0;
    double up = 1.0;
    for (int i = 0; i <= j; ++i) {
        s += std::pow(q2, i * (i + alpha)) * up /
             (q_factorial_base(q2, j - i) * q_factorial_base(q2, i)) *
             detail::laguerre_gamma_ratio(q2, j, i, alpha);
        up *= -u;
    }
    return std::pow(q2, -j * (j + 1 + 2.0 * alpha) / 2.0) * s;
}

// Monomial coefficients of L_j^(alpha)(scale*u | q^2) as a polynomial in u.
inline std::vector<double> laguerre_q2_coeffs(const QContext& ctx, int j, double alpha,
                                              double scale) {
    if (j < 0) throw std::invalid_argument("laguerre_q2_coeffs: j must be >= 0");
    const double q2 = ctx.q2();
    std::vector<double> out(j + 1);
    double sp = 1.0;  // (-scale)^i
    for (int i = 0; i <= j; ++i) {
        const int d = j - i;
        out[i] = std::pow(q2, d * (d + 1) / 2.0) /
                 (q_factorial_base(q2, d) * q_factorial_base(q2, i)) *
                 detail::laguerre_gamma_ratio(q2, j, i, alpha) * sp;
        sp *= -scale;
    }
    return out;
}

// Monomial coefficients of L_j^(alpha)(scale*u | q^-2).
inline std::vector<double> laguerre_q2inv_coeffs(const QContext& ctx, int j, double alpha,
                                                 double scale) {
    if (j < 0) throw std::invalid_argument("laguerre_q2inv_coeffs: j must be >= 0");
    const double q2 = ctx.q2();
    std::vector<double> out(j + 1);
    const double pref = std::pow(q2, -j * (j + 1 + 2.0 * alpha) / 2.0);
    double sp = 1.0;
    for (int i = 0; i <= j; ++i) {
        out[i] = pref * std::pow(q2, i * (i + alpha)) /
                 (q_factorial_base(q2, j - i) * q_factorial_base(q2, i)) *
                 detail::laguerre_gamma_ratio(q2, j, i, alpha) * sp;
        sp *= -scale;
    }
    return out;
}

inline double gegenbauer(const QContext& ctx, int n, double lambda, double t) {
    if (n < 0) throw std::invalid_argument("gegenbauer: n must be >= 0");
    const double q = ctx.q(), q2 = ctx.q2();
    double s = 0.0;
    for (int j = 0; j <= n / 2; ++j) {
        const double c = std::pow(q, j * (j - 1.0)) /
                         (q_factorial_base(q2, j) * q_factorial_base(q, n - 2 * j)) *
                         q_pochhammer_base(std::pow(q2, lambda), q2, n - j) /
                         std::pow(1.0 - q2, static_cast<double>(n - j));
        s += ((j % 2) ? -1.0 : 1.0) * c * std::pow((1.0 + q) * t, static_cast<double>(n - 2 * j));
    }
    return s;
}

// Coefficients c_j^{n,lambda} of t^{n-2j} in C_n^lambda(q; (mu/(1+q)) t).
inline std::vector<double> gegenbauer_coeffs(const QContext& ctx, int n, double lambda) {
    if (n < 0) throw std::invalid_argument("gegenbauer_coeffs: n must be >= 0");
    const double q = ctx.q(), q2 = ctx.q2(), mu = ctx.mu();
    std::vector<double> out(n / 2 + 1);
    for (int j = 0; j <= n / 2; ++j) {
        const double c = std::pow(q, j * (j - 1.0)) /
                         (q_factorial_base(q2, j) * q_factorial_base(q, n - 2 * j)) *
                         q_pochhammer_base(std::pow(q2, lambda), q2, n - j) /
                         std::pow(1.0 - q2, static_cast<double>(n - j));
        out[j] = ((j % 2) ? -1.0 : 1.0) * c * std::pow(mu, static_cast<double>(n - 2 * j));
    }
    return out;
}

}  // namespace qeuclid
