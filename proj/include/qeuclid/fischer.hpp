#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "qeuclid/qcore.hpp"
#include "qeuclid/qhankel.hpp"
#include "qeuclid/qpolys.hpp"

// Radial-harmonic (Fischer-basis) model of functions on quantum Euclidean
// space. An element is a sparse map from harmonic degree k to a radial profile
// in u = x^2; harmonic blocks are abstract tags, no basis of S_k is ever
// materialized. The operators x^2, Delta, E, Lambda^u and the Hamiltonians act
// block-diagonally (or block-shifting) through their monomial rules
//
//   Delta(u^l S_k) = mu^2 [l+k+m/2-1]_{q^2} [l]_{q^2} u^{l-1} S_k
//   E(u^l S_k)     = ([m/2+k+l]_{q^2} + q^2 [l]_{q^2}) u^l S_k
//   Lambda^w       = q^{2w(k+2l)} blockwise
//
// and the Fourier transforms act blockwise through the q-Hankel transforms of
// order m/2+k-1 on Laguerre/monomial bases.

namespace qeuclid {

enum class GaussKind { none, e_small, e_big };

// e_small(alpha): e_{q^2}(-alpha q^2 u / mu);  e_big(beta): E_{q^2}(-beta u / mu)
struct GaussTag {
    GaussKind kind = GaussKind::none;
    double scale = 0.0;

    friend bool operator==(const GaussTag& a, const GaussTag& b) {
        if (a.kind != b.kind) return false;
        return a.kind == GaussKind::none || a.scale == b.scale;
    }
};

// Truncated power series in u = x^2 with an attached Gaussian species tag and
// a quarter-turn phase (integer power of i).
struct RadialSeries {
    std::vector<double> coeffs;
    GaussTag gauss{};
    int phase = 0;  // value carries an overall factor i^phase

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
        phase = ((phase % 4) + 4) % 4;
        // fold the real part of the phase into the coefficients
        if (phase >= 2) {
            for (auto& c : coeffs) c = -c;
            phase -= 2;
        }
    }
    bool empty() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

namespace detail {

// decay rate c of the tagged Gaussian as e/E_{q^2}(-c u)
inline double gauss_rate(const QContext& ctx, const GaussTag& tag) {
    switch (tag.kind) {
        case GaussKind::e_small: return tag.scale * ctx.q2() / ctx.mu();
        case GaussKind::e_big: return tag.scale / ctx.mu();
        default: return 0.0;
    }
}

// expansion coefficients of the tagged Gaussian to length L
inline std::vector<double> gauss_expansion(const QContext& ctx, const GaussTag& tag, int L) {
    std::vector<double> g(L, 0.0);
    g[0] = 1.0;
    const double q2 = ctx.q2();
    const double c = gauss_rate(ctx, tag);
    if (tag.kind == GaussKind::e_small) {
        for (int l = 1; l < L; ++l) g[l] = g[l - 1] * (-c) / q_bracket_base(q2, l);
    } else if (tag.kind == GaussKind::e_big) {
        double bp = 1.0;  // q^{2(l-1)}
        for (int l = 1; l < L; ++l) {
            g[l] = g[l - 1] * bp * (-c) / q_bracket_base(q2, l);
            bp *= q2;
        }
    }
    return g;
}

}  // namespace detail

// evaluate a radial profile at u >= 0 (phase must be real, i.e. 0)
inline double evaluate_radial(const QContext& ctx, const RadialSeries& s, double u) {
    if (s.phase % 2 != 0)
        throw std::domain_error("evaluate_radial: block carries an imaginary phase");
    double poly = 0.0;
    for (int i = s.degree(); i >= 0; --i) poly = poly * u + s.coeffs[i];
    if (s.phase == 2) poly = -poly;
    const double c = detail::gauss_rate(ctx, s.gauss);
    switch (s.gauss.kind) {
        case GaussKind::none: return poly;
        case GaussKind::e_small: return poly * exp_small_base(ctx.q2(), -c * u, ctx.policy());
        case GaussKind::e_big: return poly * exp_big_base(ctx.q2(), -c * u, ctx.policy());
    }
    return poly;
}

class FischerElement {
public:
    explicit FischerElement(QContext ctx) : ctx_(std::move(ctx)) {}

    const QContext& ctx() const { return ctx_; }
    const std::map<int, RadialSeries>& blocks() const { return blocks_; }
    bool empty() const { return blocks_.empty(); }

    void set_block(int k, RadialSeries s) {
        if (k < 0) throw std::invalid_argument("FischerElement: harmonic degree must be >= 0");
        s.trim();
        if (s.empty())
            blocks_.erase(k);
        else
            blocks_[k] = std::move(s);
    }

    const RadialSeries* block(int k) const {
        auto it = blocks_.find(k);
        return it == blocks_.end() ? nullptr : &it->second;
    }

    FischerElement& operator*=(double a) {
        if (a == 0.0) {
            blocks_.clear();
            return *this;
        }
        for (auto& [k, s] : blocks_)
            for (auto& c : s.coeffs) c *= a;
        return *this;
    }

    FischerElement& operator+=(const FischerElement& other) {
        for (const auto& [k, s] : other.blocks_) {
            auto it = blocks_.find(k);
            if (it == blocks_.end()) {
                blocks_[k] = s;
                continue;
            }
            RadialSeries& mine = it->second;
            if (!(mine.gauss == s.gauss))
                throw std::domain_error("FischerElement: cannot add blocks with different Gaussian tags");
            if (mine.phase != s.phase)
                throw std::domain_error("FischerElement: cannot add blocks with different phases");
            if (s.coeffs.size() > mine.coeffs.size()) mine.coeffs.resize(s.coeffs.size(), 0.0);
            for (std::size_t i = 0; i < s.coeffs.size(); ++i) mine.coeffs[i] += s.coeffs[i];
            mine.trim();
            if (mine.empty()) blocks_.erase(k);
        }
        return *this;
    }

private:
    QContext ctx_;
    std::map<int, RadialSeries> blocks_;
};

inline FischerElement operator*(double a, FischerElement e) {
    e *= a;
    return e;
}
inline FischerElement operator+(FischerElement a, const FischerElement& b) {
    a += b;
    return a;
}

// Gaussian tags expanded into power series to order L; result blocks untagged.
inline FischerElement expand(const FischerElement& e, int L = 40) {
    FischerElement out(e.ctx());
    for (const auto& [k, s] : e.blocks()) {
        RadialSeries r;
        r.phase = s.phase;
        if (s.gauss.kind == GaussKind::none) {
            r.coeffs = s.coeffs;
        } else {
            const auto g = detail::gauss_expansion(e.ctx(), s.gauss, L);
            r.coeffs.assign(L, 0.0);
            for (int i = 0; i <= s.degree(); ++i) {
                if (s.coeffs[i] == 0.0) continue;
                for (int l = 0; l + i < L; ++l) r.coeffs[l + i] += s.coeffs[i] * g[l];
            }
        }
        out.set_block(k, std::move(r));
    }
    return out;
}

// Inverse of expand for a known tag: divide the series by the tagged Gaussian.
// The quotient must terminate at max_degree; trailing orders act as a residual
// check against `tol` relative to the quotient scale.
inline RadialSeries factor_gaussian(const QContext& ctx, const RadialSeries& expanded,
                                    const GaussTag& tag, int max_degree, double tol = 1e-8) {
    if (expanded.gauss.kind != GaussKind::none)
        throw std::domain_error("factor_gaussian: input must be untagged");
    const int L = static_cast<int>(expanded.coeffs.size());
    const auto g = detail::gauss_expansion(ctx, tag, std::max(L, 1));
    std::vector<double> phi(L, 0.0);
    for (int i = 0; i < L; ++i) {
        double s = expanded.coeffs[i];
        for (int l = 0; l < i; ++l) s -= phi[l] * g[i - l];
        phi[i] = s;
    }
    double scale = 0.0;
    for (int i = 0; i <= std::min(max_degree, L - 1); ++i) scale = std::max(scale, std::abs(phi[i]));
    for (int i = max_degree + 1; i < L; ++i) {
        if (std::abs(phi[i]) > tol * std::max(1.0, scale))
            throw std::domain_error("factor_gaussian: series does not factor through the tag");
        phi[i] = 0.0;
    }
    RadialSeries out;
    out.coeffs.assign(phi.begin(), phi.begin() + std::min<std::size_t>(max_degree + 1, phi.size()));
    out.gauss = tag;
    out.phase = expanded.phase;
    out.trim();
    return out;
}

// multiplication by x^2: shifts every radial series by one power of u
inline FischerElement op_norm_sq(const FischerElement& e) {
    FischerElement out(e.ctx());
    for (const auto& [k, s] : e.blocks()) {
        RadialSeries r = s;
        r.coeffs.insert(r.coeffs.begin(), 0.0);
        out.set_block(k, std::move(r));
    }
    return out;
}

namespace detail {

inline void require_polynomial_view(const FischerElement& e, const char* who) {
    for (const auto& [k, s] : e.blocks())
        if (s.gauss.kind != GaussKind::none)
            throw std::domain_error(std::string(who) + ": requires the fully-expanded polynomial view");
}

}  // namespace detail

// Laplacian through the blockwise monomial rule (expanded view; degree drops by one).
inline FischerElement op_laplace(const FischerElement& e) {
    detail::require_polynomial_view(e, "op_laplace");
    const QContext& ctx = e.ctx();
    const double q2 = ctx.q2(), mu = ctx.mu();
    const double half_m = ctx.m() / 2.0;
    FischerElement out(ctx);
    for (const auto& [k, s] : e.blocks()) {
        RadialSeries r;
        r.phase = s.phase;
        if (s.degree() >= 1) {
            r.coeffs.assign(s.degree(), 0.0);
            for (int l = 1; l <= s.degree(); ++l)
                r.coeffs[l - 1] = mu * mu * q_bracket_base(q2, l + k + half_m - 1.0) *
                                  q_bracket_base(q2, l) * s.coeffs[l];
        }
        out.set_block(k, std::move(r));
    }
    return out;
}

// barred Laplacian: the q -> 1/q substitution of the monomial rule,
// mubar^2 [l+k+m/2-1]_{q^-2} [l]_{q^-2} with mubar = 1 + q^{m-2}
inline FischerElement op_laplace_barred(const FischerElement& e) {
    detail::require_polynomial_view(e, "op_laplace_barred");
    const QContext& ctx = e.ctx();
    const double qb = 1.0 / ctx.q2();
    const double mubar = 1.0 + std::pow(ctx.q(), ctx.m() - 2.0);
    const double half_m = ctx.m() / 2.0;
    FischerElement out(ctx);
    for (const auto& [k, s] : e.blocks()) {
        RadialSeries r;
        r.phase = s.phase;
        if (s.degree() >= 1) {
            r.coeffs.assign(s.degree(), 0.0);
            for (int l = 1; l <= s.degree(); ++l)
                r.coeffs[l - 1] = mubar * mubar * q_bracket_base(qb, l + k + half_m - 1.0) *
                                  q_bracket_base(qb, l) * s.coeffs[l];
        }
        out.set_block(k, std::move(r));
    }
    return out;
}

// E(u^l S_k) = ([m/2+k+l]_{q^2} + q^2 [l]_{q^2}) u^l S_k
inline FischerElement op_euler(const FischerElement& e) {
    detail::require_polynomial_view(e, "op_euler");
    const QContext& ctx = e.ctx();
    const double q2 = ctx.q2();
    const double half_m = ctx.m() / 2.0;
    FischerElement out(ctx);
    for (const auto& [k, s] : e.blocks()) {
        RadialSeries r = s;
        for (int l = 0; l <= s.degree(); ++l)
            r.coeffs[l] *= q_bracket_base(q2, half_m + k + l) + q2 * q_bracket_base(q2, l);
        out.set_block(k, std::move(r));
    }
    return out;
}

// Lambda^w: block (k,l) scales by q^{2w(k+2l)}; tag-preserving
// (a tagged Gaussian rescales by q^{4w}).
inline FischerElement op_dilation(const FischerElement& e, double w) {
    const QContext& ctx = e.ctx();
    const double q = ctx.q();
    FischerElement out(ctx);
    for (const auto& [k, s] : e.blocks()) {
        RadialSeries r = s;
        for (int l = 0; l <= s.degree(); ++l) r.coeffs[l] *= std::pow(q, 2.0 * w * (k + 2.0 * l));
        if (r.gauss.kind != GaussKind::none) r.gauss.scale *= std::pow(q, 4.0 * w);
        out.set_block(k, std::move(r));
    }
    return out;
}

// h = (1/2)(-Delta + x^2);  h* = (1/2)(-q^{-2m} Delta_bar + x^2)
inline FischerElement op_hamiltonian(const FischerElement& e, bool starred) {
    detail::require_polynomial_view(e, "op_hamiltonian");
    const QContext& ctx = e.ctx();
    FischerElement lap = starred ? op_laplace_barred(e) : op_laplace(e);
    const double pref = starred ? std::pow(ctx.q(), -2.0 * ctx.m()) : 1.0;
    FischerElement out = op_norm_sq(e);
    out += (-pref) * lap;
    out *= 0.5;
    return out;
}

// ---- Fourier transforms on Fischer elements ----
//
// Fbar^{+-} maps E-Gaussian (e_big) blocks to e-Gaussian blocks through the
// first q-Hankel transform at order m/2+k-1; F^{+-} maps back through the
// second one, normalized by c(sqrt(alpha) gamma) = d(gamma sqrt(alpha/mu), m/2-1).
// Both act as exact maps on the Laguerre/monomial bases of the weighted spaces.

// Fbar^{sign}: every block must carry an e_big tag.
inline FischerElement fourier_forward(const FischerElement& e, int sign) {
    const QContext& ctx = e.ctx();
    const double mu = ctx.mu();
    const double half_m = ctx.m() / 2.0;
    FischerElement out(ctx);
    for (const auto& [k, s] : e.blocks()) {
        if (s.gauss.kind != GaussKind::e_big)
            throw std::domain_error("fourier_forward: block without e_big Gaussian tag");
        const double beta = s.gauss.scale;
        const double nu = half_m + k - 1.0;
        const int deg = s.degree();
        // phi(u) = sum_j b_j L_j^{(nu)}(beta u / mu | q^2): back-substitute from the top
        std::vector<double> b(deg + 1, 0.0);
        std::vector<double> rem = s.coeffs;
        for (int j = deg; j >= 0; --j) {
            const auto lag = laguerre_q2_coeffs(ctx, j, nu, beta / mu);
            b[j] = rem[j] / lag[j];
            for (int i = 0; i <= j; ++i) rem[i] -= b[j] * lag[i];
        }
        RadialSeries r;
        r.coeffs.assign(deg + 1, 0.0);
        for (int j = 0; j <= deg; ++j)
            r.coeffs[j] = b[j] * std::pow(beta, -(nu + 1.0 + j)) * hankel_laguerre_constant(ctx, j, nu);
        r.gauss = {GaussKind::e_small, 1.0 / beta};
        r.phase = s.phase + sign * k;
        out.set_block(k, std::move(r));
    }
    return out;
}

// F^{sign}: every block must carry an e_small tag. gamma is the free anchor of
// the second transform; the result is gamma-independent up to quadrature error
// in the d-ratio.
inline FischerElement fourier_inverse(const FischerElement& e, int sign, double gamma = 1.0) {
    const QContext& ctx = e.ctx();
    const double mu = ctx.mu();
    const double half_m = ctx.m() / 2.0;
    FischerElement out(ctx);
    for (const auto& [k, s] : e.blocks()) {
        if (s.gauss.kind != GaussKind::e_small)
            throw std::domain_error("fourier_inverse: block without e_small Gaussian tag");
        const double alpha = s.gauss.scale;
        const double nu = half_m + k - 1.0;
        const int deg = s.degree();
        const double lam = gamma * std::sqrt(alpha / mu);
        const double dratio = d_const(ctx, lam, nu) / d_const(ctx, lam, half_m - 1.0);
        RadialSeries r;
        r.coeffs.assign(deg + 1, 0.0);
        for (int j = 0; j <= deg; ++j) {
            if (s.coeffs[j] == 0.0) continue;
            const double f = s.coeffs[j] * dratio * std::pow(alpha, -(nu + 1.0 + j)) /
                             hankel_laguerre_constant(ctx, j, nu);
            const auto lag = laguerre_q2_coeffs(ctx, j, nu, 1.0 / (alpha * mu));
            for (int i = 0; i <= j; ++i) r.coeffs[i] += f * lag[i];
        }
        r.gauss = {GaussKind::e_big, 1.0 / alpha};
        r.phase = s.phase + sign * k;
        out.set_block(k, std::move(r));
    }
    return out;
}

// ---- JSON serialization ----
// {m, q, blocks: [{k, gauss: {type, scale}, coeffs: [...], phase}]}
// `phase` is emitted only when nonzero.

inline nlohmann::json to_json(const FischerElement& e) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& [k, s] : e.blocks()) {
        nlohmann::json jb;
        jb["k"] = k;
        const char* type = s.gauss.kind == GaussKind::none     ? "none"
                           : s.gauss.kind == GaussKind::e_small ? "e_small"
                                                                 : "e_big";
        jb["gauss"] = {{"type", type}, {"scale", s.gauss.scale}};
        jb["coeffs"] = s.coeffs;
        if (s.phase != 0) jb["phase"] = s.phase;
        blocks.push_back(std::move(jb));
    }
    return nlohmann::json{{"m", e.ctx().m()}, {"q", e.ctx().q()}, {"blocks", std::move(blocks)}};
}

inline FischerElement fischer_from_json(const nlohmann::json& j, SeriesPolicy pol = {}) {
    QContext ctx(j.at("q").get<double>(), j.at("m").get<int>(), pol);
    FischerElement e(ctx);
    for (const auto& jb : j.at("blocks")) {
        RadialSeries s;
        s.coeffs = jb.at("coeffs").get<std::vector<double>>();
        const std::string type = jb.at("gauss").at("type").get<std::string>();
        if (type == "none")
            s.gauss.kind = GaussKind::none;
        else if (type == "e_small")
            s.gauss.kind = GaussKind::e_small;
        else if (type == "e_big")
            s.gauss.kind = GaussKind::e_big;
        else
            throw std::invalid_argument("FischerElement JSON: unknown gauss type '" + type + "'");
        s.gauss.scale = jb.at("gauss").at("scale").get<double>();
        if (jb.contains("phase")) s.phase = jb.at("phase").get<int>();
        e.set_block(jb.at("k").get<int>(), std::move(s));
    }
    return e;
}

inline bool approx_equal(const FischerElement& a, const FischerElement& b, double tol = 0.0) {
    if (a.blocks().size() != b.blocks().size()) return false;
    for (const auto& [k, s] : a.blocks()) {
        const RadialSeries* t = b.block(k);
        if (!t || !(s.gauss == t->gauss) || s.phase != t->phase) return false;
        if (s.coeffs.size() != t->coeffs.size()) return false;
        for (std::size_t i = 0; i < s.coeffs.size(); ++i)
            if (std::abs(s.coeffs[i] - t->coeffs[i]) > tol) return false;
    }
    return true;
}

}  // namespace qeuclid
