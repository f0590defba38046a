#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace qeuclid {

// Truncation control for all series and Jackson sums.
struct SeriesPolicy {
    double rel_tol = 1e-14;
    int max_terms = 500;
    int consecutive_small = 3;

    void validate() const {
        if (!(rel_tol > 0.0)) throw std::invalid_argument("SeriesPolicy: rel_tol must be > 0");
        if (max_terms < 1) throw std::invalid_argument("SeriesPolicy: max_terms must be >= 1");
        if (consecutive_small < 1) throw std::invalid_argument("SeriesPolicy: consecutive_small must be >= 1");
    }
};

class divergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class truncation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Deformation parameter, dimension and the derived constant mu = 1 + q^(2-m).
// Immutable after construction; cheap to copy.
class QContext {
public:
    QContext(double q, int m, SeriesPolicy policy = {})
        : q_(q), m_(m), policy_(policy) {
        if (!(q > 0.0) || !(q < 1.0))
            throw std::invalid_argument("QContext: q must lie in the open interval (0,1), got " + std::to_string(q));
        if (m < 1)
            throw std::invalid_argument("QContext: dimension m must be >= 1");
        policy_.validate();
        mu_ = 1.0 + std::pow(q, 2.0 - static_cast<double>(m));
    }

    double q() const { return q_; }
    double q2() const { return q_ * q_; }
    int m() const { return m_; }
    double mu() const { return mu_; }
    const SeriesPolicy& policy() const { return policy_; }

private:
    double q_;
    int m_;
    double mu_;
    SeriesPolicy policy_;
};

// Grid description for an infinite Jackson integral anchored at gamma:
// points t = q^k * gamma for k_lo <= k <= k_hi. Unset bounds are chosen
// adaptively (fine side from rel_tol, coarse side by shell scanning).
struct JacksonSpec {
    double gamma = 1.0;
    std::optional<int> k_lo;
    std::optional<int> k_hi;

    void validate() const {
        if (!(gamma > 0.0)) throw std::invalid_argument("JacksonSpec: gamma must be > 0");
        if (k_lo && k_hi && *k_lo > *k_hi)
            throw std::invalid_argument("JacksonSpec: k_lo must be <= k_hi");
    }
};

}  // namespace qeuclid
