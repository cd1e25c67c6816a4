#pragma once

// k-Wall-Sun-Sun classification. A prime p is a k-Wall-Sun-Sun prime when
// pi(p^2) = pi(p) for the Lucas sequence U_n(k, -1). Four independent
// criteria decide it:
//
//   period      pi(p^2) = pi(p)
//   entry       U_{p - delta_p} = 0 mod p^2           (p >= 3)
//   alpha       F_p(alpha) = 0 in R_{p^2}             (p >= 3)
//   monogenic   x^{2p} - kx^p - 1 is not monogenic
//
// Under the k-hypotheses (see hypotheses.hpp) all four agree; classify()
// evaluates every one of them and treats disagreement as an error.

#include <cstdint>
#include <string>

#include "kwss/error.hpp"
#include "kwss/hypotheses.hpp"

namespace kwss::wss {

/// Legendre symbol ((k^2 + 4) / p) for an odd prime p.
int delta_p(std::uint64_t k, std::uint64_t p);

bool is_wss_by_period(std::uint64_t k, std::uint64_t p);

/// For delta_p = 0 returns false without evaluating U (a prime p >= 3
/// dividing k^2 + 4 is never k-Wall-Sun-Sun). Throws UnsupportedCriterion at p = 2.
bool is_wss_by_entry(std::uint64_t k, std::uint64_t p);

/// Throws UnsupportedCriterion at p = 2, HypothesisViolation if k fails.
bool is_wss_by_alpha(std::uint64_t k, std::uint64_t p,
                     std::uint64_t factor_budget = intmath::kDefaultFactorBudget);

bool is_wss_by_monogenicity(std::uint64_t k, std::uint64_t p,
                            std::uint64_t factor_budget = intmath::kDefaultFactorBudget);

struct WssClassification {
    std::uint64_t k = 0;
    std::uint64_t p = 0;
    int delta = 0;
    /// False at p = 2, where delta is recorded as 0 by convention.
    bool delta_applicable = true;
    std::uint64_t pi_p = 0;
    std::uint64_t pi_p2 = 0;
    bool by_period = false;
    bool by_entry = false;
    bool by_alpha = false;
    bool by_monogenic = false;
    /// True at p = 2: by_entry and by_alpha copy by_period.
    bool entry_alpha_derived = false;
    bool consistent = false;

    bool is_wss() const { return by_period; }

    friend bool operator==(const WssClassification&, const WssClassification&) = default;
};

/// The criteria disagreed. Carries the complete classification.
class InternalInconsistency : public Error {
public:
    explicit InternalInconsistency(WssClassification c);
    const WssClassification& classification() const noexcept { return c_; }

private:
    WssClassification c_;
};

/// Runs every criterion (no short-circuit). Throws HypothesisViolation if k
/// fails the hypotheses, InvalidArgument if p is not prime, and
/// InternalInconsistency if the criteria disagree.
WssClassification classify(std::uint64_t k, std::uint64_t p,
                           std::uint64_t factor_budget = intmath::kDefaultFactorBudget);

/// Same as classify() but returns an inconsistent classification instead of
/// throwing; consistent is false in that case.
WssClassification evaluate_criteria(std::uint64_t k, std::uint64_t p,
                                    std::uint64_t factor_budget);

}  // namespace kwss::wss
