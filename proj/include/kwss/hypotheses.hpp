#pragma once

#include <cstdint>
#include <string>

#include "kwss/intmath.hpp"

namespace kwss::wss {

/// The standing assumptions on k: 4 does not divide k, and
/// D = (k^2 + 4) / gcd(2, k)^2 is squarefree.
struct WssHypotheses {
    std::uint64_t k = 0;
    Integer d_value;
    bool four_ok = false;
    bool squarefree_ok = false;

    bool satisfied() const { return four_ok && squarefree_ok; }
    /// Human-readable list of the violated hypotheses; empty when satisfied.
    std::string violation() const;

    friend bool operator==(const WssHypotheses&, const WssHypotheses&) = default;
};

/// Throws InvalidArgument for k = 0; FactorizationIncomplete propagates.
WssHypotheses validate_k(std::uint64_t k,
                         std::uint64_t factor_budget = intmath::kDefaultFactorBudget);

/// validate_k, throwing HypothesisViolation when the hypotheses fail.
WssHypotheses require_hypotheses(std::uint64_t k,
                                 std::uint64_t factor_budget = intmath::kDefaultFactorBudget);

}  // namespace kwss::wss
