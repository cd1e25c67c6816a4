#include "kwss/hypotheses.hpp"

#include "kwss/error.hpp"

namespace kwss::wss {

std::string WssHypotheses::violation() const {
    std::string out;
    if (!four_ok) out = "k = " + std::to_string(k) + " is divisible by 4";
    if (!squarefree_ok) {
        if (!out.empty()) out += "; ";
        out += "(k^2+4)/gcd(2,k)^2 = " + d_value.get_str() + " is not squarefree";
    }
    return out;
}

WssHypotheses validate_k(std::uint64_t k, std::uint64_t factor_budget) {
    if (k == 0) throw InvalidArgument("k must be a positive integer");
    WssHypotheses h;
    h.k = k;
    const Integer kk = intmath::to_integer(k);
    const Integer k2p4 = kk * kk + 4;
    h.d_value = (k % 2 == 0) ? Integer(k2p4 / 4) : k2p4;
    h.four_ok = k % 4 != 0;
    h.squarefree_ok = intmath::is_squarefree(h.d_value, factor_budget);
    return h;
}

WssHypotheses require_hypotheses(std::uint64_t k, std::uint64_t factor_budget) {
    WssHypotheses h = validate_k(k, factor_budget);
    if (!h.satisfied()) throw HypothesisViolation("hypothesis violated: " + h.violation());
    return h;
}

}  // namespace kwss::wss
