#include "kwss/wss.hpp"

#include <string>

#include "kwss/intmath.hpp"
#include "kwss/lucas.hpp"
#include "kwss/quadring.hpp"
#include "kwss/trinomial.hpp"

namespace kwss::wss {

namespace {

void require_prime(std::uint64_t p, const char* who) {
    if (!intmath::is_prime_u64(p)) {
        throw InvalidArgument(std::string(who) + ": " + std::to_string(p) + " is not prime");
    }
}

void require_odd(std::uint64_t p, const char* who) {
    if (p == 2) {
        throw UnsupportedCriterion(std::string(who) +
                                   " is not defined at p = 2; use the period criterion");
    }
}

std::string describe(const WssClassification& c) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    return "criteria disagree for k = " + std::to_string(c.k) + ", p = " + std::to_string(c.p) +
           ": period=" + b(c.by_period) + " entry=" + b(c.by_entry) + " alpha=" +
           b(c.by_alpha) + " monogenic=" + b(c.by_monogenic);
}

}  // namespace

int delta_p(std::uint64_t k, std::uint64_t p) {
    require_prime(p, "delta_p");
    if (p == 2) throw InvalidArgument("delta_p: p must be an odd prime");
    const Integer kz = intmath::to_integer(k);
    return intmath::jacobi(Integer(kz * kz + 4), intmath::to_integer(p));
}

bool is_wss_by_period(std::uint64_t k, std::uint64_t p) {
    const auto periods = lucas::prime_periods(k, p);
    return periods.pi_p2 == periods.pi_p;
}

bool is_wss_by_entry(std::uint64_t k, std::uint64_t p) {
    require_prime(p, "is_wss_by_entry");
    require_odd(p, "the entry criterion");
    const int d = delta_p(k, p);
    if (d == 0) return false;
    const std::uint64_t index = d == 1 ? p - 1 : p + 1;
    return lucas::lucas_u(k, index, p * p) == 0;
}

bool is_wss_by_alpha(std::uint64_t k, std::uint64_t p, std::uint64_t factor_budget) {
    require_prime(p, "is_wss_by_alpha");
    require_odd(p, "the alpha criterion");
    require_hypotheses(k, factor_budget);
    return quadring::eval_fp_alpha(k, p).is_zero();
}

bool is_wss_by_monogenicity(std::uint64_t k, std::uint64_t p, std::uint64_t factor_budget) {
    return !trinomial::is_monogenic_fp(k, p, factor_budget).monogenic;
}

InternalInconsistency::InternalInconsistency(WssClassification c)
    : Error(describe(c)), c_(c) {}

WssClassification evaluate_criteria(std::uint64_t k, std::uint64_t p,
                                    std::uint64_t factor_budget) {
    require_prime(p, "classify");
    WssClassification c;
    c.k = k;
    c.p = p;

    const auto periods = lucas::prime_periods(k, p);
    c.pi_p = periods.pi_p;
    c.pi_p2 = periods.pi_p2;
    c.by_period = periods.pi_p2 == periods.pi_p;

    if (p == 2) {
        c.delta = 0;
        c.delta_applicable = false;
        c.entry_alpha_derived = true;
        c.by_entry = c.by_period;
        c.by_alpha = c.by_period;
    } else {
        c.delta = delta_p(k, p);
        c.by_entry = is_wss_by_entry(k, p);
        c.by_alpha = quadring::eval_fp_alpha(k, p).is_zero();
    }
    c.by_monogenic = !trinomial::is_monogenic_fp(k, p, factor_budget).monogenic;
    c.consistent = c.by_period == c.by_entry && c.by_period == c.by_alpha &&
                   c.by_period == c.by_monogenic;
    return c;
}

WssClassification classify(std::uint64_t k, std::uint64_t p, std::uint64_t factor_budget) {
    require_hypotheses(k, factor_budget);
    WssClassification c = evaluate_criteria(k, p, factor_budget);
    if (!c.consistent) throw InternalInconsistency(c);
    return c;
}

}  // namespace kwss::wss
