#pragma once

// Sweep of k-Wall-Sun-Sun candidates over a (k, p) grid.
//
// Cells are independent; workers pull cell indices from a shared counter and
// keep private hit lists, which are concatenated and sorted by (k, p) at the
// end. The result does not depend on the number of workers or on scheduling.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kwss/wss.hpp"

namespace kwss::wss {

enum class Criterion { period, entry, alpha, monogenic, all };

std::string_view to_string(Criterion c);
std::optional<Criterion> parse_criterion(std::string_view s);

struct SearchOptions {
    std::uint64_t k_min = 1;
    std::uint64_t k_max = 1;
    std::uint64_t p_max = 2;
    Criterion criterion = Criterion::period;
    /// 0 selects std::thread::hardware_concurrency().
    unsigned jobs = 0;
    std::uint64_t factor_budget = intmath::kDefaultFactorBudget;
};

struct SearchHit {
    std::uint64_t k = 0;
    std::uint64_t p = 0;
    std::uint64_t pi_p = 0;
    std::uint64_t pi_p2 = 0;
    /// Criterion that produced the verdict. Differs from the requested one at
    /// p = 2 (entry) and for k failing the hypotheses (entry), where the
    /// period criterion stands in.
    Criterion basis = Criterion::period;
    /// Present for Criterion::all.
    std::optional<WssClassification> classification;

    friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

struct SkippedK {
    std::uint64_t k = 0;
    std::string reason;

    friend bool operator==(const SkippedK&, const SkippedK&) = default;
};

struct SearchResult {
    Criterion criterion = Criterion::period;
    std::vector<SearchHit> hits;
    std::vector<SkippedK> skipped;
    std::uint64_t cells_evaluated = 0;

    friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// Throws InvalidArgument for k_min = 0, k_min > k_max or p_max < 2.
/// k values failing the hypotheses are skipped for the alpha, monogenic and
/// all criteria. Errors raised inside a worker are rethrown after all
/// workers stop.
SearchResult search(const SearchOptions& options);

}  // namespace kwss::wss
