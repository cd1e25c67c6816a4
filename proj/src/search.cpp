#include "kwss/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "kwss/lucas.hpp"
#include "kwss/quadring.hpp"
#include "kwss/trinomial.hpp"

namespace kwss::wss {

std::string_view to_string(Criterion c) {
    switch (c) {
        case Criterion::period: return "period";
        case Criterion::entry: return "entry";
        case Criterion::alpha: return "alpha";
        case Criterion::monogenic: return "monogenic";
        case Criterion::all: return "all";
    }
    return "unknown";
}

std::optional<Criterion> parse_criterion(std::string_view s) {
    for (auto c : {Criterion::period, Criterion::entry, Criterion::alpha, Criterion::monogenic,
                   Criterion::all}) {
        if (to_string(c) == s) return c;
    }
    return std::nullopt;
}

namespace {

struct KPlan {
    std::uint64_t k;
    bool hypotheses_ok;
};

bool needs_hypotheses(Criterion c) {
    return c == Criterion::alpha || c == Criterion::monogenic || c == Criterion::all;
}

std::optional<SearchHit> evaluate_cell(const KPlan& plan, std::uint64_t p,
                                       Criterion criterion, std::uint64_t factor_budget) {
    const std::uint64_t k = plan.k;
    const auto periods = lucas::prime_periods(k, p);
    SearchHit hit{k, p, periods.pi_p, periods.pi_p2, criterion, std::nullopt};
    bool is_hit = false;
    switch (criterion) {
        case Criterion::period:
            is_hit = periods.pi_p2 == periods.pi_p;
            break;
        case Criterion::entry:
            if (p == 2 || !plan.hypotheses_ok) {
                hit.basis = Criterion::period;
                is_hit = periods.pi_p2 == periods.pi_p;
            } else {
                is_hit = is_wss_by_entry(k, p);
            }
            break;
        case Criterion::alpha:
            if (p == 2) {
                hit.basis = Criterion::period;
                is_hit = periods.pi_p2 == periods.pi_p;
            } else {
                is_hit = quadring::eval_fp_alpha(k, p).is_zero();
            }
            break;
        case Criterion::monogenic:
            is_hit = !trinomial::is_monogenic_fp(k, p, factor_budget).monogenic;
            break;
        case Criterion::all: {
            WssClassification c = evaluate_criteria(k, p, factor_budget);
            if (!c.consistent) throw InternalInconsistency(c);
            is_hit = c.is_wss();
            hit.classification = c;
            break;
        }
    }
    if (!is_hit) return std::nullopt;
    return hit;
}

}  // namespace

SearchResult search(const SearchOptions& o) {
    if (o.k_min == 0) throw InvalidArgument("search: k_min must be >= 1");
    if (o.k_min > o.k_max) {
        throw InvalidArgument("search: empty k range [" + std::to_string(o.k_min) + ", " +
                              std::to_string(o.k_max) + "]");
    }
    if (o.p_max < 2) throw InvalidArgument("search: p_max must be >= 2");

    SearchResult result;
    result.criterion = o.criterion;

    std::vector<KPlan> plans;
    for (std::uint64_t k = o.k_min; k <= o.k_max; ++k) {
        const WssHypotheses h = validate_k(k, o.factor_budget);
        if (!h.satisfied() && needs_hypotheses(o.criterion)) {
            result.skipped.push_back({k, h.violation()});
            continue;
        }
        plans.push_back({k, h.satisfied()});
    }

    const std::vector<std::uint64_t> primes = intmath::primes_up_to(o.p_max);
    const std::uint64_t total = plans.size() * primes.size();
    result.cells_evaluated = total;

    unsigned jobs = o.jobs != 0 ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(total, 1)));

    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::vector<std::vector<SearchHit>> per_worker(jobs);

    auto worker = [&](unsigned id) {
        auto& local = per_worker[id];
        while (!stop.load(std::memory_order_relaxed)) {
            const std::uint64_t cell = next.fetch_add(1, std::memory_order_relaxed);
            if (cell >= total) break;
            const KPlan& plan = plans[cell / primes.size()];
            const std::uint64_t p = primes[cell % primes.size()];
            try {
                if (auto hit = evaluate_cell(plan, p, o.criterion, o.factor_budget)) {
                    local.push_back(std::move(*hit));
                }
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                stop = true;
            }
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(jobs);
        for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    }
    if (first_error) std::rethrow_exception(first_error);

    for (auto& local : per_worker) {
        result.hits.insert(result.hits.end(), std::make_move_iterator(local.begin()),
                           std::make_move_iterator(local.end()));
    }
    std::sort(result.hits.begin(), result.hits.end(), [](const SearchHit& a, const SearchHit& b) {
        return a.k != b.k ? a.k < b.k : a.p < b.p;
    });
    return result;
}

}  // namespace kwss::wss
