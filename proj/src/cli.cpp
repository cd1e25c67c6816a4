#include "kwss/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "kwss/error.hpp"
#include "kwss/json_io.hpp"
#include "kwss/lucas.hpp"
#include "kwss/search.hpp"
#include "kwss/trinomial.hpp"
#include "kwss/wss.hpp"

namespace kwss::cli {

namespace {

using json_io::json;

constexpr std::uint64_t kDefaultResultantMaxDegree = 120;

struct Settings {
    std::string format = "text";
    std::optional<std::uint64_t> factor_budget_flag;
    bool no_timing = false;

    std::uint64_t factor_budget = intmath::kDefaultFactorBudget;
    bool json() const { return format == "json"; }
};

struct Outcome {
    json inputs = json::object();
    json result;
    std::string text;
    int code = kOk;
    std::optional<std::string> error_kind;
    std::string error_message;
};

const char* yes_no(bool v) { return v ? "true" : "false"; }

std::string render_classification(const wss::WssClassification& c) {
    std::ostringstream os;
    auto row = [&](const std::string& name, const std::string& value) {
        os << "  " << std::left << std::setw(16) << name << value << "\n";
    };
    const std::string derived = c.entry_alpha_derived ? " (from period)" : "";
    os << "k = " << c.k << ", p = " << c.p << "\n";
    row("delta_p", c.delta_applicable ? std::to_string(c.delta) : "n/a (p = 2)");
    row("pi(p)", std::to_string(c.pi_p));
    row("pi(p^2)", std::to_string(c.pi_p2));
    row("by_period", yes_no(c.by_period));
    row("by_entry", yes_no(c.by_entry) + derived);
    row("by_alpha", yes_no(c.by_alpha) + derived);
    row("by_monogenic", yes_no(c.by_monogenic));
    row("consistent", yes_no(c.consistent));
    row("is_wss", yes_no(c.is_wss()));
    return os.str();
}

std::string render_search(const wss::SearchResult& r, const wss::SearchOptions& o) {
    std::ostringstream os;
    os << "criterion " << wss::to_string(r.criterion) << ", k in [" << o.k_min << ", " << o.k_max
       << "], p <= " << o.p_max << ", cells " << r.cells_evaluated << "\n";
    os << std::left << std::setw(8) << "k" << std::setw(12) << "p" << std::setw(14) << "pi(p)"
       << std::setw(14) << "pi(p^2)" << "basis\n";
    for (const auto& h : r.hits) {
        os << std::left << std::setw(8) << h.k << std::setw(12) << h.p << std::setw(14) << h.pi_p
           << std::setw(14) << h.pi_p2 << wss::to_string(h.basis) << "\n";
    }
    os << "hits: " << r.hits.size() << "\n";
    for (const auto& s : r.skipped) os << "skipped k = " << s.k << ": " << s.reason << "\n";
    return os.str();
}

std::string render_report(const trinomial::MonogenicityReport& r, bool detailed) {
    std::ostringstream os;
    os << "F(x) = " << r.trinomial.to_string() << "\n";
    os << "discriminant = " << r.discriminant.get_str() << "\n";
    os << "monogenic: " << yes_no(r.monogenic) << "\n";
    if (detailed) {
        for (const auto& v : r.verdicts) {
            os << "  q = " << v.q.get_str() << ": item " << v.item_used << ", "
               << (v.divides_index ? "divides the index" : "does not divide the index") << "\n"
               << "    " << v.detail << "\n";
        }
    }
    return os.str();
}

Outcome cmd_check(std::uint64_t k, std::uint64_t p, const Settings& s) {
    Outcome o;
    o.inputs = {{"k", k}, {"p", p}};
    if (k == 0) throw InvalidArgument("--k must be >= 1");
    if (!intmath::is_prime_u64(p)) throw InvalidArgument("--p " + std::to_string(p) + " is not prime");
    try {
        const auto c = wss::classify(k, p, s.factor_budget);
        o.result = json_io::encode(c);
        o.text = render_classification(c);
    } catch (const wss::InternalInconsistency& e) {
        o.result = json_io::encode(e.classification());
        o.text = render_classification(e.classification());
        o.code = kInternalInconsistency;
        o.error_kind = "internal-inconsistency";
        o.error_message = e.what();
    }
    return o;
}

Outcome cmd_search(const wss::SearchOptions& opts) {
    Outcome o;
    // --jobs is an execution setting, not an input: output must not depend on it.
    o.inputs = {{"k_min", opts.k_min},
                {"k_max", opts.k_max},
                {"p_max", opts.p_max},
                {"criterion", std::string(wss::to_string(opts.criterion))}};
    const auto r = wss::search(opts);
    o.result = json_io::encode(r);
    o.text = render_search(r, opts);
    return o;
}

Outcome cmd_monogenic(std::uint64_t k, std::uint64_t p, bool report, const Settings& s) {
    Outcome o;
    o.inputs = {{"k", k}, {"p", p}};
    if (k == 0) throw InvalidArgument("--k must be >= 1");
    if (!intmath::is_prime_u64(p)) throw InvalidArgument("--p " + std::to_string(p) + " is not prime");
    const auto r = trinomial::is_monogenic_fp(k, p, s.factor_budget);
    o.result = json_io::encode(r);
    o.text = render_report(r, report);
    return o;
}

Outcome cmd_period(std::uint64_t k, std::uint64_t m) {
    Outcome o;
    o.inputs = {{"k", k}, {"m", m}};
    if (k == 0) throw InvalidArgument("--k must be >= 1");
    const std::uint64_t period = lucas::pisano_period(k, m);
    o.result = {{"period", period}};
    o.text = std::to_string(period) + "\n";
    return o;
}

Outcome cmd_discriminant(std::uint64_t k, std::uint64_t p, std::uint64_t max_degree) {
    Outcome o;
    o.inputs = {{"k", k}, {"p", p}};
    if (k == 0) throw InvalidArgument("--k must be >= 1");
    if (!intmath::is_prime_u64(p)) throw InvalidArgument("--p " + std::to_string(p) + " is not prime");
    const Integer closed = trinomial::fp_discriminant(k, p);
    std::optional<Integer> res;
    if (2 * p <= max_degree) res = trinomial::discriminant_resultant(trinomial::fp_trinomial(k, p));
    o.result = {{"closed_form", closed.get_str()},
                {"resultant", res ? json(res->get_str()) : json(nullptr)},
                {"agree", res ? json(*res == closed) : json(nullptr)}};
    std::ostringstream os;
    os << "closed form : " << closed.get_str() << "\n";
    os << "resultant   : " << (res ? res->get_str() : "skipped (degree above limit)") << "\n";
    os << "agree       : " << (res ? yes_no(*res == closed) : "n/a") << "\n";
    o.text = os.str();
    if (res && *res != closed) {
        o.code = kInternalInconsistency;
        o.error_kind = "internal-inconsistency";
        o.error_message = "closed-form discriminant disagrees with the resultant";
    }
    return o;
}

void add_common(CLI::App* sub, Settings& s) {
    sub->add_option("--format", s.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--factor-budget", s.factor_budget_flag,
                    "Pollard rho iteration budget (env WSS_FACTOR_BUDGET)");
    sub->add_flag("--no-timing", s.no_timing, "Report timing_ms as 0");
}

std::optional<std::uint64_t> budget_from_env(std::ostream& err, bool& bad) {
    const char* raw = std::getenv("WSS_FACTOR_BUDGET");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    try {
        std::size_t used = 0;
        const std::string text(raw);
        if (text.front() == '-') throw std::invalid_argument("negative");
        const auto v = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        err << "error: WSS_FACTOR_BUDGET is not a nonnegative integer: " << raw << "\n";
        bad = true;
        return std::nullopt;
    }
}

void emit(std::ostream& out, std::ostream& err, const std::string& command, const Outcome& o,
          const Settings& s, double ms) {
    const double timing = s.no_timing ? 0.0 : ms;
    if (s.json()) {
        json record = json_io::output_record(command, o.inputs, o.result, timing);
        if (o.error_kind) {
            record["error"] = {{"kind", *o.error_kind}, {"message", o.error_message}};
        }
        out << record.dump() << "\n";
    } else {
        out << o.text;
    }
    if (o.error_kind) err << "error: " << o.error_message << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"k-Wall-Sun-Sun primes and monogenicity of x^(2p) - kx^p - 1", "kwss"};
    app.require_subcommand(1);
    Settings settings;

    std::uint64_t k = 0, p = 0, m = 0;
    bool report = false;
    std::uint64_t max_degree = kDefaultResultantMaxDegree;
    wss::SearchOptions search_opts;
    std::string criterion = "period";

    auto* check = app.add_subcommand("check", "Classify p for k by all four criteria");
    check->add_option("--k", k, "Recurrence coefficient k >= 1")->required();
    check->add_option("--p", p, "Prime p")->required();
    add_common(check, settings);

    auto* search = app.add_subcommand("search", "Search a (k, p) grid for k-Wall-Sun-Sun primes");
    search->add_option("--k-min", search_opts.k_min)->required();
    search->add_option("--k-max", search_opts.k_max)->required();
    search->add_option("--p-max", search_opts.p_max)->required();
    search->add_option("--criterion", criterion)
        ->check(CLI::IsMember({"period", "entry", "alpha", "monogenic", "all"}))
        ->capture_default_str();
    search->add_option("--jobs", search_opts.jobs, "Worker threads (0 = hardware)");
    add_common(search, settings);

    auto* mono = app.add_subcommand("monogenic", "Index analysis of x^(2p) - kx^p - 1");
    mono->add_option("--k", k)->required();
    mono->add_option("--p", p)->required();
    mono->add_flag("--report", report, "Print the verdict at every prime of the discriminant");
    add_common(mono, settings);

    auto* period = app.add_subcommand("period", "Period of U_n(k, -1) modulo m");
    period->add_option("--k", k)->required();
    period->add_option("--m", m)->required();
    add_common(period, settings);

    auto* disc = app.add_subcommand("discriminant",
                                    "Discriminant of x^(2p) - kx^p - 1, closed form and resultant");
    disc->add_option("--k", k)->required();
    disc->add_option("--p", p)->required();
    disc->add_option("--resultant-max-degree", max_degree,
                     "Skip the Sylvester resultant above this degree")
        ->capture_default_str();
    add_common(disc, settings);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidArguments;
    }

    bool bad_env = false;
    const auto env_budget = budget_from_env(err, bad_env);
    if (bad_env) return kInvalidArguments;
    settings.factor_budget = settings.factor_budget_flag.value_or(
        env_budget.value_or(intmath::kDefaultFactorBudget));
    search_opts.factor_budget = settings.factor_budget;
    search_opts.criterion = *wss::parse_criterion(criterion);

    std::string command;
    std::function<Outcome()> body;
    if (*check) {
        command = "check";
        body = [&] { return cmd_check(k, p, settings); };
    } else if (*search) {
        command = "search";
        body = [&] { return cmd_search(search_opts); };
    } else if (*mono) {
        command = "monogenic";
        body = [&] { return cmd_monogenic(k, p, report, settings); };
    } else if (*period) {
        command = "period";
        body = [&] { return cmd_period(k, m); };
    } else {
        command = "discriminant";
        body = [&] { return cmd_discriminant(k, p, max_degree); };
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    auto fail = [&](int code, const char* kind, const std::string& message) {
        outcome.result = nullptr;
        outcome.text.clear();
        outcome.code = code;
        outcome.error_kind = kind;
        outcome.error_message = message;
    };
    try {
        outcome = body();
    } catch (const HypothesisViolation& e) {
        fail(kHypothesisViolation, "hypothesis-violation", e.what());
    } catch (const FactorizationIncomplete& e) {
        fail(kBudgetExceeded, "budget-exceeded", e.what());
    } catch (const BudgetExceeded& e) {
        fail(kBudgetExceeded, "budget-exceeded", e.what());
    } catch (const wss::InternalInconsistency& e) {
        fail(kInternalInconsistency, "internal-inconsistency", e.what());
        outcome.result = json_io::encode(e.classification());
    } catch (const InvalidArgument& e) {
        fail(kInvalidArguments, "invalid-argument", e.what());
    } catch (const UnsupportedCriterion& e) {
        fail(kInvalidArguments, "invalid-argument", e.what());
    } catch (const std::exception& e) {
        fail(kInternalInconsistency, "internal-error", e.what());
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    const double ms = std::chrono::duration<double, std::milli>(elapsed).count();

    if (outcome.inputs.empty()) {
        // The body threw before filling its inputs.
        if (command == "search") {
            outcome.inputs = {{"k_min", search_opts.k_min},
                              {"k_max", search_opts.k_max},
                              {"p_max", search_opts.p_max},
                              {"criterion", criterion}};
        } else if (command == "period") {
            outcome.inputs = {{"k", k}, {"m", m}};
        } else {
            outcome.inputs = {{"k", k}, {"p", p}};
        }
    }
    emit(out, err, command, outcome, settings, ms);
    return outcome.code;
}

}  // namespace kwss::cli
