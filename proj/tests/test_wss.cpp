#include <doctest.h>

#include "kwss/error.hpp"
#include "kwss/hypotheses.hpp"
#include "kwss/search.hpp"
#include "kwss/wss.hpp"
#include "oracle.hpp"

using namespace kwss;
using namespace kwss::wss;

TEST_CASE("validate_k examples") {
    const auto h1 = validate_k(1);
    CHECK(h1.d_value == 5);
    CHECK(h1.four_ok);
    CHECK(h1.squarefree_ok);

    CHECK_FALSE(validate_k(4).four_ok);
    CHECK(validate_k(2).d_value == 2);  // (4 + 4) / 4

    const auto h11 = validate_k(11);
    CHECK(h11.d_value == 125);
    CHECK_FALSE(h11.squarefree_ok);
    CHECK(h11.violation().find("125") != std::string::npos);

    CHECK_THROWS_AS(validate_k(0), InvalidArgument);
    CHECK_THROWS_AS(require_hypotheses(4), HypothesisViolation);
    CHECK_NOTHROW(require_hypotheses(2));
}

TEST_CASE("delta_p examples") {
    CHECK(delta_p(1, 5) == 0);
    CHECK(delta_p(1, 11) == 1);
    CHECK(delta_p(1, 7) == -1);
    CHECK_THROWS_AS(delta_p(1, 2), InvalidArgument);
    CHECK_THROWS_AS(delta_p(1, 9), InvalidArgument);
}

TEST_CASE("criterion examples") {
    CHECK_FALSE(is_wss_by_period(1, 2));
    CHECK(is_wss_by_period(2, 13));
    CHECK_FALSE(is_wss_by_period(2, 3));

    CHECK_FALSE(is_wss_by_entry(1, 7));
    CHECK(is_wss_by_entry(2, 13));
    CHECK_FALSE(is_wss_by_entry(1, 5));
    CHECK_THROWS_AS(is_wss_by_entry(1, 2), UnsupportedCriterion);

    CHECK_FALSE(is_wss_by_alpha(1, 3));
    CHECK(is_wss_by_alpha(2, 13));
    CHECK_FALSE(is_wss_by_alpha(1, 5));
    CHECK_THROWS_AS(is_wss_by_alpha(1, 2), UnsupportedCriterion);

    CHECK_FALSE(is_wss_by_monogenicity(1, 2));
    CHECK(is_wss_by_monogenicity(2, 13));
    CHECK_FALSE(is_wss_by_monogenicity(1, 5));
    CHECK_THROWS_AS(is_wss_by_monogenicity(4, 5), HypothesisViolation);
}

TEST_CASE("classify examples") {
    const auto c2 = classify(1, 2);
    CHECK_FALSE(c2.by_period);
    CHECK_FALSE(c2.by_entry);
    CHECK_FALSE(c2.by_alpha);
    CHECK_FALSE(c2.by_monogenic);
    CHECK(c2.consistent);
    CHECK_FALSE(c2.delta_applicable);
    CHECK(c2.entry_alpha_derived);
    CHECK(c2.pi_p == 3);
    CHECK(c2.pi_p2 == 6);

    const auto c13 = classify(2, 13);
    CHECK(c13.by_period);
    CHECK(c13.by_entry);
    CHECK(c13.by_alpha);
    CHECK(c13.by_monogenic);
    CHECK(c13.consistent);
    CHECK(c13.is_wss());

    const auto c11 = classify(1, 11);
    CHECK_FALSE(c11.is_wss());
    CHECK_FALSE(c11.by_monogenic);
    CHECK(c11.consistent);
    CHECK(c11.delta == 1);

    CHECK_THROWS_AS(classify(4, 3), HypothesisViolation);
    CHECK_THROWS_AS(classify(1, 6), InvalidArgument);
}

TEST_CASE("the four criteria agree with the brute-force period oracle") {
    for (std::uint64_t k = 1; k <= 30; ++k) {
        if (!validate_k(k).satisfied()) continue;
        for (auto p : oracle::trial_primes(2, 200)) {
            const auto c = classify(k, p);
            const bool truth = oracle::brute_is_wss(k, p);
            INFO("k=", k, " p=", p);
            REQUIRE(c.consistent);
            REQUIRE(c.by_period == truth);
            REQUIRE(c.by_entry == truth);
            REQUIRE(c.by_alpha == truth);
            REQUIRE(c.by_monogenic == truth);
        }
    }
}

TEST_CASE("entry criterion follows the period criterion even without the hypotheses") {
    for (std::uint64_t k = 1; k <= 40; ++k) {
        for (auto p : oracle::trial_primes(3, 200)) {
            REQUIRE(is_wss_by_entry(k, p) == is_wss_by_period(k, p));
        }
    }
}

TEST_CASE("p dividing k^2 + 4 is never Wall-Sun-Sun") {
    for (std::uint64_t k = 1; k <= 60; ++k) {
        for (auto p : oracle::trial_primes(3, 200)) {
            if ((k * k + 4) % p != 0) continue;
            REQUIRE(delta_p(k, p) == 0);
            REQUIRE_FALSE(oracle::brute_is_wss(k, p));
            REQUIRE_FALSE(is_wss_by_period(k, p));
            REQUIRE_FALSE(is_wss_by_entry(k, p));
        }
    }
}

TEST_CASE("p = 2 is never Wall-Sun-Sun for valid k") {
    for (std::uint64_t k = 1; k <= 41; ++k) {
        if (!validate_k(k).satisfied()) continue;
        REQUIRE_FALSE(classify(k, 2).is_wss());
        REQUIRE(classify(k, 2).consistent);
    }
}

TEST_CASE("search examples") {
    SearchOptions all;
    all.k_min = 2;
    all.k_max = 2;
    all.p_max = 100;
    all.criterion = Criterion::all;
    const auto r = search(all);
    REQUIRE(r.hits.size() == 2);
    CHECK(r.hits[0].p == 13);
    CHECK(r.hits[1].p == 31);
    CHECK(r.hits[0].classification.has_value());

    SearchOptions fib;
    fib.k_min = 1;
    fib.k_max = 1;
    fib.p_max = 1000;
    CHECK(search(fib).hits.empty());

    SearchOptions four;
    four.k_min = 4;
    four.k_max = 4;
    four.p_max = 100;
    four.criterion = Criterion::monogenic;
    const auto r4 = search(four);
    CHECK(r4.hits.empty());
    REQUIRE(r4.skipped.size() == 1);
    CHECK(r4.skipped[0].k == 4);

    SearchOptions bad;
    bad.k_min = 5;
    bad.k_max = 4;
    bad.p_max = 10;
    CHECK_THROWS_AS(search(bad), InvalidArgument);
}

TEST_CASE("search hits match the oracle for every criterion") {
    for (auto crit : {Criterion::period, Criterion::entry, Criterion::alpha, Criterion::monogenic,
                      Criterion::all}) {
        SearchOptions o;
        o.k_min = 1;
        o.k_max = 12;
        o.p_max = 400;
        o.criterion = crit;
        o.jobs = 2;
        const auto r = search(o);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> got, expected;
        for (const auto& h : r.hits) got.emplace_back(h.k, h.p);
        for (std::uint64_t k = 1; k <= 12; ++k) {
            const bool skip = crit != Criterion::period && crit != Criterion::entry &&
                              !validate_k(k).satisfied();
            if (skip) continue;
            for (auto p : oracle::trial_primes(2, 400)) {
                if (oracle::brute_is_wss(k, p)) expected.emplace_back(k, p);
            }
        }
        INFO("criterion ", std::string(to_string(crit)));
        CHECK(got == expected);
    }
}

TEST_CASE("search is independent of the job count") {
    SearchOptions o;
    o.k_min = 1;
    o.k_max = 30;
    o.p_max = 300;
    o.criterion = Criterion::all;
    o.jobs = 1;
    const auto one = search(o);
    o.jobs = 4;
    const auto four = search(o);
    o.jobs = 7;
    const auto seven = search(o);
    CHECK(one == four);
    CHECK(one == seven);
}

TEST_CASE("parse_criterion") {
    CHECK(parse_criterion("all") == Criterion::all);
    CHECK(parse_criterion("monogenic") == Criterion::monogenic);
    CHECK_FALSE(parse_criterion("bogus").has_value());
    CHECK(to_string(Criterion::entry) == "entry");
}
