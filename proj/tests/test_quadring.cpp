#include <doctest.h>

#include <numeric>
#include <random>

#include "kwss/error.hpp"
#include "kwss/hypotheses.hpp"
#include "kwss/lucas.hpp"
#include "kwss/quadring.hpp"
#include "oracle.hpp"

using namespace kwss;
using namespace kwss::quadring;

namespace {

QuadElem random_elem(std::mt19937_64& rng, std::uint64_t k, std::uint64_t m) {
    return {rng() % m, rng() % m, k, m};
}

}  // namespace

TEST_CASE("qr_mul examples") {
    const auto a = QuadElem::alpha(5, 1000);
    CHECK(qr_mul(a, a) == QuadElem(1, 5, 5, 1000));

    const auto a3 = QuadElem::alpha(1, 3);
    const auto a2 = qr_mul(a3, a3);
    CHECK(qr_mul(a2, a2) == QuadElem(2, 0, 1, 3));

    for (std::uint64_t k : {1ULL, 2ULL, 7ULL}) {
        const auto x = QuadElem::alpha(k, 101);
        CHECK(qr_mul(x, conjugate(x)) == QuadElem::constant(-1, k, 101));
    }
    CHECK_THROWS_AS(qr_mul(QuadElem::alpha(1, 3), QuadElem::alpha(2, 3)), IncompatibleElements);
    CHECK_THROWS_AS(qr_mul(QuadElem::alpha(1, 3), QuadElem::alpha(1, 5)), IncompatibleElements);
}

TEST_CASE("qr_pow examples") {
    CHECK(qr_pow(QuadElem(4, 7, 3, 11), 0) == QuadElem::one(3, 11));
    CHECK(qr_pow(QuadElem::alpha(1, 3), 8) == QuadElem::one(1, 3));
    CHECK(qr_pow(QuadElem::alpha(1, 2), 3) == QuadElem::one(1, 2));
}

TEST_CASE("qr_pow matches repeated naive multiplication") {
    std::mt19937_64 rng(11);
    for (std::uint64_t k = 1; k <= 6; ++k) {
        for (std::uint64_t m : {2ULL, 9ULL, 25ULL, 97ULL}) {
            const auto x = random_elem(rng, k, m);
            for (std::uint64_t e = 0; e <= 60; ++e) {
                const auto expected = oracle::naive_quad_pow({x.a(), x.b()}, e, k, m);
                const auto got = qr_pow(x, e);
                REQUIRE(got.a() == expected.a);
                REQUIRE(got.b() == expected.b);
            }
        }
    }
}

TEST_CASE("conjugate examples") {
    CHECK(conjugate(QuadElem::alpha(4, 10)) == QuadElem(4, 9, 4, 10));
    const QuadElem x(3, 6, 1, 9);
    CHECK(conjugate(x) == QuadElem(0, 3, 1, 9));
    CHECK(conjugate(conjugate(x)) == x);
}

TEST_CASE("ring axioms on random samples") {
    std::mt19937_64 rng(2024);
    for (std::uint64_t k : {1ULL, 2ULL, 3ULL, 6ULL, 29ULL}) {
        for (std::uint64_t m : {2ULL, 4ULL, 9ULL, 49ULL, 169ULL, 1000003ULL}) {
            for (int i = 0; i < 1000; ++i) {
                const auto x = random_elem(rng, k, m);
                const auto y = random_elem(rng, k, m);
                const auto z = random_elem(rng, k, m);
                REQUIRE((x * y) * z == x * (y * z));
                REQUIRE(x * y == y * x);
                REQUIRE(x * (y + z) == x * y + x * z);
                REQUIRE(conjugate(x * y) == conjugate(x) * conjugate(y));
                REQUIRE(conjugate(conjugate(x)) == x);
            }
        }
    }
}

TEST_CASE("alpha is a unit: alpha (alpha - k) = 1") {
    for (std::uint64_t k = 1; k <= 30; ++k) {
        for (std::uint64_t m = 2; m <= 200; ++m) {
            const auto a = QuadElem::alpha(k, m);
            REQUIRE(a * (a - QuadElem::constant(static_cast<std::int64_t>(k), k, m)) ==
                    QuadElem::one(k, m));
        }
    }
}

TEST_CASE("alpha^n = U_n alpha + U_{n-1}") {
    for (std::uint64_t k = 1; k <= 8; ++k) {
        for (std::uint64_t m : {2ULL, 10ULL, 97ULL, 169ULL}) {
            auto power = QuadElem::alpha(k, m);
            for (std::uint64_t n = 1; n <= 500; ++n) {
                REQUIRE(power.b() == oracle::naive_lucas(k, n, m));
                REQUIRE(power.a() == oracle::naive_lucas(k, n - 1, m));
                power = power * QuadElem::alpha(k, m);
            }
        }
    }
}

TEST_CASE("ord_alpha examples") {
    CHECK(ord_alpha(1, 3) == 8);
    CHECK(ord_alpha(1, 2) == 3);
    CHECK(ord_alpha(1, 9) == 24);
    CHECK(lucas::pisano_period(1, 9) == 24);
    CHECK_THROWS_AS(ord_alpha(1, 9, 10), BudgetExceeded);
}

TEST_CASE("orders of alpha and beta against the period") {
    for (std::uint64_t k = 1; k <= 20; ++k) {
        for (std::uint64_t m = 2; m <= 300; ++m) {
            const auto pi = lucas::pisano_period(k, m);
            const auto oa = ord_alpha(k, m);
            const auto ob = ord_beta(k, m);
            REQUIRE(std::lcm(oa, ob) == pi);
            // In the generic ring alpha^n = 1 iff (U_n, U_{n+1}) = (0, 1), so
            // the order of alpha alone already equals the period.
            REQUIRE(oa == pi);
        }
    }
}

TEST_CASE("eval_fp_alpha examples") {
    CHECK(eval_fp_alpha(1, 3) == QuadElem(3, 6, 1, 9));
    CHECK(eval_fp_alpha(2, 13).is_zero());
    CHECK(oracle::brute_is_wss(2, 13));
    CHECK_FALSE(eval_fp_alpha(1, 7).is_zero());
    CHECK_FALSE(oracle::brute_is_wss(1, 7));
    CHECK_THROWS_AS(eval_fp_alpha(1, 9), InvalidArgument);
}

TEST_CASE("F_p(alpha) and F_p(beta) vanish together; Euler-type identities in R_p") {
    const auto primes = oracle::trial_primes(3, 200);
    for (std::uint64_t k = 1; k <= 30; ++k) {
        const bool valid = wss::validate_k(k).satisfied();
        for (auto p : primes) {
            if (valid) {
                REQUIRE(eval_fp_alpha(k, p).is_zero() == eval_fp_beta(k, p).is_zero());
            }
            const int delta = oracle::euler_legendre(static_cast<std::int64_t>(k * k + 4), p);
            const auto a = QuadElem::alpha(k, p);
            if (delta == 1) REQUIRE(qr_pow(a, p - 1) == QuadElem::one(k, p));
            if (delta == -1) REQUIRE(qr_pow(a, p + 1) == QuadElem::constant(-1, k, p));
        }
    }
}
