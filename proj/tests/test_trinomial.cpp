#include <doctest.h>

#include <array>
#include <random>

#include "kwss/error.hpp"
#include "kwss/hypotheses.hpp"
#include "kwss/poly.hpp"
#include "kwss/trinomial.hpp"
#include "oracle.hpp"

using namespace kwss;
using namespace kwss::trinomial;

namespace {

std::vector<std::int64_t> coeffs_of(const Trinomial& t) {
    std::vector<std::int64_t> f(t.n() + 1, 0);
    f[0] = t.b().get_si();
    f[t.m()] = t.a().get_si();
    f[t.n()] = 1;
    return f;
}

Integer pow_int(long base, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(std::labs(base)), e);
    if (base < 0 && e % 2 == 1) r = -r;
    return r;
}

}  // namespace

TEST_CASE("Trinomial construction") {
    CHECK_THROWS_AS(Trinomial(3, 3, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(Trinomial(3, 0, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(Trinomial(3, 1, 1, 0), InvalidArgument);
    const Trinomial t(12, 8, 3, -2);
    CHECK(t.r() == 4);
    CHECK(t.n1() == 3);
    CHECK(t.m1() == 2);
    CHECK(fp_trinomial(2, 13) == Trinomial(26, 13, -2, -1));
}

TEST_CASE("discriminant_resultant examples") {
    CHECK(discriminant_resultant(Trinomial(2, 1, -1, -1)) == 5);
    CHECK(discriminant_resultant(Trinomial(6, 3, -1, -1)) == 91125);
    CHECK(discriminant_resultant(Trinomial(4, 2, -1, -1)) == -400);
    CHECK(poly::discriminant({-1, -1, 1}) == 5);
}

TEST_CASE("fp_discriminant examples") {
    CHECK(fp_discriminant(1, 3) == 91125);
    CHECK(fp_discriminant(1, 2) == -400);
    CHECK(fp_discriminant(2, 3) == 729 * 512);
    CHECK(fp_discriminant(2, 3) == discriminant_resultant(fp_trinomial(2, 3)));
    CHECK_THROWS_AS(fp_discriminant(1, 4), InvalidArgument);
}

TEST_CASE("fp_discriminant against the Sylvester determinant on a grid") {
    for (std::uint64_t k = 1; k <= 10; ++k) {
        for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
            REQUIRE(fp_discriminant(k, p) == discriminant_resultant(fp_trinomial(k, p)));
        }
    }
}

TEST_CASE("closed-form discriminant against the Sylvester determinant on random trinomials") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 400; ++i) {
        const std::uint64_t n = 2 + rng() % 11;
        const std::uint64_t m = 1 + rng() % (n - 1);
        const long a = static_cast<long>(rng() % 61) - 30;
        long b = static_cast<long>(rng() % 61) - 30;
        if (b == 0) b = 7;
        const Trinomial t(n, m, a, b);
        INFO(t.to_string());
        REQUIRE(discriminant_closed_form(t) == discriminant_resultant(t));
    }
}

TEST_CASE("small Sylvester determinants by cofactor expansion") {
    // det of a 3x3 integer matrix by the rule of Sarrus.
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        poly::IntMatrix m(3, std::vector<Integer>(3));
        std::array<std::array<long, 3>, 3> v{};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                v[r][c] = static_cast<long>(rng() % 21) - 10;
                m[r][c] = v[r][c];
            }
        }
        const long sarrus = v[0][0] * v[1][1] * v[2][2] + v[0][1] * v[1][2] * v[2][0] +
                            v[0][2] * v[1][0] * v[2][1] - v[0][2] * v[1][1] * v[2][0] -
                            v[0][0] * v[1][2] * v[2][1] - v[0][1] * v[1][0] * v[2][2];
        REQUIRE(poly::determinant(m) == sarrus);
    }
}

TEST_CASE("jks_d_value examples") {
    const auto d1 = jks_d_value(Trinomial(2, 1, -1, -1));
    CHECK(d1.d == -5);
    CHECK(d1.normalized == -5);

    for (std::uint64_t k : {1, 2, 3, 7}) {
        for (std::uint64_t p : {2, 3, 13}) {
            const auto d = jks_d_value(fp_trinomial(k, p));
            const Integer kk = Integer(k) * k + 4;
            CHECK(d.d == -Integer(p * p) * kk);
            CHECK(d.normalized == -kk);
        }
    }

    // 16 - 2 * 2 = 12; squared it gives the discriminant 144 of
    // (x^2 + x + 1)(x^2 - x + 1).
    const Trinomial t3(4, 2, 1, 1);
    const auto d3 = jks_d_value(t3);
    CHECK(d3.d == 12);
    CHECK(d3.normalized == 3);
    CHECK(discriminant_resultant(t3) == 144);
}

TEST_CASE("jks_d_value against direct substitution") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t n = 2 + rng() % 11;
        const std::uint64_t m = 1 + rng() % (n - 1);
        const long a = static_cast<long>(rng() % 41) - 20;
        long b = static_cast<long>(rng() % 41) - 20;
        if (b == 0) b = -3;
        const Trinomial t(n, m, a, b);
        const std::uint64_t r = std::gcd(n, m), n1 = n / r, m1 = m / r;
        const Integer expected =
            pow_int(static_cast<long>(n), n1) * pow_int(b, n1 - m1) -
            pow_int(-1, n1) * pow_int(static_cast<long>(m), m1) *
                pow_int(static_cast<long>(n - m), n1 - m1) * pow_int(a, n1);
        const auto dv = jks_d_value(t);
        REQUIRE(dv.d == expected);
        REQUIRE(dv.normalized * pow_int(static_cast<long>(r), n1) == expected);
    }
}

TEST_CASE("jks_check_prime examples") {
    const Trinomial f3(6, 3, -1, -1);
    const auto v3 = jks_check_prime(f3, 3);
    CHECK_FALSE(v3.divides_index);
    CHECK(v3.item_used == 4);

    const auto v5 = jks_check_prime(f3, 5);
    CHECK_FALSE(v5.divides_index);
    CHECK(v5.item_used == 5);

    const auto v13 = jks_check_prime(fp_trinomial(2, 13), 13);
    CHECK(v13.divides_index);
    CHECK(v13.item_used == 4);

    CHECK_THROWS_AS(jks_check_prime(f3, 7), PreconditionError);
    CHECK_THROWS_AS(jks_check_prime(f3, 0), InvalidArgument);
    CHECK_THROWS_AS(jks_check_prime(f3, 15), InvalidArgument);
}

TEST_CASE("jks_check_prime agrees with Dedekind's criterion on random trinomials") {
    std::mt19937_64 rng(12345);
    std::array<int, 6> item_hits{};
    std::array<int, 6> item_positive{};
    int checked = 0;

    // Mix of random trinomials and ones built to land in items 1-3, where
    // q must divide A, B or M.
    for (int i = 0; i < 6000; ++i) {
        const std::uint64_t n = 2 + rng() % 11;
        const std::uint64_t m = 1 + rng() % (n - 1);
        long a, b;
        const int mode = static_cast<int>(rng() % 4);
        const long small_primes[] = {2, 3, 5, 7};
        const long q0 = small_primes[rng() % 4];
        switch (mode) {
            case 0:
                a = static_cast<long>(rng() % 61) - 30;
                b = static_cast<long>(rng() % 61) - 30;
                break;
            case 1:  // q | A and q | B
                a = q0 * (static_cast<long>(rng() % 9) - 4);
                b = q0 * (static_cast<long>(rng() % 9) - 4);
                if (rng() % 2) b *= q0;
                break;
            case 2:  // q | A only
                a = q0 * (static_cast<long>(rng() % 9) - 4);
                b = static_cast<long>(rng() % 29) - 14;
                break;
            default:  // q | B only
                a = static_cast<long>(rng() % 29) - 14;
                b = q0 * (static_cast<long>(rng() % 9) - 4);
                break;
        }
        if (b == 0) b = 1;
        if (a == 0) a = -1;
        const Trinomial t(n, m, a, b);
        const Integer disc = discriminant_closed_form(t);
        if (disc == 0) continue;
        Integer absd = abs(disc);
        std::vector<Integer> qs;
        try {
            qs = intmath::factorize(absd, 200000).primes();
        } catch (const FactorizationIncomplete&) {
            continue;
        }
        const auto f = coeffs_of(t);
        for (const auto& q : qs) {
            if (q > 1'000'000) continue;
            const auto v = jks_check_prime(t, q);
            const bool expected = oracle::dedekind_divides_index(f, q.get_si());
            INFO(t.to_string(), " q=", q.get_str(), " item=", v.item_used, " ", v.detail);
            REQUIRE(v.divides_index == expected);
            REQUIRE(v.item_used == jks_item(t, q));
            ++item_hits[v.item_used];
            if (v.divides_index) ++item_positive[v.item_used];
            ++checked;
        }
    }
    CHECK(checked > 1000);
    for (int item = 1; item <= 5; ++item) {
        INFO("item ", item);
        CHECK(item_hits[item] > 0);
        CHECK(item_positive[item] > 0);
    }
}

TEST_CASE("jks_check_prime agrees with Dedekind's criterion on the F_p family") {
    for (std::uint64_t k = 1; k <= 12; ++k) {
        for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
            const Trinomial t = fp_trinomial(k, p);
            const auto f = coeffs_of(t);
            for (const auto& q : intmath::factorize(abs(fp_discriminant(k, p))).primes()) {
                REQUIRE(jks_check_prime(t, q).divides_index ==
                        oracle::dedekind_divides_index(f, q.get_si()));
            }
        }
    }
}

TEST_CASE("gh_coprimality examples") {
    CHECK(gh_coprimality(1, 3));
    CHECK(gh_coprimality(1, 2));
    CHECK_FALSE(gh_coprimality(2, 13));
}

TEST_CASE("gh_coprimality is the negation of the item-4 verdict at q = p") {
    for (std::uint64_t k = 1; k <= 40; ++k) {
        for (auto p : oracle::trial_primes(2, 80)) {
            const auto v = jks_check_prime(fp_trinomial(k, p), p);
            INFO("k=", k, " p=", p);
            REQUIRE(gh_coprimality(k, p) == !v.divides_index);
            if (k % p != 0) REQUIRE(v.item_used == 4);
        }
    }
}

TEST_CASE("is_monogenic_fp examples") {
    const auto r13 = is_monogenic_fp(1, 3);
    CHECK(r13.monogenic);
    CHECK(r13.discriminant == 91125);
    REQUIRE(r13.verdicts.size() == 2);
    CHECK(r13.verdicts[0].q == 3);
    CHECK(r13.verdicts[0].item_used == 4);
    CHECK(r13.verdicts[1].q == 5);
    CHECK(r13.verdicts[1].item_used == 5);

    CHECK_FALSE(is_monogenic_fp(2, 13).monogenic);
    CHECK(is_monogenic_fp(1, 2).monogenic);
    CHECK(is_monogenic_fp(1, 5).monogenic);
    CHECK_THROWS_AS(is_monogenic_fp(4, 3), HypothesisViolation);
    CHECK_THROWS_AS(is_monogenic_fp(11, 3), HypothesisViolation);
    CHECK_THROWS_AS(is_monogenic_fp(1, 9), InvalidArgument);
}

TEST_CASE("monogenicity verdicts: only q = p can divide the index, and it matches gh") {
    for (std::uint64_t k = 1; k <= 40; ++k) {
        if (!wss::validate_k(k).satisfied()) continue;
        for (auto p : oracle::trial_primes(2, 150)) {
            const auto rep = is_monogenic_fp(k, p);
            for (const auto& v : rep.verdicts) {
                if (v.q != p) REQUIRE_FALSE(v.divides_index);
            }
            REQUIRE(rep.monogenic == gh_coprimality(k, p));
            if (p >= 3 && (k * k + 4) % p == 0) REQUIRE(rep.monogenic);
        }
    }
}
