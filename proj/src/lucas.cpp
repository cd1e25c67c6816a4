#include "kwss/lucas.hpp"

#include <array>
#include <bit>
#include <string>

#include "kwss/error.hpp"
#include "kwss/intmath.hpp"

namespace kwss::lucas {

using intmath::add_mod;
using intmath::mul_mod;
using intmath::sub_mod;

namespace {

void check_prime(std::uint64_t p, const char* who) {
    if (!intmath::is_prime_u64(p)) {
        throw InvalidArgument(std::string(who) + ": " + std::to_string(p) + " is not prime");
    }
}

std::uint64_t checked_square(std::uint64_t p) {
    if (p > 3'037'000'499) {  // floor(sqrt(2^63 - 1))
        throw InvalidModulus("p^2 exceeds the residue range for p = " + std::to_string(p));
    }
    return p * p;
}

}  // namespace

LucasPair lucas_pair(std::uint64_t k, std::uint64_t n, std::uint64_t m) {
    intmath::check_modulus(m);
    const std::uint64_t kk = k % m;
    std::uint64_t a = 0;      // U_j
    std::uint64_t b = 1 % m;  // U_{j+1}
    for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
        // j -> 2j
        const std::uint64_t v = sub_mod(add_mod(b, b, m), mul_mod(kk, a, m), m);
        const std::uint64_t u2 = mul_mod(a, v, m);
        const std::uint64_t u2p1 = add_mod(mul_mod(b, b, m), mul_mod(a, a, m), m);
        a = u2;
        b = u2p1;
        if ((n >> bit) & 1) {
            // 2j -> 2j + 1
            const std::uint64_t next = add_mod(mul_mod(kk, b, m), a, m);
            a = b;
            b = next;
        }
    }
    return {a, b};
}

std::uint64_t lucas_u(std::uint64_t k, std::uint64_t n, std::uint64_t m) {
    return lucas_pair(k, n, m).u_n;
}

std::uint64_t pisano_period(std::uint64_t k, std::uint64_t m) {
    intmath::check_modulus(m);
    const std::uint64_t kk = k % m;
    std::uint64_t a = 0, b = 1;
    std::uint64_t t = 0;
    do {
        const std::uint64_t next = add_mod(mul_mod(kk, b, m), a, m);
        a = b;
        b = next;
        ++t;
    } while (a != 0 || b != 1);
    return t;
}

PrimePeriods prime_periods(std::uint64_t k, std::uint64_t p) {
    check_prime(p, "prime_periods");
    const std::uint64_t p2 = checked_square(p);
    const std::uint64_t pi = pisano_period(k, p);
    const LucasPair at = lucas_pair(k, pi, p2);
    const bool stable = at.u_n == 0 && at.u_next == 1;
    return {pi, stable ? pi : p * pi};
}

std::uint64_t period_p_squared(std::uint64_t k, std::uint64_t p) {
    return prime_periods(k, p).pi_p2;
}

std::uint64_t companion_order(std::uint64_t k, std::uint64_t m) {
    intmath::check_modulus(m);
    using Mat = std::array<std::uint64_t, 4>;  // row-major 2x2
    const Mat c{0, 1, 1, k % m};
    const Mat identity{1, 0, 0, 1};
    auto mul = [m](const Mat& x, const Mat& y) {
        return Mat{
            add_mod(mul_mod(x[0], y[0], m), mul_mod(x[1], y[2], m), m),
            add_mod(mul_mod(x[0], y[1], m), mul_mod(x[1], y[3], m), m),
            add_mod(mul_mod(x[2], y[0], m), mul_mod(x[3], y[2], m), m),
            add_mod(mul_mod(x[2], y[1], m), mul_mod(x[3], y[3], m), m),
        };
    };
    // C is invertible (det = -1), so the powers return to I within m^2 steps.
    Mat power = c;
    std::uint64_t t = 1;
    while (power != identity) {
        power = mul(power, c);
        ++t;
    }
    return t;
}

}  // namespace kwss::lucas
