#pragma once

// The Lucas sequence U_n(k, -1): U_0 = 0, U_1 = 1, U_n = k U_{n-1} + U_{n-2},
// taken modulo m, together with its period and the companion-matrix order.

#include <cstdint>

namespace kwss::lucas {

/// (U_n, U_{n+1}) mod m.
struct LucasPair {
    std::uint64_t u_n = 0;
    std::uint64_t u_next = 0;

    friend bool operator==(const LucasPair&, const LucasPair&) = default;
};

/// (U_n, U_{n+1}) mod m by fast doubling:
///   U_{2n}   = U_n (2 U_{n+1} - k U_n)
///   U_{2n+1} = U_{n+1}^2 + U_n^2
LucasPair lucas_pair(std::uint64_t k, std::uint64_t n, std::uint64_t m);

/// U_n mod m. Throws InvalidModulus for m < 2 (or m >= 2^63).
std::uint64_t lucas_u(std::uint64_t k, std::uint64_t n, std::uint64_t m);

/// Least t >= 1 with (U_t, U_{t+1}) = (0, 1) mod m, by iterating the
/// recurrence until the initial state recurs.
std::uint64_t pisano_period(std::uint64_t k, std::uint64_t m);

/// Both periods at a prime, pi(p) and pi(p^2).
struct PrimePeriods {
    std::uint64_t pi_p = 0;
    std::uint64_t pi_p2 = 0;
};

/// pi(p) by iteration; pi(p^2) from the dichotomy pi(p^2) in {pi(p), p pi(p)}
/// by testing whether the state at pi(p) already returns to (0, 1) mod p^2.
PrimePeriods prime_periods(std::uint64_t k, std::uint64_t p);

std::uint64_t period_p_squared(std::uint64_t k, std::uint64_t p);

/// Order of [[0, 1], [1, k]] modulo m by repeated matrix multiplication.
std::uint64_t companion_order(std::uint64_t k, std::uint64_t m);

}  // namespace kwss::lucas
