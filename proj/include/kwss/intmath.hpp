#pragma once

// Exact integer primitives: modular powers, Jacobi symbol, primality,
// factorization and squarefreeness.
//
// Big values are GMP integers. The fixed-width helpers at the bottom are the
// residue arithmetic used by the Lucas and quadratic-ring code; they require
// moduli below 2^63 so that a sum of two residues never wraps.

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace kwss {

using Integer = mpz_class;

namespace intmath {

inline constexpr std::uint64_t kDefaultFactorBudget = 10'000'000;
inline constexpr std::uint64_t kTrialDivisionBound = 1'000'000;
inline constexpr int kProbablePrimeRounds = 40;

/// base^exp mod m, result in [0, m). Throws InvalidModulus if m < 2.
Integer mod_pow(const Integer& base, const Integer& exp, const Integer& m);

/// Jacobi symbol (a/n) for odd n >= 1. Throws InvalidArgument otherwise.
int jacobi(const Integer& a, const Integer& n);

struct PrimalityResult {
    bool prime = false;
    /// Set when n >= 2^64 and the answer comes from random-base
    /// Miller-Rabin rather than the deterministic 64-bit base set.
    bool probabilistic = false;

    explicit operator bool() const { return prime; }
};

PrimalityResult primality(const Integer& n);
bool is_prime(const Integer& n);
bool is_prime_u64(std::uint64_t n);

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes.
struct Factorization {
    std::vector<PrimePower> factors;

    Integer value() const;
    std::vector<Integer> primes() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Trial division to 10^6, then Pollard-Brent rho. `rho_budget` caps the total
/// number of rho iterations; exhausting it throws FactorizationIncomplete
/// carrying the composite that could not be split.
Factorization factorize(const Integer& n,
                        std::uint64_t rho_budget = kDefaultFactorBudget);

bool is_squarefree(const Integer& n,
                   std::uint64_t rho_budget = kDefaultFactorBudget);

Integer binomial(std::uint64_t n, std::uint64_t k);

/// Exponent of the prime q in n (n != 0).
unsigned valuation(const Integer& n, const Integer& q);
unsigned valuation_u64(std::uint64_t n, std::uint64_t q);

/// All primes <= n, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// ---------------------------------------------------------------------------
// Fixed-width residues

__extension__ using uint128 = unsigned __int128;

inline constexpr std::uint64_t kMaxResidueModulus = std::uint64_t{1} << 63;

/// Throws InvalidModulus unless 2 <= m < 2^63.
void check_modulus(std::uint64_t m);

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;
    return s >= m ? s - m : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo prime q; a must be nonzero mod q.
std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t q);

/// n mod m as a residue in [0, m), for any sign of n.
std::uint64_t reduce(const Integer& n, std::uint64_t m);

Integer to_integer(std::uint64_t v);
/// Throws InvalidArgument when v is negative or does not fit in 64 bits.
std::uint64_t to_u64(const Integer& v);

}  // namespace intmath
}  // namespace kwss
