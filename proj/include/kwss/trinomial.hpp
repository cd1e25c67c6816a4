#pragma once

// Discriminants of monic trinomials x^N + A x^M + B and the per-prime index
// test for them: given a prime q dividing the discriminant, decide whether q
// divides the index [Z_K : Z[theta]] of the equation order. The case split on
// (q | A, q | B, q | M) selects one of five tests ("items").
//
// The trinomial F_p(x) = x^{2p} - kx^p - 1 gets dedicated entry points.

#include <cstdint>
#include <string>
#include <vector>

#include "kwss/intmath.hpp"
#include "kwss/poly.hpp"

namespace kwss::trinomial {

class Trinomial {
public:
    /// Requires 0 < M < N and B != 0; throws InvalidArgument otherwise.
    Trinomial(std::uint64_t n, std::uint64_t m, Integer a, Integer b);

    std::uint64_t n() const { return n_; }
    std::uint64_t m() const { return m_; }
    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }

    /// gcd(M, N), N/r, M/r.
    std::uint64_t r() const { return r_; }
    std::uint64_t n1() const { return n_ / r_; }
    std::uint64_t m1() const { return m_ / r_; }

    poly::ZPoly to_zpoly() const;
    std::string to_string() const;

    friend bool operator==(const Trinomial&, const Trinomial&) = default;

private:
    std::uint64_t n_;
    std::uint64_t m_;
    Integer a_;
    Integer b_;
    std::uint64_t r_;
};

/// x^{2p} - k x^p - 1.
Trinomial fp_trinomial(std::uint64_t k, std::uint64_t p);

struct IndexVerdict {
    Integer q;
    bool divides_index = false;
    int item_used = 0;  // 1..5
    std::string detail;

    friend bool operator==(const IndexVerdict&, const IndexVerdict&) = default;
};

struct MonogenicityReport {
    Trinomial trinomial;
    Integer discriminant;
    std::vector<IndexVerdict> verdicts;
    bool monogenic = false;

    friend bool operator==(const MonogenicityReport&, const MonogenicityReport&) = default;
};

/// (-1)^{N(N-1)/2} Res(f, f') from the Sylvester determinant.
Integer discriminant_resultant(const Trinomial& t);

/// Closed form (-1)^{N(N-1)/2} B^{M-1} D^r with D from jks_d_value.
Integer discriminant_closed_form(const Trinomial& t);

/// (-1)^{(p+1)(2p-1)} p^{2p} (k^2+4)^p, the discriminant of F_p.
Integer fp_discriminant(std::uint64_t k, std::uint64_t p);

struct DValue {
    Integer d;
    Integer normalized;  // d / r^{N1}, always exact

    friend bool operator==(const DValue&, const DValue&) = default;
};

/// D = N^{N1} B^{N1-M1} - (-1)^{N1} M^{M1} (N-M)^{N1-M1} A^{N1}.
DValue jks_d_value(const Trinomial& t);

/// The item selected by the (q | A, q | B, q | M) case split.
int jks_item(const Trinomial& t, const Integer& q);

/// True iff q divides the discriminant of t (via the closed form's factors).
bool divides_discriminant(const Trinomial& t, const Integer& q);

/// Index verdict at the prime q. The trinomial is assumed irreducible.
/// Throws InvalidArgument for q not prime and PreconditionError when q does
/// not divide the discriminant.
IndexVerdict jks_check_prime(const Trinomial& t, const Integer& q);

/// Whether G(x) = x^2 - kx - 1 and H(x) = (-kx^p - 1 + (kx+1)^p)/p are
/// coprime over F_p. H is built from its coefficients directly:
/// binom(p, j) k^j / p at x^j for 0 < j < p, and (k^p - k)/p at x^p.
bool gh_coprimality(std::uint64_t k, std::uint64_t p);

/// Full index analysis of F_p at every prime factor of its discriminant.
/// Throws HypothesisViolation unless 4 does not divide k and
/// (k^2+4)/gcd(2,k)^2 is squarefree.
MonogenicityReport is_monogenic_fp(std::uint64_t k, std::uint64_t p,
                                   std::uint64_t factor_budget = intmath::kDefaultFactorBudget);

}  // namespace kwss::trinomial
