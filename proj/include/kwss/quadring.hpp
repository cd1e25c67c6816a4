#pragma once

// Arithmetic in R_m = (Z/mZ)[alpha] with alpha^2 = k alpha + 1, i.e. the
// quotient (Z/mZ)[x] / (x^2 - kx - 1). Elements are a + b alpha with both
// coordinates kept fully reduced, so equality is coordinate equality.

#include <cstdint>
#include <optional>
#include <string>

namespace kwss::quadring {

class QuadElem {
public:
    /// a + b alpha in R_m. Coordinates may be any value; they are reduced.
    QuadElem(std::uint64_t a, std::uint64_t b, std::uint64_t k, std::uint64_t m);

    static QuadElem zero(std::uint64_t k, std::uint64_t m) { return {0, 0, k, m}; }
    static QuadElem one(std::uint64_t k, std::uint64_t m) { return {1, 0, k, m}; }
    static QuadElem alpha(std::uint64_t k, std::uint64_t m) { return {0, 1, k, m}; }
    /// The integer c (possibly negative) embedded as c + 0 alpha.
    static QuadElem constant(std::int64_t c, std::uint64_t k, std::uint64_t m);

    std::uint64_t a() const { return a_; }
    std::uint64_t b() const { return b_; }
    std::uint64_t k() const { return k_; }
    std::uint64_t m() const { return m_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 % m_ && b_ == 0; }
    bool same_ring(const QuadElem& o) const { return k_ == o.k_ && m_ == o.m_; }

    QuadElem operator+(const QuadElem& o) const;
    QuadElem operator-(const QuadElem& o) const;
    QuadElem operator-() const;
    QuadElem operator*(const QuadElem& o) const;
    QuadElem scaled(std::uint64_t c) const;

    friend bool operator==(const QuadElem&, const QuadElem&) = default;

    std::string to_string() const;

private:
    std::uint64_t a_;
    std::uint64_t b_;
    std::uint64_t k_;  // reduced mod m
    std::uint64_t m_;
};

/// (a1 + b1 alpha)(a2 + b2 alpha) = (a1 a2 + b1 b2) + (a1 b2 + a2 b1 + k b1 b2) alpha.
/// Throws IncompatibleElements if the operands live in different rings.
QuadElem qr_mul(const QuadElem& x, const QuadElem& y);

QuadElem qr_pow(const QuadElem& x, std::uint64_t e);

/// The automorphism alpha -> beta = k - alpha: a + b alpha -> (a + bk) - b alpha.
QuadElem conjugate(const QuadElem& x);

/// Least t >= 1 with x^t = 1, by forward iteration. Throws BudgetExceeded if
/// no such t <= cap exists. The default cap is m^2, which bounds the order of
/// any unit of R_m.
std::uint64_t element_order(const QuadElem& x, std::optional<std::uint64_t> cap = {});

/// Order of alpha in R_m (alpha is a unit: alpha (alpha - k) = 1).
std::uint64_t ord_alpha(std::uint64_t k, std::uint64_t m,
                        std::optional<std::uint64_t> cap = {});

/// Order of beta = k - alpha in R_m.
std::uint64_t ord_beta(std::uint64_t k, std::uint64_t m,
                       std::optional<std::uint64_t> cap = {});

/// x^{2p} - k x^p - 1 for x in R_{p^2}.
QuadElem eval_fp(const QuadElem& x, std::uint64_t p);

/// F_p(alpha) = alpha^{2p} - k alpha^p - 1 in R_{p^2}.
QuadElem eval_fp_alpha(std::uint64_t k, std::uint64_t p);

/// F_p(beta) in R_{p^2}.
QuadElem eval_fp_beta(std::uint64_t k, std::uint64_t p);

}  // namespace kwss::quadring
