#pragma once

// Dense univariate polynomials: exact integer coefficients (resultants,
// discriminants) and coefficients in the prime field F_q (gcd tests).
// Coefficient i multiplies x^i.

#include <cstdint>
#include <string>
#include <vector>

#include "kwss/intmath.hpp"

namespace kwss::poly {

using ZPoly = std::vector<Integer>;
using IntMatrix = std::vector<std::vector<Integer>>;

/// Degree of f after ignoring leading zeros; -1 for the zero polynomial.
int degree(const ZPoly& f);
ZPoly derivative(const ZPoly& f);

/// Fraction-free Gaussian elimination (Bareiss); exact over the integers.
Integer determinant(IntMatrix a);

IntMatrix sylvester_matrix(const ZPoly& f, const ZPoly& g);

/// Res(f, g) as the determinant of the Sylvester matrix.
Integer resultant(const ZPoly& f, const ZPoly& g);

/// Discriminant of f via (-1)^{n(n-1)/2} Res(f, f') / lc(f).
Integer discriminant(const ZPoly& f);

std::string to_string(const ZPoly& f);

/// Polynomial over F_q with q prime, q < 2^63.
class FpPoly {
public:
    explicit FpPoly(std::uint64_t q, std::vector<std::uint64_t> coeffs = {});
    /// Reduction of an integer polynomial modulo q.
    static FpPoly reduce(const ZPoly& f, std::uint64_t q);

    std::uint64_t modulus() const { return q_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::uint64_t leading() const { return c_.back(); }

    FpPoly monic() const;
    /// Remainder of *this modulo d (d nonzero).
    FpPoly mod(const FpPoly& d) const;

    friend bool operator==(const FpPoly&, const FpPoly&) = default;

    std::string to_string() const;

private:
    void trim();

    std::uint64_t q_;
    std::vector<std::uint64_t> c_;
};

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
FpPoly gcd(FpPoly a, FpPoly b);

}  // namespace kwss::poly
