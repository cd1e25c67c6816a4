#include "kwss/quadring.hpp"

#include <string>

#include "kwss/error.hpp"
#include "kwss/intmath.hpp"

namespace kwss::quadring {

using intmath::add_mod;
using intmath::mul_mod;
using intmath::sub_mod;

namespace {

void require_same_ring(const QuadElem& x, const QuadElem& y) {
    if (!x.same_ring(y)) {
        throw IncompatibleElements("quadring: cannot combine " + x.to_string() + " and " +
                                   y.to_string());
    }
}

std::uint64_t square_modulus(std::uint64_t p) {
    if (!intmath::is_prime_u64(p)) {
        throw InvalidArgument("eval_fp: " + std::to_string(p) + " is not prime");
    }
    if (p > 3'037'000'499) {
        throw InvalidModulus("eval_fp: p^2 exceeds the residue range for p = " +
                             std::to_string(p));
    }
    return p * p;
}

}  // namespace

QuadElem::QuadElem(std::uint64_t a, std::uint64_t b, std::uint64_t k, std::uint64_t m)
    : a_(0), b_(0), k_(0), m_(m) {
    intmath::check_modulus(m);
    a_ = a % m;
    b_ = b % m;
    k_ = k % m;
}

QuadElem QuadElem::constant(std::int64_t c, std::uint64_t k, std::uint64_t m) {
    intmath::check_modulus(m);
    const std::uint64_t mag = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1
                                    : static_cast<std::uint64_t>(c);
    const std::uint64_t r = mag % m;
    return {c < 0 ? (m - r) % m : r, 0, k, m};
}

QuadElem QuadElem::operator+(const QuadElem& o) const {
    require_same_ring(*this, o);
    return {add_mod(a_, o.a_, m_), add_mod(b_, o.b_, m_), k_, m_};
}

QuadElem QuadElem::operator-(const QuadElem& o) const {
    require_same_ring(*this, o);
    return {sub_mod(a_, o.a_, m_), sub_mod(b_, o.b_, m_), k_, m_};
}

QuadElem QuadElem::operator-() const {
    return {sub_mod(0, a_, m_), sub_mod(0, b_, m_), k_, m_};
}

QuadElem QuadElem::operator*(const QuadElem& o) const { return qr_mul(*this, o); }

QuadElem QuadElem::scaled(std::uint64_t c) const {
    const std::uint64_t cc = c % m_;
    return {mul_mod(a_, cc, m_), mul_mod(b_, cc, m_), k_, m_};
}

std::string QuadElem::to_string() const {
    return "(" + std::to_string(a_) + " + " + std::to_string(b_) + "a mod " +
           std::to_string(m_) + ", k=" + std::to_string(k_) + ")";
}

QuadElem qr_mul(const QuadElem& x, const QuadElem& y) {
    require_same_ring(x, y);
    const std::uint64_t m = x.m();
    const std::uint64_t bb = mul_mod(x.b(), y.b(), m);
    const std::uint64_t a = add_mod(mul_mod(x.a(), y.a(), m), bb, m);
    const std::uint64_t b = add_mod(add_mod(mul_mod(x.a(), y.b(), m), mul_mod(y.a(), x.b(), m), m),
                                    mul_mod(x.k(), bb, m), m);
    return {a, b, x.k(), m};
}

QuadElem qr_pow(const QuadElem& x, std::uint64_t e) {
    QuadElem result = QuadElem::one(x.k(), x.m());
    QuadElem base = x;
    while (e > 0) {
        if (e & 1) result = qr_mul(result, base);
        e >>= 1;
        if (e > 0) base = qr_mul(base, base);
    }
    return result;
}

QuadElem conjugate(const QuadElem& x) {
    const std::uint64_t m = x.m();
    return {add_mod(x.a(), mul_mod(x.b(), x.k(), m), m), sub_mod(0, x.b(), m), x.k(), m};
}

std::uint64_t element_order(const QuadElem& x, std::optional<std::uint64_t> cap) {
    const std::uint64_t m = x.m();
    const std::uint64_t limit =
        cap.value_or(m > 3'037'000'499 ? intmath::kMaxResidueModulus : m * m);
    QuadElem power = x;
    for (std::uint64_t t = 1; t <= limit; ++t) {
        if (power.is_one()) return t;
        power = qr_mul(power, x);
    }
    throw BudgetExceeded("element_order: no order <= " + std::to_string(limit) + " for " +
                         x.to_string());
}

std::uint64_t ord_alpha(std::uint64_t k, std::uint64_t m, std::optional<std::uint64_t> cap) {
    return element_order(QuadElem::alpha(k, m), cap);
}

std::uint64_t ord_beta(std::uint64_t k, std::uint64_t m, std::optional<std::uint64_t> cap) {
    return element_order(conjugate(QuadElem::alpha(k, m)), cap);
}

QuadElem eval_fp(const QuadElem& x, std::uint64_t p) {
    const std::uint64_t m = square_modulus(p);
    if (x.m() != m) {
        throw IncompatibleElements("eval_fp: element must live in R_{p^2}, got " + x.to_string());
    }
    const QuadElem xp = qr_pow(x, p);
    return qr_mul(xp, xp) - xp.scaled(x.k()) - QuadElem::one(x.k(), m);
}

QuadElem eval_fp_alpha(std::uint64_t k, std::uint64_t p) {
    return eval_fp(QuadElem::alpha(k, square_modulus(p)), p);
}

QuadElem eval_fp_beta(std::uint64_t k, std::uint64_t p) {
    return eval_fp(conjugate(QuadElem::alpha(k, square_modulus(p))), p);
}

}  // namespace kwss::quadring
