#include "kwss/poly.hpp"

#include <utility>

#include "kwss/error.hpp"

namespace kwss::poly {

using intmath::mul_mod;
using intmath::sub_mod;

int degree(const ZPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
        if (f[i] != 0) return i;
    }
    return -1;
}

ZPoly derivative(const ZPoly& f) {
    ZPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
    return d;
}

Integer determinant(IntMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(t);
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntMatrix sylvester_matrix(const ZPoly& f, const ZPoly& g) {
    const int df = degree(f);
    const int dg = degree(g);
    if (df < 0 || dg < 0) throw InvalidArgument("sylvester_matrix: zero polynomial");
    const std::size_t n = static_cast<std::size_t>(df + dg);
    IntMatrix s(n, std::vector<Integer>(n, 0));
    // Rows hold coefficients from the leading term down.
    for (int r = 0; r < dg; ++r) {
        for (int i = 0; i <= df; ++i) s[r][r + i] = f[df - i];
    }
    for (int r = 0; r < df; ++r) {
        for (int i = 0; i <= dg; ++i) s[dg + r][r + i] = g[dg - i];
    }
    return s;
}

Integer resultant(const ZPoly& f, const ZPoly& g) {
    return determinant(sylvester_matrix(f, g));
}

Integer discriminant(const ZPoly& f) {
    const int n = degree(f);
    if (n < 1) throw InvalidArgument("discriminant: degree must be >= 1");
    Integer r = resultant(f, derivative(f));
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f[n].get_mpz_t());
    const long pairs = static_cast<long>(n) * (n - 1) / 2;
    return pairs % 2 == 0 ? r : Integer(-r);
}

std::string to_string(const ZPoly& f) {
    std::string out;
    for (int i = degree(f); i >= 0; --i) {
        if (f[i] == 0) continue;
        const bool neg = sgn(f[i]) < 0;
        const Integer mag = abs(f[i]);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag != 1 || i == 0) out += mag.get_str();
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

FpPoly::FpPoly(std::uint64_t q, std::vector<std::uint64_t> coeffs) : q_(q), c_(std::move(coeffs)) {
    intmath::check_modulus(q);
    for (auto& c : c_) c %= q_;
    trim();
}

FpPoly FpPoly::reduce(const ZPoly& f, std::uint64_t q) {
    std::vector<std::uint64_t> c;
    c.reserve(f.size());
    for (const auto& v : f) c.push_back(intmath::reduce(v, q));
    return FpPoly(q, std::move(c));
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    const std::uint64_t inv = intmath::inv_mod_prime(leading(), q_);
    std::vector<std::uint64_t> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = mul_mod(c_[i], inv, q_);
    return FpPoly(q_, std::move(c));
}

FpPoly FpPoly::mod(const FpPoly& d) const {
    if (d.q_ != q_) throw IncompatibleElements("FpPoly::mod: different fields");
    if (d.is_zero()) throw InvalidArgument("FpPoly::mod: division by zero polynomial");
    std::vector<std::uint64_t> r = c_;
    const std::size_t dd = d.c_.size() - 1;
    const std::uint64_t inv = intmath::inv_mod_prime(d.leading(), q_);
    for (std::size_t top = r.size(); top-- > dd;) {
        const std::uint64_t factor = mul_mod(r[top], inv, q_);
        if (factor == 0) continue;
        const std::size_t shift = top - dd;
        for (std::size_t i = 0; i <= dd; ++i) {
            r[shift + i] = sub_mod(r[shift + i], mul_mod(factor, d.c_[i], q_), q_);
        }
    }
    if (r.size() > dd) r.resize(dd);
    return FpPoly(q_, std::move(r));
}

std::string FpPoly::to_string() const {
    ZPoly z;
    for (auto c : c_) z.push_back(intmath::to_integer(c));
    return poly::to_string(z);
}

FpPoly gcd(FpPoly a, FpPoly b) {
    if (a.modulus() != b.modulus()) throw IncompatibleElements("gcd: different fields");
    while (!b.is_zero()) {
        FpPoly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace kwss::poly
