#include "kwss/trinomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "kwss/error.hpp"
#include "kwss/hypotheses.hpp"

namespace kwss::trinomial {

namespace {

using intmath::to_integer;

Integer pow_z(const Integer& base, std::uint64_t e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Nonnegative residue of a modulo m (m > 0).
Integer mod_z(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer powm_z(const Integer& base, const Integer& e, const Integer& m) {
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool divisible(const Integer& a, const Integer& q) {
    return mpz_divisible_p(a.get_mpz_t(), q.get_mpz_t()) != 0;
}

// Residue mod q of the exact quotient (c + (-c)^E) / q, where the numerator
// is formed modulo q^2. Requires q | c + (-c)^E.
Integer frobenius_quotient(const Integer& c, const Integer& exponent, const Integer& q) {
    const Integer q2 = q * q;
    const Integer numerator = mod_z(c + powm_z(Integer(-c), exponent, q2), q2);
    if (!divisible(numerator, q)) {
        throw Error("internal: (c + (-c)^E) not divisible by q for c = " + c.get_str() +
                    ", q = " + q.get_str());
    }
    return Integer(numerator / q);
}

std::string fmt_poly(const poly::FpPoly& f) {
    if (f.degree() <= 16) return f.to_string();
    return "<degree " + std::to_string(f.degree()) + ">";
}

IndexVerdict item1(const Trinomial& t, const Integer& q) {
    const bool q2_divides_b = divisible(t.b(), q * q);
    IndexVerdict v{q, q2_divides_b, 1, {}};
    v.detail = std::string("item 1: q | A and q | B; q^2 ") + (q2_divides_b ? "|" : "does not divide") +
               " B = " + t.b().get_str();
    return v;
}

IndexVerdict item2(const Trinomial& t, const Integer& q) {
    const Integer a2 = mod_z(Integer(t.a() / q), q);
    const unsigned e = intmath::valuation(to_integer(t.n()), q);
    const Integer qe = pow_z(q, e);
    const Integer b1 = frobenius_quotient(t.b(), qe, q);

    const bool first = a2 == 0 && b1 != 0;
    const Integer inner = powm_z(Integer(-t.b()), to_integer(t.m1()), q) *
                              powm_z(a2, to_integer(t.n1()), q) -
                          powm_z(Integer(-b1), to_integer(t.n1()), q);
    const bool second = !divisible(Integer(a2 * inner), q);
    IndexVerdict v{q, !(first || second), 2, {}};
    v.detail = "item 2: q | A, q does not divide B; A2 mod q = " + a2.get_str() +
               ", B1 mod q = " + b1.get_str() + " (q^e = " + qe.get_str() + "); " +
               (first ? "q | A2 and q does not divide B1"
                      : (second ? "q does not divide A2((-B)^M1 A2^N1 - (-B1)^N1)"
                                : "both conditions fail"));
    return v;
}

IndexVerdict item3(const Trinomial& t, const Integer& q) {
    const Integer b2 = mod_z(Integer(t.b() / q), q);
    const unsigned j = intmath::valuation(to_integer(t.n() - t.m()), q);
    const Integer qj = pow_z(q, j);
    const Integer a1 = frobenius_quotient(t.a(), qj, q);

    const bool first = a1 == 0 && b2 != 0;
    const std::uint64_t nm = t.n1() - t.m1();
    const Integer inner = powm_z(Integer(-t.a()), to_integer(t.m1()), q) *
                              powm_z(a1, to_integer(nm), q) -
                          powm_z(Integer(-b2), to_integer(nm), q);
    const Integer full = a1 * powm_z(b2, to_integer(t.m() - 1), q) * inner;
    const bool second = !divisible(full, q);
    IndexVerdict v{q, !(first || second), 3, {}};
    v.detail = "item 3: q does not divide A, q | B; A1 mod q = " + a1.get_str() +
               " (q^j = " + qj.get_str() + "), B2 mod q = " + b2.get_str() + "; " +
               (first ? "q | A1 and q does not divide B2"
                      : (second ? "q does not divide A1 B2^(M-1)((-A)^M1 A1^(N1-M1) - (-B2)^(N1-M1))"
                                : "both conditions fail"));
    return v;
}

IndexVerdict item4(const Trinomial& t, const Integer& q_big) {
    const std::uint64_t q = intmath::to_u64(q_big);  // q | M, so q <= M
    const unsigned mexp = std::min(intmath::valuation_u64(t.n(), q),
                                   intmath::valuation_u64(t.m(), q));
    std::uint64_t qm = 1;
    for (unsigned i = 0; i < mexp; ++i) qm *= q;
    const std::uint64_t ng = t.n() / qm;
    const std::uint64_t mg = t.m() / qm;

    poly::ZPoly g(ng + 1, 0);
    g[ng] += 1;
    g[mg] += t.a();
    g[0] += t.b();

    // H numerator: A x^M + B + (-A x^{M/q^m} - B)^{q^m}, coefficients mod q^2.
    const Integer q2 = q_big * q_big;
    const Integer c1 = mod_z(Integer(-t.a()), q2);
    const Integer c0 = mod_z(Integer(-t.b()), q2);
    poly::ZPoly numer(t.m() + 1, 0);
    numer[t.m()] += t.a();
    numer[0] += t.b();
    Integer binom = 1;  // exact binom(q^m, j)
    Integer c1_pow = 1;
    for (std::uint64_t jj = 0; jj <= qm; ++jj) {
        if (jj > 0) {
            binom *= to_integer(qm - jj + 1);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), jj);
            c1_pow = c1_pow * c1 % q2;
        }
        const Integer c0_pow = powm_z(c0, to_integer(qm - jj), q2);
        numer[jj * mg] += mod_z(binom, q2) * c1_pow * c0_pow;
    }
    poly::ZPoly h(numer.size());
    for (std::size_t i = 0; i < numer.size(); ++i) {
        const Integer c = mod_z(numer[i], q2);
        if (!divisible(c, q_big)) {
            throw Error("internal: H numerator not divisible by q at x^" + std::to_string(i));
        }
        h[i] = c / q_big;
    }

    const auto gq = poly::FpPoly::reduce(g, q);
    const auto hq = poly::FpPoly::reduce(h, q);
    const auto d = poly::gcd(gq, hq);
    const bool coprime = d.degree() == 0;
    IndexVerdict v{q_big, !coprime, 4, {}};
    v.detail = "item 4: q does not divide AB, q | M; q^m = " + std::to_string(qm) +
               ", G = " + fmt_poly(gq) + ", H = " + fmt_poly(hq) + " over F_" +
               std::to_string(q) + "; gcd = " + fmt_poly(d) +
               (coprime ? " (coprime)" : " (not coprime)");
    return v;
}

IndexVerdict item5(const Trinomial& t, const Integer& q) {
    const DValue dv = jks_d_value(t);
    const bool q2_divides = divisible(dv.normalized, q * q);
    IndexVerdict v{q, q2_divides, 5, {}};
    v.detail = "item 5: q does not divide ABM; D/r^N1 = " + dv.normalized.get_str() + ", q^2 " +
               (q2_divides ? "divides it" : "does not divide it");
    return v;
}

void require_prime(const Integer& q, const char* who) {
    if (!intmath::is_prime(q)) {
        throw InvalidArgument(std::string(who) + ": " + q.get_str() + " is not prime");
    }
}

}  // namespace

Trinomial::Trinomial(std::uint64_t n, std::uint64_t m, Integer a, Integer b)
    : n_(n), m_(m), a_(std::move(a)), b_(std::move(b)), r_(0) {
    if (m == 0 || m >= n) {
        throw InvalidArgument("trinomial: need 0 < M < N, got N = " + std::to_string(n) +
                              ", M = " + std::to_string(m));
    }
    if (b_ == 0) throw InvalidArgument("trinomial: constant term must be nonzero");
    r_ = std::gcd(n, m);
}

poly::ZPoly Trinomial::to_zpoly() const {
    poly::ZPoly f(n_ + 1, 0);
    f[n_] = 1;
    f[m_] += a_;
    f[0] += b_;
    return f;
}

std::string Trinomial::to_string() const { return poly::to_string(to_zpoly()); }

Trinomial fp_trinomial(std::uint64_t k, std::uint64_t p) {
    return Trinomial(2 * p, p, Integer(-to_integer(k)), Integer(-1));
}

Integer discriminant_resultant(const Trinomial& t) {
    return poly::discriminant(t.to_zpoly());
}

DValue jks_d_value(const Trinomial& t) {
    const std::uint64_t n1 = t.n1(), m1 = t.m1();
    const Integer first = pow_z(to_integer(t.n()), n1) * pow_z(t.b(), n1 - m1);
    Integer second = pow_z(to_integer(t.m()), m1) * pow_z(to_integer(t.n() - t.m()), n1 - m1) *
                     pow_z(t.a(), n1);
    if (n1 % 2 == 1) second = -second;
    DValue out;
    out.d = first - second;
    const Integer rn1 = pow_z(to_integer(t.r()), n1);
    if (!divisible(out.d, rn1)) throw Error("internal: r^N1 does not divide D");
    out.normalized = out.d;
    mpz_divexact(out.normalized.get_mpz_t(), out.normalized.get_mpz_t(), rn1.get_mpz_t());
    return out;
}

Integer discriminant_closed_form(const Trinomial& t) {
    Integer value = pow_z(t.b(), t.m() - 1) * pow_z(jks_d_value(t).d, t.r());
    const std::uint64_t n = t.n();
    const std::uint64_t pairs = n * (n - 1) / 2;
    return pairs % 2 == 0 ? value : Integer(-value);
}

Integer fp_discriminant(std::uint64_t k, std::uint64_t p) {
    require_prime(to_integer(p), "fp_discriminant");
    const Integer kk = to_integer(k);
    Integer value = pow_z(to_integer(p), 2 * p) * pow_z(Integer(kk * kk + 4), p);
    const std::uint64_t sign_exp = (p + 1) * (2 * p - 1);
    return sign_exp % 2 == 0 ? value : Integer(-value);
}

int jks_item(const Trinomial& t, const Integer& q) {
    const bool qa = divisible(t.a(), q);
    const bool qb = divisible(t.b(), q);
    if (qa && qb) return 1;
    if (qa) return 2;
    if (qb) return 3;
    if (divisible(to_integer(t.m()), q)) return 4;
    return 5;
}

bool divides_discriminant(const Trinomial& t, const Integer& q) {
    if (t.m() >= 2 && divisible(t.b(), q)) return true;
    return divisible(jks_d_value(t).d, q);
}

IndexVerdict jks_check_prime(const Trinomial& t, const Integer& q) {
    require_prime(q, "jks_check_prime");
    if (!divides_discriminant(t, q)) {
        throw PreconditionError("jks_check_prime: " + q.get_str() +
                                " does not divide the discriminant of " + t.to_string());
    }
    switch (jks_item(t, q)) {
        case 1: return item1(t, q);
        case 2: return item2(t, q);
        case 3: return item3(t, q);
        case 4: return item4(t, q);
        default: return item5(t, q);
    }
}

bool gh_coprimality(std::uint64_t k, std::uint64_t p) {
    require_prime(to_integer(p), "gh_coprimality");
    const Integer pz = to_integer(p);
    const Integer kz = to_integer(k);

    std::vector<std::uint64_t> h(p + 1, 0);
    Integer binom = 1;
    std::uint64_t k_pow = 1;
    for (std::uint64_t j = 1; j < p; ++j) {
        binom *= to_integer(p - j + 1);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), j);
        k_pow = intmath::mul_mod(k_pow, k % p, p);
        if (!divisible(binom, pz)) throw Error("internal: p does not divide binom(p, j)");
        const Integer quotient = binom / pz;
        h[j] = intmath::mul_mod(intmath::reduce(quotient, p), k_pow, p);
    }
    const Integer p2 = pz * pz;
    const Integer top = mod_z(Integer(powm_z(kz, pz, p2) - kz), p2);
    if (!divisible(top, pz)) throw Error("internal: p does not divide k^p - k");
    h[p] = intmath::reduce(Integer(top / pz), p);

    const poly::FpPoly g(p, {intmath::reduce(Integer(-1), p), intmath::reduce(Integer(-kz), p), 1});
    return poly::gcd(g, poly::FpPoly(p, std::move(h))).degree() == 0;
}

MonogenicityReport is_monogenic_fp(std::uint64_t k, std::uint64_t p, std::uint64_t factor_budget) {
    wss::require_hypotheses(k, factor_budget);
    require_prime(to_integer(p), "is_monogenic_fp");

    const Trinomial t = fp_trinomial(k, p);
    const Integer kz = to_integer(k);
    std::vector<Integer> primes = intmath::factorize(Integer(kz * kz + 4), factor_budget).primes();
    primes.push_back(to_integer(p));
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

#ifndef NDEBUG
    // x^2 - kx - 1 has no root mod p when k^2 + 4 is a non-residue.
    if (p > 2 && intmath::jacobi(Integer(kz * kz + 4), to_integer(p)) == -1) {
        for (std::uint64_t x = 0; x < std::min<std::uint64_t>(p, 4096); ++x) {
            const std::uint64_t v = (intmath::mul_mod(x, x, p) + p - intmath::mul_mod(k % p, x, p) + p - 1) % p;
            assert(v != 0);
        }
    }
#endif

    MonogenicityReport report{t, fp_discriminant(k, p), {}, true};
    for (const auto& q : primes) {
        IndexVerdict v = jks_check_prime(t, q);
        if (v.divides_index) report.monogenic = false;
        report.verdicts.push_back(std::move(v));
    }
    return report;
}

}  // namespace kwss::trinomial
