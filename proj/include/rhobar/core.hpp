#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rhobar {

using ZZ = mpz_class;
using QQ = mpq_class;

inline ZZ zz(long v) { return ZZ(v); }

/// Exact p-adic valuation of a nonzero integer.
inline long vp(const ZZ& x, long p) {
    if (x == 0) throw std::domain_error("vp: zero has infinite valuation");
    ZZ n = abs(x);
    long v = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    return v;
}

/// Exact p-adic valuation of a nonzero rational (negative for denominators).
inline long vp(const QQ& x, long p) {
    if (x == 0) throw std::domain_error("vp: zero has infinite valuation");
    return vp(ZZ(x.get_num()), p) - vp(ZZ(x.get_den()), p);
}

/// Valuation as optional: nullopt encodes the infinite valuation of 0.
inline std::optional<long> vp_opt(const QQ& x, long p) {
    if (x == 0) return std::nullopt;
    return vp(x, p);
}

/// Unit part u with x = u * p^vp(x), as an exact rational.
inline QQ unit_part(const QQ& x, long p) {
    if (x == 0) throw std::domain_error("unit_part of zero");
    long v = vp(x, p);
    QQ pw;
    ZZ pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(v >= 0 ? v : -v));
    if (v >= 0) pw = QQ(1, pv); else pw = QQ(pv, 1);
    QQ u = x * pw;
    u.canonicalize();
    return u;
}

inline ZZ pow_zz(const ZZ& base, unsigned long e) {
    ZZ r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline ZZ p_power(long p, long e) {
    assert(e >= 0);
    ZZ r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

inline ZZ mod_reduce(const ZZ& x, const ZZ& m) {
    ZZ r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// Reduce a p-integral rational mod p^M into {0,...,p^M-1}.
inline ZZ reduce_mod_pk(const QQ& x, long p, long M) {
    ZZ m = p_power(p, M);
    ZZ den = x.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)))
        throw std::domain_error("reduce_mod_pk: rational is not p-integral");
    ZZ deninv;
    if (!mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()))
        throw std::domain_error("reduce_mod_pk: denominator not invertible");
    return mod_reduce(ZZ(x.get_num()) * deninv, m);
}

/// Generalized binomial binom(x, n) for integer x (possibly negative); 0 for n < 0.
inline ZZ binom(const ZZ& x, long n) {
    if (n < 0) return ZZ(0);
    if (n == 0) return ZZ(1);
    ZZ num(1);
    for (long i = 0; i < n; ++i) num *= (x - i);
    ZZ fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    ZZ q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
    return q;
}

inline ZZ binom(long x, long n) { return binom(ZZ(x), n); }

/// Falling factorial x(x-1)...(x-n+1); the paper-style X_n = n! * binom(X,n).
inline ZZ falling(const ZZ& x, long n) {
    assert(n >= 0);
    ZZ r(1);
    for (long i = 0; i < n; ++i) r *= (x - i);
    return r;
}

/// Derivative of the polynomial binom(X, n) evaluated at X = x.
/// Computed by the product-rule sum (1/n!) * sum_j prod_{i != j} (x - i),
/// which stays valid where binom(x, n) vanishes.
inline QQ binom_deriv(const ZZ& x, long n) {
    if (n <= 0) return QQ(0);
    // prefix[j] = prod_{i<j}(x-i), suffix[j] = prod_{i>j}(x-i)
    std::vector<ZZ> pre(static_cast<size_t>(n) + 1), suf(static_cast<size_t>(n) + 1);
    pre[0] = 1;
    for (long j = 0; j < n; ++j) pre[static_cast<size_t>(j) + 1] = pre[static_cast<size_t>(j)] * (x - j);
    suf[static_cast<size_t>(n)] = 1;
    for (long j = n - 1; j >= 0; --j)
        suf[static_cast<size_t>(j)] = suf[static_cast<size_t>(j) + 1] * (x - j);
    ZZ num(0);
    for (long j = 0; j < n; ++j)
        num += pre[static_cast<size_t>(j)] * suf[static_cast<size_t>(j) + 1];
    ZZ fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    QQ r(num, fact);
    r.canonicalize();
    return r;
}

inline QQ binom_deriv(long x, long n) { return binom_deriv(ZZ(x), n); }

/// Harmonic number h_t = 1 + 1/2 + ... + 1/t, with h_t = 0 for t <= 0.
inline QQ harmonic(long t) {
    QQ h(0);
    for (long i = 1; i <= t; ++i) h += QQ(1, i);
    return h;
}

/// Representative of h mod (p-1) in {1, ..., p-1}.
inline long more_rep(const ZZ& h, long p) {
    ZZ r = mod_reduce(h, ZZ(p - 1));
    long v = static_cast<long>(r.get_si());
    return v == 0 ? p - 1 : v;
}

/// Representative of h mod (p-1) in {0, ..., p-2}.
inline long less_rep(const ZZ& h, long p) {
    ZZ r = mod_reduce(h, ZZ(p - 1));
    return static_cast<long>(r.get_si());
}

inline long more_rep(long h, long p) { return more_rep(ZZ(h), p); }
inline long less_rep(long h, long p) { return less_rep(ZZ(h), p); }

/// M_{u,n} = sum_i binom(u, i(p-1)+n), summed over all i with 0 <= i(p-1)+n <= u.
/// Exact big-integer value; this is the brute-force oracle.
inline ZZ m_sum(const ZZ& u, const ZZ& n, long p) {
    if (u < 0) throw std::domain_error("m_sum: u must be nonnegative");
    // smallest index k >= 0 with k = n mod (p-1)
    ZZ k = mod_reduce(n, ZZ(p - 1));
    ZZ total(0);
    for (; k <= u; k += p - 1) total += binom(u, static_cast<long>(k.get_si()));
    return total;
}

inline ZZ m_sum(long u, long n, long p) { return m_sum(ZZ(u), ZZ(n), p); }

/// Teichmueller lift of xi in {0,...,p-1} to Z/p^M: the unique x with x^p = x, x = xi mod p.
inline ZZ teichmuller(long xi, long p, long M) {
    if (xi < 0 || xi >= p) throw std::domain_error("teichmuller: residue out of range");
    ZZ m = p_power(p, M);
    ZZ x(xi);
    for (long it = 0; it < M + 1; ++it) {
        ZZ y;
        mpz_powm_ui(y.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p), m.get_mpz_t());
        if (y == x) break;
        x = y;
    }
    return x;
}

inline ZZ mod_inverse(const ZZ& a, const ZZ& m) {
    ZZ r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::domain_error("mod_inverse: not invertible");
    return r;
}

/// Factorials mod p^K with the p-part removed, for binomials of large arguments.
/// fact_unit(n) = unit part of n! mod p^K, fact_vp(n) = v_p(n!).
class FactorialTable {
  public:
    FactorialTable(long p, long K, long max_n) : p_(p), K_(K), mod_(p_power(p, K)) {
        // prefix products of the units among 1..max_n
        unit_prefix_.reserve(static_cast<size_t>(max_n) + 1);
        unit_prefix_.push_back(ZZ(1));
        ZZ acc(1);
        for (long i = 1; i <= max_n; ++i) {
            if (i % p != 0) acc = mod_reduce(acc * i, mod_);
            unit_prefix_.push_back(acc);
        }
    }

    long prime() const { return p_; }
    long precision() const { return K_; }
    const ZZ& modulus() const { return mod_; }

    /// v_p(n!) by Legendre's formula.
    long fact_vp(const ZZ& n) const {
        ZZ e(0), m = n;
        while (m > 0) { m /= p_; e += m; }
        return static_cast<long>(e.get_si());
    }

    /// Unit part of n! modulo p^K (n within the table bound).
    ZZ fact_unit(long n) const {
        ZZ r(1);
        long m = n;
        while (m > 0) {
            r = mod_reduce(r * unit_prefix_.at(static_cast<size_t>(m)), mod_);
            m /= static_cast<long>(p_);
        }
        return r;
    }

    /// binom(a, b) for 0 <= b <= a within the table bound, as (valuation, unit mod p^K).
    /// Returns nullopt valuation meaning the value is 0 (b < 0 or b > a).
    std::optional<std::pair<long, ZZ>> binom_mod(long a, long b) const {
        if (b < 0 || b > a) return std::nullopt;
        long v = fact_vp(ZZ(a)) - fact_vp(ZZ(b)) - fact_vp(ZZ(a - b));
        ZZ u = mod_reduce(fact_unit(a) * mod_inverse(mod_reduce(fact_unit(b) * fact_unit(a - b), mod_), mod_), mod_);
        return std::make_pair(v, u);
    }

  private:
    long p_, K_;
    ZZ mod_;
    std::vector<ZZ> unit_prefix_;
};

}  // namespace rhobar
