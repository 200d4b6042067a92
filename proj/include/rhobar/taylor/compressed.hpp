#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "../core.hpp"
#include "cell.hpp"
#include "matrices.hpp"

namespace rhobar::taylor {

/// Exact computation of the restricted sums
///   A_{w,j}(r) = sum_{0 < i(p-1) < r-2alpha} binom(r-alpha+j, i(p-1)+j) binom(i(p-1), w)
/// modulo p^K for arbitrary (huge) r, in time polylogarithmic in r. Rests on
/// two exact facts, both independently tested against the brute-force oracle:
///   - the full two-sided sum is a finite convolution of binom(r-alpha+j, v)
///     with the sums M_{r-alpha+j-v, j-v}  (registry entry CG),
///   - M_{u,n} = (p-1)^{-1} sum_omega omega^{-n} (1+omega)^u over the
///     Teichmueller roots of unity, evaluated mod p^K by fast powering,
/// plus the exact boundary bookkeeping: the i = 0 term always leaves the
/// restricted range, and the i(p-1) = r-s term leaves it iff s <= 2 alpha.
class CompressedA {
  public:
    CompressedA(long p, long K) : p_(p), K_(K), mod_(p_power(p, K)) {
        for (long c = 1; c < p; ++c) {
            ZZ w = teichmuller(c, p, K);
            roots_.push_back(w);
            inv_roots_.push_back(mod_inverse(w, mod_));
            one_plus_.push_back(mod_reduce(w + 1, mod_));
        }
        inv_pm1_ = mod_inverse(mod_reduce(ZZ(p - 1), mod_), mod_);
    }

    long precision() const { return K_; }
    const ZZ& modulus() const { return mod_; }

    /// M_{u,n} mod p^K via the root-of-unity filter (u >= 0).
    ZZ m_sum_mod(const ZZ& u, long n) const {
        if (u < 0) throw std::domain_error("m_sum_mod: needs u >= 0");
        std::pair<ZZ, long> key{mod_reduce(u, ZZ(p_ - 1) * mod_), less_rep(ZZ(n), p_)};
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        ZZ acc(0);
        for (size_t i = 0; i < roots_.size(); ++i) {
            if (one_plus_[i] == 0) continue;  // omega = -1 contributes (1-1)^u = 0 for u >= 1
            ZZ pw;
            mpz_powm(pw.get_mpz_t(), one_plus_[i].get_mpz_t(), u.get_mpz_t(), mod_.get_mpz_t());
            ZZ wn;
            ZZ e = mod_reduce(ZZ(-n), ZZ(p_ - 1));
            mpz_powm(wn.get_mpz_t(), roots_[i].get_mpz_t(), e.get_mpz_t(), mod_.get_mpz_t());
            acc += pw * wn;
        }
        if (u == 0) acc += (less_rep(ZZ(n), p_) % 2 == 0 ? 1 : -1);  // omega = -1 term, 0^0 = 1
        ZZ val = mod_reduce(acc * inv_pm1_, mod_);
        {
            std::lock_guard<std::mutex> lk(mu_);
            cache_.emplace(key, val);
        }
        return val;
    }

    /// One entry of the restricted sum mod p^K.
    ZZ entry(const ZZ& r, long s, long alpha, long w, long j) const {
        ZZ acc(0);
        for (long v = 0; v <= w; ++v) {
            ZZ c = binom(ZZ(j + w - v - 1), w - v);
            if (c == 0) continue;
            ZZ bv = mod_reduce(binom(r - alpha + j, v), mod_);
            ZZ m = m_sum_mod(r - alpha + j - v, j - v);
            ZZ term = mod_reduce(c * bv % mod_ * m, mod_);
            if ((w - v) % 2) acc -= term; else acc += term;
        }
        // i = 0 term of the full sum is never in the restricted range
        if (w == 0) acc -= binom(r - alpha + j, j);
        // the i(p-1) = r-s term leaves the range iff s <= 2 alpha
        if (s <= 2 * alpha)
            acc -= mod_reduce(binom(r - alpha + j, s - alpha), mod_) * mod_reduce(binom(r - ZZ(s), w), mod_);
        return mod_reduce(acc, mod_);
    }

    Mat<ZZ> matrix(const Cell& c) const {
        Mat<ZZ> m = zero_mat<ZZ>(c.rows(), c.cols());
        ZZ r = c.concrete_r();
        for (long w = 0; w < c.rows(); ++w)
            for (long j = 0; j < c.cols(); ++j)
                m[static_cast<size_t>(w)][static_cast<size_t>(j)] = entry(r, c.s, c.alpha, w, j);
        return m;
    }

  private:
    long p_, K_;
    ZZ mod_, inv_pm1_;
    std::vector<ZZ> roots_, inv_roots_, one_plus_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<ZZ, long>, ZZ> cache_;
};

/// Shared per-(p, K) oracle pool so the M-sum cache is reused across cells.
inline CompressedA& compressed_oracle(long p, long K) {
    static std::mutex mu;
    static std::map<std::pair<long, long>, std::unique_ptr<CompressedA>> pool;
    std::lock_guard<std::mutex> lk(mu);
    auto& slot = pool[{p, K}];
    if (!slot) slot = std::make_unique<CompressedA>(p, K);
    return *slot;
}

}  // namespace rhobar::taylor
