#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "core.hpp"
#include "fparith.hpp"

namespace rhobar {

/// Dense homogeneous polynomial in x, y of degree r over Z/p^M.
/// coeff(i) multiplies x^i y^(r-i). The zero polynomial keeps its ambient degree.
class HomogPoly {
  public:
    HomogPoly(long degree, long p, long M = 1)
        : r_(degree), p_(p), M_(M), mod_(p_power(p, M)),
          c_(static_cast<size_t>(degree) + 1, ZZ(0)) {
        if (degree < 0) throw std::domain_error("HomogPoly: negative degree");
    }

    long degree() const { return r_; }
    long prime() const { return p_; }
    long precision() const { return M_; }

    const ZZ& coeff(long i) const { return c_.at(static_cast<size_t>(i)); }
    void set_coeff(long i, const ZZ& v) { c_.at(static_cast<size_t>(i)) = mod_reduce(v, mod_); }

    bool is_zero() const {
        for (const auto& v : c_) if (v != 0) return false;
        return true;
    }

    bool operator==(const HomogPoly& o) const {
        return r_ == o.r_ && p_ == o.p_ && M_ == o.M_ && c_ == o.c_;
    }

    HomogPoly operator+(const HomogPoly& o) const {
        check(o);
        HomogPoly s(r_, p_, M_);
        for (long i = 0; i <= r_; ++i) s.set_coeff(i, coeff(i) + o.coeff(i));
        return s;
    }

    HomogPoly operator*(const HomogPoly& o) const {
        if (p_ != o.p_ || M_ != o.M_) throw std::domain_error("HomogPoly: mismatched ring");
        HomogPoly s(r_ + o.r_, p_, M_);
        for (long i = 0; i <= r_; ++i) {
            if (coeff(i) == 0) continue;
            for (long j = 0; j <= o.r_; ++j)
                s.set_coeff(i + j, s.coeff(i + j) + coeff(i) * o.coeff(j));
        }
        return s;
    }

    HomogPoly scaled(const ZZ& k) const {
        HomogPoly s(r_, p_, M_);
        for (long i = 0; i <= r_; ++i) s.set_coeff(i, coeff(i) * k);
        return s;
    }

    HomogPoly reduced_mod_p() const {
        HomogPoly s(r_, p_, 1);
        for (long i = 0; i <= r_; ++i) s.set_coeff(i, mod_reduce(coeff(i), ZZ(p_)));
        return s;
    }

  private:
    void check(const HomogPoly& o) const {
        if (r_ != o.r_ || p_ != o.p_ || M_ != o.M_)
            throw std::domain_error("HomogPoly: mismatched degree or ring");
    }

    long r_, p_, M_;
    ZZ mod_;
    std::vector<ZZ> c_;
};

/// theta = x y^p - x^p y, raised to the given power, embedded in degree r >= a(p+1).
inline HomogPoly theta_power(long a, long r, long p, long M = 1) {
    if (a < 0 || a * (p + 1) > r) throw std::domain_error("theta_power: degree overflow");
    HomogPoly acc(0, p, M);
    acc.set_coeff(0, ZZ(1));
    HomogPoly theta(p + 1, p, M);
    theta.set_coeff(1, ZZ(1));
    theta.set_coeff(p, ZZ(-1));
    for (long i = 0; i < a; ++i) acc = acc * theta;
    // embed into ambient degree r by multiplying with y^(r - deg)
    HomogPoly out(r, p, M);
    for (long i = 0; i <= acc.degree(); ++i) out.set_coeff(i, acc.coeff(i));
    return out;
}

/// Exact division by theta^a; nothing when not divisible.  Division works
/// coefficientwise from the bottom since theta's lowest x-term x^1 y^p has a
/// unit coefficient; non-unit leading terms never arise.
inline std::optional<HomogPoly> divide_by_theta_power(const HomogPoly& f, long a) {
    long p = f.prime(), M = f.precision();
    if (a < 0 || a * (p + 1) > f.degree()) throw std::domain_error("divide_by_theta_power: bad power");
    if (f.is_zero()) return HomogPoly(f.degree() - a * (p + 1), p, M);
    ZZ mod = p_power(p, M);
    HomogPoly cur = f;
    for (long step = 0; step < a; ++step) {
        long deg = cur.degree();
        long qdeg = deg - (p + 1);
        // cur = theta * q means cur[k] = q[k-1] - q[k-p]; solve upward from k=1,
        // then confirm by multiplying back.
        HomogPoly q(qdeg, p, M);
        for (long k = 1; k <= deg; ++k) {
            if (k - 1 > qdeg) break;
            ZZ qkp = (k - p >= 0 && k - p <= qdeg) ? q.coeff(k - p) : ZZ(0);
            q.set_coeff(k - 1, cur.coeff(k) + qkp);
        }
        HomogPoly chk = theta_power(1, p + 1, p, M) * q;
        for (long k = 0; k <= deg; ++k)
            if (mod_reduce(chk.coeff(k) - cur.coeff(k), mod) != 0) return std::nullopt;
        cur = q;
    }
    return cur;
}

}  // namespace rhobar
