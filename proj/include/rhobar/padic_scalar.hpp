#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "core.hpp"
#include "valuation.hpp"

namespace rhobar {

/// The universal scalar: either an exact rational or a residue mod p^M.
/// Exact arithmetic in rational form; precision-correct arithmetic in
/// residue form. The valuation of a residue-form zero is reported as
/// ">= M", never as infinite.
class PadicScalar {
  public:
    PadicScalar() : p_(0), exact_(QQ(0)) {}

    static PadicScalar rational(QQ v, long p) {
        PadicScalar s;
        s.p_ = p;
        v.canonicalize();
        s.exact_ = std::move(v);
        return s;
    }

    static PadicScalar residue(const ZZ& v, long p, long M) {
        PadicScalar s;
        s.p_ = p;
        s.exact_.reset();
        s.M_ = M;
        s.res_ = mod_reduce(v, p_power(p, M));
        return s;
    }

    long prime() const { return p_; }
    bool is_exact() const { return exact_.has_value(); }
    long precision() const { return M_; }

    const QQ& rational_value() const {
        if (!exact_) throw std::logic_error("PadicScalar: not in rational form");
        return *exact_;
    }

    ZZ residue_value() const {
        if (exact_) return reduce_mod_pk(*exact_, p_, M_);
        return res_;
    }

    /// Convert to residue form at precision M (requires p-integrality).
    PadicScalar to_residue(long M) const {
        if (exact_) return residue(reduce_mod_pk(*exact_, p_, M), p_, M);
        if (M > M_) throw std::domain_error("PadicScalar: cannot raise residue precision");
        return residue(res_, p_, M);
    }

    Valuation valuation() const {
        if (exact_) {
            if (*exact_ == 0) return Valuation::infinite();
            return Valuation::exact(vp(*exact_, p_));
        }
        if (res_ == 0) return Valuation::at_least(M_);
        return Valuation::exact(vp(res_, p_));
    }

    /// Leading unit mod p (for quantities of exact known valuation).
    ZZ leading_unit_mod_p() const {
        Valuation v = valuation();
        if (!v.is_exact()) throw std::domain_error("leading unit undefined at this precision");
        if (exact_) {
            QQ u = unit_part(*exact_, p_);
            return reduce_mod_pk(u, p_, 1);
        }
        ZZ u = res_;
        for (long i = 0; i < v.v; ++i) mpz_divexact_ui(u.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(p_));
        return mod_reduce(u, ZZ(p_));
    }

    PadicScalar operator+(const PadicScalar& o) const { return combine(o, Op::Add); }
    PadicScalar operator-(const PadicScalar& o) const { return combine(o, Op::Sub); }
    PadicScalar operator*(const PadicScalar& o) const { return combine(o, Op::Mul); }

    /// Division, exact in rational form; in residue form the divisor must be a unit.
    PadicScalar operator/(const PadicScalar& o) const {
        check_prime(o);
        if (exact_ && o.exact_) {
            if (*o.exact_ == 0) throw std::domain_error("division by zero");
            return rational(*exact_ / *o.exact_, p_);
        }
        long M = std::min(precision_or_max(), o.precision_or_max());
        ZZ a = to_residue(M).residue_value();
        ZZ b = o.to_residue(M).residue_value();
        if (b == 0 || mpz_divisible_ui_p(b.get_mpz_t(), static_cast<unsigned long>(p_)))
            throw std::domain_error("residue division: divisor is not a unit");
        ZZ m = p_power(p_, M);
        return residue(mod_reduce(a * mod_inverse(b, m), m), p_, M);
    }

    bool operator==(const PadicScalar& o) const {
        if (p_ != o.p_) return false;
        if (exact_ && o.exact_) return *exact_ == *o.exact_;
        long M = std::min(precision_or_max(), o.precision_or_max());
        return to_residue(M).residue_value() == o.to_residue(M).residue_value();
    }

    std::string str() const {
        if (exact_) return exact_->get_str();
        return res_.get_str() + " + O(" + std::to_string(p_) + "^" + std::to_string(M_) + ")";
    }

  private:
    enum class Op { Add, Sub, Mul };

    void check_prime(const PadicScalar& o) const {
        if (p_ != o.p_) throw std::domain_error("PadicScalar: mismatched primes");
    }

    long precision_or_max() const { return exact_ ? LONG_MAX / 4 : M_; }

    PadicScalar combine(const PadicScalar& o, Op op) const {
        check_prime(o);
        if (exact_ && o.exact_) {
            QQ r;
            if (op == Op::Add) r = *exact_ + *o.exact_;
            else if (op == Op::Sub) r = *exact_ - *o.exact_;
            else r = *exact_ * *o.exact_;
            return rational(r, p_);
        }
        long M = std::min(precision_or_max(), o.precision_or_max());
        ZZ a = to_residue(M).residue_value();
        ZZ b = o.to_residue(M).residue_value();
        ZZ r;
        if (op == Op::Add) r = a + b;
        else if (op == Op::Sub) r = a - b;
        else r = a * b;
        return residue(r, p_, M);
    }

    long p_;
    std::optional<QQ> exact_;
    long M_ = 0;
    ZZ res_;
};

/// Parse "a/b" rationals and "u*p^v + O(p^M)" residue literals.
inline PadicScalar parse_padic(const std::string& text, long p) {
    auto fail = [&]() -> PadicScalar {
        throw std::invalid_argument("cannot parse p-adic literal: " + text);
    };
    std::string s;
    for (char c : text) if (!isspace(static_cast<unsigned char>(c))) s += c;
    auto opos = s.find("+O(");
    if (opos == std::string::npos) {
        // plain exact rational
        QQ q;
        if (q.set_str(s, 10) != 0) return fail();
        q.canonicalize();
        return PadicScalar::rational(q, p);
    }
    std::string head = s.substr(0, opos);
    std::string tail = s.substr(opos + 3);
    if (tail.empty() || tail.back() != ')') return fail();
    tail.pop_back();
    // tail is "p^M" or a plain power of p
    long M = 0;
    auto caret = tail.find('^');
    if (caret != std::string::npos) {
        if (ZZ(tail.substr(0, caret)) != p) return fail();
        M = std::stol(tail.substr(caret + 1));
    } else {
        ZZ m(tail);
        if (m == p) M = 1; else return fail();
    }
    // head is "u*p^v", "u", or "p^v"
    ZZ value;
    auto star = head.find('*');
    std::string ustr = star == std::string::npos ? head : head.substr(0, star);
    std::string pwstr = star == std::string::npos ? "" : head.substr(star + 1);
    if (star == std::string::npos && head.find('^') != std::string::npos) {
        ustr = "1";
        pwstr = head;
    }
    ZZ u(ustr);
    if (pwstr.empty()) {
        value = u;
    } else {
        auto c2 = pwstr.find('^');
        long e = 1;
        std::string base = pwstr;
        if (c2 != std::string::npos) {
            base = pwstr.substr(0, c2);
            e = std::stol(pwstr.substr(c2 + 1));
        }
        if (ZZ(base) != p || e < 0) return fail();
        value = u * p_power(p, e);
    }
    return PadicScalar::residue(value, p, M);
}

}  // namespace rhobar
