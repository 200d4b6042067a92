#pragma once

#include <stdexcept>

#include "core.hpp"
#include "valuation.hpp"

namespace rhobar {

/// The deformation increment eps: a concrete integer with v_p(eps) = t > 0,
/// divisible by p-1 so that r0 and r0 + eps sit in the same component.
struct EpsContext {
    long p = 0;
    long t = 0;
    ZZ eps;

    EpsContext() = default;
    EpsContext(long p_, long t_, const ZZ& eps_) : p(p_), t(t_), eps(eps_) {
        if (t <= 0 || vp(eps, p) != t) throw std::domain_error("EpsContext: v_p(eps) != t");
        if (!mpz_divisible_ui_p(eps.get_mpz_t(), static_cast<unsigned long>(p - 1)))
            throw std::domain_error("EpsContext: eps must be divisible by p-1");
    }

    /// Canonical eps with leading unit u0: u0*p^t + c*p^(t+1), c fixing divisibility by p-1.
    static EpsContext canonical(long p, long t, long u0) {
        long c = (p - 1 - u0 % (p - 1)) % (p - 1);
        ZZ e = ZZ(u0) * p_power(p, t) + ZZ(c) * p_power(p, t + 1);
        return EpsContext(p, t, e);
    }

    long leading_unit() const {
        ZZ u = eps / p_power(p, t);
        return static_cast<long>(mod_reduce(u, ZZ(p)).get_si());
    }

    bool operator==(const EpsContext& o) const { return p == o.p && t == o.t && eps == o.eps; }
};

/// First-order jet a0 + a1*eps + O(eps*p). a0 is exact; a1 only matters mod p
/// and must be p-integral. Multiplication truncates the eps^2 term (its
/// valuation 2t >= t+1 keeps it inside the O(eps*p) ball).
class EpsJet {
  public:
    EpsJet() = default;
    EpsJet(QQ a0, QQ a1, EpsContext ctx) : a0_(std::move(a0)), a1_(std::move(a1)), ctx_(std::move(ctx)) {
        a0_.canonicalize();
        a1_.canonicalize();
        if (a1_ != 0 && vp(a1_, ctx_.p) < 0)
            throw std::domain_error("EpsJet: eps-coefficient must be p-integral");
    }

    static EpsJet constant(QQ v, const EpsContext& ctx) { return EpsJet(std::move(v), QQ(0), ctx); }
    static EpsJet eps(const EpsContext& ctx) { return EpsJet(QQ(0), QQ(1), ctx); }

    const QQ& a0() const { return a0_; }
    const QQ& a1() const { return a1_; }
    const EpsContext& context() const { return ctx_; }

    EpsJet operator+(const EpsJet& o) const {
        check(o);
        return EpsJet(a0_ + o.a0_, a1_ + o.a1_, ctx_);
    }
    EpsJet operator-(const EpsJet& o) const {
        check(o);
        return EpsJet(a0_ - o.a0_, a1_ - o.a1_, ctx_);
    }
    EpsJet operator*(const EpsJet& o) const {
        check(o);
        return EpsJet(a0_ * o.a0_, a0_ * o.a1_ + a1_ * o.a0_, ctx_);
    }
    EpsJet operator*(const QQ& c) const { return EpsJet(a0_ * c, a1_ * c, ctx_); }

    /// Division by a jet whose constant term is a p-adic unit.
    EpsJet operator/(const EpsJet& o) const {
        check(o);
        if (o.a0_ == 0 || vp(o.a0_, ctx_.p) != 0)
            throw std::domain_error("EpsJet division: divisor constant term is not a unit");
        QQ inv0 = 1 / o.a0_;
        return EpsJet(a0_ * inv0, (a1_ * o.a0_ - a0_ * o.a1_) * inv0 * inv0, ctx_);
    }

    bool is_zero() const { return a0_ == 0 && a1_ == 0; }

    /// Valuation visible at the O(eps*p) precision: the value lies in
    /// a0 + a1*eps + p^(t+1) Z_p, so any valuation < t+1 is decided exactly
    /// and everything else is reported as ">= t+1" (never silently guessed).
    Valuation valuation() const {
        QQ body = a0_ + a1_ * QQ(ctx_.eps);
        if (body == 0) return Valuation::at_least(ctx_.t + 1);
        long m = vp(body, ctx_.p);
        if (m <= ctx_.t) return Valuation::exact(m);
        return Valuation::at_least(ctx_.t + 1);
    }

    /// Leading unit mod p, defined only when the valuation is exactly known.
    ZZ leading_unit_mod_p() const {
        Valuation v = valuation();
        if (!v.is_exact()) throw std::domain_error("EpsJet: leading unit invisible at this precision");
        QQ body = a0_ + a1_ * QQ(ctx_.eps);
        return reduce_mod_pk(unit_part(body, ctx_.p), ctx_.p, 1);
    }

  private:
    void check(const EpsJet& o) const {
        if (!(ctx_ == o.ctx_)) throw std::domain_error("EpsJet: mismatched contexts");
    }

    QQ a0_, a1_;
    EpsContext ctx_;
};

}  // namespace rhobar
