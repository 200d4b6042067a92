#pragma once

#include <random>
#include <string>
#include <vector>

#include "core.hpp"
#include "homog.hpp"

namespace rhobar {

/// Coefficient family {D_i} supported in [0, (r-alpha)/(p-1)], attached to
/// an exponent alpha and ambient degree r.
struct DFamily {
    std::vector<QQ> d;  // d[i] = D_i, index from 0
    long alpha = 0;
    long r = 0;
    long p = 0;

    long support_bound() const { return (r - alpha) / (p - 1); }

    void validate() const {
        if (static_cast<long>(d.size()) - 1 > support_bound())
            throw std::domain_error("DFamily: support exceeds (r-alpha)/(p-1)");
    }
};

/// The linear functional D_w = sum_i D_i binom(i(p-1), w).
inline QQ d_functional(const DFamily& f, long w) {
    QQ acc(0);
    for (size_t i = 0; i < f.d.size(); ++i)
        acc += f.d[i] * QQ(binom(ZZ(static_cast<long>(i)) * (f.p - 1), w));
    return acc;
}

/// The element sum_i D_i x^(i(p-1)+alpha) y^(r-i(p-1)-alpha) in degree r.
inline HomogPoly build_d_element(const DFamily& f, long M = 1) {
    f.validate();
    HomogPoly out(f.r, f.p, M);
    for (size_t i = 0; i < f.d.size(); ++i) {
        if (f.d[i] == 0) continue;
        long e = static_cast<long>(i) * (f.p - 1) + f.alpha;
        if (e > f.r) throw std::domain_error("build_d_element: exponent out of range");
        out.set_coeff(e, out.coeff(e) + reduce_mod_pk(f.d[i], f.p, M));
    }
    return out;
}

/// Outcome of the kernel-implies-divisibility check.
struct ThetaDivReport {
    bool hypothesis_holds = false;   // D_w = 0 mod p for all w < alpha
    bool divisible = false;
    bool applicable = true;          // false when the hypothesis fails
    std::string detail;
};

/// If D_w(D) = 0 mod p for all 0 <= w < alpha then the built element is
/// divisible by theta^alpha over F_p; report both the hypothesis evaluation
/// and the division outcome. The guarantee needs the support to keep the
/// y-degree at least alpha, i.e. i(p-1) <= r - 2 alpha on the support.
inline ThetaDivReport check_kernel_divisibility(const DFamily& f) {
    ThetaDivReport rep;
    rep.hypothesis_holds = true;
    for (long w = 0; w < f.alpha; ++w) {
        QQ v = d_functional(f, w);
        if (v != 0 && vp(v, f.p) < 1) {
            rep.hypothesis_holds = false;
            rep.applicable = false;
            rep.detail = "D_" + std::to_string(w) + " is a unit";
            return rep;
        }
    }
    HomogPoly el = build_d_element(f).reduced_mod_p();
    auto q = divide_by_theta_power(el, f.alpha);
    rep.divisible = q.has_value();
    return rep;
}

/// Random family with D_w = 0 mod p for all w < alpha, supported inside the
/// safe range i(p-1) <= r - 2 alpha. Kernel vectors are sampled by choosing
/// the tail freely and solving the alpha x alpha Vandermonde-type head.
inline DFamily random_kernel_family(long alpha, long r, long p, std::mt19937_64& rng) {
    long top = (r - 2 * alpha) / (p - 1);
    if (top + 1 <= alpha) throw std::domain_error("random_kernel_family: support too small");
    std::uniform_int_distribution<long> dist(0, p - 1);
    DFamily f;
    f.alpha = alpha;
    f.r = r;
    f.p = p;
    f.d.assign(static_cast<size_t>(top) + 1, QQ(0));
    while (true) {
        for (long i = alpha; i <= top; ++i) f.d[static_cast<size_t>(i)] = QQ(dist(rng));
        // solve for D_0..D_{alpha-1} from the alpha conditions over F_p
        ModMat m(alpha, alpha, p, 1);
        std::vector<ZZ> rhs(static_cast<size_t>(alpha), ZZ(0));
        for (long w = 0; w < alpha; ++w) {
            for (long i = 0; i < alpha; ++i) m.set(w, i, binom(ZZ(i) * (p - 1), w));
            QQ tail(0);
            for (long i = alpha; i <= top; ++i)
                tail += f.d[static_cast<size_t>(i)] * QQ(binom(ZZ(i) * (p - 1), w));
            rhs[static_cast<size_t>(w)] = mod_reduce(-reduce_mod_pk(tail, p, 1), ZZ(p));
        }
        auto sol = m.solve(rhs);
        if (!sol) continue;
        for (long i = 0; i < alpha; ++i) f.d[static_cast<size_t>(i)] = QQ((*sol)[static_cast<size_t>(i)]);
        bool nonzero = false;
        for (auto& v : f.d) if (v != 0) nonzero = true;
        if (nonzero) return f;
    }
}

}  // namespace rhobar
