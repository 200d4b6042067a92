#pragma once

#include <stdexcept>
#include <string>

#include "core.hpp"
#include "valuation.hpp"

namespace rhobar {

/// Symbolic slope datum: the classification theorems depend only on
/// nu = floor(v_p(a)) + 1, on whether v_p(a) is an integer, and on the
/// leading unit of a in the integer case. Comparisons against v_p(a)
/// are decided symbolically, never through a numeric stand-in.
struct SlopeClass {
    enum class Kind { GenericNonInteger, ExactInteger };
    Kind kind;
    long nu;    // v_p(a) in (nu-1, nu) for generic; v_p(a) = nu-1 for integer
    long unit;  // a = unit * p^(nu-1) * (1 + O(p)), integer case only

    static SlopeClass generic(long nu) { return {Kind::GenericNonInteger, nu, 0}; }
    static SlopeClass integer(long nu, long unit) { return {Kind::ExactInteger, nu, unit}; }

    bool is_integer() const { return kind == Kind::ExactInteger; }

    /// Compare v_p(a) - alpha against an exact rational q.
    Cmp cmp_vpa_minus(long alpha, const QQ& q) const {
        if (kind == Kind::ExactInteger) {
            QQ t(nu - 1 - alpha);
            if (t < q) return Cmp::Less;
            if (t > q) return Cmp::Greater;
            return Cmp::Equal;
        }
        if (q <= QQ(nu - 1 - alpha)) return Cmp::Greater;
        if (q >= QQ(nu - alpha)) return Cmp::Less;
        return Cmp::Unknown;
    }

    /// Compare a concrete valuation x against v_p(a) - alpha.
    Cmp cmp_val_vs_vpa(const Valuation& x, long alpha) const {
        if (x.is_infinite()) return Cmp::Greater;
        if (kind == Kind::ExactInteger) {
            long t = nu - 1 - alpha;
            if (x.is_exact()) return x.v < t ? Cmp::Less : x.v > t ? Cmp::Greater : Cmp::Equal;
            return x.v > t ? Cmp::Greater : Cmp::Unknown;
        }
        // generic: v_p(a) - alpha lies strictly between nu-1-alpha and nu-alpha
        if (x.is_exact()) return x.v <= nu - 1 - alpha ? Cmp::Less : Cmp::Greater;
        return x.v >= nu - alpha ? Cmp::Greater : Cmp::Unknown;
    }

    std::string str() const {
        if (kind == Kind::GenericNonInteger) return "generic(nu=" + std::to_string(nu) + ")";
        return "integer(nu=" + std::to_string(nu) + ",u=" + std::to_string(unit) + ")";
    }
};

}  // namespace rhobar
