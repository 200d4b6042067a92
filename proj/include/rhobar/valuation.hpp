#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "core.hpp"

namespace rhobar {

/// Knowledge about the p-adic valuation of a quantity.
///   Exact:    valuation is exactly v
///   AtLeast:  valuation is >= v, exact value not visible at working precision
///   Infinite: the quantity is exactly zero
struct Valuation {
    enum class Kind { Exact, AtLeast, Infinite };
    Kind kind = Kind::Infinite;
    long v = 0;

    static Valuation exact(long v) { return {Kind::Exact, v}; }
    static Valuation at_least(long v) { return {Kind::AtLeast, v}; }
    static Valuation infinite() { return {Kind::Infinite, 0}; }

    bool is_exact() const { return kind == Kind::Exact; }
    bool is_infinite() const { return kind == Kind::Infinite; }

    std::string str() const {
        if (kind == Kind::Infinite) return "inf";
        if (kind == Kind::AtLeast) return ">=" + std::to_string(v);
        return std::to_string(v);
    }
};

/// Three-valued comparison outcome; Unknown means the working precision
/// cannot decide and callers must fail loudly rather than guess.
enum class Cmp { Less, Equal, Greater, Unknown };

/// Compare a valuation against an exact rational threshold q.
inline Cmp cmp_val(const Valuation& x, const QQ& q) {
    switch (x.kind) {
        case Valuation::Kind::Infinite:
            return Cmp::Greater;
        case Valuation::Kind::Exact:
            if (QQ(x.v) < q) return Cmp::Less;
            if (QQ(x.v) > q) return Cmp::Greater;
            return Cmp::Equal;
        case Valuation::Kind::AtLeast:
            if (QQ(x.v) > q) return Cmp::Greater;
            return Cmp::Unknown;
    }
    return Cmp::Unknown;
}

/// Compare two valuations (x vs y).
inline Cmp cmp_val(const Valuation& x, const Valuation& y) {
    using K = Valuation::Kind;
    if (x.kind == K::Infinite && y.kind == K::Infinite) return Cmp::Equal;
    if (x.kind == K::Infinite) return Cmp::Greater;
    if (y.kind == K::Infinite) return Cmp::Less;
    if (x.kind == K::Exact && y.kind == K::Exact) {
        if (x.v < y.v) return Cmp::Less;
        if (x.v > y.v) return Cmp::Greater;
        return Cmp::Equal;
    }
    if (x.kind == K::Exact && y.kind == K::AtLeast)
        return x.v < y.v ? Cmp::Less : Cmp::Unknown;
    if (x.kind == K::AtLeast && y.kind == K::Exact)
        return x.v > y.v ? Cmp::Greater : Cmp::Unknown;
    return Cmp::Unknown;
}

inline bool cmp_is(Cmp c, bool lt, bool eq, bool gt) {
    switch (c) {
        case Cmp::Less: return lt;
        case Cmp::Equal: return eq;
        case Cmp::Greater: return gt;
        case Cmp::Unknown: throw std::runtime_error("valuation comparison undecidable at this precision");
    }
    return false;
}

}  // namespace rhobar
