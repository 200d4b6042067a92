#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"
#include "qpoly.hpp"

namespace rhobar {

enum class IdentityId {
    CA, CB, CC, CD, CE, CF, CG,
    F_UVC,
    STAR1, STAR2, STAR3, STAR4, STAR5,
    F1_EQ_F2, F3_ZERO,
    L1_EQ_R1, L2_EQ_R2, L3_EQ_R3,
    PHI_BETA_ZERO,
    SUM_SHARP_S_ALPHA,
    DET_2X2, E_ROW_ENTRIES,
};

using IdParams = std::map<std::string, long>;

struct CheckReport {
    IdentityId id{};
    IdParams params;
    enum class Status { Pass, Fail, Inadmissible } status = Status::Inadmissible;
    std::string witness;  // both sides, for failures
    std::string method;   // e.g. "exact", "mod p^m", "polynomial expansion, degree <= d"

    bool passed() const { return status == Status::Pass; }
};

struct SweepBounds {
    long max_u = 100;   // caps u, v, d
    long max_n = 7;     // caps |n|, |c|, |t|
    long max_small = 6; // caps w, l, b, alpha-like indices
    long max_m = 3;
    long max_uv_poly = 12;
};

struct IdentityEntry {
    IdentityId id{};
    std::string name;
    std::string anchor;  // functional description of what the identity governs
    std::function<bool(const IdParams&, long p)> admissible;
    std::function<CheckReport(const IdParams&, long p)> check;
    std::function<std::vector<IdParams>(const SweepBounds&, long p)> enumerate;
};

namespace detail {

inline long get(const IdParams& ps, const std::string& k) {
    auto it = ps.find(k);
    if (it == ps.end()) throw std::invalid_argument("missing identity parameter: " + k);
    return it->second;
}

inline CheckReport pass(IdentityId id, const IdParams& ps, std::string method) {
    return {id, ps, CheckReport::Status::Pass, "", std::move(method)};
}

inline CheckReport fail(IdentityId id, const IdParams& ps, std::string witness, std::string method) {
    return {id, ps, CheckReport::Status::Fail, std::move(witness), std::move(method)};
}

inline CheckReport inad(IdentityId id, const IdParams& ps) {
    return {id, ps, CheckReport::Status::Inadmissible, "", ""};
}

inline CheckReport exact_compare(IdentityId id, const IdParams& ps, const QQ& lhs, const QQ& rhs) {
    if (lhs == rhs) return pass(id, ps, "exact");
    std::ostringstream os;
    os << "lhs=" << lhs.get_str() << " rhs=" << rhs.get_str();
    return fail(id, ps, os.str(), "exact");
}

inline CheckReport modp_compare(IdentityId id, const IdParams& ps, const QQ& lhs, const QQ& rhs, long p, long m = 1) {
    QQ diff = lhs - rhs;
    bool ok = diff == 0 || vp(diff, p) >= m;
    if (ok) return pass(id, ps, "mod p^" + std::to_string(m));
    std::ostringstream os;
    os << "lhs=" << lhs.get_str() << " rhs=" << rhs.get_str() << " v_p(diff)=" << vp(diff, p);
    return fail(id, ps, os.str(), "mod p^" + std::to_string(m));
}

inline CheckReport poly_compare(IdentityId id, const IdParams& ps, const QPoly& lhs, const QPoly& rhs) {
    long deg = std::max(lhs.degree(), rhs.degree());
    std::string method = "polynomial expansion, degree <= " + std::to_string(deg < 0 ? 0 : deg) +
                         " (pass implies equality at any " + std::to_string(deg + 2) + " points)";
    if (lhs == rhs) return pass(id, ps, method);
    std::ostringstream os;
    for (long i = 0; i <= deg; ++i)
        if (lhs.coeff(i) != rhs.coeff(i))
            os << "[X^" << i << "] lhs=" << lhs.coeff(i).get_str() << " rhs=" << rhs.coeff(i).get_str() << "; ";
    return fail(id, ps, os.str(), method);
}

}  // namespace detail

/// The full registry. Every entry evaluates its left side by direct summation
/// over the raw definition and its right side by the closed form; the two
/// code paths share only the scalar primitives.
const std::vector<IdentityEntry>& identity_registry();

inline const IdentityEntry& identity_entry(IdentityId id) {
    for (const auto& e : identity_registry())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown identity id");
}

inline const IdentityEntry* identity_entry_by_name(const std::string& name) {
    for (const auto& e : identity_registry())
        if (e.name == name) return &e;
    return nullptr;
}

inline CheckReport check_identity(IdentityId id, const IdParams& ps, long p) {
    const auto& e = identity_entry(id);
    if (!e.admissible(ps, p)) return detail::inad(id, ps);
    return e.check(ps, p);
}

struct SweepReport {
    long checked = 0;
    long passed = 0;
    long failed = 0;
    long inadmissible = 0;
    std::vector<CheckReport> failures;  // first few witnesses

    void absorb(const CheckReport& r) {
        ++checked;
        switch (r.status) {
            case CheckReport::Status::Pass: ++passed; break;
            case CheckReport::Status::Inadmissible: ++inadmissible; break;
            case CheckReport::Status::Fail:
                ++failed;
                if (failures.size() < 8) failures.push_back(r);
                break;
        }
    }
    void merge(const SweepReport& o) {
        checked += o.checked;
        passed += o.passed;
        failed += o.failed;
        inadmissible += o.inadmissible;
        for (const auto& f : o.failures)
            if (failures.size() < 8) failures.push_back(f);
    }
};

inline SweepReport sweep_identity(IdentityId id, long p, const SweepBounds& bounds) {
    const auto& e = identity_entry(id);
    SweepReport rep;
    for (auto& ps : e.enumerate(bounds, p)) {
        if (!e.admissible(ps, p)) { ++rep.checked; ++rep.inadmissible; continue; }
        rep.absorb(e.check(ps, p));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// registry definition
// ---------------------------------------------------------------------------

namespace detail {

inline QPoly binom_poly_shift(long n, long off) { return QPoly::binomial(n, QQ(off)); }

/// F_{u,v,c}(X) = sum_w (-1)^(w-c) binom(w,c) dbinom(X,w) binom(X+u-w, v-w), expanded.
inline QPoly f_uvc_lhs(long u, long v, long c) {
    QPoly acc;
    for (long w = 0; w <= std::max<long>(v, 0); ++w) {
        ZZ bw = binom(ZZ(w), c);
        if (bw == 0) continue;
        QPoly term = QPoly::binomial(w).derivative() * binom_poly_shift(v - w, u - w);
        long sign = ((w - c) % 2 == 0) ? 1 : -1;
        acc = acc + term * QQ(sign * bw);
    }
    return acc;
}

inline QPoly f_uvc_rhs(long u, long v, long c) {
    QPoly a = QPoly::binomial(c).derivative() * QQ(binom(ZZ(u), v - c));
    QPoly b = QPoly::binomial(c) * binom_deriv(ZZ(u), v - c);
    return a - b;
}

/// Restricted double sum sum_{i>0} binom(U, i(p-1)+j) binom(i(p-1), w), exact.
inline ZZ top_weighted_sum(const ZZ& U, long j, long w, long p) {
    ZZ acc(0);
    for (ZZ ip = p - 1; ip + j <= U; ip += p - 1)
        acc += binom(U, static_cast<long>(ZZ(ip + j).get_si())) * binom(ip, w);
    return acc;
}

}  // namespace detail

inline const std::vector<IdentityEntry>& identity_registry() {
    using detail::get;
    using detail::pass;
    using detail::fail;
    using detail::exact_compare;
    using detail::modp_compare;
    using detail::poly_compare;
    static const std::vector<IdentityEntry> reg = [] {
        std::vector<IdentityEntry> v;

        // --- CA: M_{u,n} = M_{v,n} mod p^m whenever u = v mod (p-1)p^(m-1) ---
        v.push_back(IdentityEntry{
            IdentityId::CA, "CA", "congruence stability of the weighted binomial sums M_{u,n}",
            [](const IdParams& ps, long p) {
                long u = get(ps, "u"), w = get(ps, "v"), m = get(ps, "m");
                if (u < 1 || w < 1 || m < 1) return false;
                ZZ step = ZZ(p - 1) * p_power(p, m - 1);
                return mod_reduce(ZZ(u - w), step) == 0;
            },
            [](const IdParams& ps, long p) {
                long u = get(ps, "u"), w = get(ps, "v"), n = get(ps, "n"), m = get(ps, "m");
                return modp_compare(IdentityId::CA, ps, QQ(m_sum(u, n, p)), QQ(m_sum(w, n, p)), p, m);
            },
            [](const SweepBounds& b, long p) {
                std::vector<IdParams> out;
                for (long m = 1; m <= b.max_m; ++m) {
                    long step = (p - 1);
                    for (long i = 1; i < m; ++i) step *= p;
                    for (long u = 1; u <= b.max_u; ++u)
                        for (long w = u + step; w <= b.max_u; w += step)
                            for (long n = -b.max_n; n <= b.max_n; ++n)
                                out.push_back({{"u", u}, {"v", w}, {"n", n}, {"m", m}});
                }
                return out;
            }});

        // --- CB: M_u = 1 + delta + (t_u/s_u) p + O(t_u p^2) ---
        v.push_back(IdentityEntry{
            IdentityId::CB, "CB", "second-order value of M_u; asserted as a valuation inequality",
            [](const IdParams& ps, long) { return get(ps, "u") >= 1; },
            [](const IdParams& ps, long p) {
                long u = get(ps, "u");
                long su = more_rep(u, p);
                long tu = (u - su) / (p - 1);
                long delta = (u % (p - 1) == 0) ? 1 : 0;
                QQ diff = QQ(m_sum(u, 0, p)) - 1 - delta - QQ(tu, su) * p;
                if (tu == 0)
                    return diff == 0 ? pass(IdentityId::CB, ps, "exact (t_u=0)")
                                     : fail(IdentityId::CB, ps, "diff=" + diff.get_str(), "exact (t_u=0)");
                long need = vp(QQ(tu), p) + 2;
                if (diff == 0 || vp(diff, p) >= need)
                    return pass(IdentityId::CB, ps, "v_p(diff) >= v_p(t_u)+2");
                return fail(IdentityId::CB, ps,
                            "diff=" + diff.get_str() + " v_p=" + std::to_string(vp(diff, p)) +
                                " need>=" + std::to_string(need),
                            "v_p(diff) >= v_p(t_u)+2");
            },
            [](const SweepBounds& b, long) {
                std::vector<IdParams> out;
                for (long u = 1; u <= b.max_u; ++u) out.push_back({{"u", u}});
                return out;
            }});

        // --- CC: M_{u,n} = sum_i (-1)^i binom(-n,i) M_{u-n-i,0} for n <= 0 ---
        v.push_back(IdentityEntry{
            IdentityId::CC, "CC", "reduction of shifted M-sums to plain M-sums",
            [](const IdParams& ps, long) { return get(ps, "u") >= 0 && get(ps, "n") <= 0; },
            [](const IdParams& ps, long p) {
                long u = get(ps, "u"), n = get(ps, "n");
                QQ rhs(0);
                for (long i = 0; i <= -n; ++i) {
                    long sign = (i % 2 == 0) ? 1 : -1;
                    rhs += QQ(sign) * QQ(binom(ZZ(-n), i)) * QQ(m_sum(u - n - i, 0, p));
                }
                return exact_compare(IdentityId::CC, ps, QQ(m_sum(u, n, p)), rhs);
            },
            [](const SweepBounds& b, long) {
                std::vector<IdParams> out;
                for (long u = 0; u <= b.max_u; ++u)
                    for (long n = -b.max_n; n <= 0; ++n) out.push_back({{"u", u}, {"n", n}});
                return out;
            }});

        // --- CD: M_{u,n} = (1 + delta) binom([u]_1, [n]_0) mod p for n >= 0 ---
        v.push_back(IdentityEntry{
            IdentityId::CD, "CD", "mod-p closed form of M_{u,n}",
            [](const IdParams& ps, long) { return get(ps, "u") >= 1 && get(ps, "n") >= 0; },
            [](const IdParams& ps, long p) {
                long u = get(ps, "u"), n = get(ps, "n");
                long delta = (u % (p - 1) == 0 && n % (p - 1) == 0) ? 1 : 0;
                QQ rhs = QQ(1 + delta) * QQ(binom(ZZ(more_rep(u, p)), less_rep(n, p)));
                return modp_compare(IdentityId::CD, ps, QQ(m_sum(u, n, p)), rhs, p);
            },
            [](const SweepBounds& b, long) {
                std::vector<IdParams> out;
                for (long u = 1; u <= b.max_u; ++u)
                    for (long n = 0; n <= b.max_n; ++n) out.push_back({{"u", u}, {"n", n}});
                return out;
            }});

        // --- CE: sum_j (-1)^(j-b) binom(l, j-b) binom(u-nj, w) = delta_{w=l} n^l ---
        v.push_back(IdentityEntry{
            IdentityId::CE, "CE", "alternating difference operator applied to binomial columns",
            [](const IdParams& ps, long) {
                long b = get(ps, "b"), l = get(ps, "l"), n = get(ps, "n"), w = get(ps, "w"), u = get(ps, "u");
                return b >= 0 && l >= 0 && n >= 0 && w >= 0 && u >= (b + l) * n && l >= w;
            },
            [](const IdParams& ps, long) {
                long b = get(ps, "b"), l = get(ps, "l"), n = get(ps, "n"), w = get(ps, "w"), u = get(ps, "u");
                QQ lhs(0);
                for (long j = b; j <= b + l; ++j) {
                    long sign = ((j - b) % 2 == 0) ? 1 : -1;
                    lhs += QQ(sign) * QQ(binom(ZZ(l), j - b)) * QQ(binom(ZZ(u - n * j), w));
                }
                QQ rhs = (w == l) ? QQ(pow_zz(ZZ(n), static_cast<unsigned long>(l))) : QQ(0);
                if (w == l && l == 0) rhs = 1;  // n^0
                return exact_compare(IdentityId::CE, ps, lhs, rhs);
            },
            [](const SweepBounds& b, long) {
                std::vector<IdParams> out;
                for (long bb = 0; bb <= b.max_small; ++bb)
                    for (long l = 0; l <= b.max_small; ++l)
                        for (long n = 0; n <= b.max_small; ++n)
                            for (long w = 0; w <= l; ++w)
                                for (long u = (bb + l) * n; u <= std::min(b.max_u, (bb + l) * n + 2 * b.max_small + 2); ++u)
                                    out.push_back({{"b", bb}, {"l", l}, {"n", n}, {"w", w}, {"u", u}});
                return out;
            }});

        // --- CF: binom(X,t+l) binom(t,w) = sum_v ... , polynomial identity in X ---
        v.push_back(IdentityEntry{
            IdentityId::CF, "CF", "splitting of a binomial product into shifted binomial convolutions",
            [](const IdParams& ps, long) { return get(ps, "l") >= 0 && get(ps, "w") >= 0; },
            [](const IdParams& ps, long) {
                long t = get(ps, "t"), l = get(ps, "l"), w = get(ps, "w");
                QPoly lhs = QPoly::binomial(t + l) * QQ(binom(ZZ(t), w));
                QPoly rhs;
                for (long vv = 0; vv <= w; ++vv) {
                    ZZ c = binom(ZZ(l + w - vv - 1), w - vv);
                    if (c == 0) continue;
                    long sign = ((w - vv) % 2 == 0) ? 1 : -1;
                    rhs = rhs + QPoly::binomial(vv) * detail::binom_poly_shift(t + l - vv, -vv) * QQ(sign * c);
                }
                return poly_compare(IdentityId::CF, ps, lhs, rhs);
            },
            [](const SweepBounds& b, long) {
                std::vector<IdParams> out;
                for (long t = -b.max_n; t <= b.max_n; ++t)
                    for (long l = 0; l <= b.max_small; ++l)
                        for (long w = 0; w <= b.max_small; ++w)
                            out.push_back({{"t", t}, {"l", l}, {"w", w}});
                return out;
            }});

        // --- CG: weighted top sum = convolution of binomials with M-sums (d = u-m) ---
        v.push_back(IdentityEntry{
            IdentityId::CG, "CG", "weighted restricted sums expressed through M-sums",
            [](const IdParams& ps, long) {
                long d = get(ps, "d"), l = get(ps, "l"), w = get(ps, "w");
                return d >= 0 && l >= 0 && w >= 0 && d + l >= w;
            },
            [](const IdParams& ps, long p) {
                long d = get(ps, "d"), l = get(ps, "l"), w = get(ps, "w");
                ZZ U(d + l);
                // left: sum over all i of binom(U, i(p-1)+l) binom(i(p-1), w)
                QQ lhs(0);
                ZZ k = mod_reduce(ZZ(l), ZZ(p - 1));
                for (; k <= U; k += p - 1) {
                    ZZ ip = k - l;  // i(p-1), any sign
                    lhs += QQ(binom(U, static_cast<long>(k.get_si())) * binom(ip, w));
                }
                QQ rhs(0);
                for (long vv = 0; vv <= w; ++vv) {
                    long sign = ((w - vv) % 2 == 0) ? 1 : -1;
                    ZZ c = binom(ZZ(l + w - vv - 1), w - vv);
                    if (c == 0) continue;
                    rhs += QQ(sign) * QQ(c * binom(U, vv) * m_sum(U - vv, ZZ(l - vv), p));
                }
                return exact_compare(IdentityId::CG, ps, lhs, rhs);
            },
            [](const SweepBounds& b, long) {
                std::vector<IdParams> out;
                for (long d = 0; d <= b.max_u; ++d)
                    for (long l = 0; l <= b.max_small; ++l)
                        for (long w = 0; w <= b.max_small; ++w)
                            out.push_back({{"d", d}, {"l", l}, {"w", w}});
                return out;
            }});

        // --- F_UVC: the derivative convolution collapses to a two-term closed form ---
        v.push_back(IdentityEntry{
            IdentityId::F_UVC, "F_UVC", "closed form of the binomial-derivative convolution F_{u,v,c}",
            [](const IdParams&, long) { return true; },
            [](const IdParams& ps, long) {
                long u = get(ps, "u"), vv = get(ps, "v"), c = get(ps, "c");
                return poly_compare(IdentityId::F_UVC, ps, detail::f_uvc_lhs(u, vv, c), detail::f_uvc_rhs(u, vv, c));
            },
            [](const SweepBounds& b, long) {
                std::vector<IdParams> out;
                for (long u = -b.max_uv_poly; u <= b.max_uv_poly; ++u)
                    for (long vv = -b.max_uv_poly; vv <= b.max_uv_poly; ++vv)
                        for (long c = -b.max_n; c <= b.max_n; ++c)
                            out.push_back({{"u", u}, {"v", vv}, {"c", c}});
                return out;
            }});

        // --- STAR1: kernel rows vanish for the unit-family coefficients ---
        v.push_back(IdentityEntry{
            IdentityId::STAR1, "STAR1", "row sums of the base kernel family vanish below the diagonal block",
            [](const IdParams& ps, long) {
                long a = get(ps, "a"), b = get(ps, "b"), i = get(ps, "i");
                return a >= 1 && b >= 0 && b < a && i >= 1 && i <= b;
            },
            [](const IdParams& ps, long) {
                long s = get(ps, "s"), a = get(ps, "a"), b = get(ps, "b"), i = get(ps, "i");
                QQ lhs(0);
                for (long j = 1; j <= a; ++j) {
                    long sign = ((a - j) % 2 == 0) ? 1 : -1;
                    lhs += QQ(sign) * QQ(binom(ZZ(s - a + 1), a - j) * binom(ZZ(s - a - b + j), j - i));
                }
                return exact_compare(IdentityId::STAR1, ps, lhs, QQ(0));
            },
            [](const SweepBounds& b, long) {
                std::vector<IdParams> out;
                for (long s = -b.max_small; s <= 2 * b.max_small + 2; ++s)
                    for (long a = 1; a <= b.max_small; ++a)
                        for (long bb = 1; bb < a; ++bb)
                            for (long i = 1; i <= bb; ++i)
                                out.push_back({{"s", s}, {"a", a}, {"b", bb}, {"i", i}});
                return out;
            }});

        // --- STAR2: target vector of the eps-family row system ---
        v.push_back(IdentityEntry{
            IdentityId::STAR2, "STAR2", "row sums of the eps-family hit the prescribed target vector",
            [](const IdParams& ps, long) {
                long a = get(ps, "a"), b = get(ps, "b"), i = get(ps, "i");
                return a >= 1 && b >= 0 && b < a && i >= 1 && i <= a;
            },
            [](const IdParams& ps, long) {
                long s = get(ps, "s"), a = get(ps, "a"), b = get(ps, "b"), i = get(ps, "i");
                QQ lhs(0);
                for (long j = 1; j <= a; ++j) {
                    long sign = ((a + b + j) % 2 == 0) ? 1 : -1;
                    lhs += QQ(sign * a) * QQ(binom(ZZ(a - 1), b) * binom(ZZ(s - a + 1), a - j) *
                                             binom(ZZ(s - a - b + j), j - i));
                }
                QQ rhs;
                if (i <= b) {
                    rhs = 0;
                } else {
                    long sign = (b % 2 == 0) ? 1 : -1;
                    rhs = QQ(sign * a) * QQ(binom(ZZ(a - 1), b) * binom(ZZ(a - b - 1), i - b - 1));
                    // cross-check the rational rewrite (-1)^i binom(a,i) / (-dbinom(b,i)) when deriv nonzero
                    QQ d = binom_deriv(ZZ(b), i);
                    if (d != 0) {
                        long si = (i % 2 == 0) ? 1 : -1;
                        QQ alt = QQ(si) * QQ(binom(ZZ(a), i)) / (QQ(-1) * d);
                        if (alt != rhs)
                            return fail(IdentityId::STAR2, ps,
                                        "closed forms disagree: " + rhs.get_str() + " vs " + alt.get_str(), "exact");
                    }
                }
                return exact_compare(IdentityId::STAR2, ps, lhs, rhs);
            },
            [](const SweepBounds& b, long) {
                std::vector<IdParams> out;
                for (long s = 0; s <= 2 * b.max_small + 2; ++s)
                    for (long a = 1; a <= b.max_small; ++a)
                        for (long bb = 0; bb < a; ++bb)
                            for (long i = 1; i <= a; ++i)
                                out.push_back({{"s", s}, {"a", a}, {"b", bb}, {"i", i}});
                return out;
            }});

        // --- STAR3: instantiated vanishing of the unit-family weighted sums mod p ---
        v.push_back(IdentityEntry{
            IdentityId::STAR3, "STAR3", "instantiated weighted sums of the unit family vanish mod p",
            [](const IdParams& ps, long) {
                long u = get(ps, "u"), w = get(ps, "w"), g = get(ps, "g"), a = get(ps, "a");
                return a >= 1 && u >= 0 && u <= a && w >= 0 && w <= a && g >= 0 && g < a;
            },
            [](const IdParams& ps, long p) {
                long u = get(ps, "u"), w = get(ps, "w"), g = get(ps, "g"), a = get(ps, "a");
                QQ lhs(0);
                for (long j = 1; j <= a; ++j) {
                    long sign = ((a - j) % 2 == 0) ? 1 : -1;
                    ZZ inner(0);
                    for (long i = 1; i <= g; ++i)
                        inner += binom(ZZ(g) * (p - 1) + u + j, i * (p - 1) + j) * binom(ZZ(i) * (p - 1), w);
                    lhs += QQ(sign) * QQ(binom(ZZ(u + 1), a - j) * inner);
                }
                return modp_compare(IdentityId::STAR3, ps, lhs, QQ(0), p);
            },
            [](const SweepBounds& b, long) {
                std::vector<IdParams> out;
                for (long a = 1; a <= b.max_small; ++a)
                    for (long u = 0; u <= a; ++u)
                        for (long w = 0; w <= a; ++w)
                            for (long g = 0; g < a; ++g)
                                out.push_back({{"a", a}, {"u", u}, {"w", w}, {"g", g}});
                return out;
            }});

        // --- STAR4: instantiated system for the polynomial family mod p ---
        v.push_back(IdentityEntry{
            IdentityId::STAR4, "STAR4", "instantiated weighted sums of the polynomial family match their target mod p",
            [](const IdParams& ps, long p) {
                long s = get(ps, "s"), a = get(ps, "a"), g = get(ps, "g"), w = get(ps, "w");
                if (!(s >= 2 && s % 2 == 0 && 2 * a >= s && a < s && w >= 0 && w <= a && g >= 1 && g <= a + 1))
                    return false;
                return mod_reduce(binom(ZZ(a), s - a - 1), ZZ(p)) != 0 && s < p && mod_reduce(ZZ(s - a), ZZ(p)) != 0;
            },
            [](const IdParams& ps, long p) {
                long s = get(ps, "s"), a = get(ps, "a"), g = get(ps, "g"), w = get(ps, "w");
                // C_j(z) evaluated at z = s + g(p-1)
                ZZ z = ZZ(s) + ZZ(g) * (p - 1);
                QQ c0 = QQ(1) / QQ(binom(ZZ(a), s - a - 1)) * QQ(ZZ(s) - z, a + 1);
                std::vector<QQ> C(static_cast<size_t>(a) + 1);
                C[0] = c0;
                for (long j = 1; j <= a; ++j) {
                    long sign = ((j + 1) % 2 == 0) ? 1 : -1;
                    C[static_cast<size_t>(j)] = QQ(sign, j + 1) * QQ(binom(ZZ(s - a - 1), a - j) * (z - a));
                }
                QQ lhs(0);
                for (long j = 0; j <= a; ++j)
                    lhs += C[static_cast<size_t>(j)] * QQ(detail::top_weighted_sum(z - a + j, j, w, p));
                QQ rhs = (w == 0 ? QQ(-binom(ZZ(-g) * (p - 1) - 1, a + 1)) : QQ(0));
                long sign = ((a + 1) % 2 == 0) ? 1 : -1;
                rhs += QQ(sign) * QQ(z - a, s - a) * QQ(binom(ZZ(g) * (p - 1), w));
                return modp_compare(IdentityId::STAR4, ps, lhs, rhs, p);
            },
            [](const SweepBounds& b, long p) {
                std::vector<IdParams> out;
                for (long s = 2; s <= std::min(b.max_small * 2, p - 1); s += 2)
                    for (long a = (s + 1) / 2; a < s; ++a)
                        for (long g = 1; g <= a + 1; ++g)
                            for (long w = 0; w <= a; ++w)
                                out.push_back({{"s", s}, {"a", a}, {"g", g}, {"w", w}});
                return out;
            }});

        // --- STAR5: the quadruple-parameter binomial convolution ---
        v.push_back(IdentityEntry{
            IdentityId::STAR5, "STAR5", "four-parameter binomial convolution closed form",
            [](const IdParams& ps, long) {
                return get(ps, "u") >= 0 && get(ps, "v") >= 0 && get(ps, "w") >= 0 && get(ps, "t") >= 0;
            },
            [](const IdParams& ps, long) {
                long u = get(ps, "u"), vv = get(ps, "v"), w = get(ps, "w"), t = get(ps, "t");
                QQ lhs(0);
                for (long j = 0; j <= vv + 1; ++j) {
                    long sign = (j % 2 == 0) ? 1 : -1;
                    lhs += QQ(sign) * QQ(binom(ZZ(j), 2 * vv - u + 1) * binom(ZZ(vv + 1), j) *
                                         binom(ZZ(u - vv - w + j), u - vv - w + t));
                }
                long sign = ((vv + 1) % 2 == 0) ? 1 : -1;
                QQ rhs = QQ(sign) * QQ(binom(ZZ(vv - w + 1), t - w) * binom(ZZ(vv + 1), u - vv));
                return exact_compare(IdentityId::STAR5, ps, lhs, rhs);
            },
            [](const SweepBounds& b, long) {
                std::vector<IdParams> out;
                for (long u = 0; u <= b.max_small + 2; ++u)
                    for (long vv = 0; vv <= b.max_small + 2; ++vv)
                        for (long w = 0; w <= b.max_small; ++w)
                            for (long t = 0; t <= b.max_small; ++t)
                                out.push_back({{"u", u}, {"v", vv}, {"w", w}, {"t", t}});
                return out;
            }});

        return v;
    }();
    static const std::vector<IdentityEntry> reg2 = [] {
        std::vector<IdentityEntry> v = reg;

        // --- F1_EQ_F2: bivariate vanishing system of the unit family ---
        v.push_back(IdentityEntry{
            IdentityId::F1_EQ_F2, "F1_EQ_F2", "bivariate closed form of the unit-family weighted sums",
            [](const IdParams& ps, long) {
                long a = get(ps, "a"), w = get(ps, "w");
                return a >= 1 && w >= 0 && w <= a;
            },
            [](const IdParams& ps, long) {
                long a = get(ps, "a"), w = get(ps, "w");
                // F1(z,psi) = sum_j (-1)^(a-j) binom(psi-a+1, a-j) F_{w,j}(z,psi)
                QPoly2 f1;
                for (long j = 1; j <= a; ++j) {
                    QPoly2 cj = QPoly2::binomial_lin(a - j, QQ(0), QQ(1), QQ(-a + 1));
                    long sj = ((a - j) % 2 == 0) ? 1 : -1;
                    QPoly2 fwj;
                    for (long vv = 0; vv <= w; ++vv) {
                        ZZ c = binom(ZZ(j + w - vv - 1), w - vv);
                        if (c == 0) continue;
                        long sv = ((w - vv) % 2 == 0) ? 1 : -1;
                        QPoly2 bz = QPoly2::binomial_lin(vv, QQ(1), QQ(0), QQ(-a + j));
                        QPoly2 diff = QPoly2::binomial_lin(j - vv, QQ(0), QQ(1), QQ(-a + j - vv)) -
                                      QPoly2::binomial_lin(j - vv, QQ(1), QQ(0), QQ(-a + j - vv));
                        fwj = fwj + bz * diff * QQ(sv * c);
                    }
                    f1 = f1 + cj * fwj * QQ(sj);
                }
                long sa = (a % 2 == 0) ? 1 : -1;
                long del = (w == a ? 1 : 0) - (w == 0 ? 1 : 0);
                // binom(psi - z, a)
                QPoly2 f2 = QPoly2::binomial_lin(a, QQ(-1), QQ(1), QQ(0)) * QQ(sa * del);
                if (f1 == f2)
                    return pass(IdentityId::F1_EQ_F2, ps,
                                "bivariate expansion, z-degree <= " + std::to_string(a) +
                                    " (pass implies equality on any sufficient grid)");
                return fail(IdentityId::F1_EQ_F2, ps, "bivariate polynomials differ", "bivariate expansion");
            },
            [](const SweepBounds& b, long) {
                std::vector<IdParams> out;
                for (long a = 1; a <= b.max_small; ++a)
                    for (long w = 0; w <= a; ++w) out.push_back({{"a", a}, {"w", w}});
                return out;
            }});

        // --- F3_ZERO ---
        v.push_back(IdentityEntry{
            IdentityId::F3_ZERO, "F3_ZERO", "the shifted polynomial-family combination vanishes identically",
            [](const IdParams& ps, long) {
                long s = get(ps, "s"), a = get(ps, "a"), w = get(ps, "w");
                return s >= 2 && s % 2 == 0 && 2 * a >= s && a < s && w >= 1 && w <= s - a - 1 &&
                       binom(ZZ(a), s - a - 1) != 0;
            },
            [](const IdParams& ps, long) {
                long s = get(ps, "s"), a = get(ps, "a"), w = get(ps, "w");
                // F3(z) = binom(a,s-a-1)^{-1} (s-z-w)/(a+1) binom(z-a-1, s-a-w-1)
                //       + sum_j ((-1)^(j+1) (s-a-w)/(j+1)) binom(s-a-1, a-j) binom(z-a+j, s-a-w)
                QPoly szw = QPoly(QQ(s - w)) - QPoly::X();
                QPoly f3 = szw * detail::binom_poly_shift(s - a - w - 1, -a - 1) *
                           (QQ(1, a + 1) / QQ(binom(ZZ(a), s - a - 1)));
                for (long j = 1; j <= a; ++j) {
                    long sign = ((j + 1) % 2 == 0) ? 1 : -1;
                    f3 = f3 + detail::binom_poly_shift(s - a - w, -a + j) *
                                  (QQ(sign * (s - a - w), j + 1) * QQ(binom(ZZ(s - a - 1), a - j)));
                }
                return poly_compare(IdentityId::F3_ZERO, ps, f3, QPoly());
            },
            [](const SweepBounds& b, long) {
                std::vector<IdParams> out;
                for (long s = 2; s <= 2 * b.max_small; s += 2)
                    for (long a = (s + 1) / 2; a < s; ++a)
                        for (long w = 1; w <= s - a - 1; ++w)
                            out.push_back({{"s", s}, {"a", a}, {"w", w}});
                return out;
            }});

        // --- L1_EQ_R1 / L2_EQ_R2 ---
        auto l1 = [](long s, long a, long b, long i) -> QQ {
            QQ acc(0);
            for (long l = 0; l <= a; ++l)
                acc += QQ(binom(ZZ(l), b + 1) * binom(ZZ(l - b - 1), i - b - 1) * binom(ZZ(l - b - 1), s - a - b - 1));
            return acc;
        };
        auto r1 = [](long s, long a, long b, long i) -> QQ {
            QQ t1(0);
            for (long j = 0; j <= a; ++j) {
                long sign = ((a + j + 1) % 2 == 0) ? 1 : -1;
                t1 += QQ(sign) * QQ(binom(ZZ(j), 2 * a - s + 1) * binom(ZZ(a + 1), j + 1) *
                                    binom(ZZ(s - a - b + j), j - i));
            }
            t1 *= QQ(binom(ZZ(s - a), b + 1));
            QQ t2 = QQ(binom(ZZ(a + 1), b + 1) * binom(ZZ(a - b), s - a - b - 1) * binom(ZZ(a - b), a - i));
            return t1 + t2;
        };
        v.push_back(IdentityEntry{
            IdentityId::L1_EQ_R1, "L1_EQ_R1", "first row-vanishing convolution of the subtle family",
            [](const IdParams& ps, long) {
                return get(ps, "u") >= 0 && get(ps, "v") >= 0 && get(ps, "w") >= 0 && get(ps, "t") >= 0;
            },
            [l1, r1](const IdParams& ps, long) {
                long u = get(ps, "u"), vv = get(ps, "v"), w = get(ps, "w"), t = get(ps, "t");
                return exact_compare(IdentityId::L1_EQ_R1, ps, l1(u, vv, w, t), r1(u, vv, w, t));
            },
            [](const SweepBounds& b, long) {
                std::vector<IdParams> out;
                for (long u = 0; u <= b.max_small + 2; ++u)
                    for (long vv = 0; vv <= b.max_small + 2; ++vv)
                        for (long w = 0; w <= b.max_small; ++w)
                            for (long t = 0; t <= b.max_small; ++t)
                                out.push_back({{"u", u}, {"v", vv}, {"w", w}, {"t", t}});
                return out;
            }});

        auto l2 = [](long s, long a, long b, long i) -> QQ {
            QQ acc(0);
            for (long l = b + 1; l <= a; ++l)
                acc += QQ(binom(ZZ(l), s - a) * binom(ZZ(l - b - 1), i - b - 1));
            return acc;
        };
        auto r2 = [](long s, long a, long b, long i) -> QQ {
            QQ t1(0);
            for (long j = 0; j <= a; ++j) {
                long sign = ((a + j + 1) % 2 == 0) ? 1 : -1;
                t1 += QQ(sign) * QQ(binom(ZZ(j), 2 * a - s + 1) * binom(ZZ(a + 1), j + 1) *
                                    binom(ZZ(s - a - b + j), j - i));
            }
            return t1 + QQ(binom(ZZ(a + 1), s - a) * binom(ZZ(a - b), a - i));
        };
        v.push_back(IdentityEntry{
            IdentityId::L2_EQ_R2, "L2_EQ_R2", "second row-vanishing convolution of the subtle family",
            [](const IdParams& ps, long) {
                long u = get(ps, "u"), vv = get(ps, "v"), w = get(ps, "w"), t = get(ps, "t");
                return u >= vv && vv >= t && t > w && w >= 0;
            },
            [l2, r2](const IdParams& ps, long) {
                long u = get(ps, "u"), vv = get(ps, "v"), w = get(ps, "w"), t = get(ps, "t");
                return exact_compare(IdentityId::L2_EQ_R2, ps, l2(u, vv, w, t), r2(u, vv, w, t));
            },
            [](const SweepBounds& b, long) {
                std::vector<IdParams> out;
                for (long u = 0; u <= b.max_small + 3; ++u)
                    for (long vv = 0; vv <= u; ++vv)
                        for (long t = 1; t <= vv; ++t)
                            for (long w = 0; w < t; ++w)
                                out.push_back({{"u", u}, {"v", vv}, {"w", w}, {"t", t}});
                return out;
            }});

        // --- L3_EQ_R3: the harmonic-number diagonal case ---
        v.push_back(IdentityEntry{
            IdentityId::L3_EQ_R3, "L3_EQ_R3", "diagonal row-vanishing case with harmonic numbers",
            [](const IdParams& ps, long) {
                long u = get(ps, "u"), vv = get(ps, "v"), w = get(ps, "w");
                return u > vv && vv >= w && w > 0;
            },
            [](const IdParams& ps, long) {
                long s = get(ps, "u"), a = get(ps, "v"), b = get(ps, "w");
                QQ lhs(0);
                for (long l = 0; l <= a; ++l)
                    lhs += QQ(binom(ZZ(l), b)) *
                           (binom_deriv(ZZ(s - a - b), s - a) * QQ(binom(ZZ(l - b - 1), l + a - s)) +
                            QQ(binom(ZZ(s - a - b), s - a)) * binom_deriv(ZZ(l - b - 1), l + a - s));
                lhs *= QQ(-b);
                long sb = (b % 2 == 0) ? 1 : -1;
                QQ phi2 = QQ(-sb) * QQ(binom(ZZ(b - 1), s - a - 1));
                QQ phi3(0);
                for (long j = 0; j <= a; ++j) {
                    long sa = (a % 2 == 0) ? 1 : -1;
                    phi3 += QQ(sa) * QQ(binom(ZZ(j), 2 * a - s + 1) * binom(ZZ(a + 1), j + 1)) *
                            binom_deriv(ZZ(a - s - 1), j - b);
                }
                phi3 -= QQ(sb) * QQ(binom(ZZ(b), s - a) - binom(ZZ(a + 1), s - a)) * harmonic(b);
                QQ phi4 = QQ(sb) * QQ(binom(ZZ(a + 1), s - a)) * (harmonic(a - b) - harmonic(b));
                QQ rhs = QQ(s - a - b) * (phi3 + phi4) - phi2;
                return exact_compare(IdentityId::L3_EQ_R3, ps, lhs, rhs);
            },
            [](const SweepBounds& b, long) {
                std::vector<IdParams> out;
                for (long u = 1; u <= b.max_small + 3; ++u)
                    for (long vv = 0; vv < u; ++vv)
                        for (long w = 1; w <= vv; ++w)
                            out.push_back({{"u", u}, {"v", vv}, {"w", w}});
                return out;
            }});

        // --- PHI_BETA_ZERO: the full row functional vanishes at z = -beta ---
        v.push_back(IdentityEntry{
            IdentityId::PHI_BETA_ZERO, "PHI_BETA_ZERO", "unreplaced rows of the subtle system annihilate the family",
            [](const IdParams& ps, long) {
                long s = get(ps, "s"), a = get(ps, "a"), b = get(ps, "b"), i = get(ps, "i");
                return s >= 2 && s % 2 == 0 && 2 * a >= s && a < s && b >= 1 && b <= a && i >= b && i <= a;
            },
            [](const IdParams& ps, long) {
                long s = get(ps, "s"), a = get(ps, "a"), b = get(ps, "b"), i = get(ps, "i");
                // Phi(z) = (a-s) Phi1'(z) - Phi2(z) + (z+s-a)(Phi1'+Phi3'+Phi4')(z)
                QPoly phi1, phi3;
                for (long l = 0; l <= a; ++l)
                    for (long vv = 0; vv <= a; ++vv) {
                        long sg = ((l + vv + 1) % 2 == 0) ? 1 : -1;
                        ZZ c = binom(ZZ(l), i) * binom(ZZ(vv), s - a) * binom(ZZ(-vv), l - vv);
                        if (c == 0) continue;
                        phi1 = phi1 + detail::binom_poly_shift(vv, s - a) * QQ(sg * c);
                    }
                QPoly phi2 = detail::binom_poly_shift(i - 1, i - 1) * QQ(binom(ZZ(i - 1), s - a - 1));
                for (long l = 0; l <= a; ++l)
                    for (long j = 0; j <= a; ++j)
                        for (long vv = 0; vv <= a; ++vv) {
                            long sg = ((a + j + l + vv + 1) % 2 == 0) ? 1 : -1;
                            ZZ c = binom(ZZ(j), 2 * a - s + 1) * binom(ZZ(a + 1), j + 1) * binom(ZZ(l), i) *
                                   binom(ZZ(j - vv), l - vv) * binom(ZZ(s - a + j - vv), j - vv);
                            if (c == 0) continue;
                            phi3 = phi3 + detail::binom_poly_shift(vv, s - a + j) * QQ(sg * c);
                        }
                QPoly phi4 = detail::binom_poly_shift(a - i, a) * detail::binom_poly_shift(i, i - 1) *
                             QQ(binom(ZZ(a + 1), s - a));
                QPoly d1 = phi1.derivative(), d3 = phi3.derivative(), d4 = phi4.derivative();
                QQ z(-b);
                QQ val = QQ(a - s) * d1.eval(z) - phi2.eval(z) +
                         (z + QQ(s - a)) * (d1.eval(z) + d3.eval(z) + d4.eval(z));
                return exact_compare(IdentityId::PHI_BETA_ZERO, ps, val, QQ(0));
            },
            [](const SweepBounds& b, long) {
                std::vector<IdParams> out;
                for (long s = 2; s <= 2 * b.max_small; s += 2)
                    for (long a = (s + 1) / 2; a < s && a <= b.max_small + 2; ++a)
                        for (long bb = 1; bb <= a; ++bb)
                            for (long i = bb; i <= a; ++i)
                                out.push_back({{"s", s}, {"a", a}, {"b", bb}, {"i", i}});
                return out;
            }});

        // --- SUM_SHARP_S_ALPHA: the shifted remainder keeps the pivot binomial a unit ---
        v.push_back(IdentityEntry{
            IdentityId::SUM_SHARP_S_ALPHA, "SUM_SHARP_S_ALPHA",
            "the window-shifted remainder keeps binom(s_alpha - alpha, 2 nu - alpha) a p-adic unit",
            [](const IdParams& ps, long p) {
                long s = get(ps, "s"), a = get(ps, "a"), nu = get(ps, "nu");
                return p >= 3 && nu >= 1 && 2 * nu <= p - 1 && a >= 0 && a < nu && s >= 1 && s <= p - 1 &&
                       (s >= 2 * nu || a >= s);
            },
            [](const IdParams& ps, long p) {
                long s = get(ps, "s"), a = get(ps, "a"), nu = get(ps, "nu");
                long sa = more_rep(s - a, p) + a;
                ZZ b = binom(ZZ(sa - a), 2 * nu - a);
                if (b != 0 && vp(b, p) == 0) return pass(IdentityId::SUM_SHARP_S_ALPHA, ps, "exact valuation");
                return fail(IdentityId::SUM_SHARP_S_ALPHA, ps, "binom=" + b.get_str(), "exact valuation");
            },
            [](const SweepBounds&, long p) {
                std::vector<IdParams> out;
                for (long nu = 1; nu <= (p - 1) / 2; ++nu)
                    for (long s = 1; s <= p - 1; ++s)
                        for (long a = 0; a < nu; ++a)
                            out.push_back({{"s", s}, {"a", a}, {"nu", nu}});
                return out;
            }});

        // --- DET_2X2 and E_ROW_ENTRIES: the boundary-pair pivot block ---
        auto e00 = [](long b) -> QQ {
            QQ acc(0);
            for (long j = 0; j < b; ++j) {
                long sg = (j % 2 == 0) ? 1 : -1;
                acc += QQ(sg) * QQ(binom(ZZ(b - 1), j)) * binom_deriv(ZZ(b - j - 1), b - j);
            }
            return QQ(b) * acc;
        };
        auto e01 = [](long b) -> QQ {
            QQ acc(0);
            for (long j = 0; j <= b; ++j) {
                long sg = ((j - 1) % 2 == 0) ? 1 : -1;
                acc += QQ(sg * (j - 1)) * QQ(binom(ZZ(b), j)) * binom_deriv(ZZ(b - j), b - j + 1);
            }
            return QQ(b) * acc;
        };
        v.push_back(IdentityEntry{
            IdentityId::E_ROW_ENTRIES, "E_ROW_ENTRIES", "entries of the reduced boundary-pair pivot block",
            [](const IdParams& ps, long) {
                long b = get(ps, "b"), which = get(ps, "which");
                return b >= 1 && which >= 0 && which <= 2 && (which != 2 || b >= 2);
            },
            [e00, e01](const IdParams& ps, long) {
                long b = get(ps, "b"), which = get(ps, "which");
                long sb = (b % 2 == 0) ? 1 : -1;
                if (which == 0) return exact_compare(IdentityId::E_ROW_ENTRIES, ps, e00(b), QQ(-sb));
                if (which == 1) return exact_compare(IdentityId::E_ROW_ENTRIES, ps, e01(b), QQ(-sb) * QQ(b * b, b + 1));
                // top entry of the reduced column in the equal-index case; the true
                // value is (-1)^(b+1), a unit, which is the consumed fact
                QQ acc(0);
                for (long j = 0; j <= b - 2; ++j) {
                    long sg = (j % 2 == 0) ? 1 : -1;
                    acc += QQ(sg) * QQ(binom(ZZ(b - 2), j)) * binom_deriv(ZZ(b - j - 2), b - j);
                }
                return exact_compare(IdentityId::E_ROW_ENTRIES, ps, QQ(b) * acc, QQ(-sb));
            },
            [](const SweepBounds& b, long) {
                std::vector<IdParams> out;
                for (long bb = 1; bb <= b.max_small + 4; ++bb)
                    for (long which = 0; which <= 2; ++which)
                        out.push_back({{"b", bb}, {"which", which}});
                return out;
            }});
        v.push_back(IdentityEntry{
            IdentityId::DET_2X2, "DET_2X2", "determinant of the boundary-pair pivot block",
            [](const IdParams& ps, long) { return get(ps, "b") >= 1; },
            [e00, e01](const IdParams& ps, long) {
                long b = get(ps, "b");
                long sb = (b % 2 == 0) ? 1 : -1;
                QQ det = e00(b) * QQ(sb * b * (b - 1)) - e01(b) * QQ(sb * b);
                return exact_compare(IdentityId::DET_2X2, ps, det, QQ(b, b + 1));
            },
            [](const SweepBounds& b, long) {
                std::vector<IdParams> out;
                for (long bb = 1; bb <= b.max_small + 4; ++bb) out.push_back({{"b", bb}});
                return out;
            }});

        return v;
    }();
    return reg2;
}

}  // namespace rhobar
