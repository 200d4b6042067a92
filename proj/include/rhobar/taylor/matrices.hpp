#pragma once

#include <optional>
#include <vector>

#include "../core.hpp"
#include "cell.hpp"

namespace rhobar::taylor {

template <typename T>
using Mat = std::vector<std::vector<T>>;

template <typename T>
inline Mat<T> zero_mat(long rows, long cols) {
    return Mat<T>(static_cast<size_t>(rows), std::vector<T>(static_cast<size_t>(cols), T(0)));
}

/// Brute-force oracle: A_{w,j} = sum over 0 < i(p-1) < r - 2 alpha of
/// binom(r - alpha + j, i(p-1) + j) binom(i(p-1), w), exact integers.
/// Rows w < row_count, columns j <= alpha.
inline Mat<ZZ> matrix_A_exact(const ZZ& r, long alpha, long p, long row_count, long col_count) {
    Mat<ZZ> a = zero_mat<ZZ>(row_count, col_count);
    // iterate i ascending, updating binom(r - alpha + j, i(p-1) + j) incrementally per column
    std::vector<ZZ> cur(static_cast<size_t>(col_count));
    for (long j = 0; j < col_count; ++j) {
        // value at i = 1: binom(r - alpha + j, (p-1) + j)
        cur[static_cast<size_t>(j)] = binom(r - alpha + j, p - 1 + j);
    }
    for (ZZ ip(p - 1); ip < r - 2 * alpha; ip += p - 1) {
        std::vector<ZZ> wb(static_cast<size_t>(row_count));
        for (long w = 0; w < row_count; ++w) wb[static_cast<size_t>(w)] = binom(ip, w);
        for (long j = 0; j < col_count; ++j) {
            const ZZ& bj = cur[static_cast<size_t>(j)];
            if (bj != 0)
                for (long w = 0; w < row_count; ++w)
                    a[static_cast<size_t>(w)][static_cast<size_t>(j)] += bj * wb[static_cast<size_t>(w)];
        }
        // advance binomials: n -> n + (p-1)
        for (long j = 0; j < col_count; ++j) {
            ZZ& v = cur[static_cast<size_t>(j)];
            ZZ X = r - alpha + j;
            ZZ n = ip + j;
            for (long d = 1; d <= p - 1; ++d) {
                v *= (X - n - d + 1);
                ZZ den = n + d;
                if (den != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), den.get_mpz_t());
            }
        }
    }
    return a;
}

inline Mat<ZZ> matrix_A_exact(const Cell& c) {
    return matrix_A_exact(c.concrete_r(), c.alpha, c.p, c.rows(), c.cols());
}

/// Constant term of the deformation: the literal i = 1..beta sum, minus the
/// top boundary term when it leaves the restricted range (s <= 2 alpha), and
/// with the beta = 0 band correction
///   (-1)^(w-j) binom(w - (s-alpha) - 1, w - j - (s-alpha))
/// on entries with w - j >= s - alpha (calibrated against the exact oracle).
inline Mat<ZZ> matrix_S(const Cell& c) {
    Mat<ZZ> m = zero_mat<ZZ>(c.rows(), c.cols());
    long r0 = c.r0(), p = c.p, alpha = c.alpha;
    for (long w = 0; w < c.rows(); ++w)
        for (long j = 0; j < c.cols(); ++j) {
            ZZ acc(0);
            for (long i = 1; i <= c.beta; ++i)
                acc += binom(ZZ(r0 - alpha + j), i * (p - 1) + j) * binom(ZZ(i) * (p - 1), w);
            if (c.subtle_cut())
                acc -= binom(ZZ(r0 - alpha + j), c.s - alpha) * binom(ZZ(c.beta) * (p - 1), w);
            if (c.on_band(w, j)) {
                long d = w - j - (c.s - alpha);
                long sign = ((w - j) % 2 == 0) ? 1 : -1;
                acc += sign * binom(ZZ(w - (c.s - alpha) - 1), d);
            }
            m[static_cast<size_t>(w)][static_cast<size_t>(j)] = acc;
        }
    return m;
}

/// First-order term of the deformation, exact rationals. The displayed
/// formula differs between the standard range and the truncated range.
inline Mat<QQ> matrix_N(const Cell& c) {
    Mat<QQ> m = zero_mat<QQ>(c.rows(), c.cols());
    long r0 = c.r0(), p = c.p, alpha = c.alpha, s = c.s, beta = c.beta;
    for (long w = 0; w < c.rows(); ++w)
        for (long j = 0; j < c.cols(); ++j) {
            QQ acc(0);
            for (long v = 0; v <= w; ++v) {
                ZZ cwv = binom(ZZ(j + w - v - 1), w - v);
                if (cwv == 0) continue;
                long sign = ((w - v) % 2 == 0) ? 1 : -1;
                ZZ msumv(0);
                for (long i = 0; i <= beta; ++i)
                    msumv += binom(ZZ(r0 - alpha + j - v), i * (p - 1) + j - v);
                acc += QQ(sign) * QQ(cwv) * binom_deriv(ZZ(r0 - alpha + j), v) * QQ(msumv);
            }
            if (w == 0) acc -= binom_deriv(ZZ(r0 - alpha + j), j);
            if (c.subtle_cut()) {
                acc -= binom_deriv(ZZ(s - alpha - beta + j), s - alpha) * QQ(binom(ZZ(-beta), w));
                acc -= QQ(binom(ZZ(s - alpha - beta + j), s - alpha)) * binom_deriv(ZZ(-beta), w);
            }
            m[static_cast<size_t>(w)][static_cast<size_t>(j)] = acc;
        }
    return m;
}

/// Change-of-basis matrix mod p: B_{i,w} = delta_{(i,w)=(0,0)}
///   + sum_{l=1}^alpha (-1)^i binom(l,i) binom(l-1, l-w).
inline Mat<ZZ> matrix_B(long alpha, long p) {
    Mat<ZZ> m = zero_mat<ZZ>(alpha + 1, alpha + 1);
    for (long i = 0; i <= alpha; ++i)
        for (long w = 0; w <= alpha; ++w) {
            ZZ acc = (i == 0 && w == 0) ? ZZ(1) : ZZ(0);
            for (long l = 1; l <= alpha; ++l) {
                long sign = (i % 2 == 0) ? 1 : -1;
                acc += sign * binom(ZZ(l), i) * binom(ZZ(l - 1), l - w);
            }
            m[static_cast<size_t>(i)][static_cast<size_t>(w)] = mod_reduce(acc, ZZ(p));
        }
    return m;
}

enum class RbarVariant {
    DropZero,       // alpha x alpha: rows 1..beta replaced, zeroth row/column discarded
    FullReplaced,   // (alpha+1) x (alpha+1): rows 1..beta-1 replaced, nothing dropped
};

/// Assemble Rbar over F_p from B*N with the designated rows replaced by the
/// corresponding rows of B*S.
inline Mat<ZZ> matrix_Rbar(const Cell& c, RbarVariant variant) {
    long p = c.p, alpha = c.alpha;
    Mat<ZZ> b = matrix_B(alpha, p);
    Mat<QQ> n = matrix_N(c);
    Mat<ZZ> sm = matrix_S(c);
    long replace_hi = variant == RbarVariant::DropZero ? c.beta : c.beta - 1;
    Mat<ZZ> bn = zero_mat<ZZ>(alpha + 1, alpha + 1);
    for (long i = 0; i <= alpha; ++i)
        for (long j = 0; j <= alpha; ++j) {
            bool replaced = i >= 1 && i <= replace_hi;
            QQ acc(0);
            for (long w = 0; w <= alpha; ++w) {
                QQ f = replaced ? QQ(sm[static_cast<size_t>(w)][static_cast<size_t>(j)])
                                : n[static_cast<size_t>(w)][static_cast<size_t>(j)];
                acc += QQ(b[static_cast<size_t>(i)][static_cast<size_t>(w)]) * f;
            }
            bn[static_cast<size_t>(i)][static_cast<size_t>(j)] = reduce_mod_pk(acc, p, 1);
        }
    if (variant == RbarVariant::FullReplaced) return bn;
    Mat<ZZ> out = zero_mat<ZZ>(alpha, alpha);
    for (long i = 1; i <= alpha; ++i)
        for (long j = 1; j <= alpha; ++j)
            out[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = bn[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return out;
}

/// Closed form for the dropped-zero variant in the standard range:
/// Rbar_{i-1,j-1} = binom(s-alpha-beta+j, j-i) * (binom(beta,i) for i <= beta,
/// -dbinom(beta,i) otherwise).
inline QQ rbar_closed_form(const Cell& c, long i, long j) {
    QQ factor;
    if (i >= 1 && i <= c.beta) factor = QQ(binom(ZZ(c.beta), i));
    else factor = QQ(-1) * binom_deriv(ZZ(c.beta), i);
    return QQ(binom(ZZ(c.s - c.alpha - c.beta + j), j - i)) * factor;
}

/// The extra column used by the augmented system: (binom(r-alpha, s-alpha),
/// ..., binom(r, s))^T with row w entry binom(r - alpha + w, s - alpha + w),
/// as jets (value at r0, derivative in r).
struct ExtraColumn {
    std::vector<QQ> base;   // at r0
    std::vector<QQ> deriv;  // d/dr at r0
};

inline ExtraColumn extra_column(const Cell& c) {
    ExtraColumn col;
    for (long w = 0; w < c.rows(); ++w) {
        col.base.push_back(QQ(binom(ZZ(c.r0() - c.alpha + w), c.s - c.alpha + w)));
        col.deriv.push_back(binom_deriv(ZZ(c.r0() - c.alpha + w), c.s - c.alpha + w));
    }
    return col;
}

}  // namespace rhobar::taylor
