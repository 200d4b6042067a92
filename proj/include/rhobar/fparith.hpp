#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "core.hpp"

namespace rhobar {

/// Dense matrix over Z/p^m (m = 1 gives F_p). Entries stored reduced.
class ModMat {
  public:
    ModMat(long rows, long cols, long p, long m)
        : rows_(rows), cols_(cols), p_(p), m_(m), mod_(p_power(p, m)),
          a_(static_cast<size_t>(rows), std::vector<ZZ>(static_cast<size_t>(cols), ZZ(0))) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const ZZ& modulus() const { return mod_; }

    ZZ& at(long i, long j) { return a_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const ZZ& at(long i, long j) const { return a_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    void set(long i, long j, const ZZ& v) { at(i, j) = mod_reduce(v, mod_); }
    void set(long i, long j, const QQ& v) { at(i, j) = reduce_mod_pk(v, p_, m_); }

    std::vector<ZZ> mul(const std::vector<ZZ>& x) const {
        std::vector<ZZ> r(static_cast<size_t>(rows_), ZZ(0));
        for (long i = 0; i < rows_; ++i) {
            ZZ acc(0);
            for (long j = 0; j < cols_; ++j) acc += at(i, j) * x[static_cast<size_t>(j)];
            r[static_cast<size_t>(i)] = mod_reduce(acc, mod_);
        }
        return r;
    }

    /// Solve A x = b over Z/p^m by valuation-pivoted elimination.
    /// Returns nullopt when the system has no solution at this modulus.
    std::optional<std::vector<ZZ>> solve(std::vector<ZZ> b) const {
        ModMat w = *this;
        for (auto& bv : b) bv = mod_reduce(bv, mod_);
        std::vector<long> pivot_col(static_cast<size_t>(rows_), -1);
        std::vector<bool> col_used(static_cast<size_t>(cols_), false);
        long rank_row = 0;
        for (; rank_row < rows_;) {
            // find the minimal-valuation entry among unprocessed rows/columns
            long bi = -1, bj = -1, bv = m_ + 1;
            for (long i = rank_row; i < rows_; ++i)
                for (long j = 0; j < cols_; ++j) {
                    if (col_used[static_cast<size_t>(j)] || w.at(i, j) == 0) continue;
                    long v = vp(w.at(i, j), p_);
                    if (v < bv) { bv = v; bi = i; bj = j; }
                }
            if (bi < 0) break;
            w.swap_rows(rank_row, bi);
            std::swap(b[static_cast<size_t>(rank_row)], b[static_cast<size_t>(bi)]);
            // normalize pivot to p^bv
            ZZ u = w.at(rank_row, bj) / p_power(p_, bv);
            ZZ uinv = mod_inverse(u, mod_);
            w.scale_row(rank_row, uinv);
            b[static_cast<size_t>(rank_row)] = mod_reduce(b[static_cast<size_t>(rank_row)] * uinv, mod_);
            for (long i = 0; i < rows_; ++i) {
                if (i == rank_row || w.at(i, bj) == 0) continue;
                // minimal valuation pivot guarantees divisibility
                ZZ q = w.at(i, bj) / p_power(p_, bv);
                w.sub_scaled_row(i, rank_row, q);
                b[static_cast<size_t>(i)] = mod_reduce(b[static_cast<size_t>(i)] - q * b[static_cast<size_t>(rank_row)], mod_);
            }
            pivot_col[static_cast<size_t>(rank_row)] = bj;
            col_used[static_cast<size_t>(bj)] = true;
            ++rank_row;
        }
        for (long i = rank_row; i < rows_; ++i)
            if (b[static_cast<size_t>(i)] != 0) return std::nullopt;
        std::vector<ZZ> x(static_cast<size_t>(cols_), ZZ(0));
        for (long i = 0; i < rank_row; ++i) {
            long j = pivot_col[static_cast<size_t>(i)];
            ZZ piv = w.at(i, j);  // p^v
            long v = piv == 0 ? m_ : vp(piv, p_);
            if (v == 0) {
                x[static_cast<size_t>(j)] = b[static_cast<size_t>(i)];
            } else {
                if (!mpz_divisible_p(b[static_cast<size_t>(i)].get_mpz_t(), p_power(p_, v).get_mpz_t()))
                    return std::nullopt;
                // any lift works; take the minimal one
                x[static_cast<size_t>(j)] = b[static_cast<size_t>(i)] / p_power(p_, v);
            }
        }
        return x;
    }

  private:
    void swap_rows(long i, long j) { std::swap(a_[static_cast<size_t>(i)], a_[static_cast<size_t>(j)]); }
    void scale_row(long i, const ZZ& c) {
        for (auto& v : a_[static_cast<size_t>(i)]) v = mod_reduce(v * c, mod_);
    }
    void sub_scaled_row(long i, long j, const ZZ& c) {
        for (long k = 0; k < cols_; ++k) at(i, k) = mod_reduce(at(i, k) - c * at(j, k), mod_);
    }

    long rows_, cols_, p_, m_;
    ZZ mod_;
    std::vector<std::vector<ZZ>> a_;
};

/// Exact rational linear solve: returns one solution of A x = b (least-squares
/// not attempted; nullopt when inconsistent). Free variables are set to zero.
inline std::optional<std::vector<QQ>> solve_exact(std::vector<std::vector<QQ>> a, std::vector<QQ> b) {
    size_t rows = a.size();
    size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<long> pivot_col(rows, -1);
    size_t rr = 0;
    for (size_t j = 0; j < cols && rr < rows; ++j) {
        size_t sel = rr;
        while (sel < rows && a[sel][j] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[rr], a[sel]);
        std::swap(b[rr], b[sel]);
        QQ inv = 1 / a[rr][j];
        for (size_t k = j; k < cols; ++k) a[rr][k] *= inv;
        b[rr] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rr || a[i][j] == 0) continue;
            QQ f = a[i][j];
            for (size_t k = j; k < cols; ++k) a[i][k] -= f * a[rr][k];
            b[i] -= f * b[rr];
        }
        pivot_col[rr] = static_cast<long>(j);
        ++rr;
    }
    for (size_t i = rr; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<QQ> x(cols, QQ(0));
    for (size_t i = 0; i < rr; ++i) x[static_cast<size_t>(pivot_col[i])] = b[i];
    return x;
}

}  // namespace rhobar
