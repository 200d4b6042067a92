#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "core.hpp"

namespace rhobar {

/// Dense exact polynomial over Q, coefficient of X^i at index i.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(QQ c) { if (c != 0) c_.push_back(std::move(c)); }
    static QPoly X() { return QPoly(std::vector<QQ>{QQ(0), QQ(1)}); }
    explicit QPoly(std::vector<QQ> c) : c_(std::move(c)) { trim(); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    QQ coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return QQ(0);
        return c_[static_cast<size_t>(i)];
    }

    QPoly operator+(const QPoly& o) const {
        std::vector<QQ> r(std::max(c_.size(), o.c_.size()), QQ(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return QPoly(std::move(r));
    }
    QPoly operator-(const QPoly& o) const {
        std::vector<QQ> r(std::max(c_.size(), o.c_.size()), QQ(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return QPoly(std::move(r));
    }
    QPoly operator*(const QPoly& o) const {
        if (is_zero() || o.is_zero()) return QPoly();
        std::vector<QQ> r(c_.size() + o.c_.size() - 1, QQ(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return QPoly(std::move(r));
    }
    QPoly operator*(const QQ& s) const {
        std::vector<QQ> r = c_;
        for (auto& x : r) x *= s;
        return QPoly(std::move(r));
    }
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    QPoly derivative() const {
        if (c_.size() <= 1) return QPoly();
        std::vector<QQ> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * QQ(static_cast<long>(i));
        return QPoly(std::move(r));
    }

    QQ eval(const QQ& x) const {
        QQ acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Substitute X -> X + c.
    QPoly shift(const QQ& c) const {
        QPoly result;
        QPoly xc = X() + QPoly(c);
        QPoly pw(QQ(1));
        for (size_t i = 0; i < c_.size(); ++i) {
            result = result + pw * c_[i];
            pw = pw * xc;
        }
        return result;
    }

    /// binom(X + off, n) as an exact polynomial; zero for n < 0.
    static QPoly binomial(long n, const QQ& off = QQ(0)) {
        if (n < 0) return QPoly();
        QPoly r(QQ(1));
        for (long i = 0; i < n; ++i) r = r * (X() + QPoly(off - QQ(i))) * QQ(1, i + 1);
        return r;
    }

  private:
    void trim() { while (!c_.empty() && c_.back() == 0) c_.pop_back(); }
    std::vector<QQ> c_;
};

/// Dense exact polynomial over Q in two variables (z, w); coeff_[i][j] is z^i w^j.
class QPoly2 {
  public:
    QPoly2() = default;
    explicit QPoly2(QQ c) {
        if (c != 0) c_ = {{std::move(c)}};
    }
    static QPoly2 z() { return monomial(1, 0); }
    static QPoly2 w() { return monomial(0, 1); }
    static QPoly2 monomial(long i, long j) {
        QPoly2 r;
        r.c_.assign(static_cast<size_t>(i) + 1, std::vector<QQ>(static_cast<size_t>(j) + 1, QQ(0)));
        r.c_[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    long degree_z() const { return static_cast<long>(c_.size()) - 1; }
    QQ coeff(long i, long j) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return QQ(0);
        const auto& row = c_[static_cast<size_t>(i)];
        if (j < 0 || j >= static_cast<long>(row.size())) return QQ(0);
        return row[static_cast<size_t>(j)];
    }

    QPoly2 operator+(const QPoly2& o) const { return combined(o, 1); }
    QPoly2 operator-(const QPoly2& o) const { return combined(o, -1); }
    QPoly2 operator*(const QPoly2& o) const {
        QPoly2 r;
        if (is_zero() || o.is_zero()) return r;
        size_t zi = c_.size() + o.c_.size() - 1;
        size_t wj = cols() + o.cols() - 1;
        r.c_.assign(zi, std::vector<QQ>(wj, QQ(0)));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < c_[i].size(); ++j) {
                if (c_[i][j] == 0) continue;
                for (size_t k = 0; k < o.c_.size(); ++k)
                    for (size_t l = 0; l < o.c_[k].size(); ++l)
                        r.c_[i + k][j + l] += c_[i][j] * o.c_[k][l];
            }
        r.trim();
        return r;
    }
    QPoly2 operator*(const QQ& s) const {
        QPoly2 r = *this;
        for (auto& row : r.c_) for (auto& x : row) x *= s;
        r.trim();
        return r;
    }
    bool operator==(const QPoly2& o) const { return (*this - o).is_zero(); }

    QQ eval(const QQ& zv, const QQ& wv) const {
        QQ acc(0), zp(1);
        for (const auto& row : c_) {
            QQ racc(0), wp(1);
            for (const auto& x : row) { racc += x * wp; wp *= wv; }
            acc += racc * zp;
            zp *= zv;
        }
        return acc;
    }

    /// Partial derivative in z.
    QPoly2 dz() const {
        QPoly2 r;
        if (c_.size() <= 1) return r;
        r.c_.assign(c_.size() - 1, {});
        for (size_t i = 1; i < c_.size(); ++i) {
            r.c_[i - 1] = c_[i];
            for (auto& x : r.c_[i - 1]) x *= QQ(static_cast<long>(i));
        }
        r.trim();
        return r;
    }

    /// binom(az + bw + off, n) expanded exactly.
    static QPoly2 binomial_lin(long n, const QQ& a, const QQ& b, const QQ& off) {
        if (n < 0) return QPoly2();
        QPoly2 lin = z() * a + w() * b + QPoly2(off);
        QPoly2 r(QQ(1));
        for (long i = 0; i < n; ++i) r = r * (lin - QPoly2(QQ(i))) * QQ(1, i + 1);
        return r;
    }

  private:
    size_t cols() const {
        size_t m = 0;
        for (const auto& row : c_) m = std::max(m, row.size());
        return m == 0 ? 1 : m;
    }
    QPoly2 combined(const QPoly2& o, int sign) const {
        QPoly2 r;
        size_t zi = std::max(c_.size(), o.c_.size());
        size_t wj = std::max(cols(), o.cols());
        if (zi == 0) return r;
        r.c_.assign(zi, std::vector<QQ>(wj, QQ(0)));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < c_[i].size(); ++j) r.c_[i][j] += c_[i][j];
        for (size_t i = 0; i < o.c_.size(); ++i)
            for (size_t j = 0; j < o.c_[i].size(); ++j) r.c_[i][j] += sign > 0 ? o.c_[i][j] : -o.c_[i][j];
        r.trim();
        return r;
    }
    void trim() {
        for (auto& row : c_) while (!row.empty() && row.back() == 0) row.pop_back();
        while (!c_.empty() && c_.back().empty()) c_.pop_back();
        // drop fully-zero structure
        bool any = false;
        for (auto& row : c_) if (!row.empty()) any = true;
        if (!any) c_.clear();
    }
    std::vector<std::vector<QQ>> c_;
};

}  // namespace rhobar
