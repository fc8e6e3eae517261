#pragma once

/**
 * @file tensor_operator.hpp
 * @brief Sparse operators on (C^n)^{⊗m} with exact coefficients.
 *
 * A basis vector e_{i_1} ⊗ ... ⊗ e_{i_m} (0-based digits) has the composite
 * index sum_a i_a n^{m-a}, so factor 1 is the most significant digit.
 * Storage is row-sparse and never holds a zero.
 */

#include "hf/exact_arith.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace hf {

template <class S>
class TensorOperator {
public:
    using Scalar = S;
    using Row = std::map<int, S>;

    TensorOperator() = default;
    /// zero operator
    TensorOperator(int n, int m) : n_(n), m_(m) {
        if (n < 1 || m < 0) throw std::invalid_argument("TensorOperator: bad dimensions");
        dim_ = 1;
        for (int a = 0; a < m; ++a) dim_ *= n;
        rows_.resize(static_cast<std::size_t>(dim_));
    }

    static TensorOperator identity(int n, int m) { return scalar(n, m, S(1)); }
    static TensorOperator scalar(int n, int m, const S& c) {
        TensorOperator r(n, m);
        if (!hf::is_zero(c)) {
            for (int i = 0; i < r.dim_; ++i) r.rows_[i].emplace(i, c);
        }
        return r;
    }
    /// diagonal operator on one factor, from its n diagonal entries
    static TensorOperator diagonal(const std::vector<S>& d) {
        TensorOperator r(static_cast<int>(d.size()), 1);
        for (int i = 0; i < r.dim_; ++i) r.add(i, i, d[i]);
        return r;
    }

    /// C_{ab}: a two-site operator acting on factors a and b (1-based, a != b)
    static TensorOperator placed(const TensorOperator& c, int a, int b, int m) {
        if (c.m_ != 2) throw std::invalid_argument("placed: need a two-site operator");
        if (a == b || a < 1 || b < 1 || a > m || b > m) throw std::out_of_range("placed: bad factor labels");
        return place_impl(c, {a, b}, m);
    }
    /// C_a: a one-site operator on factor a
    static TensorOperator placed(const TensorOperator& c, int a, int m) {
        if (c.m_ != 1) throw std::invalid_argument("placed: need a one-site operator");
        if (a < 1 || a > m) throw std::out_of_range("placed: bad factor label");
        return place_impl(c, {a}, m);
    }

    int n() const { return n_; }
    int factors() const { return m_; }
    int dim() const { return dim_; }
    const Row& row(int r) const { return rows_.at(static_cast<std::size_t>(r)); }

    /// digit of factor a (1-based) in a composite index
    int digit(int index, int a) const { return (index / power(m_ - a)) % n_; }

    S entry(int r, int c) const {
        const Row& row = rows_.at(static_cast<std::size_t>(r));
        auto it = row.find(c);
        return it == row.end() ? S() : it->second;
    }
    void add(int r, int c, const S& v) {
        if (hf::is_zero(v)) return;
        Row& row = rows_.at(static_cast<std::size_t>(r));
        auto [it, fresh] = row.emplace(c, v);
        if (!fresh) {
            it->second += v;
            if (hf::is_zero(it->second)) row.erase(it);
        }
    }

    bool is_zero() const {
        for (const auto& r : rows_) {
            if (!r.empty()) return false;
        }
        return true;
    }
    std::size_t nonzeros() const {
        std::size_t k = 0;
        for (const auto& r : rows_) k += r.size();
        return k;
    }

    TensorOperator operator-() const {
        TensorOperator r(*this);
        for (auto& row : r.rows_) {
            for (auto& [c, v] : row) v = -v;
        }
        return r;
    }
    TensorOperator& operator+=(const TensorOperator& b) {
        check_same(b);
        for (int i = 0; i < dim_; ++i) {
            for (const auto& [c, v] : b.rows_[i]) add(i, c, v);
        }
        return *this;
    }
    TensorOperator& operator-=(const TensorOperator& b) { return *this += -b; }
    TensorOperator& operator*=(const S& s) {
        if (hf::is_zero(s)) {
            for (auto& row : rows_) row.clear();
            return *this;
        }
        for (auto& row : rows_) {
            for (auto& [c, v] : row) v *= s;
        }
        return *this;
    }
    friend TensorOperator operator+(TensorOperator a, const TensorOperator& b) { return a += b; }
    friend TensorOperator operator-(TensorOperator a, const TensorOperator& b) { return a -= b; }
    friend TensorOperator operator*(TensorOperator a, const S& s) { return a *= s; }
    friend TensorOperator operator*(const S& s, TensorOperator a) { return a *= s; }

    /// composition: (a*b)(v) = a(b(v))
    friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
        a.check_same(b);
        TensorOperator r(a.n_, a.m_);
        for (int i = 0; i < a.dim_; ++i) {
            Row& out = r.rows_[i];
            for (const auto& [s, x] : a.rows_[i]) {
                for (const auto& [c, y] : b.rows_[s]) {
                    S xy = x * y;
                    auto [it, fresh] = out.emplace(c, xy);
                    if (!fresh) it->second += xy;
                }
            }
            std::erase_if(out, [](const auto& kv) { return hf::is_zero(kv.second); });
        }
        return r;
    }
    TensorOperator& operator*=(const TensorOperator& b) { return *this = *this * b; }

    friend bool operator==(const TensorOperator& a, const TensorOperator& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.rows_ == b.rows_;
    }

    /// a ⊗ b, with a on the leading factors
    friend TensorOperator kron(const TensorOperator& a, const TensorOperator& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("kron: local dimensions differ");
        TensorOperator r(a.n_, a.m_ + b.m_);
        for (int i = 0; i < a.dim_; ++i) {
            for (const auto& [j, x] : a.rows_[i]) {
                for (int k = 0; k < b.dim_; ++k) {
                    for (const auto& [l, y] : b.rows_[k]) r.add(i * b.dim_ + k, j * b.dim_ + l, x * y);
                }
            }
        }
        return r;
    }

    /// t_a: transposition on factor a only
    TensorOperator partial_transpose(int a) const {
        if (a < 1 || a > m_) throw std::out_of_range("partial_transpose: bad factor label");
        const int p = power(m_ - a);
        TensorOperator r(n_, m_);
        for (int i = 0; i < dim_; ++i) {
            const int di = digit(i, a);
            for (const auto& [c, v] : rows_[i]) {
                const int dc = digit(c, a);
                r.add(i + (dc - di) * p, c + (di - dc) * p, v);
            }
        }
        return r;
    }
    TensorOperator transpose() const {
        TensorOperator r(n_, m_);
        for (int i = 0; i < dim_; ++i) {
            for (const auto& [c, v] : rows_[i]) r.add(c, i, v);
        }
        return r;
    }

    S trace() const {
        S t;
        for (int i = 0; i < dim_; ++i) {
            auto it = rows_[i].find(i);
            if (it != rows_[i].end()) t += it->second;
        }
        return t;
    }

    /// Gauss-Jordan elimination; throws std::domain_error when singular
    TensorOperator inverse() const {
        std::vector<Row> a = rows_;
        std::vector<Row> inv(static_cast<std::size_t>(dim_));
        for (int i = 0; i < dim_; ++i) inv[i].emplace(i, S(1));
        for (int col = 0; col < dim_; ++col) {
            int piv = -1;
            for (int r = col; r < dim_; ++r) {
                if (a[r].count(col)) {
                    piv = r;
                    break;
                }
            }
            if (piv < 0) throw std::domain_error("TensorOperator::inverse: singular operator");
            std::swap(a[piv], a[col]);
            std::swap(inv[piv], inv[col]);
            const S scale = S(1) / a[col].at(col);
            for (auto& [c, v] : a[col]) v *= scale;
            for (auto& [c, v] : inv[col]) v *= scale;
            for (int r = 0; r < dim_; ++r) {
                if (r == col) continue;
                auto it = a[r].find(col);
                if (it == a[r].end()) continue;
                const S f = it->second;
                axpy(a[r], a[col], -f);
                axpy(inv[r], inv[col], -f);
            }
        }
        TensorOperator r(n_, m_);
        r.rows_ = std::move(inv);
        return r;
    }

    template <class F>
    auto map_coefficients(F f) const {
        using R = decltype(f(std::declval<S>()));
        TensorOperator<R> r(n_, m_);
        for (int i = 0; i < dim_; ++i) {
            for (const auto& [c, v] : rows_[i]) r.add(i, c, f(v));
        }
        return r;
    }

    /// (row, column, coefficient) in row-major order
    std::vector<std::tuple<int, int, S>> triples() const {
        std::vector<std::tuple<int, int, S>> out;
        for (int i = 0; i < dim_; ++i) {
            for (const auto& [c, v] : rows_[i]) out.emplace_back(i, c, v);
        }
        return out;
    }

private:
    int power(int e) const {
        int p = 1;
        for (int k = 0; k < e; ++k) p *= n_;
        return p;
    }
    void check_same(const TensorOperator& b) const {
        if (n_ != b.n_ || m_ != b.m_) throw std::invalid_argument("TensorOperator: shape mismatch");
    }
    static void axpy(Row& y, const Row& x, const S& f) {
        for (const auto& [c, v] : x) {
            auto [it, fresh] = y.emplace(c, f * v);
            if (!fresh) {
                it->second += f * v;
                if (hf::is_zero(it->second)) y.erase(it);
            }
        }
    }

    // local operator c acting on the factors in `at`, identity elsewhere
    static TensorOperator place_impl(const TensorOperator& c, const std::vector<int>& at, int m) {
        TensorOperator r(c.n_, m);
        const int k = static_cast<int>(at.size());
        for (int i = 0; i < r.dim_; ++i) {
            int local = 0;
            for (int a : at) local = local * c.n_ + r.digit(i, a);
            for (const auto& [lc, v] : c.rows_[local]) {
                int col = i;
                for (int s = 0; s < k; ++s) {
                    const int a = at[s];
                    const int want = (lc / c.power(k - 1 - s)) % c.n_;
                    col += (want - r.digit(i, a)) * r.power(m - a);
                }
                r.add(i, col, v);
            }
        }
        return r;
    }

    int n_ = 1;
    int m_ = 0;
    int dim_ = 1;
    std::vector<Row> rows_{1};
};

using TensorOperatorQ = TensorOperator<RatFuncQ>;
/// entries rational in one spectral variable
using SpectralOperator = TensorOperator<ExtRatFunc>;

inline SpectralOperator lift(const TensorOperatorQ& a) {
    return a.map_coefficients([](const RatFuncQ& v) { return ExtRatFunc(v); });
}
/// substitute a value for the spectral variable
inline TensorOperatorQ evaluate(const SpectralOperator& a, const RatFuncQ& point) {
    return a.map_coefficients([&](const ExtRatFunc& v) { return v.evaluate(point); });
}
/// variable -> c * variable
inline SpectralOperator scale_variable(const SpectralOperator& a, const RatFuncQ& c) {
    return a.map_coefficients([&](const ExtRatFunc& v) { return v.scale_variable(c); });
}

}  // namespace hf
