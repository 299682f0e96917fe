#pragma once

/// Dense square matrices over an exact coefficient domain K.
/// K must provide +, -, *, is_zero(), zero_like/one_like and, for the
/// fraction-free elimination, exact_div(a, b) (division known to be exact
/// in the domain). Rank and determinant use Bareiss elimination so all
/// intermediate values stay in the domain; kernel and inverse use plain
/// Gauss-Jordan over a field. Everything is exact.

#include <vector>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>

#include "jcl/field.hpp"

namespace jcl::exactnum {

inline Fp exact_div(const Fp& a, const Fp& b) { return a / b; }
inline Rat exact_div(const Rat& a, const Rat& b) { return a / b; }

template <class K>
class Matrix {
public:
    Matrix(std::size_t n, const K& fill) : n_(n), e_(n * n, fill) {
        if (n == 0) throw std::invalid_argument("Matrix: dimension must be positive");
    }

    static Matrix identity(std::size_t n, const K& one) {
        Matrix m(n, zero_like(one));
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t dim() const { return n_; }
    K& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    /// Field constants taken from the stored entries.
    K zero_elem() const { return zero_like(e_[0]); }
    K one_elem() const { return one_like(e_[0]); }

    bool operator==(const Matrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        require_same(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] + o.e_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        require_same(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] - o.e_[i];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        require_same(o);
        Matrix r(n_, zero_elem());
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const K& a = at(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < n_; ++j)
                    r.at(i, j) = r.at(i, j) + a * o.at(k, j);
            }
        return r;
    }
    Matrix scaled(const K& c) const {
        Matrix r = *this;
        for (auto& x : r.e_) x = x * c;
        return r;
    }
    Matrix operator-() const { return scaled(zero_elem() - one_elem()); }

    Matrix pow(unsigned k) const {
        Matrix r = identity(n_, one_elem());
        Matrix b = *this;
        while (k) {
            if (k & 1) r = r * b;
            if (k >>= 1) b = b * b;
        }
        return r;
    }

    Matrix transpose() const {
        Matrix r = *this;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    K trace() const {
        K t = zero_elem();
        for (std::size_t i = 0; i < n_; ++i) t = t + at(i, i);
        return t;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (v.size() != n_) throw std::invalid_argument("Matrix::apply: size mismatch");
        std::vector<K> r(n_, zero_elem());
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }

    bool is_zero() const {
        for (const auto& x : e_) if (!x.is_zero()) return false;
        return true;
    }

    struct Elimination {
        std::size_t rank;
        K det; // of the full matrix; zero when rank < n
    };

    /// Bareiss fraction-free elimination; divisions are by previous pivots
    /// and are exact in the domain.
    Elimination fraction_free_eliminate() const {
        Matrix a = *this;
        K det = one_elem();
        K prev = one_elem();
        bool neg = false;
        std::size_t rank = 0;
        std::size_t row = 0;
        for (std::size_t col = 0; col < n_ && row < n_; ++col) {
            std::size_t piv = row;
            while (piv < n_ && a.at(piv, col).is_zero()) ++piv;
            if (piv == n_) continue;
            if (piv != row) {
                for (std::size_t j = 0; j < n_; ++j) std::swap(a.at(piv, j), a.at(row, j));
                neg = !neg;
            }
            const K pivot = a.at(row, col);
            for (std::size_t i = row + 1; i < n_; ++i) {
                for (std::size_t j = col + 1; j < n_; ++j)
                    a.at(i, j) = exact_div(pivot * a.at(i, j) - a.at(i, col) * a.at(row, j), prev);
                a.at(i, col) = zero_like(pivot);
            }
            prev = pivot;
            ++rank;
            ++row;
        }
        if (rank == n_) {
            det = prev; // last pivot of full-rank Bareiss is the determinant
            if (neg) det = zero_like(det) - det;
        } else {
            det = zero_elem();
        }
        return {rank, det};
    }

    std::size_t rank() const { return fraction_free_eliminate().rank; }
    K det() const { return fraction_free_eliminate().det; }

private:
    void require_same(const Matrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Matrix: dimension mismatch");
    }
    std::size_t n_;
    std::vector<K> e_;
};

/// Reduced row echelon form of an arbitrary (possibly rectangular) system,
/// over a field. Returns pivot columns; `rows` is modified in place.
template <class K>
std::vector<std::size_t> rref(std::vector<std::vector<K>>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        const K inv = rows[r][c].inv();
        for (std::size_t j = c; j < ncols; ++j) rows[r][j] = rows[r][j] * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const K f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j)
                rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Basis of the right kernel {x : rows * x = 0} of a rectangular system
/// over a field. `sample` provides the field.
template <class K>
std::vector<std::vector<K>> kernel_basis(std::vector<std::vector<K>> rows, std::size_t ncols,
                                         const K& sample) {
    const K zero = zero_like(sample), one = one_like(sample);
    auto pivots = rref(rows);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<K> v(ncols, zero);
        v[free_col] = one;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (pivots[r] < ncols && free_col < rows[r].size())
                v[pivots[r]] = zero - rows[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Inverse over a field; empty optional when singular.
template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
    const std::size_t n = m.dim();
    std::vector<std::vector<K>> rows(n, std::vector<K>(2 * n, m.zero_elem()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
        rows[i][n + i] = m.one_elem();
    }
    auto pivots = rref(rows);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Matrix<K> r(n, m.zero_elem());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = rows[i][n + j];
    return r;
}

} // namespace jcl::exactnum
