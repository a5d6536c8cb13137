#pragma once

// Dense exact linear algebra over any field type K with exact arithmetic
// (GaussRational or RatFunc here).  Plain Gauss-Jordan elimination; with
// exact scalars there is no pivoting concern beyond skipping zeros.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "lsa/scalar.hpp"

namespace lsa {

template <class K>
using Vec = std::vector<K>;

template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<K>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw Error("ragged matrix initializer");
            for (const auto& v : row) a_.push_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec<K> row(std::size_t i) const {
        return Vec<K>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    void set_row(std::size_t i, const Vec<K>& v) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }
    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch in +");
        Matrix m = a;
        for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] += b.a_[k];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch in -");
        Matrix m = a;
        for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] -= b.a_[k];
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in *");
        Matrix m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                if (a(i, l).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, l) * b(l, j);
            }
        return m;
    }
    friend Matrix operator*(const K& s, Matrix m) {
        for (auto& v : m.a_) v = s * v;
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<K> a_;
};

template <class K>
Vec<K> operator*(const Matrix<K>& m, const Vec<K>& v) {
    if (m.cols() != v.size()) throw Error("matrix/vector shape mismatch");
    Vec<K> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) out[i] += m(i, j) * v[j];
    return out;
}

template <class K>
Vec<K> unit_vec(std::size_t n, std::size_t i) {
    Vec<K> v(n);
    v[i] = K(1);
    return v;
}

template <class K>
bool is_zero_vec(const Vec<K>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <class K>
struct RrefResult {
    Matrix<K> r;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

template <class K>
RrefResult<K> rref(Matrix<K> m) {
    RrefResult<K> out;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(r, piv);
        K inv = K(1) / m(r, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(r, j) = inv * m(r, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, col).is_zero()) continue;
            K f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(col);
        ++r;
    }
    out.rank = r;
    out.r = std::move(m);
    return out;
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
    return rref(m).rank;
}

// Basis of {x : Mx = 0}, one vector per free column, in column order.
template <class K>
std::vector<Vec<K>> kernel_basis(const Matrix<K>& m) {
    RrefResult<K> rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec<K>> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec<K> v(m.cols());
        v[free] = K(1);
        for (std::size_t row = 0; row < rr.rank; ++row)
            v[rr.pivots[row]] = -rr.r(row, free);
        out.push_back(std::move(v));
    }
    return out;
}

// One solution of Ax = b, or nullopt when inconsistent.
template <class K>
std::optional<Vec<K>> solve(const Matrix<K>& a, const Vec<K>& b) {
    if (a.rows() != b.size()) throw Error("solve: shape mismatch");
    Matrix<K> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    RrefResult<K> rr = rref(aug);
    for (std::size_t row = 0; row < rr.rank; ++row)
        if (rr.pivots[row] == a.cols()) return std::nullopt;
    Vec<K> x(a.cols());
    for (std::size_t row = 0; row < rr.rank; ++row) x[rr.pivots[row]] = rr.r(row, a.cols());
    return x;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix<K> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = K(1);
    }
    RrefResult<K> rr = rref(aug);
    if (rr.rank < n || rr.pivots[n - 1] >= n) return std::nullopt;
    Matrix<K> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = rr.r(i, n + j);
    return out;
}

// Row-span of a list of vectors, held as a canonical (rref) basis so two
// subspaces are equal iff their Subspace values are equal.
template <class K>
struct Subspace {
    std::size_t ambient = 0;
    std::vector<Vec<K>> basis;

    std::size_t dim() const { return basis.size(); }

    bool contains(const Vec<K>& v) const {
        if (v.size() != ambient) throw Error("subspace membership: wrong ambient dimension");
        Vec<K> w = v;
        for (const auto& b : basis) {
            std::size_t lead = 0;
            while (lead < ambient && b[lead].is_zero()) ++lead;
            if (lead == ambient || w[lead].is_zero()) continue;
            K f = w[lead];  // basis rows are rref: leading entry is 1
            for (std::size_t j = 0; j < ambient; ++j) w[j] -= f * b[j];
        }
        return is_zero_vec(w);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient == b.ambient && a.basis == b.basis;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
};

template <class K>
Subspace<K> span_of(const std::vector<Vec<K>>& vectors, std::size_t ambient) {
    Matrix<K> m(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient) throw Error("span_of: wrong vector length");
        m.set_row(i, vectors[i]);
    }
    RrefResult<K> rr = rref(std::move(m));
    Subspace<K> s;
    s.ambient = ambient;
    for (std::size_t i = 0; i < rr.rank; ++i) s.basis.push_back(rr.r.row(i));
    return s;
}

template <class K>
Subspace<K> full_space(std::size_t n) {
    Subspace<K> s;
    s.ambient = n;
    for (std::size_t i = 0; i < n; ++i) {
        Vec<K> v(n);
        v[i] = K(1);
        s.basis.push_back(std::move(v));
    }
    return s;
}

// Vectors extending a basis of span(sub) to a basis of span(space), chosen
// greedily from `space` in order.  Throws when sub is not inside span(space).
template <class K>
std::vector<Vec<K>> quotient_complement(const std::vector<Vec<K>>& sub,
                                        const std::vector<Vec<K>>& space,
                                        std::size_t ambient) {
    Subspace<K> big = span_of(space, ambient);
    for (const auto& v : sub)
        if (!big.contains(v)) throw Error("quotient_complement: sub not contained in space");
    std::vector<Vec<K>> current = sub;
    std::size_t base_rank = span_of(current, ambient).dim();
    std::vector<Vec<K>> out;
    for (const auto& v : space) {
        if (base_rank == big.dim()) break;
        current.push_back(v);
        std::size_t r = span_of(current, ambient).dim();
        if (r > base_rank) {
            base_rank = r;
            out.push_back(v);
        } else {
            current.pop_back();
        }
    }
    return out;
}

// U cap W via the kernel of [U^T | -W^T].
template <class K>
Subspace<K> intersect(const Subspace<K>& u, const Subspace<K>& w) {
    if (u.ambient != w.ambient) throw Error("intersect: ambient mismatch");
    std::size_t n = u.ambient, p = u.dim(), q = w.dim();
    Matrix<K> m(n, p + q);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < p; ++a) m(i, a) = u.basis[a][i];
        for (std::size_t b = 0; b < q; ++b) m(i, p + b) = -w.basis[b][i];
    }
    std::vector<Vec<K>> gens;
    for (const auto& k : kernel_basis(m)) {
        Vec<K> v(n);
        for (std::size_t a = 0; a < p; ++a)
            for (std::size_t i = 0; i < n; ++i) v[i] += k[a] * u.basis[a][i];
        gens.push_back(std::move(v));
    }
    return span_of(gens, n);
}

}  // namespace lsa
