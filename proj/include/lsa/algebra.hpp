#pragma once

// Finite-dimensional algebras given by structure constants: the product
// e_i e_j = sum_k c[i][j][k] e_k over an exact scalar field.  Provides the
// polynomial-identity checks, annihilators, power chain / nilpotency,
// derivation algebra dimension and the quotient-by-annihilator
// construction with its cocycle data.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsa/matrix.hpp"
#include "lsa/scalar.hpp"

namespace lsa {

template <class K>
struct Algebra {
    std::size_t n = 0;
    std::vector<K> c;  // index (i*n + j)*n + k
    std::string label;
    std::map<std::string, K> params;

    Algebra() = default;
    explicit Algebra(std::size_t dim, std::string name = {})
        : n(dim), c(dim * dim * dim), label(std::move(name)) {}

    K& prod(std::size_t i, std::size_t j, std::size_t k) { return c[(i * n + j) * n + k]; }
    const K& prod(std::size_t i, std::size_t j, std::size_t k) const {
        return c[(i * n + j) * n + k];
    }

    // e_i * e_j as a coordinate vector
    Vec<K> basis_product(std::size_t i, std::size_t j) const {
        Vec<K> out(n);
        for (std::size_t k = 0; k < n; ++k) out[k] = prod(i, j, k);
        return out;
    }

    Vec<K> multiply(const Vec<K>& x, const Vec<K>& y) const {
        if (x.size() != n || y.size() != n) throw Error("multiply: dimension mismatch");
        Vec<K> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (y[j].is_zero()) continue;
                K f = x[i] * y[j];
                for (std::size_t k = 0; k < n; ++k) {
                    if (!prod(i, j, k).is_zero()) out[k] += f * prod(i, j, k);
                }
            }
        }
        return out;
    }
};

// Structure-constant equality (labels and params ignored).
template <class K>
bool same_constants(const Algebra<K>& a, const Algebra<K>& b) {
    return a.n == b.n && a.c == b.c;
}

template <class K>
struct TripleViolation {
    std::size_t i, j, k;  // 0-based basis indices of the violating triple
    Vec<K> lhs, rhs;
};

// (xy)z - x(yz) = (yx)z - y(xz) on basis triples; multilinearity makes
// basis triples sufficient.  Returns the first violation in lex order.
template <class K>
std::optional<TripleViolation<K>> left_symmetric_violation(const Algebra<K>& a) {
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j)
            for (std::size_t k = 0; k < a.n; ++k) {
                Vec<K> lhs(a.n), rhs(a.n);
                for (std::size_t l = 0; l < a.n; ++l) {
                    for (std::size_t m = 0; m < a.n; ++m) {
                        if (!a.prod(i, j, l).is_zero()) lhs[m] += a.prod(i, j, l) * a.prod(l, k, m);
                        if (!a.prod(j, k, l).is_zero()) lhs[m] -= a.prod(j, k, l) * a.prod(i, l, m);
                        if (!a.prod(j, i, l).is_zero()) rhs[m] += a.prod(j, i, l) * a.prod(l, k, m);
                        if (!a.prod(i, k, l).is_zero()) rhs[m] -= a.prod(i, k, l) * a.prod(j, l, m);
                    }
                }
                if (lhs != rhs) return TripleViolation<K>{i, j, k, lhs, rhs};
            }
    return std::nullopt;
}

// Right-commutativity (xy)z = (xz)y on basis triples.
template <class K>
std::optional<TripleViolation<K>> right_commutative_violation(const Algebra<K>& a) {
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j)
            for (std::size_t k = 0; k < a.n; ++k) {
                Vec<K> lhs(a.n), rhs(a.n);
                for (std::size_t l = 0; l < a.n; ++l)
                    for (std::size_t m = 0; m < a.n; ++m) {
                        if (!a.prod(i, j, l).is_zero()) lhs[m] += a.prod(i, j, l) * a.prod(l, k, m);
                        if (!a.prod(i, k, l).is_zero()) rhs[m] += a.prod(i, k, l) * a.prod(l, j, m);
                    }
                if (lhs != rhs) return TripleViolation<K>{i, j, k, lhs, rhs};
            }
    return std::nullopt;
}

template <class K>
bool is_left_symmetric(const Algebra<K>& a) {
    return !left_symmetric_violation(a).has_value();
}

// Novikov = left-symmetric + right-commutative.
template <class K>
bool is_novikov(const Algebra<K>& a) {
    return is_left_symmetric(a) && !right_commutative_violation(a).has_value();
}

// Ann(A) = {x : xA = Ax = 0}, the kernel of the stacked left and right
// multiplication maps.
template <class K>
Subspace<K> annihilator(const Algebra<K>& a) {
    Matrix<K> m(2 * a.n * a.n, a.n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < a.n; ++j)
        for (std::size_t k = 0; k < a.n; ++k) {
            for (std::size_t i = 0; i < a.n; ++i) {
                m(row, i) = a.prod(i, j, k);      // (x e_j)_k
                m(row + 1, i) = a.prod(j, i, k);  // (e_j x)_k
            }
            row += 2;
        }
    return span_of(kernel_basis(m), a.n);
}

template <class K>
Subspace<K> left_annihilator(const Algebra<K>& a) {
    Matrix<K> m(a.n * a.n, a.n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < a.n; ++j)
        for (std::size_t k = 0; k < a.n; ++k, ++row)
            for (std::size_t i = 0; i < a.n; ++i) m(row, i) = a.prod(i, j, k);
    return span_of(kernel_basis(m), a.n);
}

template <class K>
Subspace<K> right_annihilator(const Algebra<K>& a) {
    Matrix<K> m(a.n * a.n, a.n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < a.n; ++j)
        for (std::size_t k = 0; k < a.n; ++k, ++row)
            for (std::size_t i = 0; i < a.n; ++i) m(row, i) = a.prod(j, i, k);
    return span_of(kernel_basis(m), a.n);
}

namespace detail {
template <class K>
Subspace<K> subspace_product_sum(const Algebra<K>& a,
                                 const std::vector<Subspace<K>>& chain,
                                 std::size_t length) {
    std::vector<Vec<K>> gens;
    for (std::size_t p = 1; p < length; ++p) {
        std::size_t q = length - p;
        for (const auto& u : chain[p - 1].basis)
            for (const auto& v : chain[q - 1].basis) gens.push_back(a.multiply(u, v));
    }
    return span_of(gens, a.n);
}
}  // namespace detail

// Descending chain A^<1> = A, A^<k> = sum_{p+q=k} A^<p> A^<q>, returned up
// to its first provably stable entry.  A nonzero plateau alone does not
// prove stability (the chain can drop again later); a plateau from A^<p>
// through A^<2p> does, so we extend the computation that far.
template <class K>
std::vector<Subspace<K>> power_chain(const Algebra<K>& a) {
    std::vector<Subspace<K>> chain{full_space<K>(a.n)};
    for (;;) {
        Subspace<K> next = detail::subspace_product_sum(a, chain, chain.size() + 1);
        chain.push_back(next);
        if (next.dim() == 0) break;
        std::size_t m = chain.size();
        std::size_t p = m;
        while (p > 1 && chain[p - 2] == chain[m - 1]) --p;
        if (p < m && m >= 2 * p) break;  // plateau [p, 2p] verified
    }
    std::size_t keep = chain.size();
    while (keep > 1 && chain[keep - 2] == chain.back()) --keep;
    chain.resize(keep);
    return chain;
}

template <class K>
bool is_nilpotent(const Algebra<K>& a) {
    return power_chain(a).back().dim() == 0;
}

// dim A^<k>; past the end of the returned chain the value is stable.
template <class K>
std::size_t power_dim(const Algebra<K>& a, std::size_t k) {
    if (k == 0) throw Error("power_dim: k starts at 1");
    std::vector<Subspace<K>> chain = power_chain(a);
    return k <= chain.size() ? chain[k - 1].dim() : chain.back().dim();
}

// Solution space dimension of D(e_i e_j) = D(e_i) e_j + e_i D(e_j), a
// linear system in the n^2 entries of D.
template <class K>
std::size_t derivation_dimension(const Algebra<K>& a) {
    std::size_t n = a.n;
    Matrix<K> m(n * n * n, n * n);  // unknown D(k,l) at column k*n + l
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k, ++row) {
                for (std::size_t l = 0; l < n; ++l) {
                    m(row, k * n + l) += a.prod(i, j, l);
                    m(row, l * n + i) -= a.prod(l, j, k);
                    m(row, l * n + j) -= a.prod(i, l, k);
                }
            }
    return n * n - rref(std::move(m)).rank;
}

// Present the algebra in the basis given by the rows of T (row i = new
// basis vector E_i in the old coordinates).
template <class K>
Algebra<K> change_of_basis(const Algebra<K>& a, const Matrix<K>& t) {
    if (t.rows() != a.n || t.cols() != a.n) throw Error("change_of_basis: wrong shape");
    std::optional<Matrix<K>> inv = inverse(t);
    if (!inv) throw Error("change_of_basis: singular matrix");
    Algebra<K> out(a.n, a.label);
    out.params = a.params;
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j) {
            Vec<K> w = a.multiply(t.row(i), t.row(j));
            for (std::size_t k = 0; k < a.n; ++k) {
                K v{};
                for (std::size_t l = 0; l < a.n; ++l) v += (*inv)(l, k) * w[l];
                out.prod(i, j, k) = v;
            }
        }
    return out;
}

template <class K>
struct QuotientByAnnihilator {
    Algebra<K> quotient;             // induced product on the chosen complement
    std::vector<Matrix<K>> thetas;   // one cocycle per annihilator basis vector
    Matrix<K> adapted_basis;         // rows: complement vectors, then Ann basis
    std::vector<std::size_t> complement;  // standard basis indices of the complement
    std::vector<Vec<K>> ann_basis;
};

// Lemma-style reduction: A = A' + Ann(A) with A' spanned by the
// lexicographically first standard basis vectors completing Ann(A), the
// induced product P(xy) on A', and theta(x,y) = xy - [x,y]_{A'} recorded in
// Ann coordinates.  Rebuilding the central extension from (A', thetas)
// reproduces A in the adapted basis.
template <class K>
QuotientByAnnihilator<K> quotient_by_annihilator(const Algebra<K>& a) {
    Subspace<K> ann = annihilator(a);
    if (ann.dim() == 0) throw Error("quotient_by_annihilator: zero annihilator");
    std::size_t m = ann.dim(), q = a.n - m;

    QuotientByAnnihilator<K> out;
    out.ann_basis = ann.basis;
    std::vector<Vec<K>> current = ann.basis;
    std::size_t r = m;
    for (std::size_t j = 0; j < a.n && r < a.n; ++j) {
        Vec<K> e(a.n);
        e[j] = K(1);
        current.push_back(e);
        std::size_t nr = span_of(current, a.n).dim();
        if (nr > r) {
            r = nr;
            out.complement.push_back(j);
        } else {
            current.pop_back();
        }
    }

    out.adapted_basis = Matrix<K>(a.n, a.n);
    for (std::size_t i = 0; i < q; ++i) out.adapted_basis(i, out.complement[i]) = K(1);
    for (std::size_t i = 0; i < m; ++i) out.adapted_basis.set_row(q + i, ann.basis[i]);

    // coordinates of a full product in (complement, ann) components
    Matrix<K> basis_cols = out.adapted_basis.transpose();
    out.quotient = Algebra<K>(q, a.label.empty() ? "" : a.label + "/ann");
    out.thetas.assign(m, Matrix<K>(q, q));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            Vec<K> w = a.basis_product(out.complement[i], out.complement[j]);
            std::optional<Vec<K>> coords = solve(basis_cols, w);
            if (!coords) throw Error("quotient_by_annihilator: internal basis failure");
            for (std::size_t k = 0; k < q; ++k) out.quotient.prod(i, j, k) = (*coords)[k];
            for (std::size_t s = 0; s < m; ++s) out.thetas[s](i, j) = (*coords)[q + s];
        }
    return out;
}

}  // namespace lsa
