#pragma once

// Second cohomology of a structure-constant algebra with trivial
// one-dimensional coefficients: the cocycle space Z2 cut out by
// theta(xy,z) - theta(x,yz) = theta(yx,z) - theta(y,xz), the coboundaries
// B2 spanned by the tensor slices, the quotient H2 = Z2/B2 with a
// deterministic choice of representatives, and the extra right-commutative
// (Novikov) cocycle constraint theta(xy,z) = theta(xz,y).
//
// A cocycle is stored as the n x n matrix theta(e_i, e_j); its flattened
// form vec(theta) uses index i*n + j.

#include <optional>
#include <string>
#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/matrix.hpp"

namespace lsa {

template <class K>
using Cocycle = Matrix<K>;

template <class K>
Vec<K> cocycle_vec(const Cocycle<K>& m) {
    Vec<K> v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
    return v;
}

template <class K>
Cocycle<K> cocycle_from_vec(const Vec<K>& v, std::size_t n) {
    Cocycle<K> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
    return m;
}

// Delta_{ij}(e_l, e_m) = [i=l][j=m], 1-based indices as in the tables.
template <class K>
Cocycle<K> delta(std::size_t n, std::size_t i, std::size_t j) {
    Cocycle<K> m(n, n);
    m(i - 1, j - 1) = K(1);
    return m;
}

// n^3 x n^2 matrix of the left-symmetric cocycle constraints.
template <class K>
Matrix<K> z2_constraints(const Algebra<K>& a) {
    std::size_t n = a.n;
    Matrix<K> m(n * n * n, n * n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k, ++row)
                for (std::size_t l = 0; l < n; ++l) {
                    m(row, l * n + k) += a.prod(i, j, l) - a.prod(j, i, l);
                    m(row, i * n + l) -= a.prod(j, k, l);
                    m(row, j * n + l) += a.prod(i, k, l);
                }
    return m;
}

// Additional constraints theta(xy,z) = theta(xz,y) picking out the cocycles
// whose extensions stay right-commutative.
template <class K>
Matrix<K> novikov_constraints(const Algebra<K>& a) {
    std::size_t n = a.n;
    Matrix<K> m(n * n * n, n * n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k, ++row)
                for (std::size_t l = 0; l < n; ++l) {
                    m(row, l * n + k) += a.prod(i, j, l);
                    m(row, l * n + j) -= a.prod(i, k, l);
                }
    return m;
}

template <class K>
std::vector<Cocycle<K>> z2_basis(const Algebra<K>& a) {
    std::vector<Cocycle<K>> out;
    for (const auto& v : kernel_basis(z2_constraints(a))) out.push_back(cocycle_from_vec(v, a.n));
    return out;
}

template <class K>
std::vector<Cocycle<K>> z2n_basis(const Algebra<K>& a) {
    Matrix<K> z = z2_constraints(a), nv = novikov_constraints(a);
    std::size_t n2 = a.n * a.n;
    Matrix<K> stacked(z.rows() + nv.rows(), n2);
    for (std::size_t i = 0; i < z.rows(); ++i)
        for (std::size_t j = 0; j < n2; ++j) stacked(i, j) = z(i, j);
    for (std::size_t i = 0; i < nv.rows(); ++i)
        for (std::size_t j = 0; j < n2; ++j) stacked(z.rows() + i, j) = nv(i, j);
    std::vector<Cocycle<K>> out;
    for (const auto& v : kernel_basis(stacked)) out.push_back(cocycle_from_vec(v, a.n));
    return out;
}

// B2 = span of delta f (x, y) = f(xy): spanned by the slices (c_ij^k)_{ij}.
template <class K>
std::vector<Cocycle<K>> b2_basis(const Algebra<K>& a) {
    std::vector<Vec<K>> slices;
    for (std::size_t k = 0; k < a.n; ++k) {
        Vec<K> v(a.n * a.n);
        for (std::size_t i = 0; i < a.n; ++i)
            for (std::size_t j = 0; j < a.n; ++j) v[i * a.n + j] = a.prod(i, j, k);
        slices.push_back(std::move(v));
    }
    std::vector<Cocycle<K>> out;
    for (const auto& v : span_of(slices, a.n * a.n).basis) out.push_back(cocycle_from_vec(v, a.n));
    return out;
}

template <class K>
bool in_z2(const Algebra<K>& a, const Cocycle<K>& theta) {
    return is_zero_vec(z2_constraints(a) * cocycle_vec(theta));
}

template <class K>
bool in_z2n(const Algebra<K>& a, const Cocycle<K>& theta) {
    return in_z2(a, theta) && is_zero_vec(novikov_constraints(a) * cocycle_vec(theta));
}

template <class K>
struct CohomologySpace {
    std::size_t n = 0;
    std::vector<Cocycle<K>> z2, b2, z2n;
    std::vector<Cocycle<K>> h2_reps;   // coset representatives of Z2/B2
    std::vector<Cocycle<K>> h2n_reps;  // representatives of Z2N/(B2 cap Z2N)
    std::vector<std::string> labels;   // display names bound to h2_reps
    bool base_novikov = false;         // when true, B2 is inside Z2N

    std::size_t dim_z2() const { return z2.size(); }
    std::size_t dim_b2() const { return b2.size(); }
    std::size_t dim_h2() const { return h2_reps.size(); }
    std::size_t dim_h2n() const { return h2n_reps.size(); }
};

// Deterministic representatives: extend the B2 basis through the canonical
// kernel bases, greedily in order, so reports and golden tests are stable.
template <class K>
CohomologySpace<K> h2(const Algebra<K>& a) {
    CohomologySpace<K> out;
    out.n = a.n;
    out.z2 = z2_basis(a);
    out.b2 = b2_basis(a);
    out.z2n = z2n_basis(a);
    out.base_novikov = is_novikov(a);

    std::size_t n2 = a.n * a.n;
    auto vecs = [n2](const std::vector<Cocycle<K>>& list) {
        std::vector<Vec<K>> v;
        for (const auto& m : list) v.push_back(cocycle_vec(m));
        return v;
    };
    for (const auto& v : quotient_complement(vecs(out.b2), vecs(out.z2), n2))
        out.h2_reps.push_back(cocycle_from_vec(v, a.n));

    Subspace<K> b2_cap_z2n = intersect(span_of(vecs(out.b2), n2), span_of(vecs(out.z2n), n2));
    for (const auto& v : quotient_complement(b2_cap_z2n.basis, vecs(out.z2n), n2))
        out.h2n_reps.push_back(cocycle_from_vec(v, a.n));

    for (std::size_t k = 0; k < out.h2_reps.size(); ++k)
        out.labels.push_back("nabla_" + std::to_string(k + 1));
    return out;
}

// Ann(theta) = {x : theta(x, A) = theta(A, x) = 0}, intersected over the
// list: the kernel of every theta matrix stacked with its transpose.
template <class K>
Subspace<K> cocycle_annihilator(const Algebra<K>& a, const std::vector<Cocycle<K>>& thetas) {
    std::size_t n = a.n;
    Matrix<K> m(2 * n * thetas.size(), n);
    std::size_t row = 0;
    for (const auto& th : thetas) {
        if (th.rows() != n || th.cols() != n) throw Error("cocycle_annihilator: shape mismatch");
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) {
                m(row, i) = th(i, j);      // theta(x, e_j)
                m(row + 1, i) = th(j, i);  // theta(e_j, x)
            }
            row += 2;
        }
    }
    if (thetas.empty()) return full_space<K>(n);
    return span_of(kernel_basis(m), n);
}

// Coordinates of theta in the basis {B2 basis, reps}; nullopt when theta is
// outside the span.  Used to reduce a cocycle modulo coboundaries against a
// chosen set of representatives.
template <class K>
std::optional<Vec<K>> coset_coordinates(const std::vector<Cocycle<K>>& b2,
                                        const std::vector<Cocycle<K>>& reps,
                                        const Cocycle<K>& theta) {
    std::size_t n2 = theta.rows() * theta.cols();
    Matrix<K> sys(n2, b2.size() + reps.size());
    std::size_t col = 0;
    for (const auto& b : b2) {
        Vec<K> v = cocycle_vec(b);
        for (std::size_t i = 0; i < n2; ++i) sys(i, col) = v[i];
        ++col;
    }
    for (const auto& r : reps) {
        Vec<K> v = cocycle_vec(r);
        for (std::size_t i = 0; i < n2; ++i) sys(i, col) = v[i];
        ++col;
    }
    auto sol = solve(sys, cocycle_vec(theta));
    if (!sol) return std::nullopt;
    return Vec<K>(sol->begin() + b2.size(), sol->end());
}

}  // namespace lsa
