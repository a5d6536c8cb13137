#pragma once

// Central extensions A_theta = A + V with product xy + theta(x,y), the
// automorphism action phi^T M phi on cocycle matrices, and pointwise
// verification machinery: automorphism candidates, orbit-representative
// reconstruction, and the Novikov/non-Novikov split of a cocycle.

#include <optional>
#include <string>
#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/cohomology.hpp"
#include "lsa/matrix.hpp"

namespace lsa {

template <class K>
struct ExtensionSpec {
    Algebra<K> base;
    std::vector<Cocycle<K>> thetas;
    std::string label;  // name for the constructed algebra
};

template <class K>
struct ExtensionResult {
    Algebra<K> algebra;
    bool split_warning = false;  // classes [theta_i] dependent modulo B2
    bool annihilator_warning = false;  // Ann(theta) cap Ann(base) != 0
};

// The (m+s)-dimensional algebra: base products, theta values on the new
// coordinates, new coordinates central.  Throws when a theta is not a
// cocycle; dependent classes or a nonzero Ann(theta) cap Ann(base) only
// set warning flags (the construction itself is still well defined).
template <class K>
ExtensionResult<K> central_extension(const ExtensionSpec<K>& spec) {
    const Algebra<K>& b = spec.base;
    std::size_t m = b.n, s = spec.thetas.size();
    for (const auto& th : spec.thetas) {
        if (th.rows() != m || th.cols() != m)
            throw Error("central_extension: cocycle shape mismatch");
        if (!in_z2(b, th)) throw Error("central_extension: theta is not a cocycle");
    }

    ExtensionResult<K> out;
    out.algebra = Algebra<K>(m + s, spec.label);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < m; ++k) out.algebra.prod(i, j, k) = b.prod(i, j, k);
            for (std::size_t t = 0; t < s; ++t) out.algebra.prod(i, j, m + t) = spec.thetas[t](i, j);
        }

    if (s > 0) {
        std::vector<Cocycle<K>> b2 = b2_basis(b);
        std::vector<Vec<K>> stack;
        for (const auto& c : b2) stack.push_back(cocycle_vec(c));
        std::size_t r0 = span_of(stack, m * m).dim();
        for (const auto& th : spec.thetas) stack.push_back(cocycle_vec(th));
        out.split_warning = span_of(stack, m * m).dim() < r0 + s;
        out.annihilator_warning =
            intersect(cocycle_annihilator(b, spec.thetas), annihilator(b)).dim() > 0;
    }
    return out;
}

template <class K>
struct PairViolation {
    std::size_t i, j;
    Vec<K> lhs, rhs;  // phi(e_i e_j) vs phi(e_i) phi(e_j)
};

// phi is an automorphism iff it is invertible and multiplicative on basis
// pairs.  Column convention: phi(e_i) is column i.
template <class K>
std::optional<PairViolation<K>> aut_violation(const Algebra<K>& a, const Matrix<K>& phi) {
    if (phi.rows() != a.n || phi.cols() != a.n) throw Error("aut_violation: shape mismatch");
    if (rank(phi) != a.n)
        return PairViolation<K>{0, 0, Vec<K>(a.n), Vec<K>(a.n)};  // singular: not invertible
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j) {
            Vec<K> lhs = phi * a.basis_product(i, j);
            Vec<K> rhs = a.multiply(phi * unit_vec<K>(a.n, i), phi * unit_vec<K>(a.n, j));
            if (lhs != rhs) return PairViolation<K>{i, j, lhs, rhs};
        }
    return std::nullopt;
}

template <class K>
bool aut_verify(const Algebra<K>& a, const Matrix<K>& phi) {
    return !aut_violation(a, phi).has_value();
}

// (phi theta)(x, y) = theta(phi x, phi y), i.e. phi^T M phi on matrices.
template <class K>
Cocycle<K> aut_action_on_cocycle(const Algebra<K>& a, const Matrix<K>& phi,
                                 const Cocycle<K>& theta) {
    if (!aut_verify(a, phi)) throw Error("aut_action_on_cocycle: phi is not an automorphism");
    return phi.transpose() * theta * phi;
}

template <class K>
struct OrbitMismatch {
    std::size_t i, j, k;
    K got, want;
};

// Build the central extension of `base` by `thetas` and compare with the
// claimed product table entry by entry; new coordinates follow the base
// coordinates in theta order.
template <class K>
std::optional<OrbitMismatch<K>> verify_orbit_representative(const Algebra<K>& base,
                                                            const std::vector<Cocycle<K>>& thetas,
                                                            const Algebra<K>& claimed) {
    if (base.n + thetas.size() != claimed.n)
        throw Error("verify_orbit_representative: dimension mismatch");
    ExtensionResult<K> ext = central_extension<K>({base, thetas, claimed.label});
    for (std::size_t i = 0; i < claimed.n; ++i)
        for (std::size_t j = 0; j < claimed.n; ++j)
            for (std::size_t k = 0; k < claimed.n; ++k)
                if (ext.algebra.prod(i, j, k) != claimed.prod(i, j, k))
                    return OrbitMismatch<K>{i, j, k, ext.algebra.prod(i, j, k),
                                            claimed.prod(i, j, k)};
    return std::nullopt;
}

// Whether extending the Novikov algebra `base` by theta stays inside the
// Novikov variety.  Requires a Novikov base; the split is meaningless
// otherwise.
template <class K>
bool novikov_cocycle_filter(const Algebra<K>& base, const Cocycle<K>& theta) {
    if (!is_novikov(base)) throw Error("novikov_cocycle_filter: base is not Novikov");
    return is_zero_vec(novikov_constraints(base) * cocycle_vec(theta));
}

}  // namespace lsa
