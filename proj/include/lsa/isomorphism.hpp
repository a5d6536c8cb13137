#pragma once

// Non-isomorphism certificates from basis-independent invariants and a
// bounded heuristic search for explicit isomorphisms.  The search never
// proves non-isomorphism; the invariants never prove isomorphism.  All
// claims the library makes are certificate-backed.

#include <optional>
#include <string>
#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/matrix.hpp"
#include "lsa/rng.hpp"

namespace lsa {

struct InvariantVector {
    std::size_t dim_ann = 0;
    std::size_t dim_sq = 0;    // dim A*A
    std::size_t dim_cube = 0;  // dim A^<3>
    std::size_t dim_der = 0;
    std::size_t left_ann_dim = 0;
    std::size_t right_ann_dim = 0;
    std::size_t commutative_rank = 0;  // dim of the span of all commutators

    friend bool operator==(const InvariantVector&, const InvariantVector&) = default;

    std::string str() const {
        auto s = [](std::size_t v) { return std::to_string(v); };
        return "(ann " + s(dim_ann) + ", sq " + s(dim_sq) + ", cube " + s(dim_cube) + ", der " +
               s(dim_der) + ", lann " + s(left_ann_dim) + ", rann " + s(right_ann_dim) +
               ", comm " + s(commutative_rank) + ")";
    }
};

// First invariant entry (by field order) on which the two vectors differ.
inline std::optional<std::string> first_difference(const InvariantVector& a,
                                                   const InvariantVector& b) {
    if (a.dim_ann != b.dim_ann) return "dim_ann";
    if (a.dim_sq != b.dim_sq) return "dim_sq";
    if (a.dim_cube != b.dim_cube) return "dim_cube";
    if (a.dim_der != b.dim_der) return "dim_der";
    if (a.left_ann_dim != b.left_ann_dim) return "left_ann_dim";
    if (a.right_ann_dim != b.right_ann_dim) return "right_ann_dim";
    if (a.commutative_rank != b.commutative_rank) return "commutative_rank";
    return std::nullopt;
}

template <class K>
InvariantVector invariants(const Algebra<K>& a) {
    InvariantVector v;
    v.dim_ann = annihilator(a).dim();
    std::vector<Subspace<K>> chain = power_chain(a);
    auto chain_dim = [&chain](std::size_t k) {
        return k <= chain.size() ? chain[k - 1].dim() : chain.back().dim();
    };
    v.dim_sq = chain_dim(2);
    v.dim_cube = chain_dim(3);
    v.dim_der = derivation_dimension(a);
    v.left_ann_dim = left_annihilator(a).dim();
    v.right_ann_dim = right_annihilator(a).dim();
    std::vector<Vec<K>> comms;
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j) {
            Vec<K> c(a.n);
            for (std::size_t k = 0; k < a.n; ++k) c[k] = a.prod(i, j, k) - a.prod(j, i, k);
            comms.push_back(std::move(c));
        }
    v.commutative_rank = span_of(comms, a.n).dim();
    return v;
}

struct DistinguishResult {
    bool non_isomorphic = false;
    std::string witness;  // invariant name, or "dimension"
};

// Never claims isomorphism: equal invariants are merely inconclusive.
template <class K>
DistinguishResult distinguish(const Algebra<K>& a, const Algebra<K>& b) {
    if (a.n != b.n) return {true, "dimension"};
    auto diff = first_difference(invariants(a), invariants(b));
    if (diff) return {true, *diff};
    return {false, ""};
}

namespace detail {

// Standard basis indices generating A modulo A*A; every basis vector is
// reachable from them by repeated products, which pins down the remaining
// images of a homomorphism candidate.
template <class K>
std::vector<std::size_t> generator_indices(const Algebra<K>& a) {
    Subspace<K> sq = span_of(
        [&] {
            std::vector<Vec<K>> prods;
            for (std::size_t i = 0; i < a.n; ++i)
                for (std::size_t j = 0; j < a.n; ++j) prods.push_back(a.basis_product(i, j));
            return prods;
        }(),
        a.n);
    std::vector<Vec<K>> current = sq.basis;
    std::vector<std::size_t> gens;
    std::size_t r = sq.dim();
    for (std::size_t j = 0; j < a.n && r < a.n; ++j) {
        current.push_back(unit_vec<K>(a.n, j));
        std::size_t nr = span_of(current, a.n).dim();
        if (nr > r) {
            r = nr;
            gens.push_back(j);
        } else {
            current.pop_back();
        }
    }
    return gens;
}

// Expressions of a full basis of A as bracketed words in the generators:
// pairs (vector in A, recipe), where each recipe multiplies two earlier
// list entries.  Index into `exprs`; generators come first.
template <class K>
struct WordBasis {
    std::vector<Vec<K>> elements;               // in A coordinates
    std::vector<std::pair<int, int>> recipe;    // (-1,-1) for generators
    std::vector<std::size_t> basis_selection;   // indices forming a basis of A
};

template <class K>
std::optional<WordBasis<K>> word_basis(const Algebra<K>& a,
                                       const std::vector<std::size_t>& gens) {
    WordBasis<K> wb;
    for (std::size_t g : gens) {
        wb.elements.push_back(unit_vec<K>(a.n, g));
        wb.recipe.emplace_back(-1, -1);
    }
    std::vector<Vec<K>> spanning = wb.elements;
    std::size_t r = span_of(spanning, a.n).dim();
    for (std::size_t grow = 0; grow < a.n && r < a.n; ++grow) {
        std::size_t sz = wb.elements.size();
        for (std::size_t p = 0; p < sz && r < a.n; ++p)
            for (std::size_t q = 0; q < sz && r < a.n; ++q) {
                Vec<K> prod = a.multiply(wb.elements[p], wb.elements[q]);
                if (is_zero_vec(prod)) continue;
                spanning.push_back(prod);
                std::size_t nr = span_of(spanning, a.n).dim();
                if (nr > r) {
                    r = nr;
                    wb.elements.push_back(prod);
                    wb.recipe.emplace_back(static_cast<int>(p), static_cast<int>(q));
                } else {
                    spanning.pop_back();
                }
            }
    }
    if (r < a.n) return std::nullopt;  // not generated: cannot happen for our catalog
    std::vector<Vec<K>> chosen;
    for (std::size_t idx = 0; idx < wb.elements.size() && chosen.size() < a.n; ++idx) {
        chosen.push_back(wb.elements[idx]);
        if (span_of(chosen, a.n).dim() < chosen.size()) chosen.pop_back();
        else wb.basis_selection.push_back(idx);
    }
    return wb;
}

// Candidate images of the generators -> full homomorphism candidate, by
// pushing the word recipes through B's product.
template <class K>
std::optional<Matrix<K>> complete_candidate(const Algebra<K>& a, const Algebra<K>& b,
                                            const WordBasis<K>& wb,
                                            const std::vector<Vec<K>>& gen_images) {
    std::vector<Vec<K>> images;
    std::size_t gi = 0;
    for (std::size_t idx = 0; idx < wb.elements.size(); ++idx) {
        if (wb.recipe[idx].first < 0) images.push_back(gen_images[gi++]);
        else
            images.push_back(
                b.multiply(images[wb.recipe[idx].first], images[wb.recipe[idx].second]));
    }
    // solve phi * (basis elements) = images on the selected basis
    Matrix<K> dom(a.n, a.n), img(a.n, a.n);
    for (std::size_t c = 0; c < a.n; ++c) {
        for (std::size_t r = 0; r < a.n; ++r) {
            dom(r, c) = wb.elements[wb.basis_selection[c]][r];
            img(r, c) = images[wb.basis_selection[c]][r];
        }
    }
    std::optional<Matrix<K>> dom_inv = inverse(dom);
    if (!dom_inv) return std::nullopt;
    Matrix<K> phi = img * (*dom_inv);
    if (rank(phi) != a.n) return std::nullopt;
    return phi;
}

template <class K>
bool is_isomorphism(const Algebra<K>& a, const Algebra<K>& b, const Matrix<K>& phi) {
    if (rank(phi) != a.n) return false;
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j) {
            Vec<K> lhs = phi * a.basis_product(i, j);
            Vec<K> rhs = b.multiply(phi * unit_vec<K>(a.n, i), phi * unit_vec<K>(a.n, j));
            if (lhs != rhs) return false;
        }
    return true;
}

}  // namespace detail

// Bounded heuristic search for an explicit isomorphism phi: A -> B with
// phi(x y) = phi(x) phi(y), verified exactly before it is returned.
// Strategy: images of a generating set determine the rest, so candidates
// are generator-image tuples; a structured first wave (signed scaled unit
// vectors, i.e. triangular-flavoured candidates) is followed by seeded
// random integer vectors with entries in [-3, 3].  `budget` counts
// candidates; same seed, same result.  not_found proves nothing.
template <class K>
std::optional<Matrix<K>> find_isomorphism(const Algebra<K>& a, const Algebra<K>& b,
                                          std::size_t budget = 100000,
                                          std::uint64_t seed = 1) {
    if (a.n != b.n) return std::nullopt;
    if (same_constants(a, b)) return Matrix<K>::identity(a.n);
    std::vector<std::size_t> gens = detail::generator_indices(a);
    auto wb = detail::word_basis(a, gens);
    if (!wb) return std::nullopt;

    std::size_t used = 0;
    auto try_candidate = [&](const std::vector<Vec<K>>& gen_images) -> std::optional<Matrix<K>> {
        ++used;
        auto phi = detail::complete_candidate(a, b, *wb, gen_images);
        if (phi && detail::is_isomorphism(a, b, *phi)) return phi;
        return std::nullopt;
    };

    // wave 1: generators -> scaled unit vectors, scales from a small pool
    std::vector<K> scales{K(1), K(-1), K(2), K(-2), K(3), K(5), K(GaussRational(make_rational(1, 2)))};
    std::vector<std::vector<Vec<K>>> wave{{}};
    for (std::size_t g = 0; g < gens.size(); ++g) {
        std::vector<std::vector<Vec<K>>> grown;
        for (const auto& partial : wave)
            for (std::size_t target = 0; target < a.n; ++target)
                for (const auto& s : scales) {
                    auto tuple = partial;
                    Vec<K> v(a.n);
                    v[target] = s;
                    tuple.push_back(v);
                    grown.push_back(std::move(tuple));
                }
        wave = std::move(grown);
        if (wave.size() > 4000) break;  // keep the structured wave bounded
    }
    for (const auto& tuple : wave) {
        if (tuple.size() != gens.size() || used >= budget) break;
        if (auto phi = try_candidate(tuple)) return phi;
    }

    // wave 2: seeded random small-integer generator images
    Rng rng(seed);
    while (used < budget) {
        std::vector<Vec<K>> tuple;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            Vec<K> v(a.n);
            for (std::size_t i = 0; i < a.n; ++i) v[i] = K(rng.range(-3, 3));
            tuple.push_back(std::move(v));
        }
        if (auto phi = try_candidate(tuple)) return phi;
    }
    return std::nullopt;
}

}  // namespace lsa
