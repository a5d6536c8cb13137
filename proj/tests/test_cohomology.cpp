#include <catch2/catch_amalgamated.hpp>

#include "lsa/catalog.hpp"
#include "lsa/cohomology.hpp"
#include "lsa/extension.hpp"

using namespace lsa;
using K = GaussRational;

namespace {
Cocycle<K> D(std::size_t i, std::size_t j) { return delta<K>(3, i, j); }

ParamMap bind1(const char* name, const GaussRational& v) { return {{name, v}}; }
}  // namespace

TEST_CASE("z2 of the zero algebra is everything") {
    Algebra<K> zero(3);
    CHECK(z2_basis(zero).size() == 9);
    CHECK(b2_basis(zero).empty());
}

TEST_CASE("z2 of the 3-dimensional one-product algebra") {
    Algebra<K> a = instantiate("L3s_01");
    auto z2 = z2_basis(a);
    CHECK(z2.size() == 7);
    // contains the tabulated generators
    for (const auto& gen : {D(2, 3), D(1, 2), D(1, 3), D(2, 1), D(3, 1), D(3, 3)})
        CHECK(in_z2(a, gen));
    CHECK(!in_z2n(a, D(2, 3)));
    for (const auto& gen : {D(1, 2), D(1, 3), D(2, 1), D(3, 1), D(3, 3)})
        CHECK(in_z2n(a, gen));
}

TEST_CASE("z2 dimension of L3s_05 against an independently built constraint matrix") {
    Algebra<K> a = instantiate("L3s_05");
    // oracle: assemble the n^3 x n^2 system straight from the identity,
    // using only the product table
    Matrix<K> sys(27, 9);
    std::size_t row = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k, ++row)
                for (std::size_t l = 0; l < 3; ++l) {
                    sys(row, l * 3 + k) += a.prod(i, j, l) - a.prod(j, i, l);
                    sys(row, i * 3 + l) -= a.prod(j, k, l);
                    sys(row, j * 3 + l) += a.prod(i, k, l);
                }
    std::size_t oracle_dim = 9 - rank(sys);
    CHECK(z2_basis(a).size() == oracle_dim);
    CHECK(b2_basis(a).size() == 2);          // slices for e2 = e1e1 and e3 = e2e1
    CHECK(oracle_dim == 2 + 4);              // dim Z2 = dim B2 + 4
}

TEST_CASE("b2 basics") {
    Algebra<K> l2 = instantiate("L2s_01");
    auto b2 = b2_basis(l2);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == delta<K>(2, 1, 1));  // the only product slice is Delta_11

    // dim B2 = dim A*A on a couple of catalog algebras
    for (const char* label : {"L4_04", "L4_19", "L3s_05"}) {
        Algebra<K> a = instantiate(label);
        CHECK(b2_basis(a).size() == power_dim(a, 2));
    }
}

TEST_CASE("h2 dimensions reproduce the table rows used in examples") {
    CohomologySpace<K> c1 = h2(instantiate("L3s_01"));
    CHECK(c1.dim_h2() == 6);
    CHECK(c1.dim_h2n() == 5);
    CHECK(c1.base_novikov);
    CHECK(c1.dim_h2() == c1.dim_z2() - c1.dim_b2());
    CHECK(c1.labels.size() == 6);

    CohomologySpace<K> c40 = h2(instantiate<K>("L3s_04", bind1("lambda", K(0))));
    CHECK(c40.dim_h2() == 5);
    CHECK(c40.dim_h2n() == 5);
    CHECK(c40.dim_z2() == c40.z2n.size());  // Z2 = Z2N: extensions stay Novikov

    CohomologySpace<K> c63 = h2(instantiate<K>("L3s_06", bind1("lambda", K(3))));
    CHECK(c63.dim_h2() == 3);
    CHECK(c63.dim_h2n() == 2);

    // every chosen representative is a cocycle and the Novikov ones satisfy
    // the right-commutative constraint
    Algebra<K> a = instantiate<K>("L3s_06", bind1("lambda", K(3)));
    for (const auto& r : c63.h2_reps) CHECK(in_z2(a, r));
    for (const auto& r : c63.h2n_reps) CHECK(in_z2n(a, r));
}

TEST_CASE("representatives are chosen deterministically") {
    // canonical kernel order for the one-product 3-dimensional algebra:
    // the free coordinates in flat (row-major) order, minus the coboundary
    CohomologySpace<K> c = h2(instantiate("L3s_01"));
    std::vector<Cocycle<K>> want{D(1, 2), D(1, 3), D(2, 1), D(2, 3), D(3, 1), D(3, 3)};
    REQUIRE(c.h2_reps.size() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k) CHECK(c.h2_reps[k] == want[k]);
    CHECK(c.labels.front() == "nabla_1");

    // same input, same output
    CohomologySpace<K> again = h2(instantiate("L3s_01"));
    for (std::size_t k = 0; k < want.size(); ++k) CHECK(again.h2_reps[k] == c.h2_reps[k]);
}

TEST_CASE("cocycle annihilator") {
    Algebra<K> a = instantiate("L3s_01");
    CHECK(cocycle_annihilator(a, {Cocycle<K>(3, 3)}).dim() == 3);  // theta = 0

    Subspace<K> ann = cocycle_annihilator(a, {D(2, 3)});
    CHECK(ann.dim() == 1);
    CHECK(ann.contains(unit_vec<K>(3, 0)));

    // Ann(theta) cap Ann(A) = 0 for this pair
    CHECK(intersect(ann, annihilator(a)).dim() == 0);
    CHECK(annihilator(a).dim() == 2);
}

TEST_CASE("base-change equivariance of Z2 membership") {
    Algebra<K> a = instantiate("L3s_01");
    // an automorphism of the tabulated triangular shape
    Matrix<K> phi{{K(2), K(0), K(0)}, {K(1), K(4), K(5)}, {K(3), K(0), K(7)}};
    REQUIRE(aut_verify(a, phi));
    for (const auto& theta : z2_basis(a)) {
        Cocycle<K> acted = phi.transpose() * theta * phi;
        CHECK(in_z2(a, acted));
    }
    // and a non-cocycle stays outside under the action
    Cocycle<K> bad = D(2, 2);
    REQUIRE(!in_z2(a, bad));
    CHECK(!in_z2(a, phi.transpose() * bad * phi));
}
