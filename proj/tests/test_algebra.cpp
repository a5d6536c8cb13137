#include <catch2/catch_amalgamated.hpp>

#include "lsa/algebra.hpp"
#include "lsa/catalog.hpp"
#include "lsa/rng.hpp"

using namespace lsa;
using K = GaussRational;
using A = Algebra<K>;

namespace {

Vec<K> e(std::size_t n, std::size_t i) {
    Vec<K> v(n);
    v[i] = K(1);
    return v;
}

ParamMap bind(std::initializer_list<std::pair<const char*, GaussRational>> init) {
    ParamMap m;
    for (const auto& [k, v] : init) m[k] = v;
    return m;
}

// Independent oracle: span of all products of exactly k basis elements,
// over every bracketing, computed by plain recursive enumeration.
std::vector<Vec<K>> all_bracketed_products(const A& a, std::size_t k) {
    if (k == 1) {
        std::vector<Vec<K>> out;
        for (std::size_t i = 0; i < a.n; ++i) out.push_back(e(a.n, i));
        return out;
    }
    std::vector<Vec<K>> out;
    for (std::size_t p = 1; p < k; ++p) {
        for (const auto& u : all_bracketed_products(a, p))
            for (const auto& v : all_bracketed_products(a, k - p)) out.push_back(a.multiply(u, v));
    }
    return out;
}

std::size_t oracle_power_dim(const A& a, std::size_t k) {
    return span_of(all_bracketed_products(a, k), a.n).dim();
}

}  // namespace

TEST_CASE("multiply evaluates the bilinear product") {
    A l2 = instantiate("L2s_01");
    CHECK(l2.multiply(e(2, 0), e(2, 0)) == e(2, 1));  // e1*e1 = e2
    CHECK(is_zero_vec(l2.multiply(Vec<K>(2), e(2, 1))));

    A l409 = instantiate("L4_09");
    Vec<K> want(4);
    want[3] = K(-2);
    CHECK(l409.multiply(e(4, 0), e(4, 2)) == want);  // e1*e3 = -2 e4

    CHECK_THROWS_AS(l2.multiply(e(3, 0), e(2, 0)), Error);
}

TEST_CASE("left-symmetry check against a brute-force oracle") {
    CHECK(is_left_symmetric(A(3)));  // zero algebra
    CHECK(is_left_symmetric(instantiate("L2s_01")));

    // e1*e2 = e1, all other products zero: not left-symmetric
    A bad(2);
    bad.prod(0, 1, 0) = K(1);

    // oracle: expand both sides of the identity directly for all 8 triples
    std::optional<std::array<std::size_t, 3>> oracle_first;
    for (std::size_t i = 0; i < 2 && !oracle_first; ++i)
        for (std::size_t j = 0; j < 2 && !oracle_first; ++j)
            for (std::size_t k = 0; k < 2 && !oracle_first; ++k) {
                auto p = [&](std::size_t a1, std::size_t b1) { return bad.basis_product(a1, b1); };
                Vec<K> lhs(2), rhs(2);
                for (std::size_t l = 0; l < 2; ++l) {
                    for (std::size_t m = 0; m < 2; ++m) {
                        lhs[m] += p(i, j)[l] * bad.prod(l, k, m) - p(j, k)[l] * bad.prod(i, l, m);
                        rhs[m] += p(j, i)[l] * bad.prod(l, k, m) - p(i, k)[l] * bad.prod(j, l, m);
                    }
                }
                if (lhs != rhs) oracle_first = {{i, j, k}};
            }
    REQUIRE(oracle_first.has_value());

    auto viol = left_symmetric_violation(bad);
    REQUIRE(viol.has_value());
    CHECK(viol->i == (*oracle_first)[0]);
    CHECK(viol->j == (*oracle_first)[1]);
    CHECK(viol->k == (*oracle_first)[2]);
    CHECK(viol->lhs != viol->rhs);
}

TEST_CASE("multiply is bilinear on random vectors") {
    Rng rng(31337);
    A a = instantiate<K>("L4_23", bind({{"lambda", K(2)}, {"alpha", K(1)}}));
    for (int trial = 0; trial < 20; ++trial) {
        Vec<K> x(4), y(4), z(4);
        for (std::size_t i = 0; i < 4; ++i) {
            x[i] = rng.gauss_rational(3);
            y[i] = rng.gauss_rational(3);
            z[i] = rng.gauss_rational(3);
        }
        K s = rng.gauss_rational(3);
        Vec<K> sum(4), lhs(4);
        for (std::size_t i = 0; i < 4; ++i) sum[i] = s * x[i] + y[i];
        Vec<K> sx = a.multiply(x, z), sy = a.multiply(y, z);
        for (std::size_t i = 0; i < 4; ++i) lhs[i] = s * sx[i] + sy[i];
        CHECK(a.multiply(sum, z) == lhs);
    }
}

TEST_CASE("right-commutativity check") {
    A n422 = instantiate<K>("N4_22", bind({{"lambda", K(2)}}));
    CHECK(is_left_symmetric(n422));
    CHECK(!right_commutative_violation(n422).has_value());
    CHECK(is_novikov(n422));

    CHECK(right_commutative_violation(instantiate("L4_01")).has_value());

    // commutative associative algebra: Novikov
    A l302 = instantiate("L3s_02");
    CHECK(is_novikov(l302));
}

TEST_CASE("annihilator") {
    CHECK(annihilator(A(3)).dim() == 3);

    A l2 = instantiate("L2s_01");
    Subspace<K> ann = annihilator(l2);
    CHECK(ann.dim() == 1);
    CHECK(ann.contains(e(2, 1)));

    A l404 = instantiate("L4_04");
    Subspace<K> ann4 = annihilator(l404);
    CHECK(ann4.dim() == 1);
    CHECK(ann4.contains(e(4, 3)));

    // Ann(A) is a two-sided ideal that multiplies to zero
    for (const auto& v : ann4.basis)
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(is_zero_vec(l404.multiply(v, e(4, j))));
            CHECK(is_zero_vec(l404.multiply(e(4, j), v)));
        }
}

TEST_CASE("left and right annihilators") {
    A l404 = instantiate("L4_04");
    CHECK(left_annihilator(l404).dim() == 2);   // e3, e4
    CHECK(right_annihilator(l404).dim() == 2);  // e2 acts only on e3
}

TEST_CASE("power chain") {
    A l2 = instantiate("L2s_01");
    auto chain = power_chain(l2);
    REQUIRE(chain.size() == 3);
    CHECK(chain[0].dim() == 2);
    CHECK(chain[1].dim() == 1);
    CHECK(chain[1].contains(e(2, 1)));
    CHECK(chain[2].dim() == 0);
    CHECK(is_nilpotent(l2));

    auto zchain = power_chain(A(3));
    REQUIRE(zchain.size() == 2);
    CHECK(zchain[0].dim() == 3);
    CHECK(zchain[1].dim() == 0);

    A l423 = instantiate<K>("L4_23", bind({{"lambda", K(2)}, {"alpha", K(1)}}));
    auto chain423 = power_chain(l423);
    REQUIRE(chain423.size() == 5);
    for (std::size_t k = 1; k <= 5; ++k) {
        CHECK(chain423[k - 1].dim() == oracle_power_dim(l423, k));
    }
    CHECK(chain423.back().dim() == 0);
    CHECK(is_nilpotent(l423));

    // chain is monotone decreasing
    for (std::size_t k = 1; k < chain423.size(); ++k)
        CHECK(chain423[k].dim() < chain423[k - 1].dim());

    // non-nilpotent: e1*e1 = e1 stabilizes at the whole line
    A idem(1);
    idem.prod(0, 0, 0) = K(1);
    CHECK(!is_nilpotent(idem));
}

TEST_CASE("power chain survives an intermediate plateau") {
    // e1e1 = e2, e2e2 = e3: A^<3> = A^<4> = <e3> but A^<5> = 0, so a bare
    // two-term stabilization test would misreport non-nilpotency
    A a(3);
    a.prod(0, 0, 1) = K(1);
    a.prod(1, 1, 2) = K(1);
    auto chain = power_chain(a);
    std::vector<std::size_t> dims;
    for (const auto& s : chain) dims.push_back(s.dim());
    CHECK(dims == std::vector<std::size_t>{3, 2, 1, 1, 0});
    CHECK(is_nilpotent(a));
    for (std::size_t k = 1; k <= 6; ++k) CHECK(power_dim(a, k) == oracle_power_dim(a, k));
}

TEST_CASE("derivation dimension") {
    CHECK(derivation_dimension(A(4)) == 16);
    CHECK(derivation_dimension(instantiate<K>("L4_12", bind({{"lambda", K(1)}}))) == 2);
    CHECK(derivation_dimension(
              instantiate<K>("L4_23", bind({{"lambda", K(2)}, {"alpha", K(1)}}))) == 3);
}

TEST_CASE("derivation dimension is basis independent") {
    Rng rng(424242);
    A l417 = instantiate<K>("L4_17", bind({{"alpha", K(2)}}));
    std::size_t want = derivation_dimension(l417);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix<K> t = rng.invertible_matrix(4);
        CHECK(derivation_dimension(change_of_basis(l417, t)) == want);
    }
}

TEST_CASE("change of basis at t = identity is the identity") {
    A l404 = instantiate("L4_04");
    CHECK(same_constants(change_of_basis(l404, Matrix<K>::identity(4)), l404));
}

TEST_CASE("quotient by annihilator") {
    // L4_04 -> base e1*e1 = e2 in dimension 3, theta = Delta_23
    auto q = quotient_by_annihilator(instantiate("L4_04"));
    CHECK(same_constants(q.quotient, instantiate("L3s_01")));
    REQUIRE(q.thetas.size() == 1);
    Matrix<K> want(3, 3);
    want(1, 2) = K(1);
    CHECK(q.thetas[0] == want);
    CHECK(q.complement == std::vector<std::size_t>{0, 1, 2});

    // L4_05 -> L3s_02 with theta = Delta_31
    auto q5 = quotient_by_annihilator(instantiate("L4_05"));
    CHECK(same_constants(q5.quotient, instantiate("L3s_02")));
    Matrix<K> want5(3, 3);
    want5(2, 0) = K(1);
    CHECK(q5.thetas[0] == want5);

    // full annihilator: quotient is the 0-dimensional algebra
    auto qz = quotient_by_annihilator(A(2));
    CHECK(qz.quotient.n == 0);
    CHECK(qz.thetas.size() == 2);

    // no annihilator: not a central extension
    A idem(1);
    idem.prod(0, 0, 0) = K(1);
    CHECK_THROWS_AS(quotient_by_annihilator(idem), Error);
}
