#include <catch2/catch_amalgamated.hpp>

#include "lsa/algebra.hpp"
#include "lsa/catalog.hpp"

using namespace lsa;
using K = GaussRational;

TEST_CASE("catalog census") {
    std::size_t dim2_bases = 0, dim3_bases = 0, non_novikov = 0, components = 0, zeros = 0;
    for (const auto& e : catalog()) {
        switch (e.kind) {
            case EntryKind::Zero: ++zeros; break;
            case EntryKind::NovikovBase: (e.dim == 2 ? dim2_bases : dim3_bases)++; break;
            case EntryKind::NonNovikov: ++non_novikov; break;
            case EntryKind::NovikovComponent: ++components; break;
        }
        CHECK(!e.provenance.empty());
    }
    CHECK(dim2_bases == 1);
    CHECK(dim3_bases == 6);
    CHECK(non_novikov == 24);
    CHECK(components == 2);
    CHECK(zeros == 4);
}

TEST_CASE("label lookup tolerates the star spelling") {
    CHECK(find_entry("L3s_01") != nullptr);
    CHECK(find_entry("L3*_01") == find_entry("L3s_01"));
    CHECK(find_entry("no_such") == nullptr);
    CHECK_THROWS_AS(entry("no_such"), Error);
}

TEST_CASE("instantiation of specific families") {
    Algebra<K> l417 = instantiate<K>("L4_17", {{"alpha", K(2)}});
    CHECK(l417.prod(2, 0, 3) == K(-1));  // e3e1 = (1 - alpha) e4 = -e4

    Algebra<K> l413 = instantiate<K>(
        "L4_13", {{"lambda", K(make_rational(3, 16))}, {"mu", K(make_rational(1, 2))}});
    CHECK(l413.prod(1, 2, 3) == K(make_rational(1, 2)));   // e2e3 = (1 - mu) e4
    CHECK(l413.prod(2, 1, 3) == K(make_rational(-3, 8)));  // e3e2 = -2 lambda e4

    CHECK_THROWS_AS(instantiate<K>("L4_12", {{"lambda", K(0)}}), Error);
    CHECK_THROWS_AS(instantiate<K>("L4_24", {{"lambda", K(1)}}), Error);
    CHECK_THROWS_AS((instantiate<K>("L4_13", {{"lambda", K(1)}, {"mu", K(1)}})), Error);
    CHECK_THROWS_AS(instantiate<K>("L4_17", {}), Error);
}

TEST_CASE("every entry instantiates on its default samples") {
    for (const auto& e : catalog()) {
        if (!e.parametric()) {
            Algebra<K> a = instantiate<K>(e, {});
            CHECK(a.n == e.dim);
            continue;
        }
        CHECK(!e.default_samples.empty());
        for (const auto& binds : e.default_samples) {
            Algebra<K> a = instantiate<K>(e, binds);
            CHECK(is_left_symmetric(a));
        }
    }
}

TEST_CASE("radical samples satisfy the constraint") {
    for (const auto& e : catalog()) {
        if (!e.radical) continue;
        for (const auto& binds : e.default_samples) {
            K mu = binds.at("mu"), lam = binds.at("lambda");
            CHECK(mu * mu == K(1) - K(4) * lam);
        }
    }
}

TEST_CASE("coefficient expressions print readably") {
    const CatalogEntry& e = entry("L4_17");
    bool found = false;
    for (const auto& p : e.products)
        if (p.i == 3 && p.j == 1) {
            CHECK(p.coef.str() == "1-alpha");
            found = true;
        }
    CHECK(found);
}
