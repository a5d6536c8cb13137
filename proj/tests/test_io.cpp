#include <catch2/catch_amalgamated.hpp>

#include "lsa/catalog.hpp"
#include "lsa/io.hpp"
#include "lsa/rng.hpp"

using namespace lsa;
using K = GaussRational;

TEST_CASE("scalar expressions") {
    CHECK(io::parse_scalar_expr("5/2") == K(make_rational(5, 2)));
    CHECK(io::parse_scalar_expr("1+2*i") == K(Rational(1), Rational(2)));
    CHECK(io::parse_scalar_expr("-i") == -GaussRational::i());
    CHECK(io::parse_scalar_expr("(1-i)/2") ==
          K(make_rational(1, 2), make_rational(-1, 2)));
    CHECK(io::parse_scalar_expr("2^3") == K(8));
    CHECK(io::parse_scalar_expr("2^-2") == K(make_rational(1, 4)));
    CHECK(io::parse_scalar_expr("lambda+1", {{"lambda", K(2)}}) == K(3));
    CHECK_THROWS_AS(io::parse_scalar_expr("1/0"), Error);
    CHECK_THROWS_AS(io::parse_scalar_expr("frog"), Error);
    CHECK_THROWS_AS(io::parse_scalar_expr("1+"), Error);
}

TEST_CASE("rational function expressions") {
    RatFunc t = RatFunc::t();
    CHECK(io::parse_ratfunc_expr("t^2/(1-t)") == t * t / (RatFunc(1) - t));
    CHECK(io::parse_ratfunc_expr("1/t") == RatFunc(1) / t);
    CHECK(io::parse_ratfunc_expr("(1+t)*(1-t)") == RatFunc(1) - t * t);
    CHECK(io::parse_ratfunc_expr("i*t") == RatFunc(GaussRational::i()) * t);
    CHECK(io::parse_ratfunc_expr("t^-1") == RatFunc(1) / t);
}

TEST_CASE("cocycle expressions") {
    Matrix<K> m = io::parse_cocycle_expr("D12 + 2*D31 - i*D23", 3);
    Matrix<K> want(3, 3);
    want(0, 1) = K(1);
    want(2, 0) = K(2);
    want(1, 2) = -GaussRational::i();
    CHECK(m == want);
    CHECK(io::parse_cocycle_expr("(1/2)*D11", 2)(0, 0) == K(make_rational(1, 2)));
    CHECK(io::parse_cocycle_expr("a*D12", 2, {{"a", K(7)}})(0, 1) == K(7));
    CHECK_THROWS_AS(io::parse_cocycle_expr("D12*D13", 3), Error);
    CHECK_THROWS_AS(io::parse_cocycle_expr("D12+1", 3), Error);
    CHECK_THROWS_AS(io::parse_cocycle_expr("D14", 3), Error);
}

TEST_CASE("presentation parsing") {
    Algebra<K> a = io::parse_presentation("dim 2\ne1*e1 = e2\n");
    CHECK(same_constants(a, instantiate("L2s_01")));

    Algebra<K> zero = io::parse_presentation("dim 1\n");
    CHECK(zero.n == 1);
    CHECK(is_zero_vec(zero.c));

    std::string l409 =
        "dim 4\n"
        "e1*e2 = e3\n"
        "e1*e3 = -2*e4\n"
        "e2*e1 = -e3\n"
        "e3*e1 = e4\n";
    CHECK(same_constants(io::parse_presentation(l409), instantiate("L4_09")));

    // comments and spacing are free
    CHECK(same_constants(
        io::parse_presentation("# comment\n dim 2 \n e1 * e1=e2  # tail\n"),
        instantiate("L2s_01")));

    CHECK_THROWS_AS(io::parse_presentation("dim 2\ne1*e3 = e2\n"), Error);
    CHECK_THROWS_AS(io::parse_presentation("dim 2\ne1*e1 = e9\n"), Error);
    CHECK_THROWS_AS(io::parse_presentation("dim 2\ne1*e1 = frog*e2\n"), Error);
    CHECK_THROWS_AS(io::parse_presentation("dim 2\ne1*e1 = e2\ne1*e1 = e2\n"), Error);
    CHECK_THROWS_AS(io::parse_presentation("e1*e1 = e2\n"), Error);
}

TEST_CASE("emit/parse round trip is the identity on normalized text") {
    for (const char* label : {"L2s_01", "L3s_03", "L4_07", "L4_09", "L4_18"}) {
        Algebra<K> a = instantiate(label);
        std::string text = io::emit_presentation(a);
        Algebra<K> back = io::parse_presentation(text);
        CHECK(same_constants(back, a));
        CHECK(io::emit_presentation(back) == text);
    }
    // randomized round trip, including complex coefficients
    Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        Algebra<K> a(3);
        for (auto& c : a.c)
            if (rng.range(0, 2) == 0) c = rng.gauss_rational(4);
        Algebra<K> back = io::parse_presentation(io::emit_presentation(a));
        CHECK(same_constants(back, a));
    }
}

TEST_CASE("witness files") {
    DegenerationWitness w = io::parse_witness(
        "# scale the top coordinate\n"
        "param lambda = t^2\n"
        "t 0\n"
        "0 1\n");
    CHECK(w.basis.rows() == 2);
    CHECK(w.basis(0, 0) == RatFunc::t());
    CHECK(w.basis(1, 1) == RatFunc(1));
    CHECK(w.param_index.at("lambda") == RatFunc::t() * RatFunc::t());

    DegenerationWitness commas = io::parse_witness("t, t^2\n0, 1/t\n");
    CHECK(commas.basis(1, 1) == RatFunc(1) / RatFunc::t());

    CHECK_THROWS_AS(io::parse_witness("t 0 0\n0 1\n"), Error);
    CHECK_THROWS_AS(io::parse_witness("param x = t\n"), Error);
}

TEST_CASE("parameter lists") {
    ParamMap p = io::parse_param_list("lambda=2,alpha=5/2");
    CHECK(p.at("lambda") == K(2));
    CHECK(p.at("alpha") == K(make_rational(5, 2)));
    CHECK(io::parse_param_list("mu = 1/2").at("mu") == K(make_rational(1, 2)));
    CHECK_THROWS_AS(io::parse_param_list("lambda"), Error);
}
