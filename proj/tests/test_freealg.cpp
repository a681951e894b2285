#include <doctest.h>

#include <random>

#include "hopfbench/expr.hpp"
#include "hopfbench/freealg.hpp"

using namespace hb;

namespace {

NcPoly random_poly(std::mt19937_64& rng, const Field& F, int letters) {
    NcPoly f;
    int terms = 1 + rng() % 4;
    for (int i = 0; i < terms; ++i) {
        Word w(rng() % 4);
        for (auto& l : w) l = static_cast<Letter>(rng() % letters);
        f.add_term(F, w, static_cast<Elem>(rng() % F.q()));
    }
    return f;
}

}  // namespace

TEST_SUITE("freealg") {
    TEST_CASE("deglex comparisons") {
        Alphabet A({"g", "h", "x", "y", "z"}, {"z", "y", "x", "h", "g"});
        CHECK(compare_deglex(A.parse_word("gx"), A.parse_word("xg")) == 1);
        CHECK(compare_deglex(A.parse_word("g"), A.parse_word("xg")) == -1);
        CHECK(compare_deglex(A.parse_word("yz"), A.parse_word("zy")) == 1);
        CHECK(compare_deglex(A.parse_word("xy"), A.parse_word("xy")) == 0);
    }

    TEST_CASE("default order puts the last-declared generator on top") {
        Alphabet A({"x", "g"});
        CHECK(compare_deglex(A.parse_word("g"), A.parse_word("x")) == 1);
        CHECK(A.format(A.parse_word("gxg")) == "gxg");
    }

    TEST_CASE("longest-match word parsing") {
        Alphabet A({"x", "x1", "g"});
        Word w = A.parse_word("x1x");
        REQUIRE(w.size() == 2);
        CHECK(A.name(w[0]) == "x1");
        CHECK_THROWS(A.parse_word("q"));
    }

    TEST_CASE("polynomial arithmetic") {
        Field F2 = Field::make(2, 1), F4 = Field::make(2, 2);
        Alphabet A({"x", "g"});
        NcPoly x1 = parse_poly("x + 1", A, F2);
        CHECK(add(F2, x1, x1).is_zero());
        CHECK(scale(F4, F4.t(), parse_poly("x", A, F4)) == NcPoly::monomial(A.parse_word("x"), F4.t()));
        CHECK(add(F2, parse_poly("gx + g", A, F2), parse_poly("xg + g", A, F2)) == parse_poly("gx + xg", A, F2));
        CHECK(mul(F2, parse_poly("g", A, F2), parse_poly("x", A, F2)) == NcPoly::monomial(A.parse_word("gx")));
        CHECK(pow(F2, x1, 2) == parse_poly("x^2 + 1", A, F2));
        CHECK(mul(F2, parse_poly("g - g^2", A, F2), parse_poly("g", A, F2)) == parse_poly("g^2 + g^3", A, F2));
        CHECK(commutator(F2, parse_poly("g", A, F2), parse_poly("x", A, F2)) == parse_poly("gx - xg", A, F2));
        CHECK(parse_poly("[g,x] = g", A, F2) == parse_poly("gx + xg + g", A, F2));
        NcPoly h = parse_poly("$l*x^$n", A, F4, {{"l", ParamValue::element(F4.t())}, {"n", ParamValue::integer(3)}});
        CHECK(h == NcPoly::monomial(A.parse_word("xxx"), F4.t()));
    }

    TEST_CASE("ring laws on random polynomials") {
        std::mt19937_64 rng(11);
        for (auto [p, k] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
            Field F = Field::make(p, k);
            for (int trial = 0; trial < 50; ++trial) {
                NcPoly a = random_poly(rng, F, 3), b = random_poly(rng, F, 3), c = random_poly(rng, F, 3);
                CHECK(mul(F, mul(F, a, b), c) == mul(F, a, mul(F, b, c)));
                CHECK(mul(F, a, add(F, b, c)) == add(F, mul(F, a, b), mul(F, a, c)));
                CHECK(add(F, a, b) == add(F, b, a));
                CHECK(sub(F, a, a).is_zero());
                CHECK(mul(F, a, NcPoly::constant(1)) == a);
                CHECK(pow(F, a, 3) == mul(F, a, mul(F, a, a)));
                for (auto& [w, e] : a.terms()) CHECK(e != 0);
            }
        }
    }
}
