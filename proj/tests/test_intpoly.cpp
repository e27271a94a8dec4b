#include <doctest.h>

#include <random>

#include "talex/intpoly.hpp"

using namespace talex;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::vector<BigInt> c(deg(rng) + 1);
    for (auto& x : c) x = coeff(rng);
    return IntPoly(std::move(c));
}

} // namespace

TEST_CASE("intpoly basic construction and trimming") {
    IntPoly p{1, 2, 0};
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(5) == 0);
    CHECK(IntPoly{}.is_zero());
    CHECK(IntPoly{}.degree() == -1);
    CHECK(IntPoly::variable() == IntPoly{0, 1});
    CHECK(IntPoly::monomial(3, 2) == IntPoly{0, 0, 3});
    CHECK(IntPoly::constant(7) == IntPoly{7});
}

TEST_CASE("intpoly ring axioms on random triples") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 50; ++i) {
        IntPoly a = random_poly(rng, 8), b = random_poly(rng, 8), c = random_poly(rng, 8);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == IntPoly{});
        CHECK(a * IntPoly{1} == a);
        CHECK(a * IntPoly{} == IntPoly{});
    }
}

TEST_CASE("intpoly evaluation") {
    IntPoly p{-4, 0, 1}; // q^2 - 4
    CHECK(p.eval(3) == 5);
    CHECK(p.eval(-3) == 5);
    auto [v, e] = p.eval_scaled({2.0, 0.0});
    CHECK(std::abs(v * std::pow(2.0, double(e))) < 1e-12);
    CHECK(p.relative_residual({2.0, 0.0}) < 1e-15);
    CHECK(p.relative_residual({1.0, 0.0}) > 0.1);
}

TEST_CASE("intpoly derivative, content, primitive part") {
    CHECK(IntPoly{0, 0, 0, 1}.derivative() == IntPoly{0, 0, 3}); // (q^3)' = 3q^2
    CHECK(IntPoly{2, 4, 6}.content() == 2);
    CHECK(IntPoly{2, 4, 6}.primitive_part() == IntPoly{1, 2, 3});
    CHECK(IntPoly{-2, 0, -4}.primitive_part() == IntPoly{1, 0, 2} * BigInt(-1));
    CHECK(IntPoly{}.content() == 0);
}

TEST_CASE("intpoly composition") {
    IntPoly outer{1, 0, 1}; // q^2 + 1
    IntPoly inner{-1, 1};   // q - 1
    CHECK(poly_compose(outer, inner) == IntPoly{2, -2, 1});
    CHECK(poly_compose(IntPoly{5}, inner) == IntPoly{5});
    CHECK(poly_compose(outer, IntPoly{}) == IntPoly{1});
}

TEST_CASE("intpoly exact division") {
    IntPoly q{-1, 1};     // q - 1
    IntPoly r{2, 1};      // q + 2
    CHECK(poly_divide_exact(q * r, q) == r);
    CHECK(poly_divide_exact(q * r, r) == q);
    CHECK_THROWS_AS(poly_divide_exact(IntPoly{1, 0, 1}, q), std::domain_error);
    CHECK_THROWS_AS(poly_divide_exact(q, IntPoly{}), std::domain_error);
}

TEST_CASE("intpoly gcd") {
    IntPoly g{-2, 1};                        // q - 2
    IntPoly a = g * IntPoly{1, 0, 0, 1};     // (q-2)(q^3+1)
    IntPoly b = g * IntPoly{3, 0, 1};        // (q-2)(q^2+3)
    CHECK(poly_gcd(a, b) == g);
    // gcd is primitive with positive leading coefficient, regardless of scale.
    CHECK(poly_gcd(a * BigInt(-6), b * BigInt(4)) == g);
    CHECK(poly_gcd(a, IntPoly{}) == a); // a is already primitive, lead > 0
    // Random sanity: the primitive part of d divides gcd(u*d, v*d).
    std::mt19937_64 rng(99);
    for (int i = 0; i < 20; ++i) {
        IntPoly d = random_poly(rng, 4);
        IntPoly u = random_poly(rng, 4), v = random_poly(rng, 4);
        if (d.is_zero() || u.is_zero() || v.is_zero()) continue;
        IntPoly got = poly_gcd(u * d, v * d);
        IntPoly dp = d.primitive_part();
        if (dp.leading() < 0) dp = -dp;
        CHECK_NOTHROW(poly_divide_exact(got, dp));
    }
}

TEST_CASE("intpoly squarefree decomposition") {
    IntPoly f1{-1, 1}; // q - 1
    IntPoly f2{2, 1};  // q + 2
    IntPoly p = f1 * f1 * f2;
    IntPoly sf = squarefree_part(p);
    CHECK(sf == f1 * f2);
    auto dec = squarefree_decomposition(p * BigInt(3));
    IntPoly rebuilt = IntPoly::constant(3);
    for (const auto& [f, mult] : dec) {
        for (int i = 0; i < mult; ++i) rebuilt = rebuilt * f;
        CHECK(squarefree_part(f) == (f.leading() > 0 ? f : -f));
    }
    CHECK(rebuilt == p * BigInt(3));
    CHECK_THROWS_AS(squarefree_part(IntPoly{}), std::invalid_argument);
}

TEST_CASE("intpoly printing") {
    CHECK(IntPoly{0, -2, 0, 1}.to_string("q") == "q^3 - 2*q");
    CHECK(IntPoly{}.to_string() == "0");
    auto strs = IntPoly{7, 0, -1}.coeff_strings();
    REQUIRE(strs.size() == 3);
    CHECK(strs[0] == "7");
    CHECK(strs[1] == "0");
    CHECK(strs[2] == "-1");
}
