#include <doctest.h>

#include <algorithm>
#include <random>

#include "talex/roots.hpp"

using namespace talex;
using CD = std::complex<double>;

TEST_CASE("roots of small exact polynomials") {
    // q^2 - 2q + 2 -> 1 +- i
    auto r = find_roots(IntPoly{2, -2, 1});
    REQUIRE(r.size() == 2);
    std::sort(r.begin(), r.end(),
              [](const Root& a, const Root& b) { return a.value.imag() < b.value.imag(); });
    CHECK(std::abs(r[0].value - CD(1, -1)) < 1e-12);
    CHECK(std::abs(r[1].value - CD(1, 1)) < 1e-12);
    CHECK(!r[0].is_real);

    // (q-1)(q-2)(q-3)
    auto c = find_roots(IntPoly{-6, 11, -6, 1});
    REQUIRE(c.size() == 3);
    std::sort(c.begin(), c.end(),
              [](const Root& a, const Root& b) { return a.value.real() < b.value.real(); });
    for (int i = 0; i < 3; ++i) {
        CHECK(c[i].is_real);
        CHECK(std::abs(c[i].value - CD(i + 1, 0)) < 1e-12);
        CHECK(c[i].multiplicity == 1);
    }
}

TEST_CASE("root multiplicities from the exact squarefree structure") {
    // (q-1)^2 (q+3)
    IntPoly p = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{3, 1};
    auto r = find_roots(p);
    int total = 0;
    bool saw_double = false;
    for (const auto& root : r) {
        total += root.multiplicity;
        if (std::abs(root.value - CD(1, 0)) < 1e-10) {
            CHECK(root.multiplicity == 2);
            saw_double = true;
        }
    }
    CHECK(total == 3);
    CHECK(saw_double);
}

TEST_CASE("random polynomials: residual property and conjugate pairing") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> coeff(-50, 50);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<BigInt> c(8);
        for (auto& x : c) x = coeff(rng);
        c.back() = c.back() == 0 ? 1 : c.back();
        IntPoly p(std::move(c));
        auto roots = find_roots(p, 1e-12);
        int total = 0;
        for (const auto& r : roots) {
            total += r.multiplicity;
            CHECK(p.relative_residual(r.value) < 1e-10);
            if (!r.is_real) {
                bool paired = false;
                for (const auto& s : roots)
                    if (std::abs(s.value - std::conj(r.value)) < 1e-9) paired = true;
                CHECK(paired);
            } else {
                CHECK(r.value.imag() == 0.0);
            }
        }
        CHECK(total == p.degree());
    }
}

TEST_CASE("find_roots rejects degenerate input") {
    CHECK_THROWS_AS(find_roots(IntPoly{}), std::invalid_argument);
    CHECK_THROWS_AS(find_roots(IntPoly{5}), std::invalid_argument);
}

TEST_CASE("complex-coefficient polynomial utilities") {
    CPoly a{CD(1, 0), CD(2, 0)};   // 1 + 2q
    CPoly b{CD(0, 1), CD(1, 0)};   // i + q
    CPoly s = cpoly_add(a, b);
    CHECK(std::abs(s[0] - CD(1, 1)) < 1e-15);
    CPoly m = cpoly_mul(a, b);
    REQUIRE(m.size() == 3);
    CHECK(std::abs(m[2] - CD(2, 0)) < 1e-15);
    CHECK(std::abs(cpoly_eval(m, CD(1, 1)) - cpoly_eval(a, CD(1, 1)) * cpoly_eval(b, CD(1, 1))) <
          1e-12);
    CPoly comp = cpoly_compose(a, b); // 1 + 2(i + q)
    CHECK(std::abs(comp[0] - CD(1, 2)) < 1e-15);
    CHECK(std::abs(comp[1] - CD(2, 0)) < 1e-15);
    CHECK(cpoly_from(IntPoly{-1, 0, 1}).size() == 3);
}

TEST_CASE("find_roots_complex on a factored polynomial") {
    // (z - (1+2i))(z - 3) = z^2 - (4+2i) z + (3+6i)
    CPoly p{CD(3, 6), CD(-4, -2), CD(1, 0)};
    auto roots = find_roots_complex(p, 1e-13);
    REQUIRE(roots.size() == 2);
    double d1 = std::min(std::abs(roots[0] - CD(1, 2)), std::abs(roots[1] - CD(1, 2)));
    double d2 = std::min(std::abs(roots[0] - CD(3, 0)), std::abs(roots[1] - CD(3, 0)));
    CHECK(d1 < 1e-10);
    CHECK(d2 < 1e-10);
}
