#include <doctest.h>

#include <stdexcept>

#include "talex/families.hpp"

using namespace talex;

namespace {
const Word a = Word::generator(0);
const Word b = Word::generator(1);
} // namespace

TEST_CASE("family words match their inline definitions") {
    for (int m = 1; m <= 3; ++m) {
        Word u_J = (b * a.inverse()).pow(m) * b * a * (b.inverse() * a).pow(m);
        CHECK(word_u_J(m) == u_J);
        Word v_C = (a.inverse() * b).pow(m) * (a * b.inverse()).pow(m);
        CHECK(word_v_C(m) == v_C);
        for (int n = 1; n <= 3; ++n) {
            CHECK(word_w_J(m, n) == (b.inverse() * a).pow(m) * u_J.pow(n));
            Word u_C = a.inverse() * v_C.pow(-n) * b * v_C.pow(n);
            CHECK(word_u_C(m, n) == u_C);
            for (int p = 1; p <= 3; ++p)
                CHECK(word_w_C(m, n, p) ==
                      (b.inverse() * a).pow(m) * u_C.pow(p));
        }
    }
}

TEST_CASE("smallest J relator") {
    Presentation p = presentation_J(1, 1, Orientation{});
    REQUIRE(p.relators.size() == 1);
    CHECK(p.relators[0].length() == 16);
    Word w = word_w_J(1, 1);
    CHECK(p.relators[0] == a * w * a.inverse() * w.inverse());
    CHECK(w == word_parse("B a b A b a B a", p.generators));
}

TEST_CASE("relators abelianize to zero") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            Word rj = presentation_J(m, n, Orientation{}).relators[0];
            CHECK(rj.exponent_sum(0) == 0);
            CHECK(rj.exponent_sum(1) == 0);
            for (int p = 1; p <= 3; ++p) {
                Word rc = presentation_C(m, n, p, Orientation{}).relators[0];
                CHECK(rc.exponent_sum(0) == 0);
                CHECK(rc.exponent_sum(1) == 0);
            }
        }
}

TEST_CASE("orientation degrees") {
    CHECK(presentation_J(2, 3, Orientation{false}).degrees == std::vector<int>{1, 1});
    CHECK(presentation_J(2, 3, Orientation{true}).degrees == std::vector<int>{1, -1});
    CHECK(presentation_C(2, 1, 3, Orientation{false}).degrees == std::vector<int>{1, 1});
    CHECK(presentation_C(2, 1, 3, Orientation{true}).degrees == std::vector<int>{-1, 1});
}

TEST_CASE("ground truth table") {
    auto J = [](int m, int n) { return FamilySpec{FamilySpec::Kind::J, m, n, 1}; };
    auto C = [](int m, int n, int p) { return FamilySpec{FamilySpec::Kind::C, m, n, p}; };
    Orientation same{false}, flip{true};

    GroundTruth g = ground_truth(J(1, 1), same);
    CHECK(g.genus == 1);
    CHECK(g.fibered == Fibered::Yes);
    CHECK(g.thurston_norm == 2);
    CHECK(g.degree_prediction == 4);

    CHECK(ground_truth(J(2, 1), same).fibered == Fibered::No);
    CHECK(ground_truth(J(2, 1), same).genus == 1);
    CHECK(ground_truth(J(2, 1), flip).fibered == Fibered::Yes);
    CHECK(ground_truth(J(2, 1), flip).genus == 2);
    CHECK(ground_truth(J(3, 2), same).genus == 2);
    CHECK(ground_truth(J(3, 2), flip).genus == 3);
    CHECK(ground_truth(J(3, 2), flip).fibered == Fibered::No);

    CHECK(ground_truth(C(1, 1, 1), same).genus == 1);
    CHECK(ground_truth(C(1, 1, 1), same).fibered == Fibered::Unknown);
    CHECK(ground_truth(C(1, 1, 1), flip).genus == 1);
    CHECK(ground_truth(C(2, 1, 3), flip).genus == 4);
    CHECK(ground_truth(C(2, 1, 3), flip).degree_prediction == 16);
    CHECK(ground_truth(C(3, 2, 1), same).genus == 1);
}

TEST_CASE("family helpers agree") {
    FamilySpec fj{FamilySpec::Kind::J, 2, 3, 1};
    CHECK(family_word_w(fj) == word_w_J(2, 3));
    CHECK(family_presentation(fj, Orientation{true}).relators ==
          presentation_J(2, 3, Orientation{true}).relators);
    FamilySpec fc{FamilySpec::Kind::C, 2, 1, 2};
    CHECK(family_word_w(fc) == word_w_C(2, 1, 2));
    CHECK(family_presentation(fc, Orientation{}).degrees ==
          presentation_C(2, 1, 2, Orientation{}).degrees);
}

TEST_CASE("parameters below 1 are rejected") {
    CHECK_THROWS_AS(presentation_J(0, 1, Orientation{}), std::invalid_argument);
    CHECK_THROWS_AS(presentation_J(1, -2, Orientation{}), std::invalid_argument);
    CHECK_THROWS_AS(presentation_C(1, 0, 1, Orientation{}), std::invalid_argument);
    CHECK_THROWS_AS(ground_truth(FamilySpec{FamilySpec::Kind::C, 1, 1, 0}, Orientation{}),
                    std::invalid_argument);
    CHECK(hyperbolic_J(1, 1));
    CHECK(!hyperbolic_J(-1, 2));
}
