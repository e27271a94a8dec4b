#include <doctest.h>

#include "talex/word.hpp"

using namespace talex;

TEST_CASE("free reduction") {
    Word a = Word::generator(0), b = Word::generator(1);
    Word A = Word::generator(0, -1);
    CHECK((a * A).is_identity());
    CHECK(Word::from_letters({1, -1}).is_identity());
    CHECK(Word::from_letters({1, 2, -2, -1}).is_identity());
    CHECK(Word::from_letters({1, 2, -2, 1}) == a * a);
    CHECK((a * b).length() == 2);
}

TEST_CASE("inverse, powers, exponent sums") {
    Word a = Word::generator(0), b = Word::generator(1);
    Word w = a * b * a.inverse();
    CHECK(w.inverse() == a * b.inverse() * a.inverse());
    CHECK((w * w.inverse()).is_identity());
    CHECK(w.pow(0).is_identity());
    CHECK(w.pow(3) == a * b * b * b * a.inverse()); // telescoping
    CHECK(w.pow(-2) == w.inverse() * w.inverse());
    CHECK(w.exponent_sum(0) == 0);
    CHECK(w.exponent_sum(1) == 1);
    Word v = a * a * b.inverse();
    CHECK(v.exponent_sum(0) == 2);
    CHECK(v.exponent_sum(1) == -1);
}

TEST_CASE("word ordering and rendering") {
    std::vector<std::string> names{"a", "b"};
    Word a = Word::generator(0), b = Word::generator(1);
    CHECK(Word().to_string(names) == "1");
    CHECK((a * a * b.inverse()).to_string(names) == "a^2 b^-1");
    CHECK((a * b).to_string(names) == "a b");
    CHECK(Word() < a);
}
