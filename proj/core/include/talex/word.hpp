// Freely reduced words in a finitely generated free group. A letter is
// +-(generator_index + 1): positive for the generator, negative for its
// inverse. Reduction is eager, so equal group elements compare equal.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace talex {

using Letter = std::int32_t;

class Word {
  public:
    Word() = default;
    // A single generator letter; sign -1 gives the inverse.
    static Word generator(int index, int sign = +1);
    // Builds from raw letters, applying free reduction.
    static Word from_letters(const std::vector<Letter>& letters);

    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    Word inverse() const;
    Word pow(long k) const;
    long exponent_sum(int gen_index) const;

    friend Word operator*(const Word& u, const Word& v);
    Word& operator*=(const Word& v) { return *this = *this * v; }

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator!=(const Word& o) const { return !(*this == o); }
    bool operator<(const Word& o) const { return letters_ < o.letters_; }

    // Render with the given generator names; inverses as name^-1 runs are
    // collapsed into powers. Identity prints as "1".
    std::string to_string(const std::vector<std::string>& names) const;

  private:
    std::vector<Letter> letters_;
    void push_reduced(Letter l);
};

} // namespace talex
