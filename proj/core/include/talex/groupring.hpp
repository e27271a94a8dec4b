// Integer group ring Z[F] of a free group: finite sums of words with
// arbitrary-precision coefficients, plus Fox free derivatives.
#pragma once

#include <map>
#include <string>

#include "talex/intpoly.hpp" // BigInt
#include "talex/word.hpp"

namespace talex {

class GroupRingElement {
  public:
    GroupRingElement() = default;
    static GroupRingElement one() { return term(Word{}, 1); }
    static GroupRingElement term(const Word& w, BigInt c = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, BigInt>& terms() const { return terms_; }

    GroupRingElement operator-() const;
    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
        return a += b;
    }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
        return a -= b;
    }
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator*(const BigInt& s, const GroupRingElement& a);

    bool operator==(const GroupRingElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

    std::string to_string(const std::vector<std::string>& names) const;

  private:
    std::map<Word, BigInt> terms_; // invariant: no zero coefficients
    void add_term(const Word& w, const BigInt& c);
};

// Fox free derivative d(w)/d(x_gen): d(x)/d(x) = 1, d(x^-1)/d(x) = -x^-1,
// d(uv)/dx = du/dx + u dv/dx.
GroupRingElement fox_derivative(const Word& w, int gen_index);

// delta_k(h) = 1 + h + ... + h^k. Requires k >= 0.
GroupRingElement geometric_sum(const Word& h, long k);

} // namespace talex
