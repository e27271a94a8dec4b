#include "talex/word.hpp"

#include <sstream>
#include <stdexcept>

namespace talex {

void Word::push_reduced(Letter l) {
    if (!letters_.empty() && letters_.back() == -l)
        letters_.pop_back();
    else
        letters_.push_back(l);
}

Word Word::generator(int index, int sign) {
    if (index < 0) throw std::invalid_argument("Word::generator: negative index");
    if (sign != 1 && sign != -1) throw std::invalid_argument("Word::generator: sign must be +-1");
    Word w;
    w.letters_.push_back(static_cast<Letter>(sign * (index + 1)));
    return w;
}

Word Word::from_letters(const std::vector<Letter>& letters) {
    Word w;
    for (Letter l : letters) {
        if (l == 0) throw std::invalid_argument("Word::from_letters: zero letter");
        w.push_reduced(l);
    }
    return w;
}

Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (std::size_t i = letters_.size(); i-- > 0;) w.letters_.push_back(-letters_[i]);
    return w;
}

Word Word::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Word acc, base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

long Word::exponent_sum(int gen_index) const {
    long s = 0;
    Letter g = static_cast<Letter>(gen_index + 1);
    for (Letter l : letters_) {
        if (l == g) ++s;
        if (l == -g) --s;
    }
    return s;
}

Word operator*(const Word& u, const Word& v) {
    Word w = u;
    for (Letter l : v.letters_) w.push_reduced(l);
    return w;
}

std::string Word::to_string(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    std::ostringstream out;
    std::size_t i = 0;
    bool first = true;
    while (i < letters_.size()) {
        std::size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
        long run = static_cast<long>(j - i);
        int gen = std::abs(letters_[i]) - 1;
        long exp = letters_[i] > 0 ? run : -run;
        if (!first) out << " ";
        first = false;
        if (gen < static_cast<int>(names.size()))
            out << names[static_cast<std::size_t>(gen)];
        else
            out << "x" << gen;
        if (exp != 1) out << "^" << exp;
        i = j;
    }
    return out.str();
}

} // namespace talex
