#include "talex/groupring.hpp"

#include <sstream>
#include <stdexcept>

namespace talex {

void GroupRingElement::add_term(const Word& w, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

GroupRingElement GroupRingElement::term(const Word& w, BigInt c) {
    GroupRingElement e;
    e.add_term(w, c);
    return e;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement e;
    for (const auto& [w, c] : terms_) e.terms_.emplace(w, -c);
    return e;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
    return r;
}

GroupRingElement operator*(const BigInt& s, const GroupRingElement& a) {
    GroupRingElement r;
    if (s == 0) return r;
    for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, s * c);
    return r;
}

std::string GroupRingElement::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        if (c != 1 || w.is_identity()) out << c.get_str() << (w.is_identity() ? "" : "*");
        if (!w.is_identity()) out << w.to_string(names);
    }
    return out.str();
}

GroupRingElement fox_derivative(const Word& w, int gen_index) {
    // For w = l_1 ... l_r: dw/dx = sum_i (l_1...l_{i-1}) * dl_i/dx.
    GroupRingElement d;
    Word prefix;
    const Letter g = static_cast<Letter>(gen_index + 1);
    for (Letter l : w.letters()) {
        if (l == g) {
            d += GroupRingElement::term(prefix);
        } else if (l == -g) {
            Word inv = Word::generator(gen_index, -1);
            d -= GroupRingElement::term(prefix * inv);
        }
        // prefix * l is already reduced: w is reduced, so l never cancels.
        prefix *= Word::generator(std::abs(l) - 1, l > 0 ? +1 : -1);
    }
    return d;
}

GroupRingElement geometric_sum(const Word& h, long k) {
    if (k < 0) throw std::invalid_argument("geometric_sum: k must be >= 0");
    GroupRingElement r;
    Word acc;
    for (long i = 0; i <= k; ++i) {
        r += GroupRingElement::term(acc);
        acc *= h;
    }
    return r;
}

} // namespace talex
