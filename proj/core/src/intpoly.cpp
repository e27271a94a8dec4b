#include "talex/intpoly.hpp"

#include <cmath>
#include <stdexcept>

namespace talex {

namespace {
const BigInt kZero = 0;
} // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::constant(const BigInt& c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(c);
    return p;
}

IntPoly IntPoly::variable() { return IntPoly{0, 1}; }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t exponent) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(exponent + 1, kZero);
        p.c_.back() = c;
    }
    return p;
}

const BigInt& IntPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const BigInt& IntPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), kZero);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), kZero);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, 0);
    BigInt tmp;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            tmp = a.c_[i] * b.c_[j];
            r[i + j] += tmp;
        }
    }
    return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
    *this = *this * o;
    return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly{};
    std::vector<BigInt> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(r));
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly{};
    BigInt g = content();
    IntPoly r(*this);
    for (auto& v : r.c_) v /= g;
    return r;
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

std::pair<std::complex<double>, long> IntPoly::eval_scaled(std::complex<double> x) const {
    if (is_zero()) return {0.0, 0};
    // Rescale by 2^-E with E the largest coefficient exponent so the scaled
    // coefficients fit doubles; p(x) = 2^E * sum (c_i 2^-E) x^i.
    long emax = 0;
    bool first = true;
    for (const auto& v : c_) {
        if (v == 0) continue;
        long e;
        (void)mpz_get_d_2exp(&e, v.get_mpz_t());
        if (first || e > emax) emax = e;
        first = false;
    }
    std::complex<double> acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        if (c_[i] != 0) {
            long e;
            double m = mpz_get_d_2exp(&e, c_[i].get_mpz_t());
            acc += std::ldexp(m, static_cast<int>(e - emax));
        }
    }
    return {acc, emax};
}

double IntPoly::relative_residual(std::complex<double> x) const {
    if (is_zero()) return 0.0;
    long emax = 0;
    bool first = true;
    for (const auto& v : c_) {
        if (v == 0) continue;
        long e;
        (void)mpz_get_d_2exp(&e, v.get_mpz_t());
        if (first || e > emax) emax = e;
        first = false;
    }
    std::complex<double> acc = 0.0;
    double mag = 0.0;
    double ax = std::abs(x);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        mag *= ax;
        if (c_[i] != 0) {
            long e;
            double m = mpz_get_d_2exp(&e, c_[i].get_mpz_t());
            double scaled = std::ldexp(m, static_cast<int>(e - emax));
            acc += scaled;
            mag += std::abs(scaled);
        }
    }
    if (mag == 0.0) return 0.0;
    return std::abs(acc) / mag;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        BigInt a = c_[i];
        if (out.empty()) {
            if (a < 0) out += "-";
        } else {
            out += (a < 0) ? " - " : " + ";
        }
        BigInt mag = abs(a);
        const bool unit = (mag == 1);
        if (i == 0) {
            out += mag.get_str();
        } else {
            if (!unit) out += mag.get_str() + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::vector<std::string> IntPoly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(v.get_str());
    return out;
}

IntPoly poly_compose(const IntPoly& outer, const IntPoly& inner) {
    // Horner composition.
    IntPoly acc;
    const auto& oc = outer.coeffs();
    for (std::size_t i = oc.size(); i-- > 0;) {
        acc *= inner;
        acc += IntPoly::constant(oc[i]);
    }
    return acc;
}

IntPoly poly_divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divide_exact: division by zero polynomial");
    if (a.is_zero()) return IntPoly{};
    if (a.degree() < b.degree())
        throw std::domain_error("poly_divide_exact: divisor degree exceeds dividend degree");
    std::vector<BigInt> rem(a.coeffs());
    const auto& bc = b.coeffs();
    const BigInt& lb = bc.back();
    std::vector<BigInt> q(a.coeffs().size() - bc.size() + 1, 0);
    BigInt t;
    for (std::size_t k = q.size(); k-- > 0;) {
        const BigInt& lead = rem[k + bc.size() - 1];
        if (lead == 0) continue;
        if (!mpz_divisible_p(lead.get_mpz_t(), lb.get_mpz_t()))
            throw std::domain_error("poly_divide_exact: inexact division");
        q[k] = lead / lb;
        for (std::size_t j = 0; j < bc.size(); ++j) {
            t = q[k] * bc[j];
            rem[k + j] -= t;
        }
    }
    for (const auto& v : rem)
        if (v != 0) throw std::domain_error("poly_divide_exact: nonzero remainder");
    return IntPoly(std::move(q));
}

namespace {

// Pseudo-remainder sequence step: prem(a, b) with deg a >= deg b.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    const int db = b.degree();
    const BigInt& lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        BigInt lr = r.leading();
        // r <- lb*r - lr*q^k*b kills the leading term.
        r *= lb;
        r -= IntPoly::monomial(lr, static_cast<std::size_t>(k)) * b;
    }
    return r;
}

// Subresultant polynomial remainder sequence gcd of primitive inputs.
IntPoly prs_gcd(IntPoly a, IntPoly b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    BigInt g = 1, h = 1;
    while (!b.is_zero()) {
        int delta = a.degree() - b.degree();
        IntPoly r = pseudo_rem(a, b);
        a = b;
        if (r.is_zero()) {
            b = IntPoly{};
            break;
        }
        // Subresultant scaling keeps coefficient growth polynomial.
        BigInt denom = g;
        for (int i = 0; i < delta; ++i) denom *= h;
        std::vector<BigInt> rc(r.coeffs());
        for (auto& v : rc) v /= denom;
        b = IntPoly(std::move(rc));
        g = a.leading();
        if (delta >= 1) {
            BigInt hp = 1;
            for (int i = 0; i < delta; ++i) hp *= g;
            BigInt hd = 1;
            for (int i = 0; i < delta - 1; ++i) hd *= h;
            h = hp / hd;
        }
    }
    IntPoly out = a.primitive_part();
    if (out.leading() < 0) out = -out;
    return out;
}

// Degree of gcd(a, b) modulo a word-sized prime not dividing either leading
// coefficient, or -1 if no suitable prime was found. Since specialization can
// only enlarge the gcd, a result of 0 proves gcd over Z is constant.
int modular_gcd_degree(const IntPoly& a, const IntPoly& b) {
    static const unsigned long primes[] = {4611686018427388039UL, 4611686018427387847UL,
                                           2305843009213693951UL};
    for (unsigned long p : primes) {
        BigInt pm = BigInt(p);
        if (mpz_divisible_ui_p(a.leading().get_mpz_t(), p)) continue;
        if (mpz_divisible_ui_p(b.leading().get_mpz_t(), p)) continue;
        auto reduce = [&](const IntPoly& q) {
            std::vector<unsigned long> out(q.coeffs().size());
            BigInt t;
            for (std::size_t i = 0; i < out.size(); ++i) {
                mpz_mod(t.get_mpz_t(), q.coeffs()[i].get_mpz_t(), pm.get_mpz_t());
                out[i] = t.get_ui();
            }
            while (!out.empty() && out.back() == 0) out.pop_back();
            return out;
        };
        auto mulmod = [&](unsigned long x, unsigned long y) {
            BigInt t = BigInt(x) * BigInt(y);
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), pm.get_mpz_t());
            return t.get_ui();
        };
        auto invmod = [&](unsigned long x) {
            BigInt t;
            mpz_invert(t.get_mpz_t(), BigInt(x).get_mpz_t(), pm.get_mpz_t());
            return t.get_ui();
        };
        std::vector<unsigned long> fa = reduce(a), fb = reduce(b);
        if (fa.size() < fb.size()) std::swap(fa, fb);
        while (!fb.empty()) {
            // fa mod fb over GF(p).
            unsigned long inv = invmod(fb.back());
            while (fa.size() >= fb.size()) {
                unsigned long c = mulmod(fa.back(), inv);
                std::size_t off = fa.size() - fb.size();
                for (std::size_t i = 0; i < fb.size(); ++i) {
                    BigInt t = BigInt(fa[off + i]) + pm - BigInt(mulmod(c, fb[i]));
                    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), pm.get_mpz_t());
                    fa[off + i] = t.get_ui();
                }
                while (!fa.empty() && fa.back() == 0) fa.pop_back();
                if (fa.empty()) break;
            }
            std::swap(fa, fb);
        }
        return static_cast<int>(fa.size()) - 1;
    }
    return -1;
}

} // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly{};
    auto positive_primitive = [](const IntPoly& p) {
        IntPoly out = p.primitive_part();
        if (out.leading() < 0) out = -out;
        return out;
    };
    if (a.is_zero()) return positive_primitive(b);
    if (b.is_zero()) return positive_primitive(a);
    if (a.degree() == 0 || b.degree() == 0) return IntPoly::constant(1);
    // Fast path: a constant gcd modulo one prime proves a constant gcd over Z.
    if (modular_gcd_degree(a, b) == 0) return IntPoly::constant(1);
    return prs_gcd(a.primitive_part(), b.primitive_part());
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (p.degree() == 0) return IntPoly::constant(1);
    IntPoly pp = p.primitive_part();
    if (pp.leading() < 0) pp = -pp;
    IntPoly g = poly_gcd(pp, pp.derivative());
    if (g.degree() == 0) return pp;
    return poly_divide_exact(pp, g);
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly f = p.primitive_part();
    if (f.leading() < 0) f = -f;
    if (f.degree() == 0) return out;
    // Yun's algorithm over the primitive part.
    IntPoly g = poly_gcd(f, f.derivative());
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    IntPoly w = poly_divide_exact(f, g);
    IntPoly s = poly_divide_exact(f.derivative(), g);
    int i = 1;
    while (w.degree() > 0) {
        IntPoly y = s - w.derivative();
        IntPoly fac = poly_gcd(w, y);
        if (fac.degree() > 0) out.emplace_back(fac, i);
        w = poly_divide_exact(w, fac);
        s = poly_divide_exact(y, fac);
        ++i;
    }
    return out;
}

} // namespace talex
