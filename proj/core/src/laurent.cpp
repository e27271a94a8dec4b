#include "talex/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace talex {

namespace {
using CD = std::complex<double>;
} // namespace

LaurentPoly::LaurentPoly(int lo, std::vector<CD> coeffs) : lo_(lo), c_(std::move(coeffs)) {
    trim();
}

LaurentPoly LaurentPoly::monomial(CD c, int exponent) {
    LaurentPoly p;
    if (c != 0.0) {
        p.lo_ = exponent;
        p.c_ = {c};
    }
    return p;
}

void LaurentPoly::trim() {
    std::size_t front = 0;
    while (front < c_.size() && c_[front] == 0.0) ++front;
    if (front == c_.size()) {
        c_.clear();
        lo_ = 0;
        return;
    }
    std::size_t back = c_.size();
    while (back > front && c_[back - 1] == 0.0) --back;
    if (front > 0 || back < c_.size()) {
        c_ = std::vector<CD>(c_.begin() + static_cast<std::ptrdiff_t>(front),
                             c_.begin() + static_cast<std::ptrdiff_t>(back));
        lo_ += static_cast<int>(front);
    }
}

CD LaurentPoly::coeff(int exponent) const {
    int idx = exponent - lo_;
    if (idx < 0 || idx >= static_cast<int>(c_.size())) return 0.0;
    return c_[static_cast<std::size_t>(idx)];
}

double LaurentPoly::max_abs() const {
    double m = 0.0;
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    int nlo = std::min(lo_, o.lo_);
    int nhi = std::max(hi(), o.hi());
    std::vector<CD> r(static_cast<std::size_t>(nhi - nlo + 1), 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[static_cast<std::size_t>(lo_ - nlo) + i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        r[static_cast<std::size_t>(o.lo_ - nlo) + i] += o.c_[i];
    lo_ = nlo;
    c_ = std::move(r);
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<CD> r(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return LaurentPoly(a.lo_ + b.lo_, std::move(r));
}

LaurentPoly operator*(LaurentPoly a, CD s) {
    if (s == 0.0) return {};
    for (auto& v : a.c_) v *= s;
    return a;
}

CD LaurentPoly::eval(CD t) const {
    if (is_zero()) return 0.0;
    CD acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc * std::pow(t, lo_);
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r(*this);
    if (!r.is_zero()) r.lo_ += k;
    return r;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool firstterm = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0.0) continue;
        if (!firstterm) out << " + ";
        firstterm = false;
        int e = lo_ + static_cast<int>(i);
        out << "(" << c_[i].real();
        if (c_[i].imag() != 0.0) out << (c_[i].imag() < 0 ? "" : "+") << c_[i].imag() << "i";
        out << ")";
        if (e != 0) out << "*" << var << "^" << e;
    }
    return out.str();
}

LaurentPoly laurent_normalize(const LaurentPoly& p, double relative_threshold) {
    if (p.is_zero()) return {};
    double cut = relative_threshold * p.max_abs();
    std::vector<CD> c = p.coeffs();
    for (auto& v : c)
        if (std::abs(v) < cut) v = 0.0;
    return LaurentPoly(p.lo(), std::move(c));
}

LaurentPoly laurent_divide_exact(const LaurentPoly& num, const LaurentPoly& den, double tol) {
    if (den.is_zero()) throw std::domain_error("laurent_divide_exact: zero divisor");
    if (num.is_zero()) return {};
    const int qspan = num.span() - den.span();
    if (qspan < 0)
        throw std::runtime_error("laurent_divide_exact: residual above tolerance (quotient is not "
                                 "a Laurent polynomial)");
    // Long division from the top coefficient downward.
    LaurentPoly rem = num;
    std::vector<CD> q(static_cast<std::size_t>(qspan) + 1, 0.0);
    const int qlo = num.lo() - den.lo();
    const CD dlead = den.leading();
    for (int k = qspan; k >= 0; --k) {
        CD c = rem.coeff(den.hi() + qlo + k) / dlead;
        q[static_cast<std::size_t>(k)] = c;
        if (c != 0.0) rem -= den * LaurentPoly::monomial(c, qlo + k);
    }
    LaurentPoly quot(qlo, std::move(q));
    // Residual check: reconstruct and compare in the max-coefficient norm.
    LaurentPoly recon = den * quot - num;
    double scale = num.max_abs();
    if (scale == 0.0) scale = 1.0;
    if (recon.max_abs() > tol * scale)
        throw std::runtime_error("laurent_divide_exact: residual above tolerance (quotient is not "
                                 "a Laurent polynomial)");
    return quot;
}

namespace {

// Numeric determinant by Gaussian elimination with partial pivoting.
CD numeric_det(std::vector<std::vector<CD>> m) {
    const std::size_t n = m.size();
    CD det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(m[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            double a = std::abs(m[r][col]);
            if (a > best) {
                best = a;
                piv = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            CD f = m[r][col] / m[col][col];
            if (f == 0.0) continue;
            for (std::size_t c2 = col; c2 < n; ++c2) m[r][c2] -= f * m[col][c2];
        }
    }
    return det;
}

} // namespace

LaurentPoly det_block(const std::vector<std::vector<LaurentPoly>>& M, int degree_bound) {
    const std::size_t n = M.size();
    if (n == 0) return LaurentPoly::one();
    for (const auto& row : M)
        if (row.size() != n) throw std::invalid_argument("det_block: matrix must be square");
    if (degree_bound < 0) throw std::invalid_argument("det_block: negative degree bound");

    // Exact exponent window of the determinant: sum over rows of the entry
    // minima/maxima. A row of zeros means a zero determinant.
    long wlo = 0, whi = 0;
    for (const auto& row : M) {
        bool any = false;
        long rlo = 0, rhi = 0;
        for (const auto& e : row) {
            if (e.is_zero()) continue;
            if (!any) {
                rlo = e.lo();
                rhi = e.hi();
                any = true;
            } else {
                rlo = std::min<long>(rlo, e.lo());
                rhi = std::max<long>(rhi, e.hi());
            }
        }
        if (!any) return {};
        wlo += rlo;
        whi += rhi;
    }
    const long window = whi - wlo + 1;
    const long samples = std::max<long>(degree_bound + 1, window);

    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<CD> dets(static_cast<std::size_t>(samples));
    std::vector<std::vector<CD>> numeric(n, std::vector<CD>(n));
    double det_scale = 0.0;
    for (long s = 0; s < samples; ++s) {
        CD t = std::polar(1.0, two_pi * static_cast<double>(s) / static_cast<double>(samples));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) numeric[i][j] = M[i][j].eval(t);
        dets[static_cast<std::size_t>(s)] = numeric_det(numeric);
        det_scale = std::max(det_scale, std::abs(dets[static_cast<std::size_t>(s)]));
    }

    // Inverse DFT anchored at the exact window bottom: det(t) = sum_k c_k
    // t^(wlo+k), c_k = (1/S) sum_s D_s w^(-s(k+wlo)).
    std::vector<CD> coeffs(static_cast<std::size_t>(samples));
    for (long k = 0; k < samples; ++k) {
        CD acc = 0.0;
        for (long s = 0; s < samples; ++s) {
            double ang = -two_pi * static_cast<double>((k + wlo) % samples) *
                         static_cast<double>(s) / static_cast<double>(samples);
            acc += dets[static_cast<std::size_t>(s)] * std::polar(1.0, ang);
        }
        coeffs[static_cast<std::size_t>(k)] = acc / static_cast<double>(samples);
    }
    LaurentPoly result(static_cast<int>(wlo), std::move(coeffs));
    // Residual check at a fresh point guards against an underestimated bound.
    CD t_star = std::polar(1.0, 0.5 * two_pi / static_cast<double>(samples) + 0.1234567);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) numeric[i][j] = M[i][j].eval(t_star);
    CD direct = numeric_det(numeric);
    double err = std::abs(result.eval(t_star) - direct);
    if (err > 1e-8 * std::max(1.0, det_scale))
        throw std::runtime_error("det_block: interpolation residual above tolerance "
                                 "(underestimated degree bound)");
    return result;
}

} // namespace talex
