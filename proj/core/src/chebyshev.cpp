#include "talex/chebyshev.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace talex {

namespace {
using CD = std::complex<double>;

// Shared cache of exact S_k / T_k, grown on demand under a mutex.
struct ChebCache {
    std::mutex mtx;
    std::vector<IntPoly> s{IntPoly::constant(1), IntPoly::variable()};
    std::vector<IntPoly> t{IntPoly::constant(2), IntPoly::variable()};

    IntPoly get(std::vector<IntPoly>& seq, std::size_t k) {
        std::lock_guard<std::mutex> lock(mtx);
        const IntPoly q = IntPoly::variable();
        while (seq.size() <= k) {
            std::size_t n = seq.size();
            seq.push_back(q * seq[n - 1] - seq[n - 2]);
        }
        return seq[k];
    }
};

ChebCache& cache() {
    static ChebCache c;
    return c;
}

// Closed-form evaluation for |q| > 2 + eps: pick v with q = v + 1/v, |v| >= 1.
CD large_v(CD q) {
    CD s = std::sqrt(q * q - 4.0);
    CD v = (q + s) / 2.0;
    if (std::abs(v) < 1.0) v = (q - s) / 2.0;
    return v;
}

constexpr double kEvalSplit = 2.0 + 1e-3;

} // namespace

IntPoly cheb_S(long k) {
    if (k >= 0) return cache().get(cache().s, static_cast<std::size_t>(k));
    if (k == -1) return {};
    return -cheb_S(-k - 2); // S_{-k-1} = -S_{k-1}
}

IntPoly cheb_T(long k) {
    if (k < 0) k = -k; // T_{-k} = T_k
    return cache().get(cache().t, static_cast<std::size_t>(k));
}

std::complex<double> cheb_eval_S(long k, CD q) {
    if (k < 0) {
        if (k == -1) return 0.0;
        return -cheb_eval_S(-k - 2, q);
    }
    if (std::abs(q) <= kEvalSplit) {
        CD prev = 0.0, cur = 1.0; // S_{-1}, S_0
        for (long i = 0; i < k; ++i) {
            CD next = q * cur - prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    CD v = large_v(q);
    return (std::pow(v, k + 1) - std::pow(v, -(k + 1))) / (v - 1.0 / v);
}

std::complex<double> cheb_eval_T(long k, CD q) {
    if (k < 0) k = -k;
    if (std::abs(q) <= kEvalSplit) {
        CD prev = 2.0, cur = q; // T_0, T_1
        if (k == 0) return prev;
        for (long i = 1; i < k; ++i) {
            CD next = q * cur - prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    CD v = large_v(q);
    return std::pow(v, k) + std::pow(v, -k);
}

namespace {

// 2 cos(j pi / d). The rational values of 2 cos at rational multiples of pi
// are exactly 0, +-1, +-2 (Niven); return those exactly so that roots at
// representable points are bit-exact.
double two_cos(long j, long d) {
    long g = std::gcd(j, d);
    long num = j / g, den = d / g;
    if (num == 0) return 2.0;
    if (den == 1) return -2.0; // num/den == 1
    if (den == 2) return 0.0;
    if (den == 3) return num == 1 ? 1.0 : -1.0;
    return 2.0 * std::cos(static_cast<double>(num) * std::numbers::pi / static_cast<double>(den));
}

} // namespace

std::vector<double> roots_S(int k) {
    if (k < 1) throw std::invalid_argument("roots_S: k must be >= 1");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) out.push_back(two_cos(j, k + 1));
    return out;
}

std::vector<std::pair<double, int>> roots_T_minus_2(int k) {
    if (k < 1) throw std::invalid_argument("roots_T_minus_2: k must be >= 1");
    std::vector<std::pair<double, int>> out;
    out.emplace_back(2.0, 1);
    if (k % 2 == 0) out.emplace_back(-2.0, 1);
    for (int j = 1; 2 * j < k; ++j) out.emplace_back(two_cos(2 * j, k), 2);
    return out;
}

std::vector<double> roots_T_minus_q(int k) {
    if (k < 1) throw std::invalid_argument("roots_T_minus_q: k must be >= 1");
    std::vector<double> out;
    out.push_back(2.0);
    if (k % 2 == 1) {
        out.push_back(-2.0);
        for (int j = 1; j <= (k - 3) / 2; ++j) out.push_back(two_cos(2 * j, k - 1));
        for (int j = 1; j <= (k - 1) / 2; ++j) out.push_back(two_cos(2 * j, k + 1));
    } else {
        for (int j = 1; j <= (k - 2) / 2; ++j) out.push_back(two_cos(2 * j, k - 1));
        for (int j = 1; j <= k / 2; ++j) out.push_back(two_cos(2 * j, k + 1));
    }
    return out;
}

std::complex<double> ratio_T_minus_2(long k, CD q) {
    if (k == 0) return 0.0;
    if (std::abs(q - 2.0) < 1e-7) return static_cast<double>(k) * static_cast<double>(k);
    // Cancellation-free form: with u^2 = q + 2, (T_k(q)-2)/(q-2) = S_{k-1}(u)^2
    // (both sides are squares of (v^{k/2}-v^{-k/2})/(v^{1/2}-v^{-1/2})). The
    // sqrt branch is irrelevant since the square kills the parity sign.
    CD s = cheb_eval_S(k - 1, std::sqrt(q + 2.0));
    return s * s;
}

Mat2 sl2_power(const Mat2& Q, long k) {
    if (std::abs(Q.det() - 1.0) >= 1e-6)
        throw std::invalid_argument("sl2_power: matrix is not special-linear");
    if (k < 1) throw std::invalid_argument("sl2_power: k must be >= 1");
    CD q = Q.trace();
    CD sk1 = cheb_eval_S(k - 1, q);
    CD sk2 = cheb_eval_S(k - 2, q);
    return sk1 * Q - sk2 * Mat2::identity();
}

IntPoly cheb_cross_identity(long k, long l) {
    IntPoly lhs = cheb_S(k) * cheb_S(l - 1) - cheb_S(k - 1) * cheb_S(l);
    IntPoly rhs = cheb_S(l - k - 1);
    if (!(lhs == rhs))
        throw std::logic_error("cheb_cross_identity: S_k*S_{l-1} - S_{k-1}*S_l != S_{l-k-1}");
    return rhs;
}

} // namespace talex
