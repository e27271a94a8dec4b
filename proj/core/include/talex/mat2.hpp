// 2x2 matrices over an arbitrary coefficient ring (complex numbers, integer
// polynomials, Laurent polynomials). Only the operations the representation
// and engine code actually needs.
#pragma once

#include <complex>
#include <stdexcept>

namespace talex {

template <class T> struct Mat2T {
    // Row-major entries.
    T a{}, b{}, c{}, d{};

    static Mat2T identity() { return {T(1), T(0), T(0), T(1)}; }

    friend Mat2T operator+(const Mat2T& x, const Mat2T& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Mat2T operator-(const Mat2T& x, const Mat2T& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    friend Mat2T operator*(const Mat2T& x, const Mat2T& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                x.c * y.b + x.d * y.d};
    }
    friend Mat2T operator*(const T& s, const Mat2T& x) {
        return {s * x.a, s * x.b, s * x.c, s * x.d};
    }
    Mat2T operator-() const { return {-a, -b, -c, -d}; }

    T det() const { return a * d - b * c; }
    T trace() const { return a + d; }
    Mat2T transpose() const { return {a, c, b, d}; }
};

using Mat2 = Mat2T<std::complex<double>>;

// Inverse of a numeric 2x2 matrix; throws on (numerically) singular input.
inline Mat2 inverse(const Mat2& m) {
    std::complex<double> det = m.det();
    if (std::abs(det) < 1e-14)
        throw std::domain_error("inverse: singular 2x2 matrix");
    std::complex<double> inv = 1.0 / det;
    return {m.d * inv, -m.b * inv, -m.c * inv, m.a * inv};
}

// Integer matrix power for numeric matrices, negative exponents via inverse.
inline Mat2 mat2_pow(Mat2 m, long k) {
    if (k < 0) {
        m = inverse(m);
        k = -k;
    }
    Mat2 acc = Mat2::identity();
    while (k > 0) {
        if (k & 1) acc = acc * m;
        m = m * m;
        k >>= 1;
    }
    return acc;
}

inline double mat2_max_abs(const Mat2& m) {
    double r = std::abs(m.a);
    r = std::max(r, std::abs(m.b));
    r = std::max(r, std::abs(m.c));
    r = std::max(r, std::abs(m.d));
    return r;
}

} // namespace talex
