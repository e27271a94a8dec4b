// Exact univariate polynomials over arbitrary-precision integers.
//
// IntPoly is the workhorse for every quantity that must stay exact: the
// Chebyshev polynomials S_k, T_k, the character-variety slice R(2,2,z) and
// the Riley polynomial chain, whose coefficients grow far beyond machine
// range. Coefficients are stored densely, index = exponent, highest stored
// coefficient nonzero (the zero polynomial is the empty sequence).

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace talex {

using BigInt = mpz_class;

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const BigInt& c);
    static IntPoly variable();                       // the abstract variable (q or z)
    static IntPoly monomial(const BigInt& c, std::size_t exponent);

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    // Coefficient of q^i; zero beyond the stored range.
    const BigInt& coeff(std::size_t i) const;
    const BigInt& leading() const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly& operator*=(const BigInt& s);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
    friend IntPoly operator*(const BigInt& s, IntPoly a) { return a *= s; }
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly derivative() const;
    // gcd of all coefficients (non-negative; 0 for the zero polynomial).
    BigInt content() const;
    // this / content, keeping the sign of the leading coefficient.
    IntPoly primitive_part() const;

    // Exact evaluation as a big integer.
    BigInt eval(const BigInt& x) const;
    // Numerically safe evaluation: the polynomial is rescaled by a global
    // power of two before Horner so that huge coefficients cannot overflow.
    // Returns p(x) / 2^scale_exp via the pair (value, scale_exp).
    std::pair<std::complex<double>, long> eval_scaled(std::complex<double> x) const;
    // |p(x)| / (sum_i |c_i| |x|^i): scale-free residual used by root checks.
    double relative_residual(std::complex<double> x) const;

    // Human-readable form, e.g. "q^3 - 2*q".
    std::string to_string(const std::string& var = "q") const;
    // Coefficients as decimal strings, index = exponent (report serialization).
    std::vector<std::string> coeff_strings() const;

private:
    void trim();
    std::vector<BigInt> c_;
};

// op in the spec's poly_arith bundle: add/sub/mul are the operators above.

// Exact composition outer(inner).
IntPoly poly_compose(const IntPoly& outer, const IntPoly& inner);

// Primitive gcd with positive leading coefficient (subresultant PRS).
// poly_gcd(p, 0) = primitive part of p with positive leading coefficient.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Exact quotient a/b; throws std::domain_error if b is zero or does not
// divide a over the integers.
IntPoly poly_divide_exact(const IntPoly& a, const IntPoly& b);

// Product of the distinct irreducible factors of p (primitive). Throws
// std::invalid_argument on zero input.
IntPoly squarefree_part(const IntPoly& p);

// Yun decomposition: p = content * prod_i f_i^i with f_i squarefree, pairwise
// coprime, possibly trivial (degree 0 factors omitted). Returned as
// (f_i, i) pairs with i ascending.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

} // namespace talex
