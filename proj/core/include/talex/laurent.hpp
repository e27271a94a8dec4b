// Complex-coefficient Laurent polynomials in t, their normalization,
// exact-division and evaluation/interpolation determinants — the numeric
// substrate of the twisted Alexander computation.

#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace talex {

class LaurentPoly {
public:
    LaurentPoly() = default;
    // coeffs[i] is the coefficient of t^(lo+i).
    LaurentPoly(int lo, std::vector<std::complex<double>> coeffs);
    static LaurentPoly monomial(std::complex<double> c, int exponent);
    static LaurentPoly one() { return monomial(1.0, 0); }

    bool is_zero() const { return c_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    // hi - lo for nonzero polynomials; -1 for zero.
    int span() const { return is_zero() ? -1 : hi() - lo(); }
    const std::vector<std::complex<double>>& coeffs() const { return c_; }
    std::complex<double> coeff(int exponent) const;
    std::complex<double> leading() const { return is_zero() ? 0.0 : c_.back(); }
    std::complex<double> trailing() const { return is_zero() ? 0.0 : c_.front(); }
    double max_abs() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, std::complex<double> s);

    std::complex<double> eval(std::complex<double> t) const;
    // Shift exponents: multiply by t^k.
    LaurentPoly shifted(int k) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim(); // strip exact-zero ends
    int lo_ = 0;
    std::vector<std::complex<double>> c_;
};

// Zero out coefficients below relative_threshold * max|coeff|, trim ends,
// adjust lo. The all-below-threshold input collapses to the zero polynomial.
LaurentPoly laurent_normalize(const LaurentPoly& p, double relative_threshold);

// Quotient num/den computed by long division from the top coefficient
// downward. Throws std::domain_error on zero divisor; throws
// std::runtime_error if the residual ||num - den*Q|| / ||num|| (max-coefficient
// norm) exceeds tol, which signals that the quotient is not a Laurent
// polynomial at the requested tolerance.
LaurentPoly laurent_divide_exact(const LaurentPoly& num, const LaurentPoly& den, double tol = 1e-8);

// Determinant of a square matrix of Laurent polynomials, computed by
// evaluating numeric determinants at unit-circle sample points and
// interpolating. degree_bound must be >= the exponent span of any possible
// expansion; the sample count is max(degree_bound+1, exact window derived
// from the entries). Throws std::runtime_error if the interpolation residual
// at a fresh sample point is above tolerance (underestimated degree bound or
// ill-conditioning).
LaurentPoly det_block(const std::vector<std::vector<LaurentPoly>>& M, int degree_bound);

} // namespace talex
