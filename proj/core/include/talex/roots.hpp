// Complex root finding for exact integer polynomials and for small
// complex-coefficient polynomials (character-variety slices at fixed x, y).
//
// Strategy: simultaneous Aberth iteration on the squarefree part with
// Newton-polygon initial guesses, followed by a long-double Newton polish.
// Multiplicities come from the exact squarefree decomposition.

#pragma once

#include <complex>
#include <vector>

#include "talex/intpoly.hpp"

namespace talex {

struct Root {
    std::complex<double> value;
    int multiplicity = 1;
    bool is_real = false;
};

// All complex roots of p (counted via multiplicity fields). Every returned
// root r satisfies |p(r)| < precision * (coefficient magnitude scale at r).
// Roots with |imag| < 1e-8*(1+|r|) are flagged real and their imaginary part
// is zeroed; nonreal roots come in exactly conjugate pairs.
// Throws std::invalid_argument on zero/constant input and std::runtime_error
// if the iteration cap (500) is hit before convergence.
std::vector<Root> find_roots(const IntPoly& p, double precision = 1e-12);

// Dense complex-coefficient polynomial utilities (coeff index = exponent).
using CPoly = std::vector<std::complex<double>>;

CPoly cpoly_add(const CPoly& a, const CPoly& b);
CPoly cpoly_mul(const CPoly& a, const CPoly& b);
CPoly cpoly_scale(const CPoly& a, std::complex<double> s);
// outer(inner) by Horner.
CPoly cpoly_compose(const CPoly& outer, const CPoly& inner);
std::complex<double> cpoly_eval(const CPoly& p, std::complex<double> x);
CPoly cpoly_from(const IntPoly& p);

// Roots of a complex-coefficient polynomial (no multiplicity analysis; the
// caller is expected to pass squarefree-in-practice inputs such as generic
// character-variety slices). Same iteration cap/convergence policy as above.
std::vector<std::complex<double>> find_roots_complex(const CPoly& coeffs,
                                                     double precision = 1e-12);

} // namespace talex
