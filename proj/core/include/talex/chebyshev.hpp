// Chebyshev polynomials S_k (second kind, shifted index) and T_k (first
// kind), their root factorizations, and stable evaluation. Conventions:
//   S_{k+1} = q*S_k - S_{k-1},  S_0 = 1, S_1 = q,  S_{-1} = 0, S_{-k-1} = -S_{k-1}
//   T_{k+1} = q*T_k - T_{k-1},  T_0 = 2, T_1 = q,  T_{-k} = T_k
#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "talex/intpoly.hpp"
#include "talex/mat2.hpp"

namespace talex {

// Exact polynomials, cached and shared across threads.
IntPoly cheb_S(long k);
IntPoly cheb_T(long k);

// Numerically stable point evaluation: recurrence on |q| <= 2 + 1e-3, closed
// v-form (q = v + 1/v) outside. Negative k via the reflection identities.
std::complex<double> cheb_eval_S(long k, std::complex<double> q);
std::complex<double> cheb_eval_T(long k, std::complex<double> q);

// Roots of S_k: 2cos(j*pi/(k+1)), j = 1..k. Requires k >= 1.
std::vector<double> roots_S(int k);

// Roots of T_k - 2 with multiplicity: q=2 simple; q=-2 simple iff k even;
// q = 2cos(2j*pi/k) double for 1 <= j < k/2. Requires k >= 1.
std::vector<std::pair<double, int>> roots_T_minus_2(int k);

// Roots of T_k - q per parity:
//   k odd : 2, -2, 2cos(2j*pi/(k-1)) for j=1..(k-3)/2, 2cos(2j*pi/(k+1)) for j=1..(k-1)/2
//   k even: 2,     2cos(2j*pi/(k-1)) for j=1..(k-2)/2, 2cos(2j*pi/(k+1)) for j=1..k/2
// Requires k >= 1. Note k=1 is degenerate (T_1 - q is identically zero); the
// formula value {2, -2} is returned verbatim.
std::vector<double> roots_T_minus_q(int k);

// (T_k(q) - 2)/(q - 2) with the removable singularity at q = 2 filled by the
// limit value k^2 when |q - 2| < 1e-7. Equals det(I + Q + ... + Q^{k-1}) for
// any Q in SL2 with tr Q = q.
std::complex<double> ratio_T_minus_2(long k, std::complex<double> q);

// Q^k for Q in SL2 via the closed form Q^k = S_{k-1}(tr Q)*Q - S_{k-2}(tr Q)*I.
// Throws std::invalid_argument when |det Q - 1| >= 1e-6.
Mat2 sl2_power(const Mat2& Q, long k);

// Returns S_{l-k-1} after asserting the exact identity
// S_k*S_{l-1} - S_{k-1}*S_l = S_{l-k-1}; a violation is a kernel bug and
// throws std::logic_error.
IntPoly cheb_cross_identity(long k, long l);

} // namespace talex
