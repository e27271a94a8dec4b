// Character-variety and Riley-polynomial computations for the two families:
// exact parabolic-slice polynomials, parabolic representation construction,
// degeneration-locus membership, and the odd-parameter case analysis of the
// detection theorem for C(2m,2n,-2p).
#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "talex/families.hpp"
#include "talex/intpoly.hpp"
#include "talex/mat2.hpp"

namespace talex {

// Trace coordinates on the character variety: x = tr A, y = tr B,
// z = tr AB^-1.
struct Character {
    std::complex<double> x, y, z;
};

// v = tr rho(v-word) as a function of the character:
// v = (x S_m(z) - y S_{m-1}(z))(y S_m(z) - x S_{m-1}(z))
//     - z (S_m(z)^2 + S_{m-1}(z)^2) + 4 S_m(z) S_{m-1}(z).
std::complex<double> trace_v(int m, std::complex<double> x, std::complex<double> y,
                             std::complex<double> z);

// Defining polynomial of the character variety of J(2m+1,2n+1):
// R(x,y,z) = S_{m-1}(z) S_n(v) - S_m(z) S_{n-1}(v).
std::complex<double> char_variety_eval(int m, int n, const Character& ch);

// Exact parabolic-slice data (x = y = 2) over Z[z].
IntPoly trace_v_parabolic_J(int m); // v(z) at x = y = 2
IntPoly parabolic_slice_poly_J(int m, int n); // R(2,2,z)

// The exact symbolic chain for the Riley polynomial of C(2m,2n,-2p):
// V = rho((a^-1 b)^m (a b^-1)^m), V^n top row (alpha, beta),
// U = rho(a^-1 v^-n b v^n), and W'21 with W_21 = (2-z) W'21.
struct RileyChainC {
    IntPoly V11, V12, V21, V22;
    IntPoly vbar; // tr V = 2 + (z-2)^2 S_{m-1}(z)^2
    IntPoly alpha, beta;
    IntPoly U11, U12, U21, U22;
    IntPoly ubar; // tr U = 2 + (z-2) alpha^2
    IntPoly Wprime21;
};
RileyChainC riley_chain_C(int m, int n, int p);

// Numerically stable point evaluation of W'21 (Chebyshev chain, no giant
// integer coefficients involved).
std::complex<double> riley_eval_C(int m, int n, int p, std::complex<double> z);

struct RileyRoot {
    std::complex<double> z;
    int multiplicity = 1;
    bool is_real = false;
    double residual = 0.0; // relative backward error of the exact polynomial
};

struct RileyData {
    IntPoly poly;
    std::vector<RileyRoot> roots;           // irreducible representations
    std::vector<RileyRoot> reducible_roots; // |z - 2| below the reducible cutoff
};

// Roots of the exact parabolic-slice polynomials. Roots with |z - 2| < 1e-6
// are reported separately (B degenerates to the identity there).
RileyData parabolic_slice_J(int m, int n, double precision = 1e-12);
RileyData riley_poly_C(int m, int n, int p, double precision = 1e-12);

// The pinned parabolic pair A = [[1,1],[0,1]], B = [[1,0],[2-z,1]].
struct ParabolicRep {
    std::complex<double> z;
    Mat2 A, B;
};
ParabolicRep parabolic_rep(std::complex<double> z);

// General representation with prescribed character (x, y, z):
// A = [[s,1],[0,1/s]], B = [[u,0],[r,1/u]] with s+1/s = x, u+1/u = y,
// r = s/u + u/s - z. Throws std::domain_error when |r| < 1e-8 (reducible).
std::pair<Mat2, Mat2> rep_from_character(const Character& ch);

// Degeneration loci on the J character variety. Tags without indices use
// j = k = 0; the single-index loci store their index in j.
struct LocusLabel {
    enum class Tag { Y, Yjk, Zl, Zjk, Yprime, Ypjk, Zprimel, Zpjk };
    Tag tag = Tag::Y;
    int j = 0, k = 0;
    std::string to_string() const;
};

// All loci of the given orientation whose defining equations hold within tol,
// with the index ranges of the degree/monicity statements. Only the J family
// carries loci; the C kind is rejected.
std::vector<LocusLabel> locus_membership(const FamilySpec& f, Orientation o, const Character& ch,
                                         double tol = 1e-7);

// Case analysis at a point z for odd m, n, p: which of the three closed-form
// factors (T_m(z)-2)/(z-2), (T_n(vbar)-2)/(vbar-2), (T_p(ubar)-2)/(ubar-2)
// vanish, and whether W'21 agrees with the predicted reduced form there
// (case 1: S_{p-1}(z), case 2: S_{p-m-1}(z), case 3: -S_{m-1}(z)).
struct Theorem5Report {
    std::complex<double> z, vbar, ubar;
    std::complex<double> factor_m, factor_n, factor_p;
    bool vanish_m = false, vanish_n = false, vanish_p = false;
    std::complex<double> wprime; // W'21(z)
    // Defects |W'21(z) - reduced form|; -1 when the case does not apply.
    std::complex<double> case1_expected, case2_expected, case3_expected;
    double case1_defect = -1.0, case2_defect = -1.0, case3_defect = -1.0;
    bool case1_ok = true, case2_ok = true, case3_ok = true;
};
Theorem5Report theorem5_cases(int m, int n, int p, std::complex<double> z, double tol = 1e-7);

} // namespace talex
