#include "talex/repvariety.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "talex/chebyshev.hpp"
#include "talex/roots.hpp"

namespace talex {

namespace {
using CD = std::complex<double>;

bool near(CD a, CD b, double tol) { return std::abs(a - b) < tol; }

double cos2(int num, int den) {
    return 2.0 * std::cos(2.0 * num * std::numbers::pi / den);
}
} // namespace

CD trace_v(int m, CD x, CD y, CD z) {
    CD sm = cheb_eval_S(m, z);
    CD sm1 = cheb_eval_S(m - 1, z);
    return (x * sm - y * sm1) * (y * sm - x * sm1) - z * (sm * sm + sm1 * sm1) +
           4.0 * sm * sm1;
}

CD char_variety_eval(int m, int n, const Character& ch) {
    CD v = trace_v(m, ch.x, ch.y, ch.z);
    return cheb_eval_S(m - 1, ch.z) * cheb_eval_S(n, v) -
           cheb_eval_S(m, ch.z) * cheb_eval_S(n - 1, v);
}

IntPoly trace_v_parabolic_J(int m) {
    // v(z) at x = y = 2: 4(S_m - S_{m-1})^2 - z(S_m^2 + S_{m-1}^2) + 4 S_m S_{m-1}.
    IntPoly sm = cheb_S(m), sm1 = cheb_S(m - 1);
    IntPoly z = IntPoly::variable();
    IntPoly diff = sm - sm1;
    return IntPoly::constant(4) * (diff * diff) - z * (sm * sm + sm1 * sm1) +
           IntPoly::constant(4) * sm * sm1;
}

IntPoly parabolic_slice_poly_J(int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("parabolic_slice_poly_J: m, n must be >= 1");
    IntPoly v = trace_v_parabolic_J(m);
    return cheb_S(m - 1) * poly_compose(cheb_S(n), v) -
           cheb_S(m) * poly_compose(cheb_S(n - 1), v);
}

RileyChainC riley_chain_C(int m, int n, int p) {
    if (m < 1 || n < 1 || p < 1)
        throw std::invalid_argument("riley_chain_C: m, n, p must be >= 1");
    const IntPoly z = IntPoly::variable();
    const IntPoly one = IntPoly::constant(1);
    const IntPoly zm2 = z - IntPoly::constant(2);
    IntPoly sm = cheb_S(m), sm1 = cheb_S(m - 1);
    IntPoly sm_sq = sm * sm, cross = sm * sm1, sm1_sq = sm1 * sm1;

    RileyChainC c;
    c.V11 = sm_sq - IntPoly::constant(2) * cross + IntPoly({3, -1}) * sm1_sq;
    c.V12 = zm2 * sm1_sq;
    c.V21 = -(zm2 * zm2 * sm1_sq);
    c.V22 = sm_sq + IntPoly({2, -2}) * cross + IntPoly({3, -3, 1}) * sm1_sq;
    c.vbar = c.V11 + c.V22;

    IntPoly sn_v = poly_compose(cheb_S(n), c.vbar);
    IntPoly sn1_v = poly_compose(cheb_S(n - 1), c.vbar);
    c.alpha = sn_v - c.V22 * sn1_v;
    c.beta = c.V12 * sn1_v;

    IntPoly alpha_sq = c.alpha * c.alpha;
    IntPoly ab = c.alpha * c.beta;
    c.U11 = one + zm2 * (alpha_sq + ab);
    c.U12 = -one + zm2 * (c.beta * (c.alpha + c.beta));
    c.U21 = -(zm2 * alpha_sq);
    c.U22 = one - zm2 * ab;
    c.ubar = c.U11 + c.U22;

    IntPoly sp_u = poly_compose(cheb_S(p), c.ubar);
    IntPoly sp1_u = poly_compose(cheb_S(p - 1), c.ubar);
    c.Wprime21 = alpha_sq * (sm - sm1) * sp1_u - sm1 * (sp_u + (zm2 * ab - one) * sp1_u);
    return c;
}

CD riley_eval_C(int m, int n, int p, CD z) {
    CD sm = cheb_eval_S(m, z), sm1 = cheb_eval_S(m - 1, z);
    CD zm2 = z - 2.0;
    CD v12 = zm2 * sm1 * sm1;
    CD v22 = sm * sm + (2.0 - 2.0 * z) * sm * sm1 + (3.0 - 3.0 * z + z * z) * sm1 * sm1;
    CD vbar = 2.0 + zm2 * zm2 * sm1 * sm1;
    CD sn1_v = cheb_eval_S(n - 1, vbar);
    CD alpha = cheb_eval_S(n, vbar) - v22 * sn1_v;
    CD beta = v12 * sn1_v;
    CD ubar = 2.0 + zm2 * alpha * alpha;
    CD sp_u = cheb_eval_S(p, ubar), sp1_u = cheb_eval_S(p - 1, ubar);
    return alpha * alpha * (sm - sm1) * sp1_u - sm1 * (sp_u + (zm2 * alpha * beta - 1.0) * sp1_u);
}

namespace {

constexpr double kReducibleCutoff = 1e-6;

RileyData root_classify(IntPoly poly, double precision) {
    RileyData data;
    data.poly = std::move(poly);
    for (const Root& r : find_roots(data.poly, precision)) {
        RileyRoot rr;
        rr.z = r.value;
        rr.multiplicity = r.multiplicity;
        rr.is_real = r.is_real;
        rr.residual = data.poly.relative_residual(r.value);
        if (std::abs(r.value - 2.0) < kReducibleCutoff)
            data.reducible_roots.push_back(rr);
        else
            data.roots.push_back(rr);
    }
    return data;
}

} // namespace

RileyData parabolic_slice_J(int m, int n, double precision) {
    return root_classify(parabolic_slice_poly_J(m, n), precision);
}

RileyData riley_poly_C(int m, int n, int p, double precision) {
    return root_classify(riley_chain_C(m, n, p).Wprime21, precision);
}

ParabolicRep parabolic_rep(CD z) {
    ParabolicRep rep;
    rep.z = z;
    rep.A = {1.0, 1.0, 0.0, 1.0};
    rep.B = {1.0, 0.0, 2.0 - z, 1.0};
    return rep;
}

std::pair<Mat2, Mat2> rep_from_character(const Character& ch) {
    // Solve s + 1/s = x and u + 1/u = y, preferring the |.| >= 1 branch.
    auto half_trace_root = [](CD tr) {
        CD disc = std::sqrt(tr * tr - 4.0);
        CD s = (tr + disc) / 2.0;
        if (std::abs(s) < 1.0) s = (tr - disc) / 2.0;
        if (s == 0.0) s = 1.0; // tr = +-2 rounds to the Jordan branch
        return s;
    };
    CD s = half_trace_root(ch.x);
    CD u = half_trace_root(ch.y);
    CD r = s / u + u / s - ch.z;
    if (std::abs(r) < 1e-8)
        throw std::domain_error("rep_from_character: reducible character (r = s/u + u/s - z ~ 0)");
    Mat2 A{s, 1.0, 0.0, 1.0 / s};
    Mat2 B{u, 0.0, r, 1.0 / u};
    return {A, B};
}

std::string LocusLabel::to_string() const {
    std::ostringstream out;
    switch (tag) {
    case Tag::Y: out << "Y"; break;
    case Tag::Yjk: out << "Y_{" << j << "," << k << "}"; break;
    case Tag::Zl: out << "Z_" << j; break;
    case Tag::Zjk: out << "Z_{" << j << "," << k << "}"; break;
    case Tag::Yprime: out << "Y'"; break;
    case Tag::Ypjk: out << "Y'_{" << j << "," << k << "}"; break;
    case Tag::Zprimel: out << "Z'_" << j; break;
    case Tag::Zpjk: out << "Z'_{" << j << "," << k << "}"; break;
    }
    return out.str();
}

std::vector<LocusLabel> locus_membership(const FamilySpec& f, Orientation o, const Character& ch,
                                         double tol) {
    if (f.kind != FamilySpec::Kind::J)
        throw std::invalid_argument("locus_membership: loci are defined for the J family only");
    const int m = f.m, n = f.n;
    const CD x = ch.x, y = ch.y, z = ch.z;
    const CD xy_z = x * y - z;
    std::vector<LocusLabel> out;

    if (!o.flip) {
        // Y_{j,k}: z = 2cos(2j pi/m), xy - z = 2cos(k pi/n); 1<=j<m/2, 1<=k<=n-1.
        for (int j = 1; 2 * j < m; ++j)
            for (int k = 1; k <= n - 1; ++k)
                if (near(z, cos2(j, m), tol) &&
                    near(xy_z, 2.0 * std::cos(k * std::numbers::pi / n), tol))
                    out.push_back({LocusLabel::Tag::Yjk, j, k});
        // Y: z = -2 and m S_n(v1) + (m+1) S_{n-1}(v1) = 0 with
        // v1 = xy + 2 + (m^2+m)(x+y)^2.
        if (near(z, -2.0, tol)) {
            CD v1 = x * y + 2.0 + static_cast<double>(m * m + m) * (x + y) * (x + y);
            CD cond = static_cast<double>(m) * cheb_eval_S(n, v1) +
                      static_cast<double>(m + 1) * cheb_eval_S(n - 1, v1);
            if (std::abs(cond) < tol) out.push_back({LocusLabel::Tag::Y, 0, 0});
        }
        // Z_{j,k}: z = 2cos(2j pi/(m+1)), xy - z = 2cos(k pi/(n+1));
        // 1<=j<(m+1)/2, 1<=k<=n.
        for (int j = 1; 2 * j < m + 1; ++j)
            for (int k = 1; k <= n; ++k)
                if (near(z, cos2(j, m + 1), tol) &&
                    near(xy_z, 2.0 * std::cos(k * std::numbers::pi / (n + 1)), tol))
                    out.push_back({LocusLabel::Tag::Zjk, j, k});
        // Z_l: z = 2cos(2l pi/(m-1)) and S_n(v2) - z S_{n-1}(v2) = 0 with
        // v2 = xy - (x^2+y^2-3)z + xy z^2 - z^3; 1<=l<(m-1)/2.
        for (int l = 1; 2 * l < m - 1; ++l) {
            if (!near(z, cos2(l, m - 1), tol)) continue;
            CD v2 = x * y - (x * x + y * y - 3.0) * z + x * y * z * z - z * z * z;
            CD cond = cheb_eval_S(n, v2) - z * cheb_eval_S(n - 1, v2);
            if (std::abs(cond) < tol) out.push_back({LocusLabel::Tag::Zl, l, 0});
        }
        return out;
    }

    const CD v = trace_v(m, x, y, z);
    // Y'_{j,k}: xy - z = 2cos(2j pi/n), z = 2cos(k pi/m); 1<=j<n/2, 1<=k<=m-1.
    for (int j = 1; 2 * j < n; ++j)
        for (int k = 1; k <= m - 1; ++k)
            if (near(xy_z, cos2(j, n), tol) &&
                near(z, 2.0 * std::cos(k * std::numbers::pi / m), tol))
                out.push_back({LocusLabel::Tag::Ypjk, j, k});
    // Y': v = -2 and n S_m(z) + (n+1) S_{m-1}(z) = 0.
    if (near(v, -2.0, tol)) {
        CD cond = static_cast<double>(n) * cheb_eval_S(m, z) +
                  static_cast<double>(n + 1) * cheb_eval_S(m - 1, z);
        if (std::abs(cond) < tol) out.push_back({LocusLabel::Tag::Yprime, 0, 0});
    }
    // Z'_{j,k}: xy - z = 2cos(2j pi/(n+1)), z = 2cos(k pi/(m+1));
    // 1<=j<(n+1)/2, 1<=k<=m.
    for (int j = 1; 2 * j < n + 1; ++j)
        for (int k = 1; k <= m; ++k)
            if (near(xy_z, cos2(j, n + 1), tol) &&
                near(z, 2.0 * std::cos(k * std::numbers::pi / (m + 1)), tol))
                out.push_back({LocusLabel::Tag::Zpjk, j, k});
    // Z'_l: v = 2cos(2l pi/(n-1)) and S_m(z) - v S_{m-1}(z) = 0; 1<=l<(n-1)/2.
    for (int l = 1; 2 * l < n - 1; ++l) {
        if (!near(v, cos2(l, n - 1), tol)) continue;
        CD cond = cheb_eval_S(m, z) - v * cheb_eval_S(m - 1, z);
        if (std::abs(cond) < tol) out.push_back({LocusLabel::Tag::Zprimel, l, 0});
    }
    return out;
}

Theorem5Report theorem5_cases(int m, int n, int p, CD z, double tol) {
    if (m < 1 || n < 1 || p < 1 || m % 2 == 0 || n % 2 == 0 || p % 2 == 0)
        throw std::invalid_argument("theorem5_cases: m, n, p must be odd and >= 1");
    Theorem5Report rep;
    rep.z = z;
    CD sm1 = cheb_eval_S(m - 1, z);
    CD alpha;
    {
        CD sm = cheb_eval_S(m, z);
        CD zm2 = z - 2.0;
        CD v22 = sm * sm + (2.0 - 2.0 * z) * sm * sm1 + (3.0 - 3.0 * z + z * z) * sm1 * sm1;
        rep.vbar = 2.0 + zm2 * zm2 * sm1 * sm1;
        alpha = cheb_eval_S(n, rep.vbar) - v22 * cheb_eval_S(n - 1, rep.vbar);
        rep.ubar = 2.0 + zm2 * alpha * alpha;
    }
    rep.factor_m = ratio_T_minus_2(m, z);
    rep.factor_n = ratio_T_minus_2(n, rep.vbar);
    rep.factor_p = ratio_T_minus_2(p, rep.ubar);
    rep.vanish_m = std::abs(rep.factor_m) < tol;
    rep.vanish_n = std::abs(rep.factor_n) < tol;
    rep.vanish_p = std::abs(rep.factor_p) < tol;
    rep.wprime = riley_eval_C(m, n, p, z);

    auto check = [&](CD expected, double& defect, bool& ok) {
        defect = std::abs(rep.wprime - expected);
        ok = defect <= 1e-6 * (1.0 + std::abs(expected));
    };
    if (rep.vanish_m) {
        rep.case1_expected = cheb_eval_S(p - 1, z);
        check(rep.case1_expected, rep.case1_defect, rep.case1_ok);
    }
    if (rep.vanish_n) {
        rep.case2_expected = cheb_eval_S(p - m - 1, z);
        check(rep.case2_expected, rep.case2_defect, rep.case2_ok);
    }
    if (rep.vanish_p) {
        rep.case3_expected = -sm1;
        check(rep.case3_expected, rep.case3_defect, rep.case3_ok);
    }
    return rep;
}

} // namespace talex
