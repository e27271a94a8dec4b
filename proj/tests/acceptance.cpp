// Acceptance harness: nine numbered criteria, one PASS/FAIL line each, with
// wall-clock budgets where the criterion carries one. Exits nonzero when any
// criterion fails. Heavy suite reports are computed once and shared.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "talex/chebyshev.hpp"
#include "talex/families.hpp"
#include "talex/groupring.hpp"
#include "talex/report.hpp"
#include "talex/repvariety.hpp"
#include "talex/suites.hpp"
#include "talex/twisted.hpp"

using namespace talex;
using CD = std::complex<double>;
using Problems = std::vector<std::string>;

namespace {

// ---------------------------------------------------------------------------
// Small helpers.
// ---------------------------------------------------------------------------

CD peval(const IntPoly& p, CD z) {
    auto [value, scale_exp] = p.eval_scaled(z);
    return value * std::ldexp(1.0, static_cast<int>(scale_exp));
}

double rel_err(CD got, CD want) {
    return std::abs(got - want) / (std::abs(got) + std::abs(want) + 1.0);
}

CD random_point(std::mt19937_64& rng, double half_width) {
    std::uniform_real_distribution<double> box(-half_width, half_width);
    double re = box(rng), im = box(rng);
    return {re, im};
}

Mat2 random_sl2(std::mt19937_64& rng) {
    while (true) {
        CD a = random_point(rng, 2.0), b = random_point(rng, 2.0), c = random_point(rng, 2.0);
        if (std::abs(a) < 0.3) continue;
        return {a, b, c, (1.0 + b * c) / a};
    }
}

Word random_word(std::mt19937_64& rng, int gens, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> gen(0, gens - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<Letter> letters;
    int l = len(rng);
    for (int i = 0; i < l; ++i) letters.push_back((gen(rng) + 1) * (sign(rng) ? 1 : -1));
    return Word::from_letters(letters);
}

// Symbolic image of a word at A = [[1,1],[0,1]], B = [[1,0],[2-z,1]] over Z[z].
using MatP = Mat2T<IntPoly>;

MatP phi_word_symbolic(const Word& w) {
    IntPoly one{1}, zero{};
    IntPoly c{2, -1}; // 2 - z
    MatP A{one, one, zero, one};
    MatP Ainv{one, IntPoly{-1}, zero, one};
    MatP B{one, zero, c, one};
    MatP Binv{one, zero, IntPoly{} - c, one};
    MatP out{one, zero, zero, one};
    for (Letter l : w.letters()) {
        const MatP& g = l == 1 ? A : l == -1 ? Ainv : l == 2 ? B : Binv;
        out = out * g;
    }
    return out;
}

Mat2 rho_word(const Word& w, const Mat2& A, const Mat2& B) {
    Mat2 out = Mat2::identity();
    for (Letter l : w.letters()) {
        switch (l) {
        case 1: out = out * A; break;
        case -1: out = out * inverse(A); break;
        case 2: out = out * B; break;
        default: out = out * inverse(B); break;
        }
    }
    return out;
}

std::string fmt_cd(CD v) {
    std::ostringstream out;
    out << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
    return out.str();
}

// ---------------------------------------------------------------------------
// Shared suite reports (computed on first use).
// ---------------------------------------------------------------------------

const Report& dfj_report() {
    static const Report r = [] {
        RunConfig cfg;
        cfg.m_max = 3;
        cfg.n_max = 3;
        cfg.flip_mode = 2;
        return suite_dfj(cfg);
    }();
    return r;
}

const std::vector<std::array<int, 4>>& parabolic_case_list() {
    static const std::vector<std::array<int, 4>> cases = {
        {1, 1, 3, 0}, {3, 1, 5, 0}, {1, 3, 5, 0}, {3, 1, 9, 0}, {3, 3, 9, 0}, {1, 1, 3, 1}};
    return cases;
}

const Report& parabolic_report() {
    static const Report r = [] {
        RunConfig cfg;
        cfg.explicit_cases = parabolic_case_list();
        return suite_parabolic(cfg);
    }();
    return r;
}

struct LociPair {
    int m, n;
    bool flip;
};

const std::vector<LociPair>& loci_pairs() {
    static const std::vector<LociPair> pairs = {
        {1, 2, false}, {2, 1, false}, {3, 1, false}, {2, 2, false}, {3, 2, false}, {4, 1, false},
        {2, 1, true},  {1, 2, true},  {2, 2, true},  {2, 3, true},  {3, 2, true},  {2, 4, true}};
    return pairs;
}

const std::vector<Report>& loci_reports() {
    static const std::vector<Report> reports = [] {
        std::vector<Report> out;
        for (const LociPair& pr : loci_pairs()) {
            RunConfig cfg;
            cfg.family = FamilySpec{FamilySpec::Kind::J, pr.m, pr.n, 1};
            cfg.flip_mode = pr.flip ? 1 : 0;
            cfg.samples = 50;
            cfg.seed = 42;
            out.push_back(suite_loci(cfg));
        }
        return out;
    }();
    return reports;
}

const InstanceRecord* find_instance(const Report& r, int m, int n, int p, bool flip) {
    for (const auto& inst : r.instances)
        if (inst.family.m == m && inst.family.n == n && inst.family.p == p &&
            inst.orientation.flip == flip)
            return &inst;
    return nullptr;
}

// ---------------------------------------------------------------------------
// Criterion 1: Chebyshev lemma suite.
// ---------------------------------------------------------------------------

Problems criterion1() {
    Problems out;
    const IntPoly q = IntPoly::variable();
    const IntPoly one{1};

    // Pell-type identity, exact, k <= 60.
    for (long k = 0; k <= 60; ++k) {
        IntPoly sk = cheb_S(k), sk1 = cheb_S(k - 1);
        if (!(sk * sk + sk1 * sk1 - q * sk * sk1 == one)) {
            out.push_back("Pell identity fails at k=" + std::to_string(k));
        }
    }

    // Special values and the T/S relation, exact, k <= 60.
    for (long k = 0; k <= 60; ++k) {
        BigInt want(k + 1);
        if (cheb_S(k).eval(BigInt(2)) != want)
            out.push_back("S_k(2) != k+1 at k=" + std::to_string(k));
        BigInt alt = (k % 2 == 0) ? want : -want;
        if (cheb_S(k).eval(BigInt(-2)) != alt)
            out.push_back("S_k(-2) != (-1)^k (k+1) at k=" + std::to_string(k));
        if (cheb_T(k).eval(BigInt(2)) != BigInt(2))
            out.push_back("T_k(2) != 2 at k=" + std::to_string(k));
        if (!(cheb_T(k) == cheb_S(k) - cheb_S(k - 2)))
            out.push_back("T_k != S_k - S_{k-2} at k=" + std::to_string(k));
    }

    std::mt19937_64 rng(2026);

    // Root factorizations rebuilt as products at 20 random points, k <= 30.
    for (int k = 1; k <= 30; ++k) {
        std::vector<double> rs = roots_S(k);
        if (static_cast<int>(rs.size()) != k) {
            out.push_back("roots_S size != k at k=" + std::to_string(k));
            continue;
        }
        std::vector<std::pair<double, int>> rt2 = roots_T_minus_2(k);
        int mult_total = 0;
        for (const auto& [r, m] : rt2) mult_total += m;
        if (mult_total != k) {
            out.push_back("roots_T_minus_2 multiplicities != k at k=" + std::to_string(k));
            continue;
        }
        std::vector<double> rtq;
        if (k >= 2) {
            rtq = roots_T_minus_q(k);
            if (static_cast<int>(rtq.size()) != k) {
                out.push_back("roots_T_minus_q size != k at k=" + std::to_string(k));
                continue;
            }
        }
        for (int pt = 0; pt < 20; ++pt) {
            CD z = random_point(rng, 2.5);
            CD prod_s = 1.0, prod_t2 = 1.0, prod_tq = 1.0;
            for (double r : rs) prod_s *= z - r;
            for (const auto& [r, m] : rt2)
                for (int i = 0; i < m; ++i) prod_t2 *= z - r;
            for (double r : rtq) prod_tq *= z - r;
            if (rel_err(prod_s, peval(cheb_S(k), z)) > 1e-9)
                out.push_back("S_k root product mismatch at k=" + std::to_string(k));
            if (rel_err(prod_t2, peval(cheb_T(k), z) - 2.0) > 1e-9)
                out.push_back("T_k - 2 root product mismatch at k=" + std::to_string(k));
            if (k >= 2 && rel_err(prod_tq, peval(cheb_T(k), z) - z) > 1e-9)
                out.push_back("T_k - q root product mismatch at k=" + std::to_string(k));
        }
    }

    // Determinant identity det(I + Q + ... + Q^{k-1}) = (T_k - 2)/(q - 2).
    std::uniform_int_distribution<int> kdist(1, 20);
    for (int trial = 0; trial < 100; ++trial) {
        Mat2 Q = random_sl2(rng);
        int k = kdist(rng);
        Mat2 acc = Mat2::identity();
        Mat2 power = Q;
        for (int i = 1; i < k; ++i) {
            acc = acc + power;
            power = power * Q;
        }
        CD det = acc.det();
        CD want = ratio_T_minus_2(k, Q.trace());
        if (std::abs(det - want) > 1e-9 * (1.0 + std::abs(want))) {
            out.push_back("determinant identity fails at k=" + std::to_string(k) +
                          ": det=" + fmt_cd(det) + " ratio=" + fmt_cd(want));
        }
    }

    // Cross identity S_k S_{l-1} - S_{k-1} S_l = S_{l-k-1}, exact, k,l <= 60.
    for (long k = 0; k <= 60; ++k)
        for (long l = 0; l <= 60; ++l) {
            try {
                cheb_cross_identity(k, l);
            } catch (const std::exception&) {
                out.push_back("cross identity fails at k=" + std::to_string(k) +
                              ", l=" + std::to_string(l));
            }
        }

    // gcd(S_{k-1}, S_{l-1}) = S_{gcd(k,l)-1} up to sign, 1 <= k,l <= 24.
    for (int k = 1; k <= 24; ++k)
        for (int l = 1; l <= 24; ++l) {
            IntPoly g = poly_gcd(cheb_S(k - 1), cheb_S(l - 1));
            IntPoly want = cheb_S(std::gcd(k, l) - 1);
            if (!(g == want || g == -want))
                out.push_back("gcd lemma fails at k=" + std::to_string(k) +
                              ", l=" + std::to_string(l));
        }

    return out;
}

// ---------------------------------------------------------------------------
// Criterion 2: Fox calculus identities.
// ---------------------------------------------------------------------------

Problems criterion2() {
    Problems out;
    std::mt19937_64 rng(2027);

    const int gens = 3;
    for (int i = 0; i < 500; ++i) {
        Word w = random_word(rng, gens, 40);
        GroupRingElement lhs;
        for (int j = 0; j < gens; ++j) {
            GroupRingElement xj_minus_1 =
                GroupRingElement::term(Word::generator(j)) - GroupRingElement::one();
            lhs += fox_derivative(w, j) * xj_minus_1;
        }
        GroupRingElement rhs = GroupRingElement::term(w) - GroupRingElement::one();
        if (!(lhs == rhs)) {
            out.push_back("fundamental identity fails on word #" + std::to_string(i));
            break;
        }
    }

    Word a = Word::generator(0);
    auto check_commutator = [&](const Word& w, const std::string& label) {
        Word relator = a * w * a.inverse() * w.inverse();
        GroupRingElement lhs = fox_derivative(relator, 1);
        GroupRingElement bracket =
            GroupRingElement::one() -
            GroupRingElement::term(w * a.inverse() * w.inverse());
        GroupRingElement rhs = GroupRingElement::term(a) * bracket * fox_derivative(w, 1);
        if (!(lhs == rhs)) out.push_back("commutator identity fails on " + label);
    };
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            check_commutator(word_w_J(m, n),
                             "J word m=" + std::to_string(m) + ", n=" + std::to_string(n));
            for (int p = 1; p <= 3; ++p)
                check_commutator(word_w_C(m, n, p), "C word m=" + std::to_string(m) + ", n=" +
                                                        std::to_string(n) + ", p=" +
                                                        std::to_string(p));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Criterion 3: Riley oracle equivalence (exact integer polynomials).
// ---------------------------------------------------------------------------

Problems criterion3() {
    Problems out;
    const IntPoly two_minus_z{2, -1};

    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (int p = 1; p <= 3; ++p) {
                MatP W = phi_word_symbolic(word_w_C(m, n, p));
                IntPoly rhs = two_minus_z * riley_chain_C(m, n, p).Wprime21;
                if (!(W.c == rhs || W.c == -rhs))
                    out.push_back("C word-product oracle fails at (m,n,p)=(" + std::to_string(m) +
                                  "," + std::to_string(n) + "," + std::to_string(p) + ")");
            }

    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            MatP W = phi_word_symbolic(word_w_J(m, n));
            IntPoly rhs = two_minus_z * parabolic_slice_poly_J(m, n);
            if (!(W.c == rhs || W.c == -rhs))
                out.push_back("J slice oracle fails at (m,n)=(" + std::to_string(m) + "," +
                              std::to_string(n) + ")");
        }
    return out;
}

// ---------------------------------------------------------------------------
// Criterion 4: commutation residual at every reported Riley root.
// ---------------------------------------------------------------------------

Problems criterion4() {
    Problems out;
    auto check_roots = [&](const RileyData& data, const Word& w, const std::string& label) {
        for (const RileyRoot& r : data.roots) {
            ParabolicRep rep = parabolic_rep(r.z);
            Mat2 W = rho_word(w, rep.A, rep.B);
            Mat2 comm = rep.A * W - W * rep.A;
            double resid = mat2_max_abs(comm) / std::max(mat2_max_abs(W), 1e-300);
            if (resid > 1e-8)
                out.push_back(label + " root z=" + fmt_cd(r.z) + " commutation residual " +
                              std::to_string(resid));
        }
    };

    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            check_roots(parabolic_slice_J(m, n), word_w_J(m, n),
                        "J(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")");
    for (const auto& c : parabolic_case_list()) {
        if (c[3] != 0) continue; // the flipped entry reuses the same root set
        check_roots(riley_poly_C(c[0], c[1], c[2]), word_w_C(c[0], c[1], c[2]),
                    "C(m=" + std::to_string(c[0]) + ",n=" + std::to_string(c[1]) +
                        ",p=" + std::to_string(c[2]) + ")");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Criterion 5: J-family detection grid.
// ---------------------------------------------------------------------------

Problems criterion5() {
    Problems out;
    const Report& r = dfj_report();
    if (report_exit_code(r) != 0)
        out.push_back("dfj suite exit code " + std::to_string(report_exit_code(r)));

    for (const auto& inst : r.instances) {
        std::string label = family_name(inst.family) +
                            (inst.orientation.flip ? " flipped" : " unflipped");
        for (const auto& c : inst.cases) {
            if (c.is_real_root) continue;
            int want = 4 * inst.gt.genus;
            if (c.tp.span != want)
                out.push_back(label + ": span " + std::to_string(c.tp.span) + " != " +
                              std::to_string(want) + " at z=" + fmt_cd(c.ch.z));
            double margin = std::abs(c.tp.top_coeff - 1.0);
            if (inst.gt.fibered == Fibered::Yes && !(margin < 1e-6))
                out.push_back(label + ": fibered but |top-1|=" + std::to_string(margin));
            if (inst.gt.fibered == Fibered::No && !(margin > 1e-3))
                out.push_back(label + ": not fibered but |top-1|=" + std::to_string(margin));
        }
    }

    // Whitehead pin: J(3,3) unflipped roots 1 +- i, span 4, monic.
    const InstanceRecord* wh = find_instance(r, 1, 1, 1, false);
    if (!wh) {
        out.push_back("J(3,3) instance missing");
        return out;
    }
    bool plus = false, minus = false;
    for (const auto& c : wh->cases) {
        if (c.is_real_root) continue;
        CD target(1.0, c.ch.z.imag() > 0 ? 1.0 : -1.0);
        if (std::abs(c.ch.z - target) > 1e-10) {
            out.push_back("J(3,3) root " + fmt_cd(c.ch.z) + " is not 1+-i to 1e-10");
            continue;
        }
        (c.ch.z.imag() > 0 ? plus : minus) = true;
        if (c.tp.span != 4)
            out.push_back("J(3,3) span != 4 at z=" + fmt_cd(c.ch.z));
        if (!c.tp.monic) out.push_back("J(3,3) not monic at z=" + fmt_cd(c.ch.z));
    }
    if (!plus || !minus) out.push_back("J(3,3) did not produce both roots 1+-i");
    return out;
}

// ---------------------------------------------------------------------------
// Criterion 6: C-family odd-parameter cases.
// ---------------------------------------------------------------------------

Problems criterion6() {
    Problems out;
    const Report& r = parabolic_report();
    if (report_exit_code(r) != 0)
        out.push_back("parabolic suite exit code " + std::to_string(report_exit_code(r)));

    auto span_of_all = [&](int m, int n, int p, bool flip, int want, bool nonreal_only,
                           const char* label) {
        const InstanceRecord* inst = find_instance(r, m, n, p, flip);
        if (!inst) {
            out.push_back(std::string(label) + ": instance missing");
            return;
        }
        for (const auto& c : inst->cases) {
            if (nonreal_only && c.is_real_root) continue;
            if (c.tp.span != want)
                out.push_back(std::string(label) + ": span " + std::to_string(c.tp.span) +
                              " != " + std::to_string(want) + " at z=" + fmt_cd(c.ch.z));
        }
    };

    span_of_all(1, 1, 3, false, 4, false, "C(2,2,-6)");
    span_of_all(3, 1, 5, false, 4, false, "C(6,2,-10)");
    span_of_all(1, 3, 5, false, 4, false, "C(2,6,-10)");
    span_of_all(1, 1, 3, true, 12, true, "C(2,2,-6) flipped");

    for (int mp : {1, 3}) {
        int m = 3, n = mp, p = 9; // (3,1,9) and (3,3,9)
        const InstanceRecord* inst = find_instance(r, m, n, p, false);
        std::string label = "C(6," + std::to_string(2 * n) + ",-18)";
        if (!inst) {
            out.push_back(label + ": instance missing");
            continue;
        }
        bool degenerate_seen = false;
        for (const auto& c : inst->cases) {
            if (c.is_real_root && std::abs(c.ch.z - CD(-1.0, 0.0)) < 1e-6) {
                degenerate_seen = true;
                if (c.tp.span >= 4)
                    out.push_back(label + ": span at z=-1 is " + std::to_string(c.tp.span) +
                                  ", expected < 4");
            } else if (!c.is_real_root && c.tp.span != 4) {
                out.push_back(label + ": nonreal span " + std::to_string(c.tp.span) +
                              " != 4 at z=" + fmt_cd(c.ch.z));
            }
        }
        if (!degenerate_seen) out.push_back(label + ": real root z=-1 not found");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Criterion 7: degeneration-locus sampling.
// ---------------------------------------------------------------------------

Problems criterion7() {
    Problems out;
    const std::vector<Report>& reports = loci_reports();
    std::set<int> covered;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const Report& r = reports[i];
        const LociPair& pr = loci_pairs()[i];
        std::string label = "loci J(m=" + std::to_string(pr.m) + ",n=" + std::to_string(pr.n) +
                            (pr.flip ? ", flipped" : "") + ")";
        if (report_exit_code(r) != 0)
            out.push_back(label + ": exit code " + std::to_string(report_exit_code(r)));
        if (r.error_count() != 0)
            out.push_back(label + ": " + std::to_string(r.error_count()) + " errors");
        for (const auto& inst : r.instances)
            for (const auto& c : inst.cases) {
                if (c.note.find("on-locus") == std::string::npos) continue;
                for (const LocusLabel& l : c.loci) covered.insert(static_cast<int>(l.tag));
                double coeff_margin =
                    std::min(std::abs(c.prediction.coeff), std::abs(c.prediction.coeff - 1.0));
                if (coeff_margin > 1e-7)
                    out.push_back(label + ": on-locus coefficient " + fmt_cd(c.prediction.coeff) +
                                  " is neither 0 nor 1");
            }
    }
    if (covered.size() != 8) {
        out.push_back("only " + std::to_string(covered.size()) +
                      " of 8 locus families exercised by on-locus points");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Criterion 8: symmetry / conjugation / fast-path defects everywhere.
// ---------------------------------------------------------------------------

Problems criterion8() {
    Problems out;
    long scanned = 0;
    auto scan = [&](const Report& r, const std::string& which) {
        for (const auto& inst : r.instances)
            for (const auto& c : inst.cases) {
                if (c.error) continue; // already fatal for its own criterion
                if (c.tp.span < 0) continue;
                ++scanned;
                if (!(c.symmetry_rel_defect < 1e-7))
                    out.push_back(which + ": symmetry defect " +
                                  std::to_string(c.symmetry_rel_defect) + " at z=" +
                                  fmt_cd(c.ch.z));
                if (c.conjugation_defect >= 0.0 && !(c.conjugation_defect < 1e-8))
                    out.push_back(which + ": conjugation defect " +
                                  std::to_string(c.conjugation_defect));
                if (c.fastpath_defect >= 0.0 && !(c.fastpath_defect < 1e-9))
                    out.push_back(which + ": fast-path defect " +
                                  std::to_string(c.fastpath_defect));
            }
    };
    scan(dfj_report(), "dfj");
    scan(parabolic_report(), "parabolic");
    const auto& lr = loci_reports();
    for (std::size_t i = 0; i < lr.size(); ++i) scan(lr[i], "loci#" + std::to_string(i));
    if (scanned == 0) out.push_back("no cases scanned");
    return out;
}

// ---------------------------------------------------------------------------
// Criterion 9: reduced Alexander oracle on the grid instances.
// ---------------------------------------------------------------------------

Problems criterion9() {
    Problems out;
    auto scan = [&](const Report& r) {
        for (const auto& inst : r.instances) {
            std::string label = family_name(inst.family) +
                                (inst.orientation.flip ? " flipped" : " unflipped");
            if (!inst.reduced_ok || inst.reduced_span != 2 * inst.gt.genus + 1)
                out.push_back(label + ": reduced Alexander span " +
                              std::to_string(inst.reduced_span) + " != 2*genus+1 = " +
                              std::to_string(2 * inst.gt.genus + 1));
        }
    };
    scan(dfj_report());
    scan(parabolic_report());
    return out;
}

} // namespace

int main() {
    struct Criterion {
        int number;
        double budget_seconds; // <= 0: no budget
        std::function<Problems()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, 10.0, criterion1},  {2, 10.0, criterion2}, {3, 60.0, criterion3},
        {4, 0.0, criterion4},   {5, 300.0, criterion5}, {6, 300.0, criterion6},
        {7, 0.0, criterion7},   {8, 0.0, criterion8},  {9, 0.0, criterion9},
    };

    bool all_pass = true;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Problems problems;
        try {
            problems = c.run();
        } catch (const std::exception& e) {
            problems.push_back(std::string("exception: ") + e.what());
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && elapsed >= c.budget_seconds) {
            std::ostringstream msg;
            msg << "runtime " << elapsed << " s exceeds the " << c.budget_seconds << " s budget";
            problems.push_back(msg.str());
        }
        bool pass = problems.empty();
        all_pass = all_pass && pass;
        std::printf("criterion %d: %s (%.1f s)\n", c.number, pass ? "PASS" : "FAIL", elapsed);
        const std::size_t limit = 12;
        for (std::size_t i = 0; i < problems.size() && i < limit; ++i)
            std::printf("  - %s\n", problems[i].c_str());
        if (problems.size() > limit)
            std::printf("  - ... and %zu more\n", problems.size() - limit);
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
