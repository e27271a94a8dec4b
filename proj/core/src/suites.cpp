#include "talex/suites.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "talex/chebyshev.hpp"
#include "talex/parallel.hpp"
#include "talex/roots.hpp"

namespace talex {
namespace {

using CD = std::complex<double>;
using nlohmann::ordered_json;

void add_note(std::string& dst, const std::string& s) {
    if (!dst.empty()) dst += "; ";
    dst += s;
}

// ---------------------------------------------------------------------------
// Deterministic sampling. Doubles are derived from raw engine bits so the
// stream is pinned independent of the standard library's distribution code.
// ---------------------------------------------------------------------------

class SampleRng {
  public:
    explicit SampleRng(std::uint64_t seed) : eng_(seed) {}
    double uniform(double lo, double hi) {
        double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }
    CD box(double half_width) {
        double re = uniform(-half_width, half_width);
        double im = uniform(-half_width, half_width);
        return {re, im};
    }

  private:
    std::mt19937_64 eng_;
};

std::uint64_t mix_seed(std::uint64_t seed, int m, int n, int p, bool flip) {
    std::uint64_t h = seed;
    for (std::uint64_t v : {std::uint64_t(m), std::uint64_t(n), std::uint64_t(p),
                            std::uint64_t(flip ? 1 : 0)}) {
        h ^= (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    }
    return h;
}

// A fixed well-conditioned SL2 conjugator for the invariance check.
Mat2 make_conjugator(std::uint64_t seed) {
    SampleRng rng(mix_seed(seed, 101, 103, 107, false));
    for (;;) {
        Mat2 p{rng.box(1.0) + CD(1.0), rng.box(1.0), rng.box(1.0), rng.box(1.0) + CD(1.0)};
        CD det = p.det();
        if (std::abs(det) < 0.1) continue;
        CD s = 1.0 / std::sqrt(det);
        return {p.a * s, p.b * s, p.c * s, p.d * s};
    }
}

std::vector<Orientation> orientations(int flip_mode) {
    if (flip_mode == 0) return {Orientation{false}};
    if (flip_mode == 1) return {Orientation{true}};
    return {Orientation{false}, Orientation{true}};
}

const char* flip_name(int flip_mode) {
    if (flip_mode == 0) return "unflipped";
    if (flip_mode == 1) return "flipped";
    return "both";
}

ordered_json engine_json(const EngineOptions& e) {
    ordered_json out;
    out["div_tol"] = e.div_tol;
    out["normalize_threshold"] = e.normalize_threshold;
    out["monic_tol"] = e.monic_tol;
    return out;
}

double poly_rel_diff(const LaurentPoly& a, const LaurentPoly& b) {
    double scale = std::max({a.max_abs(), b.max_abs(), 1e-300});
    return (a - b).max_abs() / scale;
}

// Relative backward error of the character-variety equation at a point.
double variety_residual(int m, int n, const Character& ch) {
    CD v = trace_v(m, ch.x, ch.y, ch.z);
    CD t1 = cheb_eval_S(m - 1, ch.z) * cheb_eval_S(n, v);
    CD t2 = cheb_eval_S(m, ch.z) * cheb_eval_S(n - 1, v);
    return std::abs(t1 - t2) / (std::abs(t1) + std::abs(t2) + 1.0);
}

// Extreme-term prediction with the actual (x, y) (the J flipped coefficient
// depends on the character through tr rho(v-word), not just z).
ClosedFormPrediction family_prediction(const FamilySpec& f, Orientation o, const Character& ch) {
    if (f.kind == FamilySpec::Kind::C) return closed_form_top(f, o, ch.z);
    if (!o.flip) return {ratio_T_minus_2(f.m, ch.z), 4 * f.n - 2, -2};
    CD v = trace_v(f.m, ch.x, ch.y, ch.z);
    return {ratio_T_minus_2(f.n, v), 4 * f.m, 0};
}

int choose_remove(const Presentation& pres, const RepAssignment& rep) {
    // A nonzero abelianization degree guarantees det Phi(1 - x_j) != 0.
    for (std::size_t j = 0; j < pres.generators.size(); ++j)
        if (pres.degrees[j] != 0) return static_cast<int>(j);
    for (std::size_t j = 0; j < pres.generators.size(); ++j)
        if (std::abs((Mat2::identity() - rep.images[j]).det()) > 1e-9)
            return static_cast<int>(j);
    throw std::domain_error("every generator gives a vanishing denominator determinant");
}

// ---------------------------------------------------------------------------
// One engine evaluation with all cross-checks.
// ---------------------------------------------------------------------------

struct CaseSetup {
    const Presentation* pres = nullptr;
    const Word* w = nullptr;            // commutator word; enables the fast path
    const FamilySpec* family = nullptr; // enables closed form / loci / symmetry
    Orientation o;
    const GroundTruth* gt = nullptr;
    Character ch;
    Mat2 A, B;
    bool is_real = false;
    int multiplicity = 1;
    double root_residual = 0.0;
    bool counted = true;
    bool enforce_genus = false;
    bool enforce_fiber = false;
};

CaseRecord run_case(const CaseSetup& s, const RunConfig& cfg, const Mat2& conj) {
    CaseRecord rec;
    rec.ch = s.ch;
    rec.is_real_root = s.is_real;
    rec.multiplicity = s.multiplicity;
    rec.root_residual = s.root_residual;
    rec.counted = s.counted;
    try {
        RepAssignment rep = make_rep(*s.pres, {s.A, s.B});

        if (s.w) {
            // rho extends to the link group iff rho(a) commutes with rho(w).
            Mat2 W = Mat2::identity();
            for (Letter l : s.w->letters())
                W = W * (l > 0 ? rep.images[l - 1] : inverse(rep.images[-l - 1]));
            Mat2 comm = rep.images[0] * W - W * rep.images[0];
            rec.commutation_residual = mat2_max_abs(comm) / std::max(1.0, mat2_max_abs(W));
            if (rec.commutation_residual > 1e-8) {
                rec.error = true;
                add_note(rec.note, "commutation residual above 1e-8");
            }
        }

        rec.tp = twisted_alexander(*s.pres, rep, choose_remove(*s.pres, rep), cfg.engine);

        if (s.w) {
            TwistedPoly fast = twisted_alexander_fastpath(*s.pres, rep, *s.w, cfg.engine);
            rec.fastpath_defect = poly_rel_diff(rec.tp.delta, fast.delta);
            if (rec.fastpath_defect > 1e-9) {
                rec.error = true;
                add_note(rec.note, "fast path disagrees with the general path");
            }
            Mat2 ci = inverse(conj);
            RepAssignment crep = make_rep(*s.pres, {conj * s.A * ci, conj * s.B * ci});
            TwistedPoly ctp = twisted_alexander_fastpath(*s.pres, crep, *s.w, cfg.engine);
            rec.conjugation_defect = poly_rel_diff(rec.tp.delta, ctp.delta);
            if (rec.conjugation_defect > 1e-8) {
                rec.error = true;
                add_note(rec.note, "conjugated representation gives a different invariant");
            }
        }

        rec.symmetry_rel_defect =
            rec.tp.symmetric_defect / std::max(rec.tp.delta.max_abs(), 1e-300);

        if (s.family) {
            if (rec.symmetry_rel_defect > 1e-7) {
                rec.pass = false;
                add_note(rec.note, "coefficient symmetry violated");
            }
            if (s.family->kind == FamilySpec::Kind::J)
                rec.loci = locus_membership(*s.family, s.o, s.ch, cfg.tol);

            rec.prediction = family_prediction(*s.family, s.o, s.ch);
            if (std::abs(rec.prediction.coeff) < 1e-7) {
                rec.prediction_degenerate = true;
            } else {
                int pred_span = rec.prediction.hi - rec.prediction.lo;
                if (rec.tp.span != pred_span) {
                    rec.pass = false;
                    add_note(rec.note, "span differs from the closed-form prediction");
                } else {
                    CD pred = rec.prediction.coeff;
                    double d = std::max(std::abs(rec.tp.delta.leading() - pred),
                                        std::abs(rec.tp.delta.trailing() - pred)) /
                               (1.0 + std::abs(pred));
                    rec.closed_form_defect = d;
                    if (d > cfg.tol) {
                        rec.pass = false;
                        add_note(rec.note, "extreme coefficients differ from the closed form");
                    }
                }
            }
        }

        if (s.gt) {
            rec.verdict = detection_verdict(rec.tp, *s.gt);
            if (rec.tp.tolerance_unstable) {
                rec.error = true;
                add_note(rec.note, "span/monicity unstable between coefficient thresholds");
            }
            if (s.enforce_genus && !rec.verdict.genus_detected) {
                rec.pass = false;
                add_note(rec.note, "genus not detected");
            }
            if (s.enforce_fiber && rec.verdict.fiber_applicable && !rec.verdict.fiber_detected) {
                rec.pass = false;
                add_note(rec.note, "fiberedness not detected");
            }
        }
    } catch (const std::exception& e) {
        rec.error = true;
        add_note(rec.note, e.what());
    }
    return rec;
}

// ---------------------------------------------------------------------------
// Family instances driven by the exact parabolic-slice roots.
// ---------------------------------------------------------------------------

enum class RootPolicy { Dfj, Parabolic };

InstanceRecord run_family_instance(const FamilySpec& f, Orientation o, const RunConfig& cfg,
                                   const Mat2& conj, RootPolicy policy) {
    InstanceRecord inst;
    inst.family = f;
    inst.orientation = o;
    try {
        inst.gt = ground_truth(f, o);
        Presentation pres = family_presentation(f, o);
        Word w = family_word_w(f);

        RileyData riley = f.kind == FamilySpec::Kind::J
                              ? parabolic_slice_J(f.m, f.n, cfg.precision)
                              : riley_poly_C(f.m, f.n, f.p, cfg.precision);
        inst.has_riley = true;
        inst.riley = riley.poly;
        inst.reducible_roots = riley.reducible_roots;

        LaurentPoly red = reduced_alexander(pres, cfg.engine);
        inst.reduced_span = red.span();
        inst.reduced_ok = inst.reduced_span == 2 * inst.gt.genus + 1;
        if (!inst.reduced_ok) {
            inst.pass = false;
            add_note(inst.note, "reduced Alexander span != 2*genus + 1");
        }

        bool gcd_big =
            policy == RootPolicy::Parabolic && !o.flip && std::gcd(f.m, f.p) >= 3;

        for (const RileyRoot& r : riley.roots) {
            CaseSetup s;
            s.pres = &pres;
            s.w = &w;
            s.family = &f;
            s.o = o;
            s.gt = &inst.gt;
            ParabolicRep pr = parabolic_rep(r.z);
            s.A = pr.A;
            s.B = pr.B;
            s.ch = {2.0, 2.0, r.z};
            s.is_real = r.is_real;
            s.multiplicity = r.multiplicity;
            s.root_residual = r.residual;
            if (policy == RootPolicy::Dfj) {
                // Genus and fiberedness detection is claimed at every nonreal
                // parabolic root (the holonomy lifts are among them).
                s.enforce_genus = s.enforce_fiber = !r.is_real;
            } else {
                // C family: all parabolic representations detect the genus,
                // except the real roots of gcd(m, p) >= 3 instances.
                s.enforce_genus = !(gcd_big && r.is_real);
            }
            CaseRecord rec = run_case(s, cfg, conj);
            if (policy == RootPolicy::Parabolic && !o.flip && rec.prediction_degenerate &&
                !rec.error) {
                // The extreme coefficient vanishes; the exact chain must agree
                // with the reduced form of whichever factor-vanishing case
                // fired at this z.
                Theorem5Report t5 = theorem5_cases(f.m, f.n, f.p, r.z, cfg.tol);
                if (!(t5.case1_ok && t5.case2_ok && t5.case3_ok)) {
                    rec.pass = false;
                    add_note(rec.note, "degenerate-case reduced form mismatch");
                } else {
                    add_note(rec.note, "degenerate extreme coefficient; reduced form verified");
                }
            }
            inst.cases.push_back(std::move(rec));
        }

        if (gcd_big) {
            bool witness = false;
            for (const CaseRecord& c : inst.cases)
                if (c.is_real_root && !c.error && !c.verdict.genus_detected) witness = true;
            if (!witness) {
                inst.pass = false;
                add_note(inst.note,
                         "expected a real root without genus detection (gcd(m,p) >= 3)");
            }
        }
    } catch (const std::exception& e) {
        inst.error = true;
        add_note(inst.note, e.what());
    }
    return inst;
}

// ---------------------------------------------------------------------------
// Character-variety sampling for the degeneration-locus suite.
// ---------------------------------------------------------------------------

CPoly cpoly_sub(const CPoly& a, const CPoly& b) { return cpoly_add(a, cpoly_scale(b, -1.0)); }

// R(x, y, z) as a dense polynomial in z for fixed x, y.
CPoly variety_slice(int m, int n, CD x, CD y) {
    CPoly zvar = {0.0, 1.0};
    CPoly prev = {1.0}; // S_0
    CPoly cur = zvar;   // S_1
    for (int k = 1; k < m; ++k) {
        CPoly next = cpoly_sub(cpoly_mul(zvar, cur), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    const CPoly& sm = cur;   // S_m
    const CPoly& sm1 = prev; // S_{m-1}

    CPoly t1 = cpoly_sub(cpoly_scale(sm, x), cpoly_scale(sm1, y));
    CPoly t2 = cpoly_sub(cpoly_scale(sm, y), cpoly_scale(sm1, x));
    CPoly v = cpoly_mul(t1, t2);
    v = cpoly_sub(v, cpoly_mul(zvar, cpoly_add(cpoly_mul(sm, sm), cpoly_mul(sm1, sm1))));
    v = cpoly_add(v, cpoly_scale(cpoly_mul(sm, sm1), 4.0));

    CPoly vprev = {1.0}; // S_0(v)
    CPoly vcur = v;      // S_1(v)
    for (int k = 1; k < n; ++k) {
        CPoly next = cpoly_sub(cpoly_mul(v, vcur), vprev);
        vprev = std::move(vcur);
        vcur = std::move(next);
    }
    CPoly r = cpoly_sub(cpoly_mul(sm1, vcur), cpoly_mul(sm, vprev));

    // Drop numerically void leading coefficients (Aberth needs a sane degree).
    double scale = 0.0;
    for (const CD& c : r) scale = std::max(scale, std::abs(c));
    while (r.size() > 1 && std::abs(r.back()) < 1e-12 * scale) r.pop_back();
    return r;
}

bool label_equal(const LocusLabel& a, const LocusLabel& b) {
    return a.tag == b.tag && a.j == b.j && a.k == b.k;
}

CD cos2(int num, int den) { return 2.0 * std::cos(2.0 * std::numbers::pi * num / den); }
CD cos1(int num, int den) { return 2.0 * std::cos(std::numbers::pi * num / den); }

std::vector<CD> solve_quadratic(CD a, CD b, CD c) {
    if (std::abs(a) < 1e-14 * (std::abs(b) + std::abs(c) + 1.0)) {
        if (std::abs(b) < 1e-200) return {};
        return {-c / b};
    }
    CD disc = std::sqrt(b * b - 4.0 * a * c);
    return {(-b + disc) / (2.0 * a), (-b - disc) / (2.0 * a)};
}

// y-solutions of tr rho(v-word) = target at fixed m, x, z.
std::vector<CD> solve_trace_v_for_y(int m, CD x, CD z, CD target) {
    CD sm = cheb_eval_S(m, z), sm1 = cheb_eval_S(m - 1, z);
    CD sq = sm * sm + sm1 * sm1;
    CD a = -sm * sm1;
    CD b = x * sq;
    CD c = -x * x * sm * sm1 - z * sq + 4.0 * sm * sm1 - target;
    return solve_quadratic(a, b, c);
}

bool locus_range_nonempty(LocusLabel::Tag tag, int m, int n) {
    using Tag = LocusLabel::Tag;
    switch (tag) {
    case Tag::Yjk: return m >= 3 && n >= 2;
    case Tag::Y: return true;
    case Tag::Zjk: return m >= 2;
    case Tag::Zl: return m >= 4;
    case Tag::Ypjk: return n >= 3 && m >= 2;
    case Tag::Yprime: return true;
    case Tag::Zpjk: return n >= 2;
    case Tag::Zprimel: return n >= 4;
    }
    return false;
}

bool locus_is_vanishing(LocusLabel::Tag tag) {
    using Tag = LocusLabel::Tag;
    return tag == Tag::Yjk || tag == Tag::Y || tag == Tag::Ypjk || tag == Tag::Yprime;
}

struct LocusConstruction {
    Character ch;
    LocusLabel target;
};

// A point of the requested locus with the lowest indices (j = k = l = 1),
// x drawn at random and y solved from the defining equations. Every branch
// lands on the character variety by construction; this is re-checked.
std::optional<LocusConstruction> construct_on_locus_point(LocusLabel::Tag tag, int m, int n,
                                                          SampleRng& rng) {
    using Tag = LocusLabel::Tag;
    for (int attempt = 0; attempt < 200; ++attempt) {
        CD x = rng.box(3.0);
        if (std::abs(x) < 0.3) continue;
        CD z;
        std::vector<CD> ys;
        LocusLabel label;
        switch (tag) {
        case Tag::Yjk:
            z = cos2(1, m);
            ys = {(z + cos1(1, n)) / x};
            label = {Tag::Yjk, 1, 1};
            break;
        case Tag::Y: {
            z = -2.0;
            IntPoly cond = cheb_S(n) * BigInt(m) + cheb_S(n - 1) * BigInt(m + 1);
            CD v1 = find_roots(cond, 1e-14).front().value;
            double c = double(m) * m + m;
            ys = solve_quadratic(c, x * (1.0 + 2.0 * c), c * x * x + 2.0 - v1);
            label = {Tag::Y, 0, 0};
            break;
        }
        case Tag::Zjk:
            z = cos2(1, m + 1);
            ys = {(z + cos1(1, n + 1)) / x};
            label = {Tag::Zjk, 1, 1};
            break;
        case Tag::Zl: {
            z = cos2(1, m - 1);
            CPoly cond = cpoly_sub(cpoly_from(cheb_S(n)), cpoly_scale(cpoly_from(cheb_S(n - 1)), z));
            CD v2 = find_roots_complex(cond, 1e-14).front();
            ys = solve_quadratic(-z, x * (1.0 + z * z), -z * x * x + 3.0 * z - z * z * z - v2);
            label = {Tag::Zl, 1, 0};
            break;
        }
        case Tag::Ypjk:
            z = cos1(1, m);
            ys = {(z + cos2(1, n)) / x};
            label = {Tag::Ypjk, 1, 1};
            break;
        case Tag::Yprime: {
            IntPoly cond = cheb_S(m) * BigInt(n) + cheb_S(m - 1) * BigInt(n + 1);
            z = find_roots(cond, 1e-14).front().value;
            ys = solve_trace_v_for_y(m, x, z, -2.0);
            label = {Tag::Yprime, 0, 0};
            break;
        }
        case Tag::Zpjk:
            z = cos1(1, m + 1);
            ys = {(z + cos2(1, n + 1)) / x};
            label = {Tag::Zpjk, 1, 1};
            break;
        case Tag::Zprimel: {
            CD vstar = cos2(1, n - 1);
            CPoly cond =
                cpoly_sub(cpoly_from(cheb_S(m)), cpoly_scale(cpoly_from(cheb_S(m - 1)), vstar));
            z = find_roots_complex(cond, 1e-14).front();
            ys = solve_trace_v_for_y(m, x, z, vstar);
            label = {Tag::Zprimel, 1, 0};
            break;
        }
        }
        for (CD y : ys) {
            Character ch{x, y, z};
            if (variety_residual(m, n, ch) > 1e-8) continue;
            try {
                rep_from_character(ch);
            } catch (const std::exception&) {
                continue; // reducible branch; redraw
            }
            return LocusConstruction{ch, label};
        }
    }
    return std::nullopt;
}

InstanceRecord run_loci_instance(const FamilySpec& f, Orientation o, const RunConfig& cfg,
                                 const Mat2& conj) {
    constexpr int kOnLocusPoints = 5;
    InstanceRecord inst;
    inst.family = f;
    inst.orientation = o;
    try {
        inst.gt = ground_truth(f, o);
        Presentation pres = family_presentation(f, o);
        Word w = family_word_w(f);

        LaurentPoly red = reduced_alexander(pres, cfg.engine);
        inst.reduced_span = red.span();
        inst.reduced_ok = inst.reduced_span == 2 * inst.gt.genus + 1;
        if (!inst.reduced_ok) {
            inst.pass = false;
            add_note(inst.note, "reduced Alexander span != 2*genus + 1");
        }

        // Off-loci samples: random (x, y), z solved from the variety equation.
        SampleRng rng(mix_seed(cfg.seed, f.m, f.n, 0, o.flip));
        bool expect_monic = inst.gt.fibered == Fibered::Yes;
        int accepted = 0, attempts = 0;
        const int max_attempts = 20 * cfg.samples + 100;
        while (accepted < cfg.samples && attempts < max_attempts) {
            ++attempts;
            CD x = rng.box(3.0), y = rng.box(3.0);
            CPoly slice = variety_slice(f.m, f.n, x, y);
            if (slice.size() < 2) {
                ++inst.skipped_samples;
                continue;
            }
            std::vector<CD> roots;
            try {
                roots = find_roots_complex(slice, cfg.precision);
            } catch (const std::exception&) {
                ++inst.skipped_samples;
                continue;
            }
            bool used = false;
            for (CD z : roots) {
                Character ch{x, y, z};
                Mat2 A, B;
                try {
                    std::tie(A, B) = rep_from_character(ch);
                } catch (const std::exception&) {
                    continue; // reducible
                }
                if (!locus_membership(f, o, ch, cfg.tol).empty()) continue;
                // Quantitative transversality: stay away from points where the
                // predicted extreme coefficient itself degenerates (the
                // statements are generic, and the engine works at a fixed
                // coefficient threshold).
                ClosedFormPrediction pred = family_prediction(f, o, ch);
                if (std::abs(pred.coeff) < 1e-4) continue;
                if (!expect_monic && std::abs(pred.coeff - 1.0) < 1e-4) continue;

                CaseSetup s;
                s.pres = &pres;
                s.w = &w;
                s.family = &f;
                s.o = o;
                s.gt = &inst.gt;
                s.ch = ch;
                s.A = A;
                s.B = B;
                s.is_real = std::abs(z.imag()) < 1e-9 * (1.0 + std::abs(z));
                s.root_residual = variety_residual(f.m, f.n, ch);
                s.enforce_genus = s.enforce_fiber = true;
                inst.cases.push_back(run_case(s, cfg, conj));
                used = true;
                ++accepted;
                break;
            }
            if (!used) ++inst.skipped_samples;
        }
        if (accepted < cfg.samples) {
            inst.error = true;
            add_note(inst.note, "off-loci sampling exhausted the attempt budget");
        }

        // Constructed points on each locus whose index range is nonempty.
        using Tag = LocusLabel::Tag;
        const std::vector<Tag> plan = o.flip
                                          ? std::vector<Tag>{Tag::Ypjk, Tag::Yprime, Tag::Zpjk,
                                                             Tag::Zprimel}
                                          : std::vector<Tag>{Tag::Yjk, Tag::Y, Tag::Zjk, Tag::Zl};
        for (Tag tag : plan) {
            if (!locus_range_nonempty(tag, f.m, f.n)) continue;
            SampleRng lrng(mix_seed(cfg.seed, f.m, f.n, 17 + static_cast<int>(tag), o.flip));
            for (int i = 0; i < kOnLocusPoints; ++i) {
                auto pt = construct_on_locus_point(tag, f.m, f.n, lrng);
                if (!pt) {
                    CaseRecord rec;
                    rec.error = true;
                    rec.counted = true;
                    add_note(rec.note, "on-locus construction failed");
                    inst.cases.push_back(std::move(rec));
                    continue;
                }
                CaseSetup s;
                s.pres = &pres;
                s.w = &w;
                s.family = &f;
                s.o = o;
                s.gt = &inst.gt;
                s.ch = pt->ch;
                std::tie(s.A, s.B) = rep_from_character(pt->ch);
                s.is_real = std::abs(pt->ch.z.imag()) < 1e-9 * (1.0 + std::abs(pt->ch.z));
                s.root_residual = variety_residual(f.m, f.n, pt->ch);
                CaseRecord rec = run_case(s, cfg, conj);
                add_note(rec.note, "on-locus " + pt->target.to_string());
                if (!rec.error) {
                    bool found = false;
                    for (const LocusLabel& l : rec.loci)
                        if (label_equal(l, pt->target)) found = true;
                    if (!found) {
                        rec.pass = false;
                        add_note(rec.note, "membership check missed the target locus");
                    }
                    CD coeff = rec.prediction.coeff;
                    if (locus_is_vanishing(tag)) {
                        if (std::abs(coeff) > cfg.tol) {
                            rec.pass = false;
                            add_note(rec.note, "extreme coefficient should vanish here");
                        }
                        if (rec.tp.span == inst.gt.degree_prediction) {
                            rec.pass = false;
                            add_note(rec.note, "span should drop on this locus");
                        }
                    } else {
                        if (std::abs(coeff - 1.0) > cfg.tol) {
                            rec.pass = false;
                            add_note(rec.note, "extreme coefficient should be 1 here");
                        }
                        if (rec.tp.span != inst.gt.degree_prediction) {
                            rec.pass = false;
                            add_note(rec.note, "span should stay generic on this locus");
                        }
                        if (!rec.tp.monic) {
                            rec.pass = false;
                            add_note(rec.note, "should be monic on this locus");
                        }
                    }
                }
                inst.cases.push_back(std::move(rec));
            }
        }
    } catch (const std::exception& e) {
        inst.error = true;
        add_note(inst.note, e.what());
    }
    return inst;
}

void validate_family(const FamilySpec& f) {
    if (f.m < 1 || f.n < 1 || (f.kind == FamilySpec::Kind::C && f.p < 1))
        throw std::invalid_argument("family parameters must be >= 1");
}

ordered_json family_json(const FamilySpec& f) {
    ordered_json out;
    out["name"] = family_name(f);
    out["m"] = f.m;
    out["n"] = f.n;
    if (f.kind == FamilySpec::Kind::C) out["p"] = f.p;
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Suites.
// ---------------------------------------------------------------------------

Report suite_dfj(const RunConfig& cfg) {
    if (cfg.m_max < 1 || cfg.n_max < 1)
        throw std::invalid_argument("dfj suite requires m_max, n_max >= 1");
    Report rep;
    rep.suite = "dfj";
    rep.config["suite"] = "dfj";
    rep.config["m_max"] = cfg.m_max;
    rep.config["n_max"] = cfg.n_max;
    rep.config["flip"] = flip_name(cfg.flip_mode);
    rep.config["seed"] = cfg.seed;
    rep.config["tol"] = cfg.tol;
    rep.config["precision"] = cfg.precision;
    rep.config["engine"] = engine_json(cfg.engine);

    std::vector<std::pair<FamilySpec, Orientation>> grid;
    for (int m = 1; m <= cfg.m_max; ++m)
        for (int n = 1; n <= cfg.n_max; ++n)
            for (Orientation o : orientations(cfg.flip_mode))
                grid.emplace_back(FamilySpec{FamilySpec::Kind::J, m, n, 1}, o);

    Mat2 conj = make_conjugator(cfg.seed);
    rep.instances.resize(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        rep.instances[i] =
            run_family_instance(grid[i].first, grid[i].second, cfg, conj, RootPolicy::Dfj);
    });
    return rep;
}

Report suite_parabolic(const RunConfig& cfg) {
    std::vector<std::pair<FamilySpec, Orientation>> grid;
    auto add_case = [&grid](int m, int n, int p, Orientation o) {
        if (m < 1 || n < 1 || p < 1 || m % 2 == 0 || n % 2 == 0 || p % 2 == 0 || m == p)
            throw std::invalid_argument(
                "parabolic suite requires odd m, n, p >= 1 with m != p");
        grid.emplace_back(FamilySpec{FamilySpec::Kind::C, m, n, p}, o);
    };
    if (!cfg.explicit_cases.empty()) {
        for (const auto& c : cfg.explicit_cases) add_case(c[0], c[1], c[2], Orientation{c[3] != 0});
    } else {
        if (cfg.odd_max < 1) throw std::invalid_argument("parabolic suite requires odd_max >= 1");
        for (int m = 1; m <= cfg.odd_max; m += 2)
            for (int n = 1; n <= cfg.odd_max; n += 2)
                for (int p = 1; p <= cfg.odd_max; p += 2) {
                    if (m == p) continue;
                    for (Orientation o : orientations(cfg.flip_mode)) add_case(m, n, p, o);
                }
    }

    Report rep;
    rep.suite = "parabolic";
    rep.config["suite"] = "parabolic";
    if (!cfg.explicit_cases.empty()) {
        ordered_json cases = ordered_json::array();
        for (const auto& c : cfg.explicit_cases)
            cases.push_back(ordered_json::array({c[0], c[1], c[2], c[3]}));
        rep.config["cases"] = cases;
    } else {
        rep.config["odd_max"] = cfg.odd_max;
        rep.config["flip"] = flip_name(cfg.flip_mode);
    }
    rep.config["seed"] = cfg.seed;
    rep.config["tol"] = cfg.tol;
    rep.config["precision"] = cfg.precision;
    rep.config["engine"] = engine_json(cfg.engine);

    Mat2 conj = make_conjugator(cfg.seed);
    rep.instances.resize(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        rep.instances[i] =
            run_family_instance(grid[i].first, grid[i].second, cfg, conj, RootPolicy::Parabolic);
    });
    return rep;
}

Report suite_loci(const RunConfig& cfg) {
    FamilySpec f = cfg.family;
    f.kind = FamilySpec::Kind::J;
    f.p = 1;
    validate_family(f);
    if (cfg.samples < 1) throw std::invalid_argument("loci suite requires samples >= 1");

    Report rep;
    rep.suite = "loci";
    rep.config["suite"] = "loci";
    rep.config["m"] = f.m;
    rep.config["n"] = f.n;
    rep.config["flip"] = flip_name(cfg.flip_mode);
    rep.config["samples"] = cfg.samples;
    rep.config["seed"] = cfg.seed;
    rep.config["tol"] = cfg.tol;
    rep.config["precision"] = cfg.precision;
    rep.config["engine"] = engine_json(cfg.engine);

    Mat2 conj = make_conjugator(cfg.seed);
    for (Orientation o : orientations(cfg.flip_mode))
        rep.instances.push_back(run_loci_instance(f, o, cfg, conj));
    return rep;
}

Report compute_single(const RunConfig& cfg) {
    Report rep;
    rep.suite = "single";
    rep.config["suite"] = "single";
    rep.config["seed"] = cfg.seed;
    rep.config["tol"] = cfg.tol;
    rep.config["precision"] = cfg.precision;
    rep.config["engine"] = engine_json(cfg.engine);
    Mat2 conj = make_conjugator(cfg.seed);

    if (!cfg.presentation_path.empty()) {
        rep.config["presentation"] = cfg.presentation_path;
        rep.config["rep"] = cfg.rep_path;
        InstanceRecord inst;
        inst.family_valid = false;
        inst.label = cfg.presentation_path;
        try {
            if (cfg.rep_path.empty())
                throw std::invalid_argument("--presentation requires a --rep file");
            Presentation pres = load_presentation(cfg.presentation_path);
            std::vector<Mat2> images = load_rep_file(cfg.rep_path, pres);
            RepAssignment ra = make_rep(pres, images);

            CaseRecord rec;
            rec.counted = false;
            rec.ch.x = images.size() > 0 ? images[0].trace() : CD(0.0);
            rec.ch.y = images.size() > 1 ? images[1].trace() : CD(0.0);
            rec.ch.z = images.size() > 1 ? (images[0] * inverse(images[1])).trace() : CD(0.0);
            rec.tp = twisted_alexander(pres, ra, choose_remove(pres, ra), cfg.engine);
            rec.symmetry_rel_defect =
                rec.tp.symmetric_defect / std::max(rec.tp.delta.max_abs(), 1e-300);
            inst.cases.push_back(std::move(rec));

            inst.reduced_span = reduced_alexander(pres, cfg.engine).span();
            add_note(inst.note, "no ground truth for presentation input; diagnostics only");
        } catch (const std::exception& e) {
            inst.error = true;
            add_note(inst.note, e.what());
        }
        rep.instances.push_back(std::move(inst));
        return rep;
    }

    FamilySpec f = cfg.family;
    validate_family(f);
    rep.config["family"] = family_json(f);
    rep.config["flip"] = flip_name(cfg.flip_mode);
    if (cfg.has_z) rep.config["z"] = json_complex(cfg.z);

    for (Orientation o : orientations(cfg.flip_mode)) {
        InstanceRecord inst;
        inst.family = f;
        inst.orientation = o;
        try {
            inst.gt = ground_truth(f, o);
            Presentation pres = family_presentation(f, o);
            Word w = family_word_w(f);

            LaurentPoly red = reduced_alexander(pres, cfg.engine);
            inst.reduced_span = red.span();
            inst.reduced_ok = inst.reduced_span == 2 * inst.gt.genus + 1;
            if (!inst.reduced_ok) {
                inst.pass = false;
                add_note(inst.note, "reduced Alexander span != 2*genus + 1");
            }

            std::vector<RileyRoot> roots;
            if (cfg.has_z) {
                IntPoly slice = f.kind == FamilySpec::Kind::J
                                    ? parabolic_slice_poly_J(f.m, f.n)
                                    : riley_chain_C(f.m, f.n, f.p).Wprime21;
                RileyRoot r;
                r.z = cfg.z;
                r.is_real = std::abs(cfg.z.imag()) < 1e-9 * (1.0 + std::abs(cfg.z));
                r.residual = slice.relative_residual(cfg.z);
                roots.push_back(r);
                if (r.residual > 1e-6)
                    add_note(inst.note, "requested z is not a parabolic-slice root "
                                        "(residual recorded on the case)");
            } else {
                RileyData rd = f.kind == FamilySpec::Kind::J
                                   ? parabolic_slice_J(f.m, f.n, cfg.precision)
                                   : riley_poly_C(f.m, f.n, f.p, cfg.precision);
                inst.has_riley = true;
                inst.riley = rd.poly;
                inst.reducible_roots = rd.reducible_roots;
                roots = rd.roots;
            }

            for (const RileyRoot& r : roots) {
                CaseSetup s;
                s.pres = &pres;
                s.w = &w;
                s.family = &f;
                s.o = o;
                s.gt = &inst.gt;
                ParabolicRep pr = parabolic_rep(r.z);
                s.A = pr.A;
                s.B = pr.B;
                s.ch = {2.0, 2.0, r.z};
                s.is_real = r.is_real;
                s.multiplicity = r.multiplicity;
                s.root_residual = r.residual;
                // Diagnostics: engine invariants are enforced, detection is
                // reported but not judged.
                inst.cases.push_back(run_case(s, cfg, conj));
            }
        } catch (const std::exception& e) {
            inst.error = true;
            add_note(inst.note, e.what());
        }
        rep.instances.push_back(std::move(inst));
    }
    return rep;
}

Report riley_report(const RunConfig& cfg) {
    FamilySpec f = cfg.family;
    validate_family(f);

    Report rep;
    rep.suite = "riley";
    rep.config["suite"] = "riley";
    rep.config["family"] = family_json(f);
    rep.config["precision"] = cfg.precision;

    InstanceRecord inst;
    inst.family = f;
    inst.orientation = Orientation{false};
    try {
        inst.gt = ground_truth(f, inst.orientation);
        RileyData rd = f.kind == FamilySpec::Kind::J
                           ? parabolic_slice_J(f.m, f.n, cfg.precision)
                           : riley_poly_C(f.m, f.n, f.p, cfg.precision);
        inst.has_riley = true;
        inst.riley = rd.poly;
        inst.reducible_roots = rd.reducible_roots;
        for (const RileyRoot& r : rd.roots) {
            CaseRecord rec;
            rec.ch = {2.0, 2.0, r.z};
            rec.is_real_root = r.is_real;
            rec.multiplicity = r.multiplicity;
            rec.root_residual = r.residual;
            rec.counted = false;
            rec.note = "root only (no engine run)";
            inst.cases.push_back(std::move(rec));
        }
    } catch (const std::exception& e) {
        inst.error = true;
        add_note(inst.note, e.what());
    }
    rep.instances.push_back(std::move(inst));
    return rep;
}

std::vector<Mat2> load_rep_file(const std::string& path, const Presentation& pres) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open rep file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("rep file " + path + ": " + e.what());
    }
    if (!doc.is_object())
        throw std::runtime_error("rep file must be a JSON object mapping generators to matrices");

    auto parse_entry = [&path](const nlohmann::json& v) -> CD {
        if (v.is_number()) return CD(v.get<double>(), 0.0);
        if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
            return CD(v[0].get<double>(), v[1].get<double>());
        throw std::runtime_error("rep file " + path +
                                 ": matrix entries must be numbers or [re, im] pairs");
    };

    std::vector<Mat2> images(pres.generators.size());
    std::vector<bool> seen(pres.generators.size(), false);
    for (const auto& [key, val] : doc.items()) {
        int gi = pres.generator_index(key);
        if (gi < 0) throw std::runtime_error("rep file names unknown generator '" + key + "'");
        if (!val.is_array() || val.size() != 2 || !val[0].is_array() || val[0].size() != 2 ||
            !val[1].is_array() || val[1].size() != 2)
            throw std::runtime_error("rep file " + path + ": generator '" + key +
                                     "' must map to a 2x2 matrix");
        images[gi] = {parse_entry(val[0][0]), parse_entry(val[0][1]), parse_entry(val[1][0]),
                      parse_entry(val[1][1])};
        seen[gi] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw std::runtime_error("rep file is missing generator '" + pres.generators[i] + "'");
    return images;
}

} // namespace talex
