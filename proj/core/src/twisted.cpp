#include "talex/twisted.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "talex/chebyshev.hpp"
#include "talex/repvariety.hpp"

namespace talex {

namespace {
using CD = std::complex<double>;

void validate_rep_sizes(const RepAssignment& rep, std::size_t q) {
    if (rep.images.size() != q || rep.degrees.size() != q)
        throw std::invalid_argument("representation does not cover all generators");
    for (const Mat2& m : rep.images)
        if (std::abs(m.det() - 1.0) >= 1e-6)
            throw std::invalid_argument("generator image is not special-linear");
}

// Accumulates t^exponent * matrix contributions, then packs a LaurentMat2.
class PhiAccumulator {
  public:
    void add(int exponent, const Mat2& m, double scale) {
        Mat2& slot = slots_[exponent];
        slot = slot + CD(scale) * m;
    }

    LaurentMat2 pack() const {
        if (slots_.empty()) return {};
        int lo = slots_.begin()->first;
        int hi = slots_.rbegin()->first;
        std::size_t len = static_cast<std::size_t>(hi - lo + 1);
        std::vector<CD> a(len), b(len), c(len), d(len);
        for (const auto& [e, m] : slots_) {
            std::size_t i = static_cast<std::size_t>(e - lo);
            a[i] = m.a;
            b[i] = m.b;
            c[i] = m.c;
            d[i] = m.d;
        }
        return {LaurentPoly(lo, std::move(a)), LaurentPoly(lo, std::move(b)),
                LaurentPoly(lo, std::move(c)), LaurentPoly(lo, std::move(d))};
    }

  private:
    std::map<int, Mat2> slots_;
};

// Window span (max entry hi - min entry lo) of a Laurent 2x2 block; -1 when
// the block is zero.
int block_span(const LaurentMat2& m) {
    bool any = false;
    int lo = 0, hi = 0;
    for (const LaurentPoly* e : {&m.a, &m.b, &m.c, &m.d}) {
        if (e->is_zero()) continue;
        if (!any) {
            lo = e->lo();
            hi = e->hi();
            any = true;
        } else {
            lo = std::min(lo, e->lo());
            hi = std::max(hi, e->hi());
        }
    }
    return any ? hi - lo : -1;
}

LaurentPoly laurent_det2(const LaurentMat2& m) { return m.a * m.d - m.b * m.c; }

// det Phi(1 - x_gen) = det(I - t^deg * rho(x_gen)).
LaurentPoly denominator_det(const RepAssignment& rep, int gen) {
    GroupRingElement e = GroupRingElement::one() - GroupRingElement::term(Word::generator(gen));
    return laurent_det2(phi_apply(e, rep));
}

TwistedPoly finalize(const LaurentPoly& raw, const EngineOptions& opt) {
    TwistedPoly tp;
    LaurentPoly cut = laurent_normalize(raw, opt.normalize_threshold);
    if (cut.is_zero()) {
        tp.delta = cut;
        return tp;
    }
    tp.delta = cut.shifted(-cut.lo());
    tp.span = tp.delta.hi();
    tp.top_coeff = tp.delta.leading();
    tp.monic = std::abs(tp.top_coeff - 1.0) < opt.monic_tol;
    for (int k = 0; k <= tp.span; ++k)
        tp.symmetric_defect = std::max(
            tp.symmetric_defect, std::abs(tp.delta.coeff(k) - tp.delta.coeff(tp.span - k)));
    // Verdict stability at the looser 1e-6 threshold.
    LaurentPoly loose = laurent_normalize(raw, 1e-6);
    bool monic_loose = !loose.is_zero() && std::abs(loose.leading() - 1.0) < opt.monic_tol;
    tp.tolerance_unstable = (loose.span() != tp.span) || (monic_loose != tp.monic);
    return tp;
}

} // namespace

RepAssignment make_rep(const Presentation& pres, const std::vector<Mat2>& images) {
    RepAssignment rep;
    rep.images = images;
    rep.degrees = pres.degrees;
    validate_rep_sizes(rep, pres.generators.size());
    return rep;
}

LaurentMat2 phi_apply(const GroupRingElement& e, const RepAssignment& rep) {
    PhiAccumulator acc;
    for (const auto& [w, coeff] : e.terms()) {
        Mat2 image = Mat2::identity();
        long exponent = 0;
        for (Letter l : w.letters()) {
            std::size_t g = static_cast<std::size_t>(std::abs(l) - 1);
            if (g >= rep.images.size())
                throw std::invalid_argument("phi_apply: word uses an unassigned generator");
            if (l > 0) {
                image = image * rep.images[g];
                exponent += rep.degrees[g];
            } else {
                image = image * inverse(rep.images[g]);
                exponent -= rep.degrees[g];
            }
        }
        acc.add(static_cast<int>(exponent), image, coeff.get_d());
    }
    return acc.pack();
}

LaurentMat2 phi_fox(const Word& w, int gen, const RepAssignment& rep) {
    PhiAccumulator acc;
    Mat2 prefix = Mat2::identity();
    long exponent = 0;
    const Letter target = static_cast<Letter>(gen + 1);
    for (Letter l : w.letters()) {
        std::size_t g = static_cast<std::size_t>(std::abs(l) - 1);
        if (g >= rep.images.size())
            throw std::invalid_argument("phi_fox: word uses an unassigned generator");
        if (l == target) acc.add(static_cast<int>(exponent), prefix, +1.0);
        if (l > 0) {
            prefix = prefix * rep.images[g];
            exponent += rep.degrees[g];
        } else {
            prefix = prefix * inverse(rep.images[g]);
            exponent -= rep.degrees[g];
        }
        // d(x^-1)/dx = -x^-1: the contribution is the updated prefix.
        if (l == -target) acc.add(static_cast<int>(exponent), prefix, -1.0);
    }
    return acc.pack();
}

TwistedPoly twisted_alexander(const Presentation& pres, const RepAssignment& rep, int remove,
                              const EngineOptions& opt) {
    const std::size_t q = pres.generators.size();
    if (q < 2 || pres.relators.size() != q - 1)
        throw std::invalid_argument(
            "twisted_alexander: need q generators and q-1 relators with q >= 2");
    if (remove < 0 || static_cast<std::size_t>(remove) >= q)
        throw std::invalid_argument("twisted_alexander: removed generator out of range");
    validate_rep_sizes(rep, q);

    LaurentPoly den = denominator_det(rep, remove);
    if (den.is_zero())
        throw std::domain_error("twisted_alexander: det Phi(1 - x_remove) is zero");

    // Block Fox matrix with the removed generator's column deleted.
    const std::size_t cols = q - 1;
    std::vector<std::vector<LaurentMat2>> blocks(pres.relators.size(),
                                                 std::vector<LaurentMat2>(cols));
    int degree_bound = 4;
    for (std::size_t i = 0; i < pres.relators.size(); ++i) {
        int row_span = -1;
        std::size_t jj = 0;
        for (std::size_t j = 0; j < q; ++j) {
            if (static_cast<int>(j) == remove) continue;
            blocks[i][jj] = phi_fox(pres.relators[i], static_cast<int>(j), rep);
            row_span = std::max(row_span, block_span(blocks[i][jj]));
            ++jj;
        }
        if (row_span < 0)
            throw std::domain_error("twisted_alexander: a relator has an all-zero Fox row");
        degree_bound += row_span;
    }
    std::vector<std::vector<LaurentPoly>> M(2 * pres.relators.size(),
                                            std::vector<LaurentPoly>(2 * cols));
    for (std::size_t i = 0; i < pres.relators.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const LaurentMat2& b = blocks[i][j];
            M[2 * i][2 * j] = b.a;
            M[2 * i][2 * j + 1] = b.b;
            M[2 * i + 1][2 * j] = b.c;
            M[2 * i + 1][2 * j + 1] = b.d;
        }
    LaurentPoly num = det_block(M, degree_bound);
    return finalize(laurent_divide_exact(num, den, opt.div_tol), opt);
}

TwistedPoly twisted_alexander_fastpath(const Presentation& pres, const RepAssignment& rep,
                                       const Word& w, const EngineOptions& opt) {
    if (pres.generators.size() != 2 || pres.relators.size() != 1)
        throw std::invalid_argument("fastpath: requires a two-generator one-relator presentation");
    validate_rep_sizes(rep, 2);
    // Identify which generator plays the commutator role a in r = a w a^-1 w^-1;
    // the derivative is taken with respect to the other one.
    int deriv_gen = -1;
    for (int cand = 0; cand < 2; ++cand) {
        Word a = Word::generator(cand);
        if (a * w * a.inverse() * w.inverse() == pres.relators[0]) {
            deriv_gen = 1 - cand;
            break;
        }
    }
    if (deriv_gen < 0)
        throw std::invalid_argument("fastpath: relator is not the commutator of w with a generator");
    return finalize(laurent_det2(phi_fox(w, deriv_gen, rep)), opt);
}

ClosedFormPrediction closed_form_top(const FamilySpec& f, Orientation o, CD z) {
    ClosedFormPrediction pred;
    if (f.kind == FamilySpec::Kind::J) {
        if (!o.flip) {
            pred.coeff = ratio_T_minus_2(f.m, z);
            pred.hi = 4 * f.n - 2;
            pred.lo = -2;
        } else {
            pred.coeff = ratio_T_minus_2(f.n, trace_v(f.m, 2.0, 2.0, z));
            pred.hi = 4 * f.m;
            pred.lo = 0;
        }
        return pred;
    }
    // C family traces at the parabolic slice.
    CD sm = cheb_eval_S(f.m, z), sm1 = cheb_eval_S(f.m - 1, z);
    CD zm2 = z - 2.0;
    CD vbar = 2.0 + zm2 * zm2 * sm1 * sm1;
    if (!o.flip) {
        CD v22 = sm * sm + (2.0 - 2.0 * z) * sm * sm1 + (3.0 - 3.0 * z + z * z) * sm1 * sm1;
        CD alpha = cheb_eval_S(f.n, vbar) - v22 * cheb_eval_S(f.n - 1, vbar);
        CD ubar = 2.0 + zm2 * alpha * alpha;
        pred.coeff = ratio_T_minus_2(f.p, ubar) * ratio_T_minus_2(f.n, vbar) *
                     ratio_T_minus_2(f.m, z);
        pred.hi = 0;
        pred.lo = -4;
    } else {
        pred.coeff = ratio_T_minus_2(f.n, vbar);
        pred.hi = 4 * f.p - 2;
        pred.lo = 2 - 4 * f.m;
    }
    return pred;
}

LaurentPoly reduced_alexander(const Presentation& pres, const EngineOptions& opt) {
    const std::size_t q = pres.generators.size();
    if (q < 2 || pres.relators.size() != q - 1)
        throw std::invalid_argument(
            "reduced_alexander: need q generators and q-1 relators with q >= 2");
    int remove = -1;
    for (std::size_t j = 0; j < q; ++j)
        if (pres.degrees[j] != 0) {
            remove = static_cast<int>(j);
            break;
        }
    if (remove < 0)
        throw std::domain_error("reduced_alexander: all generator degrees are zero");

    // Scalar Phi: generator -> t^degree. Stream the Fox derivatives directly.
    auto scalar_fox = [&](const Word& r, int gen) {
        std::map<int, CD> acc;
        long exponent = 0;
        const Letter target = static_cast<Letter>(gen + 1);
        for (Letter l : r.letters()) {
            std::size_t g = static_cast<std::size_t>(std::abs(l) - 1);
            if (l == target) acc[static_cast<int>(exponent)] += 1.0;
            exponent += (l > 0 ? 1 : -1) * pres.degrees[g];
            if (l == -target) acc[static_cast<int>(exponent)] -= 1.0;
        }
        if (acc.empty()) return LaurentPoly{};
        int lo = acc.begin()->first;
        std::vector<CD> coeffs(static_cast<std::size_t>(acc.rbegin()->first - lo + 1));
        for (const auto& [e, c] : acc) coeffs[static_cast<std::size_t>(e - lo)] = c;
        return LaurentPoly(lo, std::move(coeffs));
    };

    std::vector<std::vector<LaurentPoly>> M(q - 1, std::vector<LaurentPoly>(q - 1));
    int degree_bound = 4;
    for (std::size_t i = 0; i < q - 1; ++i) {
        int row_span = 0;
        std::size_t jj = 0;
        for (std::size_t j = 0; j < q; ++j) {
            if (static_cast<int>(j) == remove) continue;
            M[i][jj] = scalar_fox(pres.relators[i], static_cast<int>(j));
            row_span = std::max(row_span, M[i][jj].span());
            ++jj;
        }
        degree_bound += row_span;
    }
    LaurentPoly num = det_block(M, degree_bound);
    // den = 1 - t^deg(remove)
    int d = pres.degrees[static_cast<std::size_t>(remove)];
    LaurentPoly den = LaurentPoly::one() - LaurentPoly::monomial(1.0, d);
    LaurentPoly wada = laurent_divide_exact(num, den, opt.div_tol);
    // Delta_L = (t - 1) * Wada at the trivial representation.
    LaurentPoly tm1 = LaurentPoly::monomial(1.0, 1) - LaurentPoly::one();
    LaurentPoly delta = laurent_normalize(tm1 * wada, opt.normalize_threshold);
    return delta.is_zero() ? delta : delta.shifted(-delta.lo());
}

DetectionVerdict detection_verdict(const TwistedPoly& tp, const GroundTruth& gt) {
    DetectionVerdict v;
    v.span = tp.span;
    v.monic = tp.monic;
    v.tolerance_unstable = tp.tolerance_unstable;
    v.genus_detected = (tp.span == gt.degree_prediction);
    v.fiber_applicable = (gt.fibered != Fibered::Unknown);
    if (v.fiber_applicable) v.fiber_detected = (tp.monic == (gt.fibered == Fibered::Yes));
    return v;
}

} // namespace talex
