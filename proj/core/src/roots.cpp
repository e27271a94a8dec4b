#include "talex/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace talex {

namespace {

using CD = std::complex<double>;
using CLD = std::complex<long double>;

constexpr int kIterationCap = 500;
constexpr double kRealThresholdScale = 1e-8; // |imag| < 1e-8*(1+|r|) => real

// Initial guesses on circles given by the Newton polygon (upper convex hull
// of (i, log|c_i|)): each hull edge of horizontal extent k contributes k
// points at radius (|c_lo|/|c_hi|)^(1/k). Far more robust than one Cauchy
// circle when coefficients span hundreds of orders of magnitude.
std::vector<CD> initial_guesses(const std::vector<double>& logabs) {
    const std::size_t n = logabs.size() - 1; // degree
    std::vector<std::size_t> hull;           // indices of upper hull vertices
    for (std::size_t i = 0; i <= n; ++i) {
        if (logabs[i] == -std::numeric_limits<double>::infinity()) continue;
        while (hull.size() >= 2) {
            std::size_t a = hull[hull.size() - 2], b = hull[hull.size() - 1];
            // Keep the hull upper-convex: drop b if it lies below segment a-i.
            double lhs = (logabs[b] - logabs[a]) * static_cast<double>(i - a);
            double rhs = (logabs[i] - logabs[a]) * static_cast<double>(b - a);
            if (lhs <= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(i);
    }
    std::vector<CD> guesses;
    guesses.reserve(n);
    const double two_pi = 2.0 * std::numbers::pi;
    std::size_t placed = 0;
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        std::size_t lo = hull[e], hi = hull[e + 1];
        std::size_t k = hi - lo;
        double r = std::exp((logabs[lo] - logabs[hi]) / static_cast<double>(k));
        r = std::clamp(r, 1e-150, 1e150);
        for (std::size_t j = 0; j < k; ++j) {
            double ang = two_pi * (static_cast<double>(placed) / static_cast<double>(n)) + 0.376;
            guesses.push_back(std::polar(r, ang));
            ++placed;
        }
    }
    while (guesses.size() < n) guesses.push_back(std::polar(1.0, 0.376 * double(guesses.size())));
    return guesses;
}

// One Horner sweep returning p(z) and p'(z).
std::pair<CD, CD> horner2(const std::vector<CD>& c, CD z) {
    CD p = c.back(), dp = 0.0;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
    return {p, dp};
}

// Scale-free backward-error estimate: |p(z)| relative to sum|c_i||z|^i.
// Overflow in either accumulator means the point is far outside the root
// disc, never that it converged.
double rel_residual(const std::vector<CD>& c, CD z) {
    CD p = 0.0;
    double mag = 0.0, az = std::abs(z);
    for (std::size_t i = c.size(); i-- > 0;) {
        p = p * z + c[i];
        mag = mag * az + std::abs(c[i]);
    }
    if (!std::isfinite(mag) || !std::isfinite(p.real()) || !std::isfinite(p.imag()))
        return std::numeric_limits<double>::infinity();
    return mag == 0.0 ? 0.0 : std::abs(p) / mag;
}

// Aberth-Ehrlich simultaneous iteration. Throws on iteration-cap exhaustion.
std::vector<CD> aberth(const std::vector<CD>& coeffs, double precision) {
    const std::size_t n = coeffs.size() - 1;
    std::vector<double> logabs(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        double a = std::abs(coeffs[i]);
        logabs[i] = a > 0 ? std::log(a) : -std::numeric_limits<double>::infinity();
    }
    std::vector<CD> z = initial_guesses(logabs);
    std::vector<bool> done(n, false);
    // Roots freeze only when strictly tighter than the final acceptance
    // threshold: a root frozen at a barely-acceptable backward residual inside
    // a tight cluster poisons the repulsion terms of its neighbours and the
    // rest of the cluster never resolves.
    const double settle = std::max(0.1 * precision, 1e-13);
    for (int iter = 0; iter < kIterationCap; ++iter) {
        bool all_done = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            auto [p, dp] = horner2(coeffs, z[i]);
            // High degrees overflow double at moderate |z| (deg 329 already at
            // |z| ~ 9); a guess outside the evaluable disc is pulled inward
            // instead of poisoning the iteration with NaNs.
            if (!std::isfinite(p.real()) || !std::isfinite(p.imag()) ||
                !std::isfinite(dp.real()) || !std::isfinite(dp.imag())) {
                z[i] *= 0.5;
                all_done = false;
                continue;
            }
            if (rel_residual(coeffs, z[i]) < settle) {
                done[i] = true;
                continue;
            }
            CD newton = (dp != 0.0) ? p / dp : CD(1.0, 1.0);
            CD sum = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                CD d = z[i] - z[j];
                if (std::abs(d) < 1e-300) d = CD(1e-300, 0);
                sum += 1.0 / d;
            }
            CD denom = 1.0 - newton * sum;
            CD corr = (std::abs(denom) > 1e-300) ? newton / denom : newton;
            CD znew = z[i] - corr;
            if (!std::isfinite(znew.real()) || !std::isfinite(znew.imag())) {
                z[i] *= 0.5;
                all_done = false;
                continue;
            }
            z[i] = znew;
            // Negated <= keeps a NaN|inf correction from counting as settled.
            if (!(std::abs(corr) <= 1e-14 * (1.0 + std::abs(z[i])))) all_done = false;
        }
        if (all_done) {
            bool converged = true;
            for (std::size_t i = 0; i < n && converged; ++i)
                converged = rel_residual(coeffs, z[i]) < precision;
            if (converged) return z;
        }
    }
    throw std::runtime_error("find_roots: Aberth iteration did not converge within 500 sweeps");
}

// Long-double Newton polish. The cap must accommodate clusters: near a
// k-fold quasi-multiple root Newton contracts linearly at rate (k-1)/k until
// the iterate is within the cluster separation, and only then quadratically,
// so a 3-cluster can need ~20 steps before the step-size break fires. Newton
// can also be kicked far away by a noise-dominated p/dp near a cluster, so
// the best iterate by relative residual is returned, never a worse one.
CD polish(const std::vector<CLD>& c, CD z0) {
    CLD z(z0.real(), z0.imag());
    CLD best = z;
    long double best_r = std::numeric_limits<long double>::infinity();
    auto eval3 = [&c](CLD x) {
        CLD p = c.back(), dp = 0.0L;
        long double mag = std::abs(c.back()), ax = std::abs(x);
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            dp = dp * x + p;
            p = p * x + c[i];
            mag = mag * ax + std::abs(c[i]);
        }
        long double r = mag > 0.0L ? std::abs(p) / mag : 0.0L;
        if (!std::isfinite(r)) r = std::numeric_limits<long double>::infinity();
        return std::tuple<CLD, CLD, long double>(p, dp, r);
    };
    for (int it = 0; it < 64; ++it) {
        auto [p, dp, r] = eval3(z);
        if (r < best_r) {
            best_r = r;
            best = z;
        }
        if (std::abs(dp) == 0.0L) break;
        CLD step = p / dp;
        z -= step;
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) break;
        if (std::abs(step) < 1e-18L * (1.0L + std::abs(z))) break;
    }
    if (std::isfinite(z.real()) && std::isfinite(z.imag())) {
        auto [p, dp, r] = eval3(z);
        if (r < best_r) best = z;
    }
    return {static_cast<double>(best.real()), static_cast<double>(best.imag())};
}

// Horner at complex z for real integer coefficients pre-converted to mpf;
// returns p and p' through the out-params.
void horner_mpf(const std::vector<mpf_class>& c, const mpf_class& zr, const mpf_class& zi,
                mpf_class& pr, mpf_class& pi, mpf_class& dr, mpf_class& di, mpf_class& t) {
    pr = c.back();
    pi = 0;
    dr = 0;
    di = 0;
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        t = dr * zr - di * zi + pr;
        di = dr * zi + di * zr + pi;
        dr = t;
        t = pr * zr - pi * zi + c[k];
        pi = pr * zi + pi * zr;
        pr = t;
    }
}

// Extended-precision Aberth stage on the exact integer coefficients.
//
// Double precision cannot even validate roots of these polynomials: the
// coefficient evaluation scale around |z| ~ 2 reaches 1e16 while the
// interesting function values are O(1), so every point in a large disc has
// backward residual at the rounding floor and a double-precision sweep can
// settle at points far from any root. The double stage is therefore only an
// initializer; this stage re-runs the simultaneous iteration in multiple
// precision and certifies each root by the forward criterion |p/p'|
// (meaningful because the coefficients are exact), keeping points distinct
// through Aberth repulsion.
//
// The working precision escalates (320 -> 2560 bits) until every root
// certifies: coefficient heights of 1e70+ push the evaluation noise floor
// (mag * 2^-bits, with mag ~ 1e130 on the mid annulus) above |p| near the
// worse-conditioned roots, and no iteration can certify -- or even see --
// a root whose neighbourhood evaluates below that floor.
std::vector<CD> aberth_extended(const IntPoly& p, const std::vector<CD>& starts) {
    const auto& ic = p.coeffs();
    const std::size_t n = starts.size();
    std::vector<CD> zd(starts);
    std::vector<bool> done(n, false);
    constexpr mp_bitcnt_t kBasePrec = 320;
    constexpr int kMaxLevels = 4; // 320, 640, 1280, 2560 bits
    std::vector<mpf_class> zr, zi;
    zr.reserve(n);
    zi.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        zr.emplace_back(starts[i].real(), kBasePrec);
        zi.emplace_back(starts[i].imag(), kBasePrec);
    }
    mp_bitcnt_t prec = kBasePrec;
    for (int level = 0; level < kMaxLevels; ++level, prec *= 2) {
        if (level > 0) {
            // mpf assignment keeps the destination precision, so positions
            // are rebuilt wholesale at the wider precision.
            std::vector<mpf_class> zr2, zi2;
            zr2.reserve(n);
            zi2.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                zr2.emplace_back(zr[i], prec);
                zi2.emplace_back(zi[i], prec);
            }
            zr = std::move(zr2);
            zi = std::move(zi2);
        }
        std::vector<mpf_class> c;
        c.reserve(ic.size());
        for (const auto& v : ic) c.emplace_back(v, prec);
        mpf_class pr(0, prec), pi(0, prec), dr(0, prec), di(0, prec), t(0, prec);
        mpf_class d2(0, prec), nr(0, prec), ni(0, prec);
        // Phase A: simultaneous Aberth sweeps. Converged points freeze on a
        // forward-error certificate |p/p'| < 1e-22(1+|z|), which for a simple
        // root bounds the distance to it by ~the same amount. Progress stalls
        // either when the remaining pack competes for local chairs (phase B
        // resolves that) or when the noise floor hides the remaining roots
        // (the next precision level resolves that), so stop early once no new
        // certificate has appeared for a while.
        const int sweep_cap = std::max<int>(120, 2 * static_cast<int>(n));
        int last_progress = -1;
        for (int iter = 0; iter < sweep_cap && iter - last_progress <= 40; ++iter) {
            bool all_done = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (done[i]) continue;
                horner_mpf(c, zr[i], zi[i], pr, pi, dr, di, t);
                d2 = dr * dr + di * di;
                const double zmag = std::abs(zd[i]);
                if (d2 == 0) {
                    if (pr == 0 && pi == 0) {
                        done[i] = true; // exact multiple root hit dead-on
                        last_progress = iter;
                        continue;
                    }
                    zr[i] += 1e-3 * (1.0 + zmag); // critical point: nudge off it
                    zd[i] = CD(zr[i].get_d(), zi[i].get_d());
                    all_done = false;
                    continue;
                }
                nr = (pr * dr + pi * di) / d2;
                ni = (pi * dr - pr * di) / d2;
                const double nlen = std::hypot(nr.get_d(), ni.get_d());
                if (nlen < 1e-22 * (1.0 + zmag)) {
                    done[i] = true; // forward error certificate, not backward
                    last_progress = iter;
                    continue;
                }
                // Repulsion in double suffices (correction-sized term of order
                // n / separation); colliding snapshots get a floor.
                CD S = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == i) continue;
                    CD d = zd[i] - zd[j];
                    if (std::abs(d) < 1e-12 * (1.0 + zmag)) d = CD(1e-12 * (1.0 + zmag), 0.0);
                    S += 1.0 / d;
                }
                const CD N(nr.get_d(), ni.get_d());
                const CD den = 1.0 - N * S;
                const CD invden = (std::abs(den) > 1e-300) ? 1.0 / den : CD(1.0, 0.0);
                t = nr * invden.real() - ni * invden.imag();
                ni = nr * invden.imag() + ni * invden.real();
                nr = t;
                zr[i] -= nr;
                zi[i] -= ni;
                zd[i] = CD(zr[i].get_d(), zi[i].get_d());
                if (!(std::hypot(nr.get_d(), ni.get_d()) <= 1e-22 * (1.0 + std::abs(zd[i]))))
                    all_done = false;
            }
            if (all_done) break;
        }
        // Two certified points closer than double resolution sit on the same
        // root; keep one and send the others through phase B toward the
        // chairs they left empty. (A genuinely distinct root pair this close
        // would be indistinguishable in the double output anyway; the
        // reactivated point re-certifies in place immediately in that case.)
        for (std::size_t i = 0; i < n; ++i) {
            if (!done[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!done[j]) continue;
                if (std::abs(zd[i] - zd[j]) < 1e-14 * (1.0 + std::abs(zd[i]))) done[j] = false;
            }
        }
        // Phase B: sequential Newton with Maehly deflation. Certified roots
        // act as poles of p(z)/prod(z - r_claimed), so an occupied chair
        // repels (N*S ~ 1 exactly in its neighbourhood) and the walker
        // converges to an unclaimed root; each success immediately becomes a
        // pole for the rest. A walker that fails all attempts signals that
        // this precision level cannot see its root: escalate.
        std::vector<CD> claimed;
        for (std::size_t i = 0; i < n; ++i)
            if (done[i]) claimed.push_back(zd[i]);
        bool level_ok = true;
        for (std::size_t i = 0; i < n && level_ok; ++i) {
            if (done[i]) continue;
            const CD start = zd[i];
            const mpf_class keep_r(zr[i]), keep_i(zi[i]);
            for (int attempt = 0; attempt < 3 && !done[i]; ++attempt) {
                CD z0 = start;
                if (attempt > 0)
                    z0 += 0.05 * (1.0 + std::abs(start)) *
                          std::polar(1.0, 2.399963229728653 * attempt);
                zr[i] = mpf_class(z0.real(), prec);
                zi[i] = mpf_class(z0.imag(), prec);
                zd[i] = z0;
                for (int it = 0; it < 400; ++it) {
                    horner_mpf(c, zr[i], zi[i], pr, pi, dr, di, t);
                    d2 = dr * dr + di * di;
                    const double zmag = std::abs(zd[i]);
                    if (d2 == 0) {
                        if (pr == 0 && pi == 0) {
                            done[i] = true;
                            break;
                        }
                        zr[i] += 1e-3 * (1.0 + zmag);
                        zd[i] = CD(zr[i].get_d(), zi[i].get_d());
                        continue;
                    }
                    nr = (pr * dr + pi * di) / d2;
                    ni = (pi * dr - pr * di) / d2;
                    const double nlen = std::hypot(nr.get_d(), ni.get_d());
                    double mindist = std::numeric_limits<double>::infinity();
                    CD S = 0.0;
                    for (const CD& r : claimed) {
                        CD d = zd[i] - r;
                        const double ad = std::abs(d);
                        mindist = std::min(mindist, ad);
                        if (ad < 1e-30) d = CD(1e-30, 0.0);
                        S += 1.0 / d;
                    }
                    // Certify only away from every pole: |p/p'| is also tiny
                    // on an occupied chair, where the pole must kick instead.
                    if (nlen < 1e-22 * (1.0 + zmag) && mindist > 1e-18 * (1.0 + zmag)) {
                        done[i] = true;
                        break;
                    }
                    const CD N(nr.get_d(), ni.get_d());
                    const CD den = 1.0 - N * S;
                    const CD invden = (std::abs(den) > 1e-300) ? 1.0 / den : CD(1.0, 0.0);
                    t = nr * invden.real() - ni * invden.imag();
                    ni = nr * invden.imag() + ni * invden.real();
                    nr = t;
                    // Clamp the escape kick a near-pole denominator produces.
                    const double clen = std::hypot(nr.get_d(), ni.get_d());
                    const double cmax = 0.5 * (1.0 + zmag);
                    if (clen > cmax) {
                        nr *= cmax / clen;
                        ni *= cmax / clen;
                    }
                    zr[i] -= nr;
                    zi[i] -= ni;
                    zd[i] = CD(zr[i].get_d(), zi[i].get_d());
                }
            }
            if (done[i]) {
                claimed.push_back(zd[i]);
            } else {
                // Restore the pre-walk position as the next level's start.
                zr[i] = keep_r;
                zi[i] = keep_i;
                zd[i] = start;
                level_ok = false;
            }
        }
        if (!level_ok) {
            if (level + 1 >= kMaxLevels)
                throw std::runtime_error(
                    "find_roots: root refinement failed to certify all roots at maximum "
                    "precision");
            continue;
        }
        // Forward-error validation of every root before rounding to double.
        std::vector<CD> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            horner_mpf(c, zr[i], zi[i], pr, pi, dr, di, t);
            d2 = dr * dr + di * di;
            const double zmag = std::abs(zd[i]);
            if (d2 == 0) {
                if (!(pr == 0 && pi == 0))
                    throw std::runtime_error(
                        "find_roots: extended refinement stalled at a critical point");
            } else {
                nr = (pr * dr + pi * di) / d2;
                ni = (pi * dr - pr * di) / d2;
                if (!(std::hypot(nr.get_d(), ni.get_d()) <= 1e-12 * (1.0 + zmag)))
                    throw std::runtime_error(
                        "find_roots: extended refinement did not converge to a root");
            }
            out[i] = zd[i];
        }
        return out;
    }
    throw std::runtime_error("find_roots: root refinement failed to certify all roots");
}

std::vector<CD> scaled_double_coeffs(const IntPoly& p) {
    long emax = 0;
    bool first = true;
    for (const auto& v : p.coeffs()) {
        if (v == 0) continue;
        long e;
        (void)mpz_get_d_2exp(&e, v.get_mpz_t());
        if (first || e > emax) emax = e;
        first = false;
    }
    std::vector<CD> out(p.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (p.coeffs()[i] == 0) continue;
        long e;
        double m = mpz_get_d_2exp(&e, p.coeffs()[i].get_mpz_t());
        out[i] = std::ldexp(m, static_cast<int>(e - emax));
    }
    if (std::abs(out.back()) == 0.0)
        throw std::runtime_error(
            "find_roots: leading coefficient underflows the double scale (coefficient spread too "
            "large)");
    return out;
}

// Force exact conjugate symmetry on root lists of real polynomials and flag
// real roots; sort for determinism.
void canonicalize(std::vector<CD>& roots) {
    for (auto& r : roots)
        if (std::abs(r.imag()) < kRealThresholdScale * (1.0 + std::abs(r))) r = CD(r.real(), 0.0);
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i] || roots[i].imag() <= 0.0) continue;
        std::size_t best = roots.size();
        double bestd = std::numeric_limits<double>::max();
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j == i || used[j] || roots[j].imag() >= 0.0) continue;
            double d = std::abs(roots[j] - std::conj(roots[i]));
            if (d < bestd) {
                bestd = d;
                best = j;
            }
        }
        if (best < roots.size() && bestd < 1e-6 * (1.0 + std::abs(roots[i]))) {
            CD avg = 0.5 * (roots[i] + std::conj(roots[best]));
            roots[i] = avg;
            roots[best] = std::conj(avg);
            used[i] = used[best] = true;
        }
    }
    std::sort(roots.begin(), roots.end(), [](CD a, CD b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

} // namespace

std::vector<Root> find_roots(const IntPoly& p, double precision) {
    if (p.is_zero() || p.degree() < 1)
        throw std::invalid_argument("find_roots: polynomial must have degree >= 1");
    std::vector<Root> out;
    auto decomposition = squarefree_decomposition(p);
    for (const auto& [factor, mult] : decomposition) {
        if (factor.degree() < 1) continue;
        auto dc = scaled_double_coeffs(factor);
        std::vector<double> logabs(dc.size());
        for (std::size_t i = 0; i < dc.size(); ++i) {
            double a = std::abs(dc[i]);
            logabs[i] = a > 0 ? std::log(a) : -std::numeric_limits<double>::infinity();
        }
        std::vector<CD> starts = initial_guesses(logabs);
        double maxrad = 1.0;
        for (const CD& g : starts) maxrad = std::max(maxrad, std::abs(g));
        // The double warm-start stage is only usable when the whole root
        // annulus is evaluable in double: past that, |z|^deg overflows and
        // the overflow guard would drag the outer guesses into the small-|z|
        // region, hiding every large root from the extended stage.
        const bool double_safe =
            static_cast<double>(factor.degree()) * std::log10(maxrad) < 250.0;
        std::vector<CD> roots =
            double_safe ? aberth(dc, std::max(precision, 1e-13)) : starts;
        roots = aberth_extended(factor, roots);
        canonicalize(roots);
        for (CD r : roots) {
            Root rec;
            rec.value = r;
            rec.multiplicity = mult;
            rec.is_real = (r.imag() == 0.0);
            out.push_back(rec);
        }
    }
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

CPoly cpoly_add(const CPoly& a, const CPoly& b) {
    CPoly r(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

CPoly cpoly_mul(const CPoly& a, const CPoly& b) {
    if (a.empty() || b.empty()) return {};
    CPoly r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

CPoly cpoly_scale(const CPoly& a, std::complex<double> s) {
    CPoly r = a;
    for (auto& v : r) v *= s;
    return r;
}

CPoly cpoly_compose(const CPoly& outer, const CPoly& inner) {
    CPoly acc;
    for (std::size_t i = outer.size(); i-- > 0;) {
        acc = cpoly_mul(acc, inner);
        if (acc.empty()) acc.resize(1, 0.0);
        acc[0] += outer[i];
    }
    return acc;
}

std::complex<double> cpoly_eval(const CPoly& p, std::complex<double> x) {
    CD acc = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

CPoly cpoly_from(const IntPoly& p) {
    CPoly out(p.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coeffs()[i].get_d();
    return out;
}

std::vector<std::complex<double>> find_roots_complex(const CPoly& coeffs, double precision) {
    CPoly c = coeffs;
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() < 2) throw std::invalid_argument("find_roots_complex: degree must be >= 1");
    // Factor out roots at the origin.
    std::size_t zeros = 0;
    while (zeros < c.size() - 1 && std::abs(c[zeros]) == 0.0) ++zeros;
    std::vector<CD> roots(zeros, CD(0.0, 0.0));
    CPoly body(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end());
    if (body.size() >= 2) {
        auto found = aberth(body, std::max(precision, 1e-13));
        std::vector<CLD> ldc(body.size());
        for (std::size_t i = 0; i < body.size(); ++i) ldc[i] = CLD(body[i].real(), body[i].imag());
        for (auto& r : found) r = polish(ldc, r);
        roots.insert(roots.end(), found.begin(), found.end());
    }
    std::sort(roots.begin(), roots.end(), [](CD a, CD b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

} // namespace talex
