#include "talex/families.hpp"

#include <stdexcept>

namespace talex {

namespace {

const Word kA = Word::generator(0);
const Word kB = Word::generator(1);

void require_ge1(int value, const char* name) {
    if (value < 1)
        throw std::invalid_argument(std::string("family parameter ") + name + " must be >= 1");
}

Presentation commutator_presentation(const Word& w, int deg_a, int deg_b) {
    Presentation p;
    p.generators = {"a", "b"};
    p.degrees = {deg_a, deg_b};
    p.relators = {kA * w * kA.inverse() * w.inverse()};
    return p;
}

} // namespace

Word word_u_J(int m) {
    Word ba1 = kB * kA.inverse();
    Word b1a = kB.inverse() * kA;
    return ba1.pow(m) * kB * kA * b1a.pow(m);
}

Word word_w_J(int m, int n) {
    Word b1a = kB.inverse() * kA;
    return b1a.pow(m) * word_u_J(m).pow(n);
}

Word word_v_C(int m) {
    Word a1b = kA.inverse() * kB;
    Word ab1 = kA * kB.inverse();
    return a1b.pow(m) * ab1.pow(m);
}

Word word_u_C(int m, int n) {
    Word v = word_v_C(m);
    return kA.inverse() * v.pow(-n) * kB * v.pow(n);
}

Word word_w_C(int m, int n, int p) {
    Word b1a = kB.inverse() * kA;
    return b1a.pow(m) * word_u_C(m, n).pow(p);
}

Presentation presentation_J(int m, int n, Orientation o) {
    require_ge1(m, "m");
    require_ge1(n, "n");
    return commutator_presentation(word_w_J(m, n), 1, o.flip ? -1 : 1);
}

Presentation presentation_C(int m, int n, int p, Orientation o) {
    require_ge1(m, "m");
    require_ge1(n, "n");
    require_ge1(p, "p");
    return commutator_presentation(word_w_C(m, n, p), o.flip ? -1 : 1, 1);
}

Word family_word_w(const FamilySpec& f) {
    if (f.kind == FamilySpec::Kind::J) {
        require_ge1(f.m, "m");
        require_ge1(f.n, "n");
        return word_w_J(f.m, f.n);
    }
    require_ge1(f.m, "m");
    require_ge1(f.n, "n");
    require_ge1(f.p, "p");
    return word_w_C(f.m, f.n, f.p);
}

Presentation family_presentation(const FamilySpec& f, Orientation o) {
    if (f.kind == FamilySpec::Kind::J) return presentation_J(f.m, f.n, o);
    return presentation_C(f.m, f.n, f.p, o);
}

GroundTruth ground_truth(const FamilySpec& f, Orientation o) {
    GroundTruth gt;
    if (f.kind == FamilySpec::Kind::J) {
        require_ge1(f.m, "m");
        require_ge1(f.n, "n");
        if (!o.flip) {
            gt.genus = f.n;
            gt.fibered = (f.m == 1) ? Fibered::Yes : Fibered::No;
        } else {
            gt.genus = f.m;
            gt.fibered = (f.n == 1) ? Fibered::Yes : Fibered::No;
        }
    } else {
        require_ge1(f.m, "m");
        require_ge1(f.n, "n");
        require_ge1(f.p, "p");
        gt.genus = o.flip ? f.m + f.p - 1 : 1;
        gt.fibered = Fibered::Unknown; // not determined for this family
    }
    gt.thurston_norm = 2 * gt.genus;
    gt.degree_prediction = 2 * gt.thurston_norm;
    return gt;
}

bool hyperbolic_J(int m, int n) { return m != 0 && m != -1 && n != 0 && n != -1; }

} // namespace talex
