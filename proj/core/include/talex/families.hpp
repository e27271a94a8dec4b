// The two parameterized 2-bridge link families: presentation builders on
// generators a, b and the ground-truth genus/fiberedness data per orientation.
//
//   J(2m+1, 2n+1): relator a w a^-1 w^-1 with
//     w = (b^-1 a)^m u^n,  u = (b a^-1)^m b a (b^-1 a)^m
//   C(2m, 2n, -2p): relator a w a^-1 w^-1 with
//     w = (b^-1 a)^m u^p,  u = a^-1 v^-n b v^n,  v = (a^-1 b)^m (a b^-1)^m
#pragma once

#include "talex/presentation.hpp"
#include "talex/word.hpp"

namespace talex {

struct FamilySpec {
    enum class Kind { J, C };
    Kind kind = Kind::J;
    int m = 1, n = 1, p = 1; // p unused for J
};

// flip=false is the default diagram orientation. flip=true reverses the
// component of meridian b for J (degrees a=1, b=-1) and of meridian a for C
// (degrees a=-1, b=1).
struct Orientation {
    bool flip = false;
};

enum class Fibered { No, Yes, Unknown };

struct GroundTruth {
    int genus = 0;
    Fibered fibered = Fibered::Unknown;
    int thurston_norm = 0;     // 2 * genus for these 2-component links
    int degree_prediction = 0; // 2 * thurston_norm
};

// Family words over generators a (index 0) and b (index 1), exposed for
// oracle tests and the fast engine path.
Word word_u_J(int m);
Word word_w_J(int m, int n);
Word word_v_C(int m);
Word word_u_C(int m, int n);
Word word_w_C(int m, int n, int p);

// Builders; parameters must be >= 1 (other sign cases are rejected).
Presentation presentation_J(int m, int n, Orientation o);
Presentation presentation_C(int m, int n, int p, Orientation o);

// The commutator word of the relator: a w a^-1 w^-1 for the family's w.
Word family_word_w(const FamilySpec& f);
Presentation family_presentation(const FamilySpec& f, Orientation o);

GroundTruth ground_truth(const FamilySpec& f, Orientation o);

// True when the J parameters give a hyperbolic link (m, n not in {-1, 0};
// always true on the implemented range m, n >= 1).
bool hyperbolic_J(int m, int n);

} // namespace talex
