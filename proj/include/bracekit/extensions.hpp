#pragma once

// Surjections viewed as extensions, pullbacks along a common target, and
// the two notions of centrality relative to a subvariety: the algebraic one
// (the kernel commutes out) and the categorical one (the two pullback
// projections agree on the full relative commutator of the pullback).

#include <utility>

#include "bracekit/quotients.hpp"

namespace bracekit {

// Kernel of f as a subset of the source.  Throws OracleDisagreementError
// if the kernel of a checked homomorphism is somehow not an ideal.
ElementSet kernel(const Hom& f);

struct Extension {
    Hom hom;            // surjective
    ElementSet kernel;  // ideal of hom.source
};

// Throws InvalidArgumentError unless f is a checked surjective hom.
Extension make_extension(const Hom& f);
Extension quotient_extension(const Quotient& q);

// A x_B A': elements are pairs (x, y) with f(x) = g(y), ordered
// lexicographically so (0, 0) is element 0.  s and t are the projections.
struct Pullback {
    BracePtr object;
    Hom s;
    Hom t;
    std::vector<std::pair<int, int>> pairs;  // index -> (x, y)
};

// Throws TargetMismatchError unless f and g share a target brace.
Pullback pullback(const Hom& f, const Hom& g);

// [Ker f, A]_X = 0.  For RadRng the answer is cross-checked against
// membership of the kernel in the radical center; a mismatch throws
// OracleDisagreementError.
bool is_central_algebraic(const Extension& e, Variety x);

// s = t on [P, P]_X where P = A x_B A is the kernel pair of the extension.
bool is_central_categorical(const Extension& e, Variety x);

}  // namespace bracekit
