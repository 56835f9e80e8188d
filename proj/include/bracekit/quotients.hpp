#pragma once

// Quotients by ideals, the four variety membership tests, and reflection
// onto each subvariety (quotient by the matching full commutator).

#include "bracekit/commutators.hpp"

namespace bracekit {

struct Quotient {
    BracePtr source;
    ElementSet ideal;
    BracePtr target;
    Hom projection;  // kernel equals `ideal`, checked at construction
};

// Cosets labelled by ascending minimal representative; the coset of 0 is
// label 0.  Well-definedness of both induced tables is checked exhaustively
// before the target is validated.  Throws NotAnIdealError or
// WellDefinednessError.
Quotient quotient(const BracePtr& a, const ElementSet& ideal);

// Identity check for membership in the subvariety X.
bool in_variety(const BracePtr& a, Variety x);

// Universal quotient of A inside X: kernel is A*A for Grp, A' for Ab, the
// radicalator for RadRng and the ideal closure of additive commutators
// for BR.
Quotient reflect(const BracePtr& a, Variety x);

// True when every homomorphism A -> T factors through reflect(A, X)
// exactly once.  T must lie in X; throws NotInVarietyError otherwise.
bool check_reflector_universality(const BracePtr& a, Variety x, const BracePtr& t);

// Hom between two quotient targets induced by f when f maps the first
// ideal into the second: label of a |-> label of f(a).
Hom induced_hom(const Hom& f, const Quotient& qa, const Quotient& qb);

}  // namespace bracekit
