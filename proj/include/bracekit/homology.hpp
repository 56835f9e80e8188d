#pragma once

// First homology relative to a subvariety (the reflection quotient), the
// lower central series it controls, the Hopf-style subquotient of an
// extension, and the five-term tail
//
//   K/[K,A]_X --d--> H1(A, X) --h--> H1(B, X) --> 0
//
// with machine-checked exactness at the two right positions.

#include "bracekit/extensions.hpp"

namespace bracekit {

// H1(A, X) = A / [A, A]_X, returned with its projection.
Quotient h1(const BracePtr& a, Variety x);

// A = A_0 >= A_1 >= ... with A_{i+1} = [A_i, A]_X.  The returned list
// starts at the full set and ends at the first trivial or repeated term
// (the repeat is kept, so a stable series shows its plateau).  Throws
// BoundExceededError after max_terms entries.
std::vector<ElementSet> lower_central_series(const BracePtr& a, Variety x,
                                             int max_terms = 64);

// (K cap [A,A]_X) / [K,A]_X for an extension with kernel K, as a brace of
// its own.  Throws through sub_brace/quotient if either layer is not an
// ideal where required.
Quotient hopf_quotient(const Extension& e, Variety x);

struct FiveTermReport {
    Quotient k_mod;      // K/[K,A]_X over the kernel subbrace
    Quotient h1_source;  // H1(A, X)
    Quotient h1_target;  // H1(B, X)
    Hom d;               // induced by the inclusion K -> A
    Hom h;               // induced by the extension map A -> B
    bool exact_at_middle = false;  // image(d) == kernel(h)
    bool exact_at_end = false;     // h surjective
    std::string witness;           // first violation, empty when exact
};

FiveTermReport five_term_tail(const Extension& e, Variety x);

}  // namespace bracekit
