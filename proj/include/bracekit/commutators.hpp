#pragma once

// Relative commutators [I, A]_X for the four reflective subvarieties X,
// the classical full-brace instances (A*A, the derived ideal, the
// radicalator), and the Huq-style minimal-cocommuting ideal computed by an
// independent lattice scan.

#include <array>
#include <optional>
#include <string>

#include "bracekit/subobjects.hpp"

namespace bracekit {

// The four subvarieties, each cut out by identities:
//   Grp:    x + y = x o y
//   RadRng: (a + b) o c = a o c - c + b o c, and + commutative
//   BR:     + commutative
//   Ab:     both operations coincide and are commutative
enum class Variety { Grp, RadRng, BR, Ab };

inline constexpr std::array<Variety, 4> all_varieties{Variety::Grp, Variety::RadRng,
                                                      Variety::BR, Variety::Ab};

std::string variety_name(Variety x);
std::optional<Variety> parse_variety(const std::string& name);

// [I, A]_X from the defining generator sets, verbatim:
//   Grp:    additive closure of a*b, b*a, c + (b*a) - c          (a in I; b, c in A)
//   RadRng: additive closure of [a,b,c], [c,a,b], [b,c,a], a+b-a-b (a in I; b, c in A)
//   BR:     ideal closure of k + a - k - a                        (k in I; a in A)
//   Ab:     additive closure of [i,b]_+, i*b, [i,b]_o             (i in I; b in A)
// Throws NotAnIdealError unless I is an ideal of A.
ElementSet rel_commutator(const BracePtr& a, const ElementSet& ideal, Variety x);

// A*A: additive closure of all a*b.  Checked to be an ideal before returning.
ElementSet star_ideal(const BracePtr& a);

// A': additive closure of all a*b and all a+b-a-b.  Checked to be an ideal.
ElementSet derived_ideal(const BracePtr& a);

// [A, A]_RadRng.
ElementSet radicalator(const BracePtr& a);

// Additive closure of a*b and b*a for a in I, b in A.  This drops the
// conjugation generators and is NOT an ideal in general; callers probe it
// with is_ideal.
ElementSet naive_star_set(const BracePtr& a, const ElementSet& ideal);

// Smallest ideal J such that (i, x) |-> image(i) + image(x) is a brace
// homomorphism I x A -> A/J.  Scans all_ideals ascending and verifies the
// first hit is contained in every other hit; throws NoMinimumError if not.
// Independent of rel_commutator by construction.
ElementSet huq_commutator(const BracePtr& a, const ElementSet& ideal);

}  // namespace bracekit
