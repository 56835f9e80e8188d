#pragma once

// Exhaustive enumeration of small groups and skew braces up to isomorphism,
// canonical forms, isomorphism testing, and homomorphism enumeration.
//
// Groups are generated by a discovery-order table search: cells are resolved
// in a fixed scan order, each either reuses an existing label or introduces
// the next fresh one, so relabelled copies of the same group collapse to a
// handful of search leaves instead of (n-1)! of them.  Skew braces on a
// fixed additive group are found by assigning to each element an additive
// automorphism (its lambda map) under the closure law
// lambda_a lambda_b = lambda_{a + lambda_a(b)}; the circle table is then
// a o b = a + lambda_a(b).

#include <string>
#include <vector>

#include "bracekit/core.hpp"

namespace bracekit {

// Largest order enumeration accepts, from BRACEKIT_MAX_ORDER (default 24).
int enumeration_bound();

// One group table per isomorphism class, identity at 0, sorted by canonical
// table bytes.  Memoized.  Throws BoundExceededError above the bound.
std::vector<OpTable> groups_of_order(int n);

// All automorphisms of a group table, as permutations, sorted.
std::vector<std::vector<int>> automorphisms(const OpTable& add);

// Skew braces with additive group `add`, one per isomorphism class, sorted
// by canonical form.
std::vector<BracePtr> skew_braces_on(const OpTable& add);

// The same classes found by direct backtracking over circle tables, using
// only the brace axioms for pruning and pairwise isomorphism tests for
// deduplication.  Cross-check for skew_braces_on; intended for small orders.
std::vector<BracePtr> skew_braces_on_by_table_search(const OpTable& add);

// Union over all additive groups of order n, sorted by canonical form.
// Memoized.  Throws BoundExceededError above the bound.
std::vector<BracePtr> all_skew_braces(int n);

// Lexicographically minimal (add, circ) encoding over relabelings fixing 0.
// Equal canonical forms characterize isomorphic braces.
struct CanonicalForm {
    std::vector<unsigned char> bytes;

    bool operator==(const CanonicalForm&) const = default;
    bool operator<(const CanonicalForm& o) const { return bytes < o.bytes; }
    std::string digest() const;  // FNV-1a 64 as 16 hex chars
};

CanonicalForm canonical_form(const BracePtr& a);

// Minimal single-table encoding, used to deduplicate groups.
std::vector<unsigned char> canonical_group_table(const OpTable& add);

// Isomorphism search that never touches canonical forms: backtracking over
// images with element-order filtering.
bool are_isomorphic(const BracePtr& a, const BracePtr& b);

// Greedy minimal generating sequence of A as a skew brace.
std::vector<int> brace_generators(const BracePtr& a);

// Every brace homomorphism A -> B (not only the surjective or injective
// ones), sorted by image table.  Throws BoundExceededError when either
// order exceeds `bound`.
std::vector<Hom> all_homs(const BracePtr& a, const BracePtr& b, int bound = 12);

// Parse every record of a .sbrace classification file and validate each
// entry; used to substitute a precomputed database for live enumeration.
std::vector<BracePtr> load_brace_database(const std::string& path);

}  // namespace bracekit
