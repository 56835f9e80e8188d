#pragma once

// Subsets of a fixed brace and the closure operators and predicates on them.
// Every ElementSet remembers its ambient brace; combining sets from
// different braces is an error, never a silent coercion.

#include <initializer_list>
#include <vector>

#include "bracekit/core.hpp"

namespace bracekit {

class ElementSet {
public:
    explicit ElementSet(BracePtr ambient);

    static ElementSet zero_only(BracePtr ambient);
    static ElementSet full(BracePtr ambient);
    static ElementSet of(BracePtr ambient, const std::vector<int>& members);
    static ElementSet of(BracePtr ambient, std::initializer_list<int> members);

    const BracePtr& ambient() const { return ambient_; }
    int ambient_order() const { return static_cast<int>(flags_.size()); }

    bool contains(int x) const { return flags_[x] != 0; }
    // Returns true if x was new.
    bool insert(int x);
    int size() const { return count_; }
    bool is_trivial() const { return count_ == 1 && flags_[0]; }
    bool is_full() const { return count_ == ambient_order(); }

    std::vector<int> members() const;  // ascending

    bool is_subset_of(const ElementSet& other) const;
    ElementSet unite(const ElementSet& other) const;
    ElementSet intersect(const ElementSet& other) const;

    bool operator==(const ElementSet& other) const;

private:
    void require_same_ambient(const ElementSet& other) const;

    BracePtr ambient_;
    std::vector<char> flags_;
    int count_ = 0;
};

// Throws AmbientMismatchError unless the set is bound to this brace.
void require_bound(const BracePtr& brace, const ElementSet& s);

// Smallest subgroup of (A, +) containing s.
ElementSet additive_closure(const ElementSet& s);

// Smallest ideal containing s: alternates additive closure, conjugation
// under +, and two-sided star absorption until a fixed point.
ElementSet ideal_closure(const ElementSet& s);

// Normal subgroup of (A, +) absorbed by star on both sides.
bool is_ideal(const ElementSet& s);

// Normal subgroup of (A, +), subgroup of (A, o), with A * S inside S.
bool is_strong_left_ideal(const ElementSet& s);

// Closed under both operations and both inverses, containing 0.
bool is_subbrace(const ElementSet& s);

// { z : z + a = a + z for all a }
ElementSet additive_center(const BracePtr& a);

// Elements of the additive center killing the distributor in every slot:
// [z,b,c] = [b,z,c] = [b,c,z] = 0 for all b, c.
ElementSet radical_center(const BracePtr& a);

// Every ideal, obtained as the join closure of the principal ideals.
// Sorted by size, then by member list.
std::vector<ElementSet> all_ideals(const BracePtr& a);

// A subbrace reindexed as a brace of its own.  to_parent maps new indices
// to ambient indices (ascending, so 0 stays 0); from_parent is the partial
// inverse with -1 off the subset.
struct SubBrace {
    BracePtr brace;
    std::vector<int> to_parent;
    std::vector<int> from_parent;

    // Image of an ambient-bound subset inside the extracted brace.
    ElementSet pull_set(const ElementSet& ambient_subset) const;
};

SubBrace sub_brace(const ElementSet& s);

}  // namespace bracekit
