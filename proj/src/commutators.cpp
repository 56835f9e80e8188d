#include "bracekit/commutators.hpp"

namespace bracekit {

std::string variety_name(Variety x) {
    switch (x) {
        case Variety::Grp: return "Grp";
        case Variety::RadRng: return "RadRng";
        case Variety::BR: return "BR";
        case Variety::Ab: return "Ab";
    }
    return "?";
}

std::optional<Variety> parse_variety(const std::string& name) {
    for (Variety x : all_varieties)
        if (variety_name(x) == name) return x;
    return std::nullopt;
}

ElementSet rel_commutator(const BracePtr& a, const ElementSet& ideal, Variety x) {
    require_bound(a, ideal);
    if (!is_ideal(ideal)) throw NotAnIdealError("relative commutator needs an ideal");
    const int n = a->order();
    ElementSet gens(a);
    auto mem = ideal.members();
    switch (x) {
        case Variety::Grp:
            for (int i : mem)
                for (int b = 0; b < n; ++b) {
                    gens.insert(a->star(i, b));
                    int s = a->star(b, i);
                    gens.insert(s);
                    for (int c = 0; c < n; ++c) gens.insert(a->conj(c, s));
                }
            return additive_closure(gens);
        case Variety::RadRng:
            for (int i : mem)
                for (int b = 0; b < n; ++b) {
                    for (int c = 0; c < n; ++c) {
                        gens.insert(a->distributor(i, b, c));
                        gens.insert(a->distributor(c, i, b));
                        gens.insert(a->distributor(b, c, i));
                    }
                    gens.insert(a->add_commutator(i, b));
                }
            return additive_closure(gens);
        case Variety::BR:
            for (int k : mem)
                for (int b = 0; b < n; ++b) gens.insert(a->add_commutator(k, b));
            return ideal_closure(gens);
        case Variety::Ab:
            for (int i : mem)
                for (int b = 0; b < n; ++b) {
                    gens.insert(a->add_commutator(i, b));
                    gens.insert(a->star(i, b));
                    gens.insert(a->circ_commutator(i, b));
                }
            return additive_closure(gens);
    }
    throw InvalidArgumentError("unknown variety");
}

namespace {

ElementSet checked_ideal(ElementSet s, const char* what) {
    if (!is_ideal(s))
        throw OracleDisagreementError(std::string(what) + " closed up to a non-ideal");
    return s;
}

}  // namespace

ElementSet star_ideal(const BracePtr& a) {
    const int n = a->order();
    ElementSet gens(a);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) gens.insert(a->star(x, y));
    return checked_ideal(additive_closure(gens), "star ideal");
}

ElementSet derived_ideal(const BracePtr& a) {
    const int n = a->order();
    ElementSet gens(a);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            gens.insert(a->star(x, y));
            gens.insert(a->add_commutator(x, y));
        }
    return checked_ideal(additive_closure(gens), "derived ideal");
}

ElementSet radicalator(const BracePtr& a) {
    return rel_commutator(a, ElementSet::full(a), Variety::RadRng);
}

ElementSet naive_star_set(const BracePtr& a, const ElementSet& ideal) {
    require_bound(a, ideal);
    if (!is_ideal(ideal)) throw NotAnIdealError("naive star set needs an ideal");
    const int n = a->order();
    ElementSet gens(a);
    for (int i : ideal.members())
        for (int b = 0; b < n; ++b) {
            gens.insert(a->star(i, b));
            gens.insert(a->star(b, i));
        }
    return additive_closure(gens);
}

namespace {

// Does (i, x) |-> pi(i) + pi(x) define a brace homomorphism I x A -> A/J?
// Cosets are compared through membership of differences in J.
bool cocommutes_mod(const BracePtr& a, const std::vector<int>& ideal_members,
                    const ElementSet& j) {
    const int n = a->order();
    for (int i1 : ideal_members)
        for (int i2 : ideal_members)
            for (int x1 = 0; x1 < n; ++x1)
                for (int x2 = 0; x2 < n; ++x2) {
                    int lhs = a->add(a->add(i1, i2), a->add(x1, x2));
                    int rhs = a->add(a->add(i1, x1), a->add(i2, x2));
                    if (!j.contains(a->sub(lhs, rhs))) return false;
                    lhs = a->add(a->circ(i1, i2), a->circ(x1, x2));
                    rhs = a->circ(a->add(i1, x1), a->add(i2, x2));
                    if (!j.contains(a->sub(lhs, rhs))) return false;
                }
    return true;
}

}  // namespace

ElementSet huq_commutator(const BracePtr& a, const ElementSet& ideal) {
    require_bound(a, ideal);
    if (!is_ideal(ideal)) throw NotAnIdealError("Huq commutator needs an ideal");
    auto mem = ideal.members();
    std::vector<ElementSet> hits;
    for (const auto& j : all_ideals(a))
        if (cocommutes_mod(a, mem, j)) hits.push_back(j);
    if (hits.empty()) throw NoMinimumError("no ideal makes the pairing a homomorphism");
    for (const auto& j : hits)
        if (!hits.front().is_subset_of(j))
            throw NoMinimumError("qualifying ideals have no least element");
    return hits.front();
}

}  // namespace bracekit
