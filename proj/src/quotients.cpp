#include "bracekit/quotients.hpp"

#include "bracekit/enumerate.hpp"

namespace bracekit {

Quotient quotient(const BracePtr& a, const ElementSet& ideal) {
    require_bound(a, ideal);
    if (!is_ideal(ideal)) throw NotAnIdealError("quotient needs an ideal");
    const int n = a->order();

    // Scanning ascending assigns each coset its minimal representative.
    std::vector<int> label(n, -1), rep;
    for (int x = 0; x < n; ++x) {
        if (label[x] >= 0) continue;
        int l = static_cast<int>(rep.size());
        rep.push_back(x);
        for (int s : ideal.members()) label[a->add(x, s)] = l;
        if (label[x] != l)
            throw WellDefinednessError('+', x, x, "coset scan revisited a labelled element");
    }

    const int q = static_cast<int>(rep.size());
    CayleyTablePair t{OpTable(q), OpTable(q)};
    for (int p = 0; p < q; ++p)
        for (int r = 0; r < q; ++r) {
            t.add.set(p, r, label[a->add(rep[p], rep[r])]);
            t.circ.set(p, r, label[a->circ(rep[p], rep[r])]);
        }
    // Exhaustive well-definedness: representatives must not matter.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (label[a->add(x, y)] != t.add.at(label[x], label[y]))
                throw WellDefinednessError('+', x, y, "addition is not constant on cosets");
            if (label[a->circ(x, y)] != t.circ.at(label[x], label[y]))
                throw WellDefinednessError('o', x, y, "circle is not constant on cosets");
        }

    BracePtr target = SkewBrace::validate(t);
    Hom proj = is_homomorphism(a, target, label);
    for (int x = 0; x < n; ++x)
        if ((proj.map[x] == 0) != ideal.contains(x))
            throw WellDefinednessError('+', x, x, "projection kernel differs from the ideal");
    return Quotient{a, ideal, target, std::move(proj)};
}

bool in_variety(const BracePtr& a, Variety x) {
    const int n = a->order();
    switch (x) {
        case Variety::Grp:
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    if (a->add(p, q) != a->circ(p, q)) return false;
            return true;
        case Variety::RadRng:
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    if (a->add(p, q) != a->add(q, p)) return false;
                    for (int r = 0; r < n; ++r)
                        if (a->distributor(p, q, r) != 0) return false;
                }
            return true;
        case Variety::BR:
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    if (a->add(p, q) != a->add(q, p)) return false;
            return true;
        case Variety::Ab:
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    if (a->add(p, q) != a->circ(p, q) || a->add(p, q) != a->add(q, p))
                        return false;
            return true;
    }
    throw InvalidArgumentError("unknown variety");
}

Quotient reflect(const BracePtr& a, Variety x) {
    switch (x) {
        case Variety::Grp: return quotient(a, star_ideal(a));
        case Variety::Ab: return quotient(a, derived_ideal(a));
        case Variety::RadRng: return quotient(a, radicalator(a));
        case Variety::BR:
            return quotient(a, rel_commutator(a, ElementSet::full(a), Variety::BR));
    }
    throw InvalidArgumentError("unknown variety");
}

bool check_reflector_universality(const BracePtr& a, Variety x, const BracePtr& t) {
    if (!in_variety(t, x))
        throw NotInVarietyError("factoring target lies outside " + variety_name(x));
    Quotient q = reflect(a, x);
    auto downstairs = all_homs(q.target, t);
    for (const Hom& f : all_homs(a, t)) {
        int matches = 0;
        for (const Hom& g : downstairs) {
            bool same = true;
            for (int e = 0; e < a->order() && same; ++e)
                same = g.map[q.projection.map[e]] == f.map[e];
            if (same) ++matches;
        }
        if (matches != 1) return false;
    }
    return true;
}

Hom induced_hom(const Hom& f, const Quotient& qa, const Quotient& qb) {
    if (!same_brace(f.source, qa.source) || !same_brace(f.target, qb.source))
        throw AmbientMismatchError("induced hom endpoints do not match the quotients");
    std::vector<int> map(qa.target->order(), -1);
    for (int x = 0; x < f.source->order(); ++x) {
        int from = qa.projection.map[x];
        int to = qb.projection.map[f.map[x]];
        if (map[from] >= 0 && map[from] != to)
            throw WellDefinednessError('+', x, x, "map is not constant on cosets");
        map[from] = to;
    }
    return is_homomorphism(qa.target, qb.target, map);
}

}  // namespace bracekit
