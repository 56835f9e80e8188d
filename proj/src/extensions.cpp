#include "bracekit/extensions.hpp"

#include <algorithm>

namespace bracekit {

ElementSet kernel(const Hom& f) {
    if (!f.is_hom) throw InvalidArgumentError("kernel needs a checked homomorphism");
    ElementSet k(f.source);
    for (int x = 0; x < f.source->order(); ++x)
        if (f(x) == 0) k.insert(x);
    if (!is_ideal(k))
        throw OracleDisagreementError("kernel of a homomorphism failed the ideal test");
    return k;
}

Extension make_extension(const Hom& f) {
    if (!f.is_hom || !f.is_surjective)
        throw InvalidArgumentError("an extension is a checked surjective homomorphism");
    return Extension{f, kernel(f)};
}

Extension quotient_extension(const Quotient& q) { return make_extension(q.projection); }

Pullback pullback(const Hom& f, const Hom& g) {
    if (!f.is_hom || !g.is_hom)
        throw InvalidArgumentError("pullback needs checked homomorphisms");
    if (!same_brace(f.target, g.target))
        throw TargetMismatchError("pullback legs have different targets");

    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < f.source->order(); ++x)
        for (int y = 0; y < g.source->order(); ++y)
            if (f(x) == g(y)) pairs.emplace_back(x, y);
    // Lexicographic by construction; (0,0) is first because f(0) = g(0) = 0.

    const int m = static_cast<int>(pairs.size());
    auto index_of = [&](int x, int y) {
        auto it = std::lower_bound(pairs.begin(), pairs.end(), std::pair{x, y});
        return static_cast<int>(it - pairs.begin());
    };

    CayleyTablePair t{OpTable(m), OpTable(m)};
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            auto [x1, y1] = pairs[i];
            auto [x2, y2] = pairs[j];
            t.add.set(i, j, index_of(f.source->add(x1, x2), g.source->add(y1, y2)));
            t.circ.set(i, j, index_of(f.source->circ(x1, x2), g.source->circ(y1, y2)));
        }
    BracePtr p = SkewBrace::validate(t);

    std::vector<int> smap(m), tmap(m);
    for (int i = 0; i < m; ++i) {
        smap[i] = pairs[i].first;
        tmap[i] = pairs[i].second;
    }
    return Pullback{p, is_homomorphism(p, f.source, smap), is_homomorphism(p, g.source, tmap),
                    std::move(pairs)};
}

bool is_central_algebraic(const Extension& e, Variety x) {
    bool ans = rel_commutator(e.hom.source, e.kernel, x).is_trivial();
    if (x == Variety::RadRng) {
        bool in_center = e.kernel.is_subset_of(radical_center(e.hom.source));
        if (in_center != ans)
            throw OracleDisagreementError(
                "kernel-in-radical-center disagrees with the vanishing commutator test");
    }
    return ans;
}

bool is_central_categorical(const Extension& e, Variety x) {
    Pullback p = pullback(e.hom, e.hom);
    ElementSet r = rel_commutator(p.object, ElementSet::full(p.object), x);
    for (int m : r.members())
        if (p.s(m) != p.t(m)) return false;
    return true;
}

}  // namespace bracekit
