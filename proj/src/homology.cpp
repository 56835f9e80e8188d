#include "bracekit/homology.hpp"

namespace bracekit {

Quotient h1(const BracePtr& a, Variety x) { return reflect(a, x); }

std::vector<ElementSet> lower_central_series(const BracePtr& a, Variety x, int max_terms) {
    if (max_terms < 1) throw InvalidArgumentError("max_terms must be at least 1");
    std::vector<ElementSet> terms{ElementSet::full(a)};
    while (true) {
        ElementSet next = rel_commutator(a, terms.back(), x);
        bool repeat = next == terms.back();
        terms.push_back(std::move(next));
        if (terms.back().is_trivial() || repeat) return terms;
        if (static_cast<int>(terms.size()) > max_terms)
            throw BoundExceededError("series did not settle within " +
                                     std::to_string(max_terms) + " terms");
    }
}

Quotient hopf_quotient(const Extension& e, Variety x) {
    const BracePtr& a = e.hom.source;
    ElementSet full_comm = rel_commutator(a, ElementSet::full(a), x);
    ElementSet mixed = rel_commutator(a, e.kernel, x);
    SubBrace top = sub_brace(e.kernel.intersect(full_comm));
    return quotient(top.brace, top.pull_set(mixed));
}

FiveTermReport five_term_tail(const Extension& e, Variety x) {
    const BracePtr& a = e.hom.source;

    SubBrace k = sub_brace(e.kernel);
    ElementSet mixed = rel_commutator(a, e.kernel, x);
    Quotient k_mod = quotient(k.brace, k.pull_set(mixed));
    Quotient ha = h1(a, x);
    Quotient hb = h1(e.hom.target, x);

    Hom incl = is_homomorphism(k.brace, a, k.to_parent);
    Hom d = induced_hom(incl, k_mod, ha);
    Hom h = induced_hom(e.hom, ha, hb);

    FiveTermReport rep{std::move(k_mod), std::move(ha), std::move(hb),
                       std::move(d),     std::move(h),  false,
                       false,            ""};

    ElementSet image_d(rep.h1_source.target);
    for (int u = 0; u < rep.k_mod.target->order(); ++u) image_d.insert(rep.d(u));
    ElementSet ker_h(rep.h1_source.target);
    for (int v = 0; v < rep.h1_source.target->order(); ++v)
        if (rep.h(v) == 0) ker_h.insert(v);

    rep.exact_at_middle = image_d == ker_h;
    rep.exact_at_end = rep.h.is_surjective;
    if (!rep.exact_at_middle) {
        for (int v = 0; v < rep.h1_source.target->order(); ++v)
            if (image_d.contains(v) != ker_h.contains(v)) {
                rep.witness = "element " + std::to_string(v) +
                              (image_d.contains(v) ? " in image(d) only" : " in kernel(h) only");
                break;
            }
    } else if (!rep.exact_at_end) {
        std::vector<char> hit(rep.h1_target.target->order(), 0);
        for (int v = 0; v < rep.h1_source.target->order(); ++v) hit[rep.h(v)] = 1;
        for (int w = 0; w < rep.h1_target.target->order(); ++w)
            if (!hit[w]) {
                rep.witness = "element " + std::to_string(w) + " not reached by h";
                break;
            }
    }
    return rep;
}

}  // namespace bracekit
