#include "bracekit/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "bracekit/parallel.hpp"

namespace bracekit {

namespace {

using Clock = std::chrono::steady_clock;

std::string set_str(const ElementSet& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int m : s.members()) {
        if (!first) out << ',';
        out << m;
        first = false;
    }
    out << '}';
    return out.str();
}

// Wraps one named check: an empty returned string is a pass, anything else
// is the failure witness.  Library errors become failures, not crashes, so
// one bad structure cannot hide results for the rest of the corpus.
struct Recorder {
    std::string subject;
    std::vector<ResultRecord>* out;

    void check(const std::string& name, const std::function<std::string()>& body) {
        auto t0 = Clock::now();
        ResultRecord r;
        r.subject = subject;
        r.check = name;
        try {
            std::string w = body();
            r.verdict = w.empty() ? Verdict::Pass : Verdict::Fail;
            r.witness = std::move(w);
        } catch (const BraceError& e) {
            r.verdict = Verdict::Fail;
            r.witness = std::string("error: ") + e.what();
        }
        r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        out->push_back(std::move(r));
    }

    void info(const std::string& name, const std::string& value) {
        out->push_back(ResultRecord{subject, name, Verdict::Info, value, 0});
    }
};

bool wants(const SuiteOptions& opt, Variety x) {
    return std::find(opt.varieties.begin(), opt.varieties.end(), x) != opt.varieties.end();
}

std::vector<Variety> wanted(const SuiteOptions& opt) {
    std::vector<Variety> out;
    for (Variety x : all_varieties)
        if (wants(opt, x)) out.push_back(x);
    return out;
}

std::string subject_of(const BracePtr& a) {
    // Above order 16 canonicalization can take hours on tables with a large
    // symmetry group, so fall back to a digest of the raw tables.  Stable
    // for a fixed input file, though not labeling-independent.
    if (a->order() > 16) {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&](const OpTable& t) {
            for (int i = 0; i < t.n(); ++i)
                for (int j = 0; j < t.n(); ++j) {
                    h ^= static_cast<uint64_t>(t.at(i, j));
                    h *= 1099511628211ull;
                }
        };
        mix(a->tables().add);
        mix(a->tables().circ);
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return std::to_string(a->order()) + ":raw-" + buf;
    }
    return std::to_string(a->order()) + ":" + canonical_form(a).digest();
}

Hom identity_hom(const BracePtr& a) {
    std::vector<int> id(a->order());
    for (int i = 0; i < a->order(); ++i) id[i] = i;
    return is_homomorphism(a, a, id);
}

ElementSet image_set(const Quotient& q, const ElementSet& s) {
    ElementSet out(q.target);
    for (int m : s.members()) out.insert(q.projection(m));
    return out;
}

struct Ctx {
    const SuiteOptions& opt;
    const std::vector<BracePtr>& corpus;
};

// ---------------------------------------------------------------------------
// axioms

void axioms_for(const BracePtr& a, Recorder& rec) {
    const int n = a->order();

    rec.check("axioms.revalidate", [&] {
        SkewBrace::validate(a->tables());
        return std::string();
    });

    rec.check("axioms.operation-identities", [&]() -> std::string {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int c = a->circ(x, y);
                if (c != a->add(a->add(x, a->star(x, y)), y))
                    return "star at a=" + std::to_string(x) + " b=" + std::to_string(y);
                if (c != a->add(x, a->lambda(x, y)))
                    return "lambda at a=" + std::to_string(x) + " b=" + std::to_string(y);
                if (c != a->add(a->rho(x, y), x))
                    return "rho at a=" + std::to_string(x) + " b=" + std::to_string(y);
            }
        return {};
    });

    rec.check("axioms.lambda-automorphism", [&]() -> std::string {
        for (int x = 0; x < n; ++x) {
            std::vector<char> hit(n, 0);
            for (int y = 0; y < n; ++y) hit[a->lambda(x, y)] = 1;
            for (int v = 0; v < n; ++v)
                if (!hit[v]) return "lambda_" + std::to_string(x) + " not bijective";
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (a->lambda(x, a->add(y, z)) != a->add(a->lambda(x, y), a->lambda(x, z)))
                        return "lambda_" + std::to_string(x) + " not additive at " +
                               std::to_string(y) + "," + std::to_string(z);
        }
        return {};
    });

    rec.check("axioms.rho-automorphism", [&]() -> std::string {
        for (int x = 0; x < n; ++x) {
            std::vector<char> hit(n, 0);
            for (int y = 0; y < n; ++y) hit[a->rho(x, y)] = 1;
            for (int v = 0; v < n; ++v)
                if (!hit[v]) return "rho_" + std::to_string(x) + " not bijective";
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (a->rho(x, a->add(y, z)) != a->add(a->rho(x, y), a->rho(x, z)))
                        return "rho_" + std::to_string(x) + " not additive at " +
                               std::to_string(y) + "," + std::to_string(z);
        }
        return {};
    });

    rec.check("axioms.lambda-composition", [&]() -> std::string {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (a->lambda(a->circ(x, y), z) != a->lambda(x, a->lambda(y, z)))
                        return "a=" + std::to_string(x) + " b=" + std::to_string(y) +
                               " z=" + std::to_string(z);
        return {};
    });

    rec.check("axioms.rho-composition", [&]() -> std::string {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (a->rho(a->circ(x, y), z) != a->rho(x, a->rho(y, z)))
                        return "a=" + std::to_string(x) + " b=" + std::to_string(y) +
                               " z=" + std::to_string(z);
        return {};
    });

    rec.check("axioms.distributor-zero-slots", [&]() -> std::string {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (a->distributor(x, y, 0) != 0 || a->distributor(x, 0, y) != 0 ||
                    a->distributor(0, x, y) != 0)
                    return "a=" + std::to_string(x) + " b=" + std::to_string(y);
            }
        return {};
    });

    rec.check("axioms.closure-operators", [&]() -> std::string {
        for (int x = 0; x < n; ++x) {
            ElementSet s = ElementSet::of(a, {x});
            ElementSet c = additive_closure(s);
            if (!s.is_subset_of(c)) return "not extensive at " + std::to_string(x);
            if (!(additive_closure(c) == c)) return "not idempotent at " + std::to_string(x);
            for (int y = 0; y < n; ++y)
                if (!c.is_subset_of(additive_closure(ElementSet::of(a, {x, y}))))
                    return "not monotone at " + std::to_string(x) + "," + std::to_string(y);
        }
        return {};
    });

    rec.check("axioms.ideal-closure", [&]() -> std::string {
        for (int x = 0; x < n; ++x)
            if (!is_ideal(ideal_closure(ElementSet::of(a, {x}))))
                return "closure of {" + std::to_string(x) + "} is not an ideal";
        for (const ElementSet& i : all_ideals(a))
            if (!(ideal_closure(i) == i)) return "not a fixed point on " + set_str(i);
        return {};
    });

    rec.check("axioms.ideal-lattice", [&]() -> std::string {
        auto ideals = all_ideals(a);
        std::set<std::vector<int>> lat;
        for (const ElementSet& i : ideals) {
            if (!is_ideal(i)) return set_str(i) + " fails the ideal test";
            lat.insert(i.members());
        }
        for (size_t i = 0; i < ideals.size(); ++i)
            for (size_t j = 0; j < i; ++j) {
                if (!lat.count(ideals[i].intersect(ideals[j]).members()))
                    return "meet of " + set_str(ideals[i]) + " and " + set_str(ideals[j]) +
                           " missing";
                if (!lat.count(ideal_closure(ideals[i].unite(ideals[j])).members()))
                    return "join of " + set_str(ideals[i]) + " and " + set_str(ideals[j]) +
                           " missing";
            }
        return {};
    });

    rec.check("axioms.ideals-are-subbraces", [&]() -> std::string {
        for (const ElementSet& i : all_ideals(a))
            if (!is_subbrace(i)) return set_str(i) + " is not closed as a subbrace";
        return {};
    });

    rec.check("axioms.radical-center-subbrace", [&]() -> std::string {
        ElementSet zr = radical_center(a);
        if (!zr.is_subset_of(additive_center(a))) return "not inside the additive center";
        if (!is_subbrace(zr)) return set_str(zr) + " not a subbrace";
        return {};
    });

    rec.check("axioms.radical-center-shift", [&]() -> std::string {
        ElementSet zr = radical_center(a);
        for (int z : zr.members())
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int c = 0; c < n; ++c) {
                        int d = a->distributor(x, y, c);
                        if (a->distributor(a->add(z, x), y, c) != d ||
                            a->distributor(x, a->add(z, y), c) != d ||
                            a->distributor(x, y, a->add(z, c)) != d)
                            return "z=" + std::to_string(z) + " a=" + std::to_string(x) +
                                   " b=" + std::to_string(y) + " c=" + std::to_string(c);
                    }
        return {};
    });
}

void axioms_corpus(const SuiteOptions& opt, std::vector<ResultRecord>& out) {
    for (int n = 1; n <= std::min(3, opt.max_order); ++n) {
        Recorder rec{"order-" + std::to_string(n), &out};
        rec.check("axioms.class-count", [&]() -> std::string {
            size_t got = all_skew_braces(n).size();
            if (got != 1) return "expected 1 class, found " + std::to_string(got);
            return {};
        });
    }

    for (int n = 1; n <= std::min(6, opt.max_order); ++n) {
        Recorder rec{"order-" + std::to_string(n), &out};
        rec.check("axioms.dual-enumeration", [&]() -> std::string {
            for (const OpTable& g : groups_of_order(n)) {
                auto u = skew_braces_on(g);
                auto v = skew_braces_on_by_table_search(g);
                if (u.size() != v.size())
                    return "class counts differ on one additive group: " +
                           std::to_string(u.size()) + " vs " + std::to_string(v.size());
                for (const BracePtr& b : u) {
                    int hits = 0;
                    for (const BracePtr& c : v)
                        if (are_isomorphic(b, c)) ++hits;
                    if (hits != 1)
                        return "a class matched " + std::to_string(hits) + " times across methods";
                }
            }
            return {};
        });

        rec.check("axioms.canonical-vs-isomorphism", [&]() -> std::string {
            auto braces = all_skew_braces(n);
            std::vector<CanonicalForm> forms;
            for (const BracePtr& b : braces) forms.push_back(canonical_form(b));
            for (size_t i = 0; i < braces.size(); ++i)
                for (size_t j = 0; j < i; ++j)
                    if (are_isomorphic(braces[i], braces[j]) != (forms[i] == forms[j]))
                        return "pair " + std::to_string(j) + "," + std::to_string(i) +
                               ": canonical forms and isomorphism disagree";
            // A relabelled copy must land on the same canonical form.
            for (size_t bi = 0; bi < braces.size(); ++bi) {
                const BracePtr& b = braces[bi];
                if (n == 1) continue;
                std::vector<int> p(n);
                p[0] = 0;
                for (int x = 1; x < n; ++x) p[x] = x % (n - 1) + 1;
                CayleyTablePair t{OpTable(n), OpTable(n)};
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y) {
                        t.add.set(p[x], p[y], p[b->add(x, y)]);
                        t.circ.set(p[x], p[y], p[b->circ(x, y)]);
                    }
                BracePtr c = SkewBrace::validate(t);
                if (!are_isomorphic(b, c) || !(canonical_form(c) == forms[bi]))
                    return "relabelled copy of class " + std::to_string(bi) + " not recognized";
            }
            return {};
        });

        rec.check("axioms.pairwise-distinct", [&]() -> std::string {
            auto braces = all_skew_braces(n);
            for (size_t i = 0; i < braces.size(); ++i)
                for (size_t j = 0; j < i; ++j)
                    if (are_isomorphic(braces[i], braces[j]))
                        return "classes " + std::to_string(j) + " and " + std::to_string(i) +
                               " are isomorphic";
            return {};
        });
    }

    for (int n = 1; n <= opt.max_order; ++n) {
        Recorder rec{"order-" + std::to_string(n), &out};
        rec.check("axioms.trivial-brace-coverage", [&]() -> std::string {
            std::multiset<std::vector<unsigned char>> got;
            for (const BracePtr& b : all_skew_braces(n))
                if (b->tables().add == b->tables().circ)
                    got.insert(canonical_group_table(b->tables().add));
            std::multiset<std::vector<unsigned char>> want;
            for (const OpTable& g : groups_of_order(n)) want.insert(canonical_group_table(g));
            if (got != want)
                return "trivial classes: " + std::to_string(got.size()) + ", groups: " +
                       std::to_string(want.size()) + " (or a mismatched group)";
            return {};
        });
    }
}

// ---------------------------------------------------------------------------
// commutators (including reflector laws and the naive star set)

void commutators_for(const BracePtr& a, Recorder& rec, const Ctx& ctx) {
    const SuiteOptions& opt = ctx.opt;
    auto ideals = all_ideals(a);
    const size_t full_idx = ideals.size() - 1;  // sorted by size; the full set is last

    std::map<Variety, std::vector<ElementSet>> comm;
    for (Variety x : wanted(opt)) {
        std::vector<ElementSet> per;
        per.reserve(ideals.size());
        for (const ElementSet& i : ideals) per.push_back(rel_commutator(a, i, x));
        comm.emplace(x, std::move(per));
    }

    std::vector<Quotient> quot;
    quot.reserve(ideals.size());
    for (const ElementSet& i : ideals) quot.push_back(quotient(a, i));

    rec.check("commutators.ideality", [&]() -> std::string {
        for (Variety x : wanted(opt))
            for (size_t i = 0; i < ideals.size(); ++i) {
                const ElementSet& c = comm.at(x)[i];
                if (!is_ideal(c))
                    return variety_name(x) + " on I=" + set_str(ideals[i]) + " gives " +
                           set_str(c);
                if (x == Variety::BR && !(ideal_closure(c) == c))
                    return "BR closure not a fixed point on I=" + set_str(ideals[i]);
            }
        return {};
    });

    rec.check("commutators.containment", [&]() -> std::string {
        for (Variety x : wanted(opt))
            for (size_t i = 0; i < ideals.size(); ++i)
                if (!comm.at(x)[i].is_subset_of(ideals[i]))
                    return variety_name(x) + " escapes I=" + set_str(ideals[i]);
        return {};
    });

    rec.check("commutators.monotonicity", [&]() -> std::string {
        for (Variety x : wanted(opt))
            for (size_t i = 0; i < ideals.size(); ++i)
                for (size_t j = 0; j < ideals.size(); ++j)
                    if (ideals[i].is_subset_of(ideals[j]) &&
                        !comm.at(x)[i].is_subset_of(comm.at(x)[j]))
                        return variety_name(x) + " at " + set_str(ideals[i]) +
                               " inside " + set_str(ideals[j]);
        return {};
    });

    if (wants(opt, Variety::Ab)) {
        rec.check("commutators.cross-variety-inclusion", [&]() -> std::string {
            for (size_t i = 0; i < ideals.size(); ++i) {
                if (wants(opt, Variety::BR) &&
                    !comm.at(Variety::BR)[i].is_subset_of(comm.at(Variety::Ab)[i]))
                    return "BR not inside Ab at I=" + set_str(ideals[i]);
                if (wants(opt, Variety::Grp) &&
                    !comm.at(Variety::Grp)[i].is_subset_of(comm.at(Variety::Ab)[i]))
                    return "Grp not inside Ab at I=" + set_str(ideals[i]);
                if (wants(opt, Variety::RadRng) &&
                    !comm.at(Variety::RadRng)[i].is_subset_of(comm.at(Variety::Ab)[i]))
                    return "RadRng not inside Ab at I=" + set_str(ideals[i]);
            }
            return {};
        });
    }

    rec.check("commutators.classical-instances", [&]() -> std::string {
        if (wants(opt, Variety::Grp) && !(star_ideal(a) == comm.at(Variety::Grp)[full_idx]))
            return "star ideal differs from the full Grp commutator";
        if (wants(opt, Variety::Ab) && !(derived_ideal(a) == comm.at(Variety::Ab)[full_idx]))
            return "derived ideal differs from the full Ab commutator";
        if (wants(opt, Variety::RadRng) &&
            !(radicalator(a) == comm.at(Variety::RadRng)[full_idx]))
            return "radicalator differs from the full RadRng commutator";
        return {};
    });

    rec.check("commutators.smallest-vanishing-ideal", [&]() -> std::string {
        for (Variety x : wanted(opt))
            for (size_t i = 0; i < ideals.size(); ++i)
                for (size_t j = 0; j < ideals.size(); ++j) {
                    ElementSet img = image_set(quot[j], ideals[i]);
                    bool vanish = rel_commutator(quot[j].target, img, x).is_trivial();
                    bool contained = comm.at(x)[i].is_subset_of(ideals[j]);
                    if (vanish != contained)
                        return variety_name(x) + " I=" + set_str(ideals[i]) +
                               " J=" + set_str(ideals[j]) +
                               (vanish ? " vanishes without containment"
                                       : " contained but does not vanish");
                }
        return {};
    });

    if (wants(opt, Variety::RadRng)) {
        rec.check("commutators.image-central-mod-radrng", [&]() -> std::string {
            const int n = a->order();
            for (size_t ii = 0; ii < ideals.size(); ++ii) {
                const ElementSet& jset = comm.at(Variety::RadRng)[ii];
                for (int i : ideals[ii].members())
                    for (int b = 0; b < n; ++b)
                        if (!jset.contains(a->sub(a->add(i, b), a->add(b, i))))
                            return "I=" + set_str(ideals[ii]) + " i=" + std::to_string(i) +
                                   " b=" + std::to_string(b);
            }
            return {};
        });

        rec.check("commutators.right-distributivity-mod", [&]() -> std::string {
            const int n = a->order();
            for (size_t ii = 0; ii < ideals.size(); ++ii) {
                const ElementSet& jset = comm.at(Variety::RadRng)[ii];
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        for (int c = 0; c < n; ++c) {
                            if (!ideals[ii].contains(x) && !ideals[ii].contains(y) &&
                                !ideals[ii].contains(c))
                                continue;
                            int lhs = a->circ(a->add(x, y), c);
                            int rhs = a->add(a->sub(a->circ(x, c), c), a->circ(y, c));
                            if (!jset.contains(a->sub(lhs, rhs)))
                                return "I=" + set_str(ideals[ii]) + " a=" + std::to_string(x) +
                                       " b=" + std::to_string(y) + " c=" + std::to_string(c);
                        }
            }
            return {};
        });

        rec.check("commutators.right-distributivity-corollary", [&]() -> std::string {
            const int n = a->order();
            for (size_t ii = 0; ii < ideals.size(); ++ii) {
                const ElementSet& jset = comm.at(Variety::RadRng)[ii];
                for (int i : ideals[ii].members())
                    for (int b = 0; b < n; ++b)
                        for (int d = 0; d < n; ++d) {
                            int ba = a->circ(b, i), ab = a->circ(i, b), bd = a->circ(b, d);
                            int lhs1 = a->sub(a->circ(a->sub(ba, b), d), d);
                            int rhs1 = a->sub(a->circ(ba, d), bd);
                            int lhs2 = a->sub(a->circ(a->sub(ab, b), d), d);
                            int rhs2 = a->sub(a->circ(ab, d), bd);
                            int lhs3 = a->sub(a->circ(a->sub(b, ba), d), d);
                            int rhs3 = a->sub(bd, a->circ(ba, d));
                            int lhs4 = a->sub(a->circ(a->sub(b, ab), d), d);
                            int rhs4 = a->sub(bd, a->circ(ab, d));
                            if (!jset.contains(a->sub(lhs1, rhs1)) ||
                                !jset.contains(a->sub(lhs2, rhs2)) ||
                                !jset.contains(a->sub(lhs3, rhs3)) ||
                                !jset.contains(a->sub(lhs4, rhs4)))
                                return "I=" + set_str(ideals[ii]) + " a=" + std::to_string(i) +
                                       " b=" + std::to_string(b) + " d=" + std::to_string(d);
                        }
            }
            return {};
        });
    }

    if (a->order() < 24) {
        rec.check("commutators.naive-star-ideal", [&]() -> std::string {
            for (const ElementSet& i : ideals)
                if (!is_ideal(naive_star_set(a, i)))
                    return "naive star set of I=" + set_str(i) + " is not an ideal";
            return {};
        });
    } else {
        int bad = 0;
        for (const ElementSet& i : ideals)
            if (!is_ideal(naive_star_set(a, i))) ++bad;
        rec.info("commutators.naive-star-ideal",
                 bad == 0 ? "all ideals pass" : std::to_string(bad) + " non-ideal instances");
    }

    if (wants(opt, Variety::Grp)) {
        // The defining generators conjugate only b*a; probe whether adding
        // conjugates of a*b ever changes the closure.
        std::string note = "equal";
        const int n = a->order();
        for (size_t ii = 0; ii < ideals.size(); ++ii) {
            ElementSet gens(a);
            for (int i : ideals[ii].members())
                for (int b = 0; b < n; ++b) {
                    gens.insert(a->star(i, b));
                    gens.insert(a->star(b, i));
                    for (int c = 0; c < n; ++c) {
                        gens.insert(a->conj(c, a->star(i, b)));
                        gens.insert(a->conj(c, a->star(b, i)));
                    }
                }
            if (!(additive_closure(gens) == comm.at(Variety::Grp)[ii])) {
                note = "differs at I=" + set_str(ideals[ii]);
                break;
            }
        }
        rec.info("commutators.symmetrized-conjugates", note);
    }

    for (Variety x : wanted(opt)) {
        Quotient refl = reflect(a, x);

        rec.check("reflect." + variety_name(x) + ".in-variety", [&]() -> std::string {
            if (!in_variety(refl.target, x)) return "reflection target escapes the variety";
            return {};
        });

        rec.check("reflect." + variety_name(x) + ".kernel-matches", [&]() -> std::string {
            if (!(refl.ideal == comm.at(x)[full_idx]))
                return "kernel " + set_str(refl.ideal) + " vs commutator " +
                       set_str(comm.at(x)[full_idx]);
            return {};
        });

        rec.check("reflect." + variety_name(x) + ".minimality", [&]() -> std::string {
            for (size_t j = 0; j < ideals.size(); ++j) {
                bool in_x = in_variety(quot[j].target, x);
                bool contains = refl.ideal.is_subset_of(ideals[j]);
                if (in_x != contains)
                    return "J=" + set_str(ideals[j]) +
                           (in_x ? " lands in the variety below the kernel"
                                 : " contains the kernel but misses the variety");
            }
            return {};
        });

        rec.check("reflect." + variety_name(x) + ".idempotent", [&]() -> std::string {
            if (!reflect(refl.target, x).ideal.is_trivial())
                return "second reflection has nontrivial kernel";
            return {};
        });

        if (a->order() <= 12) {
            rec.check("reflect." + variety_name(x) + ".universality", [&]() -> std::string {
                for (const BracePtr& t : ctx.corpus) {
                    if (t->order() > 8 || !in_variety(t, x)) continue;
                    if (!check_reflector_universality(a, x, t))
                        return "factorization not unique against a target of order " +
                               std::to_string(t->order());
                }
                return {};
            });
        }
    }
}

void naive_star_hunt(const SuiteOptions& opt, std::vector<ResultRecord>& out) {
    Recorder rec{"order-24", &out};
    rec.check("commutators.naive-star-search", [&]() -> std::string {
        if (enumeration_bound() < 24)
            return "enumeration bound below 24; raise BRACEKIT_MAX_ORDER";
        auto scan = [&](const BracePtr& b) -> std::optional<ElementSet> {
            for (const ElementSet& i : all_ideals(b))
                if (!is_ideal(naive_star_set(b, i))) return i;
            return std::nullopt;
        };
        // Witness subjects name the record by position: canonicalizing an
        // order-24 table can take hours when its symmetry group is large.
        std::vector<BracePtr> db24;
        for (const BracePtr& b : opt.corpus)
            if (b->order() == 24) db24.push_back(b);
        if (!db24.empty()) {
            for (size_t k = 0; k < db24.size(); ++k)
                if (auto i = scan(db24[k])) {
                    out.push_back(ResultRecord{"24:db-" + std::to_string(k),
                                               "commutators.naive-star-witness", Verdict::Info,
                                               "I=" + set_str(*i), 0});
                    return {};
                }
            return "no counterexample among " + std::to_string(db24.size()) +
                   " database entries of order 24";
        }
        int gi = 0;
        for (const OpTable& g : groups_of_order(24)) {
            auto braces = skew_braces_on(g);
            for (size_t k = 0; k < braces.size(); ++k)
                if (auto i = scan(braces[k])) {
                    out.push_back(ResultRecord{"24:group-" + std::to_string(gi) + "-class-" +
                                                   std::to_string(k),
                                               "commutators.naive-star-witness", Verdict::Info,
                                               "I=" + set_str(*i), 0});
                    return {};
                }
            ++gi;
        }
        return "no counterexample of order 24 found";
    });
}

// ---------------------------------------------------------------------------
// centrality

void centrality_for(const BracePtr& a, Recorder& rec, const Ctx& ctx) {
    const SuiteOptions& opt = ctx.opt;
    auto ideals = all_ideals(a);
    std::vector<Quotient> quot;
    for (const ElementSet& i : ideals) quot.push_back(quotient(a, i));
    ElementSet zr = radical_center(a);

    rec.check("centrality.algebraic-equals-categorical", [&]() -> std::string {
        for (size_t i = 0; i < ideals.size(); ++i) {
            Extension e = make_extension(quot[i].projection);
            for (Variety x : wanted(opt)) {
                bool alg = is_central_algebraic(e, x);
                bool cat = is_central_categorical(e, x);
                if (alg != cat)
                    return "I=" + set_str(ideals[i]) + " X=" + variety_name(x) +
                           " algebraic=" + (alg ? "yes" : "no") +
                           " categorical=" + (cat ? "yes" : "no");
            }
        }
        return {};
    });

    if (wants(opt, Variety::RadRng)) {
        rec.check("centrality.radical-three-way", [&]() -> std::string {
            for (size_t i = 0; i < ideals.size(); ++i) {
                Extension e = make_extension(quot[i].projection);
                bool vanishes = rel_commutator(a, ideals[i], Variety::RadRng).is_trivial();
                bool in_zr = ideals[i].is_subset_of(zr);
                bool cat = is_central_categorical(e, Variety::RadRng);
                if (vanishes != in_zr || in_zr != cat)
                    return "I=" + set_str(ideals[i]) + " commutator=" +
                           (vanishes ? "0" : "nonzero") + " kernel-in-center=" +
                           (in_zr ? "yes" : "no") + " categorical=" + (cat ? "yes" : "no");
            }
            return {};
        });
    }

    rec.check("centrality.pullback-projections", [&]() -> std::string {
        for (size_t i = 0; i < ideals.size(); ++i) {
            Extension e = make_extension(quot[i].projection);
            Pullback p = pullback(e.hom, e.hom);
            if (!p.s.is_surjective || !p.t.is_surjective)
                return "projection not surjective at I=" + set_str(ideals[i]);
            for (int m = 0; m < p.object->order(); ++m)
                if (e.hom(p.s(m)) != e.hom(p.t(m)))
                    return "square does not commute at I=" + set_str(ideals[i]) +
                           " element " + std::to_string(m);
        }
        return {};
    });

    rec.check("centrality.image-inheritance", [&]() -> std::string {
        Hom id = identity_hom(a);
        for (Variety x : wanted(opt))
            for (size_t k = 0; k < ideals.size(); ++k) {
                if (!rel_commutator(a, ideals[k], x).is_trivial()) continue;
                for (size_t i = 0; i < ideals.size(); ++i) {
                    if (!ideals[i].is_subset_of(ideals[k])) continue;
                    Hom g = induced_hom(id, quot[i], quot[k]);
                    Extension e2 = make_extension(g);
                    if (!is_central_algebraic(e2, x))
                        return "X=" + variety_name(x) + " I=" + set_str(ideals[i]) +
                               " K=" + set_str(ideals[k]);
                }
            }
        return {};
    });
}

// ---------------------------------------------------------------------------
// huq

void huq_for(const BracePtr& a, Recorder& rec, const Ctx&) {
    rec.check("huq.equals-abelian-commutator", [&]() -> std::string {
        for (const ElementSet& i : all_ideals(a)) {
            ElementSet h = huq_commutator(a, i);
            ElementSet ab = rel_commutator(a, i, Variety::Ab);
            if (!(h == ab))
                return "I=" + set_str(i) + " huq=" + set_str(h) + " ab=" + set_str(ab);
        }
        return {};
    });
}

// ---------------------------------------------------------------------------
// homology

void homology_for(const BracePtr& a, Recorder& rec, const Ctx& ctx) {
    const SuiteOptions& opt = ctx.opt;
    auto ideals = all_ideals(a);

    rec.check("homology.h1-in-variety", [&]() -> std::string {
        for (Variety x : wanted(opt))
            if (!in_variety(h1(a, x).target, x))
                return "H1 escapes " + variety_name(x);
        return {};
    });

    std::map<Variety, ElementSet> full_comm;
    for (Variety x : wanted(opt))
        full_comm.emplace(x, rel_commutator(a, ElementSet::full(a), x));

    rec.check("homology.five-term-exactness", [&]() -> std::string {
        for (const ElementSet& i : ideals) {
            Extension e = make_extension(quotient(a, i).projection);
            for (Variety x : wanted(opt)) {
                FiveTermReport rep = five_term_tail(e, x);
                if (!rep.exact_at_middle || !rep.exact_at_end)
                    return "I=" + set_str(i) + " X=" + variety_name(x) + " " + rep.witness;
            }
        }
        return {};
    });

    rec.check("homology.hopf-subquotient-order", [&]() -> std::string {
        for (const ElementSet& i : ideals) {
            Extension e = make_extension(quotient(a, i).projection);
            for (Variety x : wanted(opt)) {
                Quotient hq = hopf_quotient(e, x);
                ElementSet top = i.intersect(full_comm.at(x));
                ElementSet mixed = rel_commutator(a, i, x);
                if (hq.target->order() * mixed.size() != top.size())
                    return "I=" + set_str(i) + " X=" + variety_name(x) + " order " +
                           std::to_string(hq.target->order()) + " * " +
                           std::to_string(mixed.size()) + " != " + std::to_string(top.size());
            }
        }
        return {};
    });

    rec.check("homology.hopf-central-consistency", [&]() -> std::string {
        for (const ElementSet& i : ideals) {
            Extension e = make_extension(quotient(a, i).projection);
            for (Variety x : wanted(opt)) {
                if (!rel_commutator(a, i, x).is_trivial()) continue;
                Quotient hq = hopf_quotient(e, x);
                SubBrace top = sub_brace(i.intersect(full_comm.at(x)));
                if (!same_brace(hq.target, top.brace))
                    return "I=" + set_str(i) + " X=" + variety_name(x) +
                           ": central quotient is not the plain subbrace";
            }
        }
        return {};
    });
}

// ---------------------------------------------------------------------------
// series

void series_for(const BracePtr& a, Recorder& rec, const Ctx& ctx) {
    const SuiteOptions& opt = ctx.opt;
    Hom id = identity_hom(a);

    for (Variety x : wanted(opt)) {
        std::vector<ElementSet> terms = lower_central_series(a, x);
        const std::string tag = "series." + variety_name(x);

        rec.check(tag + ".terms-are-ideals", [&]() -> std::string {
            for (size_t i = 0; i < terms.size(); ++i)
                if (!is_ideal(terms[i]))
                    return "term " + std::to_string(i) + " = " + set_str(terms[i]);
            return {};
        });

        rec.check(tag + ".descending", [&]() -> std::string {
            for (size_t i = 1; i < terms.size(); ++i) {
                if (!terms[i].is_subset_of(terms[i - 1]))
                    return "term " + std::to_string(i) + " escapes term " +
                           std::to_string(i - 1);
                bool last = i + 1 == terms.size();
                if (!last && terms[i] == terms[i - 1])
                    return "premature repeat at term " + std::to_string(i);
            }
            return {};
        });

        rec.check(tag + ".steps-central", [&]() -> std::string {
            for (size_t i = 0; i + 1 < terms.size(); ++i) {
                Quotient below = quotient(a, terms[i + 1]);
                Quotient above = quotient(a, terms[i]);
                Hom step = induced_hom(id, below, above);
                Extension e = make_extension(step);
                if (!is_central_algebraic(e, x))
                    return "step " + std::to_string(i + 1) + " -> " + std::to_string(i) +
                           " is not central";
            }
            return {};
        });
    }
}

// ---------------------------------------------------------------------------
// driver

std::vector<BracePtr> resolve_corpus(const SuiteOptions& opt) {
    if (opt.max_order < 1) throw InvalidArgumentError("max_order must be positive");
    if (opt.max_order > enumeration_bound())
        throw BoundExceededError("max_order " + std::to_string(opt.max_order) +
                                 " exceeds the enumeration bound");
    std::vector<BracePtr> out;
    if (!opt.corpus.empty()) {
        for (const BracePtr& b : opt.corpus)
            if (b->order() <= opt.max_order) out.push_back(b);
        std::stable_sort(out.begin(), out.end(), [](const BracePtr& x, const BracePtr& y) {
            if (x->order() != y->order()) return x->order() < y->order();
            // Canonical order below 17 only; see subject_of.
            if (x->order() > 16) return false;
            return canonical_form(x).bytes < canonical_form(y).bytes;
        });
        return out;
    }
    for (int n = 1; n <= opt.max_order; ++n)
        for (const BracePtr& b : all_skew_braces(n)) out.push_back(b);
    return out;
}

using PerBrace = void (*)(const BracePtr&, Recorder&, const Ctx&);

std::vector<ResultRecord> over_corpus(const Ctx& ctx, PerBrace fn) {
    std::vector<std::vector<ResultRecord>> per(ctx.corpus.size());
    parallel_for(static_cast<int>(ctx.corpus.size()), [&](int i) {
        Recorder rec{subject_of(ctx.corpus[i]), &per[i]};
        fn(ctx.corpus[i], rec, ctx);
    });
    std::vector<ResultRecord> out;
    for (auto& v : per)
        for (auto& r : v) out.push_back(std::move(r));
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "axioms", "commutators", "centrality", "huq", "homology", "series", "all"};
    return names;
}

std::vector<ResultRecord> run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "all") {
        std::vector<ResultRecord> out;
        for (const std::string& s : suite_names()) {
            if (s == "all") continue;
            auto part = run_suite(s, opt);
            out.insert(out.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
        return out;
    }

    std::vector<BracePtr> corpus = resolve_corpus(opt);
    Ctx ctx{opt, corpus};

    if (name == "axioms") {
        auto out = over_corpus(ctx, [](const BracePtr& a, Recorder& r, const Ctx&) {
            axioms_for(a, r);
        });
        axioms_corpus(opt, out);
        return out;
    }
    if (name == "commutators") {
        auto out = over_corpus(ctx, commutators_for);
        if (opt.naive_star_search) naive_star_hunt(opt, out);
        return out;
    }
    if (name == "centrality") return over_corpus(ctx, centrality_for);
    if (name == "huq") return over_corpus(ctx, huq_for);
    if (name == "homology") return over_corpus(ctx, homology_for);
    if (name == "series") return over_corpus(ctx, series_for);
    throw InvalidArgumentError("unknown suite: " + name);
}

bool all_passed(const std::vector<ResultRecord>& records) {
    for (const ResultRecord& r : records)
        if (r.verdict == Verdict::Fail) return false;
    return true;
}

}  // namespace bracekit
