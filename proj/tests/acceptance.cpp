// Acceptance gate: ten criteria, one printed line each, nonzero exit if any
// fails.  Pass --include-size-24-search to also run the long order-24 hunt
// inside criterion 9 (skipping it does not fail the gate); --db=FILE feeds
// that hunt a prebuilt .sbrace database instead of live enumeration.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bracekit/enumerate.hpp"
#include "bracekit/extensions.hpp"
#include "bracekit/homology.hpp"
#include "bracekit/io.hpp"
#include "bracekit/quotients.hpp"
#include "bracekit/subobjects.hpp"
#include "bracekit/suites.hpp"
#include "fixtures.hpp"

using namespace bracekit;

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

const std::vector<BracePtr>& corpus8() {
    static std::vector<BracePtr> c = [] {
        std::vector<BracePtr> out;
        for (int n = 1; n <= 8; ++n)
            for (const BracePtr& b : all_skew_braces(n)) out.push_back(b);
        return out;
    }();
    return c;
}

void criterion(int idx, const std::string& what, double budget_s,
               const std::function<std::pair<bool, std::string>()>& fn) {
    auto t0 = Clock::now();
    bool ok = false;
    std::string note;
    try {
        auto r = fn();
        ok = r.first;
        note = r.second;
    } catch (const BraceError& e) {
        ok = false;
        note = std::string("error: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (ok && budget_s > 0 && secs > budget_s) {
        ok = false;
        note += (note.empty() ? "" : "; ") + std::string("over the ") +
                std::to_string(static_cast<int>(budget_s)) + " s budget";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%7.2fs", secs);
    std::cout << "criterion " << idx << ": " << (ok ? "PASS" : "FAIL") << " (" << buf << ")  "
              << what << (note.empty() ? "" : "  -- " + note) << "\n";
    if (!ok) ++g_failures;
}

std::pair<bool, std::string> suite_result(const std::string& name, int max_order) {
    SuiteOptions opt;
    opt.max_order = max_order;
    auto records = run_suite(name, opt);
    int fails = 0;
    std::string first;
    for (const ResultRecord& r : records)
        if (r.verdict == Verdict::Fail) {
            if (++fails == 1) first = to_line(r);
        }
    if (fails > 0)
        return {false, std::to_string(fails) + " failing checks, first: " + first};
    return {true, std::to_string(records.size()) + " records"};
}

std::string set_str(const ElementSet& s) {
    std::string out = "{";
    bool first = true;
    for (int m : s.members()) {
        if (!first) out += ',';
        out += std::to_string(m);
        first = false;
    }
    return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
    bool search24 = false;
    std::string db24;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--include-size-24-search") == 0) search24 = true;
        if (std::strncmp(argv[i], "--db=", 5) == 0) db24 = argv[i] + 5;
    }

    criterion(1, "axiom suite, dual enumeration <= 6, unique classes at 1..3", 10.0,
              [] { return suite_result("axioms", 8); });

    criterion(2, "relative commutators are ideals over the order <= 8 corpus", 60.0,
              []() -> std::pair<bool, std::string> {
                  int checked = 0;
                  for (const BracePtr& a : corpus8())
                      for (const ElementSet& i : all_ideals(a))
                          for (Variety x : all_varieties) {
                              ElementSet c = rel_commutator(a, i, x);
                              ++checked;
                              if (!is_ideal(c))
                                  return {false, variety_name(x) + " commutator not an ideal"};
                              if (x == Variety::BR && !(ideal_closure(c) == c))
                                  return {false, "BR closure is not a fixed point"};
                          }
                  return {true, std::to_string(checked) + " commutators"};
              });

    criterion(3, "algebraic vs categorical centrality, radical three-way agreement", 300.0,
              [] { return suite_result("centrality", 8); });

    criterion(4, "huq commutator equals the abelian-variety commutator", 0.0,
              [] { return suite_result("huq", 8); });

    criterion(5, "radical centers are subbraces and absorb distributor shifts", 0.0,
              []() -> std::pair<bool, std::string> {
                  for (const BracePtr& a : corpus8()) {
                      const int n = a->order();
                      ElementSet zr = radical_center(a);
                      if (!is_subbrace(zr)) return {false, "radical center not a subbrace"};
                      for (int z : zr.members())
                          for (int x = 0; x < n; ++x)
                              for (int y = 0; y < n; ++y)
                                  for (int c = 0; c < n; ++c) {
                                      int d = a->distributor(x, y, c);
                                      if (a->distributor(a->add(z, x), y, c) != d ||
                                          a->distributor(x, a->add(z, y), c) != d ||
                                          a->distributor(x, y, a->add(z, c)) != d)
                                          return {false, "shift identity fails"};
                                  }
                  }
                  return {true, std::to_string(corpus8().size()) + " braces"};
              });

    criterion(6, "reflections land in the variety with minimal universal kernels", 0.0,
              []() -> std::pair<bool, std::string> {
                  for (const BracePtr& a : corpus8()) {
                      auto ideals = all_ideals(a);
                      for (Variety x : all_varieties) {
                          Quotient r = reflect(a, x);
                          if (!in_variety(r.target, x)) return {false, "target escapes"};
                          if (!(r.ideal == rel_commutator(a, ElementSet::full(a), x)))
                              return {false, "kernel differs from the full commutator"};
                          for (const ElementSet& j : ideals)
                              if (in_variety(quotient(a, j).target, x) !=
                                  r.ideal.is_subset_of(j))
                                  return {false, "kernel not minimal"};
                          for (const BracePtr& t : corpus8()) {
                              if (!in_variety(t, x)) continue;
                              if (!check_reflector_universality(a, x, t))
                                  return {false, "factorization not unique"};
                          }
                      }
                  }
                  return {true, std::to_string(corpus8().size()) + " braces, 4 varieties"};
              });

    criterion(7, "five-term tail exact for every corpus extension", 0.0,
              []() -> std::pair<bool, std::string> {
                  int checked = 0;
                  for (const BracePtr& a : corpus8())
                      for (const ElementSet& i : all_ideals(a)) {
                          Extension e = make_extension(quotient(a, i).projection);
                          for (Variety x : all_varieties) {
                              FiveTermReport rep = five_term_tail(e, x);
                              ++checked;
                              if (!rep.exact_at_middle || !rep.exact_at_end)
                                  return {false, rep.witness};
                          }
                      }
                  return {true, std::to_string(checked) + " sequences"};
              });

    criterion(8, "every lower central series step is a central extension", 0.0,
              [] { return suite_result("series", 8); });

    criterion(9, "naive star sets are ideals through order 12", 900.0,
              [search24, db24]() -> std::pair<bool, std::string> {
                  int checked = 0;
                  for (int n = 1; n <= 12; ++n)
                      for (const BracePtr& a : all_skew_braces(n))
                          for (const ElementSet& i : all_ideals(a)) {
                              ++checked;
                              if (!is_ideal(naive_star_set(a, i)))
                                  return {false, "counterexample below 24 at order " +
                                                     std::to_string(n)};
                          }
                  std::string note = std::to_string(checked) + " pairs below 13";
                  if (!search24) return {true, note + "; size-24 search skipped"};
                  // Live discovery of the order-24 groups is far beyond any
                  // sane budget, so the hunt wants a prebuilt database.  The
                  // witness names the record by position: canonicalizing an
                  // order-24 table can take hours when its symmetry group is
                  // large.
                  auto hunt = [&](const BracePtr& b) -> std::optional<std::string> {
                      for (const ElementSet& i : all_ideals(b))
                          if (!is_ideal(naive_star_set(b, i))) return "I=" + set_str(i);
                      return std::nullopt;
                  };
                  if (!db24.empty()) {
                      int seen = 0;
                      for (const BracePtr& b : load_brace_database(db24)) {
                          if (b->order() != 24) continue;
                          if (auto w = hunt(b))
                              return {true, note + "; order-24 counterexample at database record " +
                                                std::to_string(seen) + " " + *w};
                          ++seen;
                      }
                      return {false, note + "; no counterexample among " +
                                         std::to_string(seen) + " database records"};
                  }
                  int gi = 0;
                  for (const OpTable& g : groups_of_order(24)) {
                      auto braces = skew_braces_on(g);
                      for (size_t k = 0; k < braces.size(); ++k)
                          if (auto w = hunt(braces[k]))
                              return {true, note + "; order-24 counterexample on group " +
                                                std::to_string(gi) + " class " +
                                                std::to_string(k) + " " + *w};
                      ++gi;
                  }
                  return {false, note + "; no order-24 counterexample found"};
              });

    criterion(10, "b4 fixture values", 0.0, []() -> std::pair<bool, std::string> {
        BracePtr b = fixtures::b4();
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y)
                if (b->star(x, y) != (2 * x * y) % 4) return {false, "star table"};
        auto ideals = all_ideals(b);
        if (ideals.size() != 3 || !(ideals[1].members() == std::vector<int>{0, 2}))
            return {false, "ideal lattice"};
        if (!radicalator(b).is_trivial()) return {false, "radicalator"};
        if (!(derived_ideal(b).members() == std::vector<int>{0, 2}))
            return {false, "abelian commutator"};
        Extension e = make_extension(quotient(b, ideals[1]).projection);
        if (hopf_quotient(e, Variety::Ab).target->order() != 2)
            return {false, "hopf subquotient order"};
        return {true, ""};
    });

    std::cout << (10 - g_failures) << "/10 criteria passed\n";
    return g_failures == 0 ? 0 : 1;
}
