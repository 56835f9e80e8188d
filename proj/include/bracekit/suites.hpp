#pragma once

// Named verification suites over an exhaustively enumerated corpus.  Every
// suite emits one ResultRecord per (subject, check); a FAIL verdict means a
// checked law has a finite counterexample and carries the witness.
//
//   axioms       structure validity, derived-map laws, closure operators,
//                Z_R, ideal lattice, enumeration self-checks
//   commutators  relative commutators: ideality, containment, monotonicity,
//                cross-variety inclusions, quotient laws, reflectors,
//                the naive star set
//   centrality   algebraic vs categorical central extensions, the radical
//                three-way equivalence, pullback sanity
//   huq          the minimal-cocommuting ideal against the Ab commutator
//   homology     five-term tail exactness, H1 membership, Hopf consistency
//   series       lower central series: ideality, descent, step centrality
//   all          all of the above in that order

#include <string>
#include <vector>

#include "bracekit/enumerate.hpp"
#include "bracekit/homology.hpp"
#include "bracekit/io.hpp"

namespace bracekit {

struct SuiteOptions {
    int max_order = 8;
    std::vector<Variety> varieties{Variety::Grp, Variety::RadRng, Variety::BR, Variety::Ab};
    // When non-empty, these braces replace live enumeration as the corpus
    // for per-brace checks (enumeration self-checks still run live).
    std::vector<BracePtr> corpus;
    // Hunt for an order-24 ideal whose naive star set is not an ideal.
    bool naive_star_search = false;
};

const std::vector<std::string>& suite_names();

// Throws InvalidArgumentError for an unknown suite name and
// BoundExceededError when max_order exceeds the enumeration bound.
std::vector<ResultRecord> run_suite(const std::string& name, const SuiteOptions& opt);

// True when no record carries a FAIL verdict.
bool all_passed(const std::vector<ResultRecord>& records);

}  // namespace bracekit
