#include <doctest.h>

#include "bracekit/errors.hpp"
#include "bracekit/homology.hpp"
#include "fixtures.hpp"

using namespace bracekit;
using namespace fixtures;

TEST_CASE("first homology of the fixtures") {
    BracePtr b = b4();
    CHECK(h1(b, Variety::Grp).target->order() == 2);
    CHECK(h1(b, Variety::Ab).target->order() == 2);
    CHECK(h1(b, Variety::RadRng).target->order() == 4);

    BracePtr s3 = trivial_s3();
    CHECK(h1(s3, Variety::Grp).target->order() == 6);  // already a trivial brace
    CHECK(h1(s3, Variety::Ab).target->order() == 2);
    CHECK(in_variety(h1(s3, Variety::Ab).target, Variety::Ab));
}

TEST_CASE("lower central series of b4") {
    BracePtr b = b4();

    auto ab = lower_central_series(b, Variety::Ab);
    REQUIRE(ab.size() == 3);
    CHECK(ab[0].is_full());
    CHECK(ab[1].members() == std::vector<int>{0, 2});
    CHECK(ab[2].is_trivial());

    auto grp = lower_central_series(b, Variety::Grp);
    REQUIRE(grp.size() == 3);
    CHECK(grp[1].members() == std::vector<int>{0, 2});
    CHECK(grp[2].is_trivial());

    auto rad = lower_central_series(b, Variety::RadRng);
    REQUIRE(rad.size() == 2);
    CHECK(rad[1].is_trivial());
}

TEST_CASE("lower central series of the trivial s3 brace stalls on a3") {
    BracePtr s3 = trivial_s3();
    auto ab = lower_central_series(s3, Variety::Ab);
    REQUIRE(ab.size() == 3);
    CHECK(ab[0].is_full());
    CHECK(ab[1].members() == std::vector<int>{0, 3, 4});
    CHECK(ab[2].members() == std::vector<int>{0, 3, 4});  // plateau, not convergence

    auto grp = lower_central_series(s3, Variety::Grp);
    REQUIRE(grp.size() == 2);
    CHECK(grp[1].is_trivial());

    CHECK_THROWS_AS(lower_central_series(s3, Variety::Ab, 1), BoundExceededError);
}

TEST_CASE("hopf quotients") {
    BracePtr b = b4();
    Extension e = make_extension(quotient(b, ElementSet::of(b, {0, 2})).projection);
    CHECK(hopf_quotient(e, Variety::Ab).target->order() == 2);
    CHECK(hopf_quotient(e, Variety::Grp).target->order() == 2);
    CHECK(hopf_quotient(e, Variety::RadRng).target->order() == 1);

    BracePtr s3 = trivial_s3();
    Extension es = make_extension(quotient(s3, ElementSet::of(s3, {0, 3, 4})).projection);
    CHECK(hopf_quotient(es, Variety::Ab).target->order() == 1);  // a3 equals [a3, s3]
}

TEST_CASE("five-term tail of b4 over z2") {
    BracePtr b = b4();
    Extension e = make_extension(quotient(b, ElementSet::of(b, {0, 2})).projection);
    FiveTermReport rep = five_term_tail(e, Variety::Ab);
    CHECK(rep.exact_at_middle);
    CHECK(rep.exact_at_end);
    CHECK(rep.k_mod.target->order() == 2);
    CHECK(rep.d.map == std::vector<int>{0, 0});  // the kernel dies in h1 of the source
    CHECK(rep.h.map == std::vector<int>{0, 1});  // h1(source) -> h1(base) is an isomorphism
}

TEST_CASE("five-term tail of the s3 sign extension") {
    BracePtr s3 = trivial_s3();
    Extension e = make_extension(quotient(s3, ElementSet::of(s3, {0, 3, 4})).projection);
    for (Variety x : all_varieties) {
        FiveTermReport rep = five_term_tail(e, x);
        CHECK(rep.exact_at_middle);
        CHECK(rep.exact_at_end);
    }
}
