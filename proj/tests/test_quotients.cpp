#include <doctest.h>

#include "bracekit/enumerate.hpp"
#include "bracekit/errors.hpp"
#include "bracekit/quotients.hpp"
#include "fixtures.hpp"

using namespace bracekit;
using namespace fixtures;

TEST_CASE("quotient of b4 by its star ideal") {
    BracePtr b = b4();
    Quotient q = quotient(b, ElementSet::of(b, {0, 2}));
    CHECK(q.target->order() == 2);
    CHECK(q.projection.map == std::vector<int>{0, 1, 0, 1});
    CHECK(q.projection.is_surjective);
    CHECK(q.target->tables().add == q.target->tables().circ);
}

TEST_CASE("quotient by a non-ideal is rejected") {
    BracePtr s3 = trivial_s3();
    CHECK_THROWS_AS(quotient(s3, ElementSet::of(s3, {0, 2})), NotAnIdealError);
    Quotient q = quotient(s3, ElementSet::of(s3, {0, 3, 4}));
    CHECK(q.target->order() == 2);
}

TEST_CASE("variety membership of the fixtures") {
    BracePtr b = b4();
    CHECK_FALSE(in_variety(b, Variety::Grp));
    CHECK(in_variety(b, Variety::RadRng));
    CHECK(in_variety(b, Variety::BR));
    CHECK_FALSE(in_variety(b, Variety::Ab));

    BracePtr s3 = trivial_s3();
    CHECK(in_variety(s3, Variety::Grp));
    CHECK_FALSE(in_variety(s3, Variety::RadRng));
    CHECK_FALSE(in_variety(s3, Variety::BR));
    CHECK_FALSE(in_variety(s3, Variety::Ab));

    BracePtr z4 = trivial_cyclic(4);
    for (Variety x : all_varieties) CHECK(in_variety(z4, x));
}

TEST_CASE("reflections of the fixtures") {
    BracePtr b = b4();
    Quotient rg = reflect(b, Variety::Grp);
    CHECK(rg.ideal.members() == std::vector<int>{0, 2});
    CHECK(rg.target->order() == 2);
    CHECK(in_variety(rg.target, Variety::Grp));

    CHECK(reflect(b, Variety::RadRng).ideal.is_trivial());
    CHECK(reflect(b, Variety::BR).ideal.is_trivial());
    CHECK(reflect(b, Variety::Ab).target->order() == 2);

    BracePtr s3 = trivial_s3();
    CHECK(reflect(s3, Variety::Grp).ideal.is_trivial());
    Quotient ab = reflect(s3, Variety::Ab);
    CHECK(ab.ideal.members() == std::vector<int>{0, 3, 4});
    CHECK(ab.target->order() == 2);
    CHECK(in_variety(ab.target, Variety::Ab));
}

TEST_CASE("reflector universality on the fixtures") {
    BracePtr b = b4();
    CHECK(check_reflector_universality(b, Variety::Grp, trivial_cyclic(2)));
    CHECK(check_reflector_universality(b, Variety::Ab, trivial_cyclic(4)));
    CHECK(check_reflector_universality(trivial_s3(), Variety::Ab, trivial_cyclic(2)));
    CHECK_THROWS_AS(check_reflector_universality(b, Variety::Grp, b4()), NotInVarietyError);
}

TEST_CASE("induced maps between quotients") {
    BracePtr b = b4();
    Hom id = is_homomorphism(b, b, {0, 1, 2, 3});
    Quotient fine = quotient(b, ElementSet::zero_only(b));
    Quotient coarse = quotient(b, ElementSet::of(b, {0, 2}));

    Hom step = induced_hom(id, fine, coarse);
    CHECK(step.is_hom);
    CHECK(step.is_surjective);
    CHECK(step.map == std::vector<int>{0, 1, 0, 1});

    // the identity does not send the coarse ideal into the fine one
    CHECK_THROWS_AS(induced_hom(id, coarse, fine), WellDefinednessError);
}
