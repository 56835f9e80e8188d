#include <doctest.h>

#include "bracekit/errors.hpp"
#include "bracekit/extensions.hpp"
#include "fixtures.hpp"

using namespace bracekit;
using namespace fixtures;

TEST_CASE("kernels and extensions") {
    BracePtr b = b4();
    Quotient q = quotient(b, ElementSet::of(b, {0, 2}));
    Extension e = make_extension(q.projection);
    CHECK(e.kernel.members() == std::vector<int>{0, 2});

    Hom dbl = is_homomorphism(b, b, {0, 2, 0, 2});
    CHECK(kernel(dbl).members() == std::vector<int>{0, 2});
    CHECK_THROWS_AS(make_extension(dbl), InvalidArgumentError);  // not surjective
}

TEST_CASE("pullback of b4 over z2") {
    BracePtr b = b4();
    Quotient q = quotient(b, ElementSet::of(b, {0, 2}));
    Pullback p = pullback(q.projection, q.projection);
    CHECK(p.object->order() == 8);
    CHECK(p.s.is_hom);
    CHECK(p.t.is_hom);
    CHECK(p.s.is_surjective);
    CHECK(p.t.is_surjective);
    for (int m = 0; m < 8; ++m)
        CHECK(q.projection(p.s(m)) == q.projection(p.t(m)));
}

TEST_CASE("pullback of the s3 sign map") {
    BracePtr s3 = trivial_s3();
    Quotient q = quotient(s3, ElementSet::of(s3, {0, 3, 4}));
    Pullback p = pullback(q.projection, q.projection);
    CHECK(p.object->order() == 18);

    // an identical-table target counts as the same brace, so use a new order
    Hom other = is_homomorphism(trivial_cyclic(3), trivial_cyclic(3), {0, 1, 2});
    CHECK_THROWS_AS(pullback(q.projection, other), TargetMismatchError);
}

TEST_CASE("centrality of the b4 extensions") {
    BracePtr b = b4();
    Extension e2 = make_extension(quotient(b, ElementSet::of(b, {0, 2})).projection);
    for (Variety x : all_varieties) {
        CHECK(is_central_algebraic(e2, x));
        CHECK(is_central_categorical(e2, x));
    }

    Extension efull = make_extension(quotient(b, ElementSet::full(b)).projection);
    CHECK_FALSE(is_central_algebraic(efull, Variety::Grp));
    CHECK_FALSE(is_central_categorical(efull, Variety::Grp));
    CHECK(is_central_algebraic(efull, Variety::RadRng));  // kernel lies in the radical center
    CHECK(is_central_categorical(efull, Variety::RadRng));
}

TEST_CASE("centrality of the s3 extensions") {
    BracePtr s3 = trivial_s3();
    Extension e = make_extension(quotient(s3, ElementSet::of(s3, {0, 3, 4})).projection);
    CHECK(is_central_algebraic(e, Variety::Grp));  // star vanishes on trivial braces
    CHECK(is_central_categorical(e, Variety::Grp));
    CHECK_FALSE(is_central_algebraic(e, Variety::Ab));
    CHECK_FALSE(is_central_categorical(e, Variety::Ab));
    CHECK_FALSE(is_central_algebraic(e, Variety::RadRng));
    CHECK_FALSE(is_central_categorical(e, Variety::RadRng));
}

TEST_CASE("extensions from plain quotients") {
    BracePtr b = b4();
    Extension e = quotient_extension(quotient(b, ElementSet::of(b, {0, 2})));
    CHECK(e.kernel.members() == std::vector<int>{0, 2});
    CHECK(e.hom.target->order() == 2);
}
