#include <doctest.h>

#include "bracekit/core.hpp"
#include "bracekit/errors.hpp"
#include "fixtures.hpp"

using namespace bracekit;
using namespace fixtures;

namespace {

OpTable relabel(const OpTable& t, const std::vector<int>& p) {
    OpTable out(t.n());
    for (int a = 0; a < t.n(); ++a)
        for (int b = 0; b < t.n(); ++b) out.set(p[a], p[b], p[t.at(a, b)]);
    return out;
}

}  // namespace

TEST_CASE("b4 validates and its derived operations match hand values") {
    BracePtr b = b4();
    CHECK(b->order() == 4);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            CHECK(b->circ(x, y) == (x + 2 * x * y + y) % 4);
            CHECK(b->star(x, y) == (2 * x * y) % 4);
            CHECK(b->lambda(x, y) == (2 * x * y + y) % 4);
            CHECK(b->rho(x, y) == (2 * x * y + y) % 4);
            CHECK(b->conj(x, y) == y);
            for (int z = 0; z < 4; ++z) CHECK(b->distributor(x, y, z) == 0);
        }
    CHECK(b->neg(1) == 3);
    CHECK(b->neg(2) == 2);
    CHECK(b->sub(0, 1) == 3);
    CHECK(b->circ_inv(0) == 0);
    CHECK(b->circ_inv(1) == 1);
    CHECK(b->circ_inv(2) == 2);
    CHECK(b->circ_inv(3) == 3);
    CHECK(b->add_order(1) == 4);
    CHECK(b->circ_order(1) == 2);
    CHECK(b->circ_order(3) == 2);
}

TEST_CASE("trivial braces have equal tables and vanishing star") {
    BracePtr t = trivial_s3();
    CHECK(t->order() == 6);
    CHECK(t->tables().add == t->tables().circ);
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) CHECK(t->star(x, y) == 0);
    CHECK(t->add(3, 3) == 4);   // (012)(012) = (021)
    CHECK(t->add(2, 2) == 0);   // a transposition squares to the identity
    CHECK(t->conj(2, 3) == 4);  // (01)(012)(01) = (021)
}

TEST_CASE("validate rejects malformed and incompatible tables") {
    OpTable z4 = cyclic_add(4);

    OpTable out_of_range(2);
    out_of_range.set(0, 0, 0);
    out_of_range.set(0, 1, 1);
    out_of_range.set(1, 0, 1);
    out_of_range.set(1, 1, 5);
    CHECK_THROWS_AS(SkewBrace::validate(CayleyTablePair{out_of_range, out_of_range}),
                    TableFormatError);

    CHECK_THROWS_AS(SkewBrace::validate(CayleyTablePair{z4, cyclic_add(3)}), TableFormatError);

    OpTable broken = z4;
    broken.set(1, 2, 1);
    CHECK_THROWS_AS(SkewBrace::validate(CayleyTablePair{broken, z4}), NotAGroupError);

    // Group table whose identity element is 1 instead of 0.
    OpTable shifted = relabel(z4, {1, 0, 2, 3});
    CHECK_THROWS_AS(SkewBrace::validate(CayleyTablePair{z4, shifted}), IdentityMismatchError);

    // Both genuine groups with identity 0, but lambda_1 fails additivity.
    OpTable twisted = relabel(z4, {0, 1, 3, 2});
    CHECK_THROWS_AS(SkewBrace::validate(CayleyTablePair{z4, twisted}), CompatibilityError);
}

TEST_CASE("homomorphism checking") {
    BracePtr b = b4();
    BracePtr s3 = trivial_s3();
    BracePtr z2 = trivial_cyclic(2);

    Hom id = is_homomorphism(b, b, {0, 1, 2, 3});
    CHECK(id.is_hom);
    CHECK(id.is_surjective);

    Hom dbl = is_homomorphism(b, b, {0, 2, 0, 2});
    CHECK(dbl.is_hom);
    CHECK_FALSE(dbl.is_surjective);
    CHECK(preserves_operations(*b, *b, {0, 2, 0, 2}));

    CHECK_THROWS_AS(is_homomorphism(b, b, {0, 1, 0, 0}), NotHomError);
    CHECK_THROWS_AS(is_homomorphism(b, b, {1, 0, 3, 2}), NotHomError);
    CHECK_THROWS_AS(is_homomorphism(b, b, {0, 1}), TableFormatError);
    CHECK_FALSE(preserves_operations(*b, *b, {0, 1, 0, 0}));

    // Parity map on the permutation indices: even ones land on 0.
    Hom sign = is_homomorphism(s3, z2, {0, 1, 1, 0, 0, 1});
    CHECK(sign.is_hom);
    CHECK(sign.is_surjective);

    Hom again = compose(is_homomorphism(z2, z2, {0, 1}), sign);
    CHECK(again.map == sign.map);
    CHECK_THROWS_AS(compose(sign, sign), AmbientMismatchError);
}

TEST_CASE("products and equality of braces") {
    BracePtr b = b4();
    CHECK(same_brace(b, b4()));
    CHECK_FALSE(same_brace(b, trivial_cyclic(4)));

    BracePtr p = direct_product(b, trivial_cyclic(2));
    CHECK(p->order() == 8);
    // a-major pairing: index = 2*a + b
    CHECK(p->add(1, 1) == 0);        // (0,1)+(0,1) = (0,0)
    CHECK(p->add(2, 3) == 5);        // (1,0)+(1,1) = (2,1), index 2*2+1
    CHECK(p->circ(2, 2) == 0);       // (1,0)o(1,0) = (1o1, 0) = (0,0)
    CHECK(p->circ(3, 3) == 0);       // parity component: 1+1 = 0
}
