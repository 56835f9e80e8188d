#pragma once

// Concrete structures with hand-computed tables shared across the tests.
//
// b4: on Z/4 with a o b = a + 2ab + b (mod 4).  Star works out to
// a*b = 2ab, so the star values land in {0,2}, the circle group is the
// Klein group, and the brace is a radical ring.
//
// trivial_s3: S3 with both operations equal to composition.  The six
// permutations of {0,1,2} are indexed by lexicographic one-line notation,
// so 0 is the identity, {0,3,4} is the alternating subgroup and 2 is the
// transposition swapping 0 and 1.

#include <vector>

#include "bracekit/core.hpp"

namespace fixtures {

using bracekit::BracePtr;
using bracekit::CayleyTablePair;
using bracekit::OpTable;
using bracekit::SkewBrace;

inline OpTable cyclic_add(int n) {
    OpTable t(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t.set(a, b, (a + b) % n);
    return t;
}

inline OpTable klein_add() {
    OpTable t(4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t.set(a, b, a ^ b);
    return t;
}

inline const int kS3Perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                   {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

inline OpTable s3_add() {
    OpTable t(6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int c[3];
            for (int x = 0; x < 3; ++x) c[x] = kS3Perms[i][kS3Perms[j][x]];
            for (int k = 0; k < 6; ++k)
                if (c[0] == kS3Perms[k][0] && c[1] == kS3Perms[k][1] && c[2] == kS3Perms[k][2]) {
                    t.set(i, j, k);
                    break;
                }
        }
    return t;
}

inline BracePtr b4() {
    OpTable add = cyclic_add(4);
    OpTable circ(4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) circ.set(a, b, (a + 2 * a * b + b) % 4);
    return SkewBrace::validate(CayleyTablePair{add, circ});
}

inline BracePtr trivial_cyclic(int n) { return bracekit::trivial_brace(cyclic_add(n)); }

inline BracePtr trivial_klein() { return bracekit::trivial_brace(klein_add()); }

inline BracePtr trivial_s3() { return bracekit::trivial_brace(s3_add()); }

}  // namespace fixtures
