#pragma once

// Finite skew braces as a pair of Cayley tables over element indices 0..n-1.
// A skew brace is a set with two group operations + and o sharing identity 0
// and satisfying a o (b + c) = (a o b) - a + (a o c).  All derived maps
// (star, lambda, rho, the right distributor) are written additively from the
// left, exactly as the defining expressions read.

#include <memory>
#include <vector>

#include "bracekit/errors.hpp"

namespace bracekit {

// One n-by-n operation table, row-major.  Entry (a, b) is the index of a*b.
class OpTable {
public:
    OpTable() = default;
    explicit OpTable(int n) : n_(n), cells_(static_cast<size_t>(n) * n, -1) {}

    int n() const { return n_; }
    int at(int a, int b) const { return cells_[static_cast<size_t>(a) * n_ + b]; }
    void set(int a, int b, int v) { cells_[static_cast<size_t>(a) * n_ + b] = v; }
    const std::vector<int>& cells() const { return cells_; }

    bool operator==(const OpTable&) const = default;

private:
    int n_ = 0;
    std::vector<int> cells_;
};

struct CayleyTablePair {
    OpTable add;
    OpTable circ;

    bool operator==(const CayleyTablePair&) const = default;
};

class SkewBrace;
using BracePtr = std::shared_ptr<const SkewBrace>;

// Immutable validated skew brace.  Construction happens only through
// validate(), which checks both group laws and compatibility and
// precomputes inverses and element orders.
class SkewBrace {
public:
    // Throws TableFormatError, NotAGroupError, IdentityMismatchError or
    // CompatibilityError, each carrying the first witness found.
    static BracePtr validate(const CayleyTablePair& tables);

    int order() const { return tables_.add.n(); }

    int add(int a, int b) const { return tables_.add.at(a, b); }
    int circ(int a, int b) const { return tables_.circ.at(a, b); }
    int neg(int a) const { return neg_[a]; }
    int circ_inv(int a) const { return cinv_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }  // a - b = a + (-b)

    // a * b = -a + a o b - b, the deviation of o from +.
    int star(int a, int b) const { return add(sub_from_left(a, circ(a, b)), neg(b)); }
    // lambda_a(b) = -a + a o b
    int lambda(int a, int b) const { return sub_from_left(a, circ(a, b)); }
    // rho_a(b) = a o b - a
    int rho(int a, int b) const { return sub(circ(a, b), a); }
    // [a, b, c] = (a + b) o c - (b o c) + c - (a o c), evaluated left to right.
    int distributor(int a, int b, int c) const {
        int t = sub(circ(add(a, b), c), circ(b, c));
        return sub(add(t, c), circ(a, c));
    }
    // a + b - a - b
    int add_commutator(int a, int b) const { return sub(sub(add(a, b), a), b); }
    // a o b o a' o b'  (primes are o-inverses)
    int circ_commutator(int a, int b) const {
        return circ(circ(circ(a, b), circ_inv(a)), circ_inv(b));
    }
    int conj(int a, int x) const { return sub(add(a, x), a); }  // a + x - a

    int add_order(int a) const { return add_order_[a]; }
    int circ_order(int a) const { return circ_order_[a]; }

    const CayleyTablePair& tables() const { return tables_; }

private:
    explicit SkewBrace(CayleyTablePair t) : tables_(std::move(t)) {}
    int sub_from_left(int a, int b) const { return add(neg(a), b); }  // -a + b

    CayleyTablePair tables_;
    std::vector<int> neg_, cinv_;
    std::vector<int> add_order_, circ_order_;
};

// Two handles denote the same ambient brace if they are the same object or
// carry identical tables.  Sets and homs bind to braces through this test.
bool same_brace(const BracePtr& a, const BracePtr& b);

// A map between braces recorded as an image table.  is_homomorphism is the
// only constructor that fills the flags; it throws NotHomError on the first
// violated pair rather than returning a half-checked map.
struct Hom {
    BracePtr source;
    BracePtr target;
    std::vector<int> map;
    bool is_hom = false;
    bool is_surjective = false;

    int operator()(int a) const { return map[a]; }
};

Hom is_homomorphism(const BracePtr& source, const BracePtr& target,
                    const std::vector<int>& map);

// Non-throwing probe used by enumeration and universality searches.
bool preserves_operations(const SkewBrace& source, const SkewBrace& target,
                          const std::vector<int>& map);

// The trivial brace on a group table: o coincides with +.
BracePtr trivial_brace(const OpTable& add);

// Componentwise product brace on pairs (a, b), ordered a-major.
BracePtr direct_product(const BracePtr& a, const BracePtr& b);

Hom compose(const Hom& g, const Hom& f);  // g after f

}  // namespace bracekit
