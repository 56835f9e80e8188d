#include "bracekit/core.hpp"

#include <string>

namespace bracekit {
namespace {

std::string triple(int a, int b, int c) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

void check_well_formed(const CayleyTablePair& t) {
    const int n = t.add.n();
    if (n <= 0) throw TableFormatError("empty table");
    if (t.circ.n() != n) throw TableFormatError("add and circ tables have different sizes");
    for (const auto* op : {&t.add, &t.circ}) {
        if (static_cast<int>(op->cells().size()) != n * n)
            throw TableFormatError("table is not square");
        for (int v : op->cells())
            if (v < 0 || v >= n) throw TableFormatError("table entry out of range");
    }
}

// Two-sided identity of a table, or -1.
int find_identity(const OpTable& op) {
    const int n = op.n();
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = op.at(e, a) == a && op.at(a, e) == a;
        if (ok) return e;
    }
    return -1;
}

void check_group(const OpTable& op, char name) {
    const int n = op.n();
    int e = find_identity(op);
    if (e < 0)
        throw NotAGroupError(name, {-1, -1, -1}, std::string("no identity for ") + name);
    if (e != 0)
        throw IdentityMismatchError(std::string("identity of ") + name + " is index " +
                                    std::to_string(e) + ", not 0");
    for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int b = 0; b < n; ++b) {
            if (op.at(a, b) == 0 && op.at(b, a) == 0) {
                found = true;
                break;
            }
        }
        if (!found)
            throw NotAGroupError(name, {a, -1, -1},
                                 std::string("no inverse for element ") + std::to_string(a) +
                                     " under " + name);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (op.at(op.at(a, b), c) != op.at(a, op.at(b, c)))
                    throw NotAGroupError(name, {a, b, c},
                                         std::string("associativity fails under ") + name +
                                             " at " + triple(a, b, c));
}

std::vector<int> inverse_table(const OpTable& op) {
    const int n = op.n();
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (op.at(a, b) == 0) inv[a] = b;
    return inv;
}

std::vector<int> element_orders(const OpTable& op) {
    const int n = op.n();
    std::vector<int> ord(n, 1);
    for (int a = 0; a < n; ++a) {
        int x = a, k = 1;
        while (x != 0) {
            x = op.at(x, a);
            ++k;
        }
        ord[a] = k;
    }
    return ord;
}

}  // namespace

BracePtr SkewBrace::validate(const CayleyTablePair& tables) {
    check_well_formed(tables);
    check_group(tables.add, '+');
    check_group(tables.circ, 'o');

    const int n = tables.add.n();
    auto neg = inverse_table(tables.add);

    // a o (b + c) = a o b - a + a o c
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int lhs = tables.circ.at(a, tables.add.at(b, c));
                int rhs = tables.add.at(tables.add.at(tables.circ.at(a, b), neg[a]),
                                        tables.circ.at(a, c));
                if (lhs != rhs)
                    throw CompatibilityError(a, b, c, "compatibility fails at " + triple(a, b, c));
            }

    auto brace = BracePtr(new SkewBrace(tables));
    auto* mut = const_cast<SkewBrace*>(brace.get());
    mut->neg_ = std::move(neg);
    mut->cinv_ = inverse_table(tables.circ);
    mut->add_order_ = element_orders(tables.add);
    mut->circ_order_ = element_orders(tables.circ);
    return brace;
}

bool same_brace(const BracePtr& a, const BracePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->tables() == b->tables();
}

bool preserves_operations(const SkewBrace& source, const SkewBrace& target,
                          const std::vector<int>& map) {
    const int n = source.order();
    if (static_cast<int>(map.size()) != n) return false;
    for (int v : map)
        if (v < 0 || v >= target.order()) return false;
    if (map[0] != 0) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (map[source.add(a, b)] != target.add(map[a], map[b])) return false;
            if (map[source.circ(a, b)] != target.circ(map[a], map[b])) return false;
        }
    return true;
}

Hom is_homomorphism(const BracePtr& source, const BracePtr& target,
                    const std::vector<int>& map) {
    const int n = source->order();
    if (static_cast<int>(map.size()) != n)
        throw TableFormatError("map is not total on the source");
    for (int v : map)
        if (v < 0 || v >= target->order()) throw TableFormatError("map image out of range");
    if (map[0] != 0)
        throw NotHomError('0', 0, 0, "map does not fix the identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (map[source->add(a, b)] != target->add(map[a], map[b]))
                throw NotHomError('+', a, b,
                                  "additivity fails at (" + std::to_string(a) + ", " +
                                      std::to_string(b) + ")");
            if (map[source->circ(a, b)] != target->circ(map[a], map[b]))
                throw NotHomError('o', a, b,
                                  "multiplicativity fails at (" + std::to_string(a) + ", " +
                                      std::to_string(b) + ")");
        }

    Hom h{source, target, map, true, false};
    std::vector<char> hit(target->order(), 0);
    for (int v : map) hit[v] = 1;
    h.is_surjective = true;
    for (char c : hit)
        if (!c) h.is_surjective = false;
    return h;
}

BracePtr trivial_brace(const OpTable& add) {
    return SkewBrace::validate({add, add});
}

BracePtr direct_product(const BracePtr& a, const BracePtr& b) {
    const int na = a->order(), nb = b->order(), n = na * nb;
    CayleyTablePair t{OpTable(n), OpTable(n)};
    auto idx = [nb](int x, int y) { return x * nb + y; };
    for (int x1 = 0; x1 < na; ++x1)
        for (int y1 = 0; y1 < nb; ++y1)
            for (int x2 = 0; x2 < na; ++x2)
                for (int y2 = 0; y2 < nb; ++y2) {
                    t.add.set(idx(x1, y1), idx(x2, y2), idx(a->add(x1, x2), b->add(y1, y2)));
                    t.circ.set(idx(x1, y1), idx(x2, y2), idx(a->circ(x1, x2), b->circ(y1, y2)));
                }
    return SkewBrace::validate(t);
}

Hom compose(const Hom& g, const Hom& f) {
    if (!same_brace(f.target, g.source))
        throw AmbientMismatchError("composition endpoints do not match");
    std::vector<int> map(f.map.size());
    for (size_t i = 0; i < map.size(); ++i) map[i] = g.map[f.map[i]];
    return is_homomorphism(f.source, g.target, map);
}

}  // namespace bracekit
