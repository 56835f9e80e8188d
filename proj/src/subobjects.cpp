#include "bracekit/subobjects.hpp"

#include <algorithm>
#include <set>

namespace bracekit {

ElementSet::ElementSet(BracePtr ambient)
    : ambient_(std::move(ambient)), flags_(ambient_ ? ambient_->order() : 0, 0) {
    if (!ambient_) throw InvalidArgumentError("element set needs an ambient brace");
}

ElementSet ElementSet::zero_only(BracePtr ambient) {
    ElementSet s(std::move(ambient));
    s.insert(0);
    return s;
}

ElementSet ElementSet::full(BracePtr ambient) {
    ElementSet s(std::move(ambient));
    for (int x = 0; x < s.ambient_order(); ++x) s.insert(x);
    return s;
}

ElementSet ElementSet::of(BracePtr ambient, const std::vector<int>& members) {
    ElementSet s(std::move(ambient));
    for (int x : members) {
        if (x < 0 || x >= s.ambient_order())
            throw InvalidArgumentError("element index " + std::to_string(x) + " out of range");
        s.insert(x);
    }
    return s;
}

ElementSet ElementSet::of(BracePtr ambient, std::initializer_list<int> members) {
    return of(std::move(ambient), std::vector<int>(members));
}

bool ElementSet::insert(int x) {
    if (flags_[x]) return false;
    flags_[x] = 1;
    ++count_;
    return true;
}

std::vector<int> ElementSet::members() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int x = 0; x < ambient_order(); ++x)
        if (flags_[x]) out.push_back(x);
    return out;
}

void ElementSet::require_same_ambient(const ElementSet& other) const {
    if (!same_brace(ambient_, other.ambient_))
        throw AmbientMismatchError("element sets belong to different braces");
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
    require_same_ambient(other);
    for (int x = 0; x < ambient_order(); ++x)
        if (flags_[x] && !other.flags_[x]) return false;
    return true;
}

ElementSet ElementSet::unite(const ElementSet& other) const {
    require_same_ambient(other);
    ElementSet out(ambient_);
    for (int x = 0; x < ambient_order(); ++x)
        if (flags_[x] || other.flags_[x]) out.insert(x);
    return out;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
    require_same_ambient(other);
    ElementSet out(ambient_);
    for (int x = 0; x < ambient_order(); ++x)
        if (flags_[x] && other.flags_[x]) out.insert(x);
    return out;
}

bool ElementSet::operator==(const ElementSet& other) const {
    require_same_ambient(other);
    return flags_ == other.flags_;
}

void require_bound(const BracePtr& brace, const ElementSet& s) {
    if (!same_brace(brace, s.ambient()))
        throw AmbientMismatchError("element set is bound to a different brace");
}

ElementSet additive_closure(const ElementSet& s) {
    const auto& a = s.ambient();
    ElementSet out = ElementSet::zero_only(a);
    std::vector<int> work;
    auto push = [&](int x) {
        if (out.insert(x)) work.push_back(x);
    };
    work.push_back(0);
    for (int x : s.members()) push(x);
    // Finite subgroup growth: close pairwise sums in both orders.
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        push(a->neg(x));
        for (int y : out.members()) {
            push(a->add(x, y));
            push(a->add(y, x));
        }
    }
    return out;
}

ElementSet ideal_closure(const ElementSet& s) {
    const auto& a = s.ambient();
    const int n = a->order();
    ElementSet cur = additive_closure(s);
    for (;;) {
        ElementSet next = cur;
        for (int x : cur.members()) {
            for (int g = 0; g < n; ++g) {
                next.insert(a->conj(g, x));
                next.insert(a->star(g, x));
                next.insert(a->star(x, g));
            }
        }
        if (next.size() == cur.size()) return cur;
        cur = additive_closure(next);
    }
}

namespace {

bool is_additive_normal_subgroup(const ElementSet& s) {
    const auto& a = s.ambient();
    if (!s.contains(0)) return false;
    auto mem = s.members();
    for (int x : mem) {
        if (!s.contains(a->neg(x))) return false;
        for (int y : mem)
            if (!s.contains(a->add(x, y))) return false;
    }
    for (int g = 0; g < a->order(); ++g)
        for (int x : mem)
            if (!s.contains(a->conj(g, x))) return false;
    return true;
}

}  // namespace

bool is_ideal(const ElementSet& s) {
    if (!is_additive_normal_subgroup(s)) return false;
    const auto& a = s.ambient();
    for (int g = 0; g < a->order(); ++g)
        for (int x : s.members())
            if (!s.contains(a->star(g, x)) || !s.contains(a->star(x, g))) return false;
    return true;
}

bool is_strong_left_ideal(const ElementSet& s) {
    if (!is_additive_normal_subgroup(s)) return false;
    const auto& a = s.ambient();
    auto mem = s.members();
    for (int x : mem) {
        if (!s.contains(a->circ_inv(x))) return false;
        for (int y : mem)
            if (!s.contains(a->circ(x, y))) return false;
    }
    for (int g = 0; g < a->order(); ++g)
        for (int x : mem)
            if (!s.contains(a->star(g, x))) return false;
    return true;
}

bool is_subbrace(const ElementSet& s) {
    if (!s.contains(0)) return false;
    const auto& a = s.ambient();
    auto mem = s.members();
    for (int x : mem) {
        if (!s.contains(a->neg(x)) || !s.contains(a->circ_inv(x))) return false;
        for (int y : mem)
            if (!s.contains(a->add(x, y)) || !s.contains(a->circ(x, y))) return false;
    }
    return true;
}

ElementSet additive_center(const BracePtr& a) {
    const int n = a->order();
    ElementSet out(a);
    for (int z = 0; z < n; ++z) {
        bool central = true;
        for (int x = 0; x < n && central; ++x) central = a->add(z, x) == a->add(x, z);
        if (central) out.insert(z);
    }
    return out;
}

ElementSet radical_center(const BracePtr& a) {
    const int n = a->order();
    ElementSet out(a);
    for (int z : additive_center(a).members()) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b)
            for (int c = 0; c < n && ok; ++c)
                ok = a->distributor(z, b, c) == 0 && a->distributor(b, z, c) == 0 &&
                     a->distributor(b, c, z) == 0;
        if (ok) out.insert(z);
    }
    return out;
}

std::vector<ElementSet> all_ideals(const BracePtr& a) {
    const int n = a->order();
    std::set<std::vector<int>> seen;
    std::vector<ElementSet> found;
    auto add_ideal = [&](const ElementSet& s) {
        if (seen.insert(s.members()).second) found.push_back(s);
    };
    add_ideal(ElementSet::zero_only(a));
    for (int x = 1; x < n; ++x) add_ideal(ideal_closure(ElementSet::of(a, {x})));
    // Every ideal is a join of principal ideals, so closing the principal
    // family under pairwise joins yields the whole lattice.
    for (size_t i = 0; i < found.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            add_ideal(ideal_closure(found[i].unite(found[j])));
    std::sort(found.begin(), found.end(), [](const ElementSet& x, const ElementSet& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.members() < y.members();
    });
    return found;
}

ElementSet SubBrace::pull_set(const ElementSet& ambient_subset) const {
    ElementSet out(brace);
    for (int x : ambient_subset.members()) {
        int i = from_parent[x];
        if (i < 0)
            throw InvalidArgumentError("subset member lies outside the extracted subbrace");
        out.insert(i);
    }
    return out;
}

SubBrace sub_brace(const ElementSet& s) {
    if (!is_subbrace(s))
        throw InvalidArgumentError("element set is not closed under both operations");
    const auto& a = s.ambient();
    auto mem = s.members();  // ascending, so 0 keeps index 0
    const int m = static_cast<int>(mem.size());
    std::vector<int> from_parent(a->order(), -1);
    for (int i = 0; i < m; ++i) from_parent[mem[i]] = i;

    CayleyTablePair t{OpTable(m), OpTable(m)};
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            t.add.set(i, j, from_parent[a->add(mem[i], mem[j])]);
            t.circ.set(i, j, from_parent[a->circ(mem[i], mem[j])]);
        }
    return SubBrace{SkewBrace::validate(t), std::move(mem), std::move(from_parent)};
}

}  // namespace bracekit
