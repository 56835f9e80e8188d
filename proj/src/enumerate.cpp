#include "bracekit/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>

#include "bracekit/io.hpp"
#include "bracekit/parallel.hpp"

namespace bracekit {

int enumeration_bound() {
    if (const char* env = std::getenv("BRACEKIT_MAX_ORDER")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 24;
}

namespace {

void check_order_bound(int n) {
    if (n < 1) throw InvalidArgumentError("order must be positive");
    if (n > enumeration_bound())
        throw BoundExceededError("order " + std::to_string(n) + " exceeds the bound " +
                                 std::to_string(enumeration_bound()));
    if (n > 64) throw BoundExceededError("orders above 64 are not supported");
}

// ---------------------------------------------------------------------------
// Group table search.

// Cells are resolved in row-major scan order; each takes an existing label
// or the next fresh one.  Where the scan runs out of cells before running
// out of labels, a fresh label is introduced as a new generator.  Any
// relabelling of a group that is not discovery-ordered is never built, so
// leaves are rare and deduplication is cheap.
class GroupSearch {
public:
    explicit GroupSearch(int n) : n_(n), t_(n), row_(n, 0), col_(n, 0) {}

    std::vector<OpTable> run() {
        place(0, 0, 0);
        m_ = 1;
        dfs();
        return std::move(out_);
    }

private:
    void place(int a, int b, int v) {
        t_.set(a, b, v);
        row_[a] |= 1ull << v;
        col_[b] |= 1ull << v;
    }
    void unplace(int a, int b, int v) {
        t_.set(a, b, -1);
        row_[a] &= ~(1ull << v);
        col_[b] &= ~(1ull << v);
    }

    // The cell (a, b) has just been set; check every associativity triple
    // this completes.  The four scans cover the cell appearing as either
    // inner product or either outer product.
    bool assoc_ok(int a, int b) {
        const int c = t_.at(a, b);
        for (int x = 0; x < m_; ++x) {
            int w = t_.at(x, a);  // (x, a, b): (xa)b vs x(ab)
            if (w >= 0) {
                int lhs = t_.at(w, b), rhs = t_.at(x, c);
                if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
            }
            int v = t_.at(b, x);  // (a, b, x): (ab)x vs a(bx)
            if (v >= 0) {
                int lhs = t_.at(c, x), rhs = t_.at(a, v);
                if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
            }
        }
        for (int x = 0; x < m_; ++x)
            for (int y = 0; y < m_; ++y) {
                int p = t_.at(x, y);
                if (p == a) {  // (x, y, b): (xy)b = c vs x(yb)
                    int u = t_.at(y, b);
                    if (u >= 0) {
                        int r = t_.at(x, u);
                        if (r >= 0 && r != c) return false;
                    }
                }
                if (p == b) {  // (a, x, y): a(xy) = c vs (ax)y
                    int w = t_.at(a, x);
                    if (w >= 0) {
                        int q = t_.at(w, y);
                        if (q >= 0 && q != c) return false;
                    }
                }
            }
        return true;
    }

    void dfs() {
        int a = -1, b = -1;
        for (int i = 1; i < m_ && a < 0; ++i)
            for (int j = 1; j < m_; ++j)
                if (t_.at(i, j) < 0) {
                    a = i;
                    b = j;
                    break;
                }
        if (a < 0) {
            if (m_ == n_) {
                emit();
                return;
            }
            // Closed on the current labels: adjoin a fresh generator.
            int g = m_;
            place(0, g, g);
            place(g, 0, g);
            ++m_;
            dfs();
            --m_;
            unplace(g, 0, g);
            unplace(0, g, g);
            return;
        }
        const uint64_t taken = row_[a] | col_[b];
        for (int v = 0; v < m_; ++v) {
            if (taken >> v & 1) continue;
            place(a, b, v);
            if (assoc_ok(a, b)) dfs();
            unplace(a, b, v);
        }
        if (m_ < n_) {
            int v = m_;
            place(0, v, v);
            place(v, 0, v);
            ++m_;
            place(a, b, v);
            if (assoc_ok(a, b)) dfs();
            unplace(a, b, v);
            --m_;
            unplace(v, 0, v);
            unplace(0, v, v);
        }
    }

    void emit() {
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                for (int z = 0; z < n_; ++z)
                    if (t_.at(t_.at(x, y), z) != t_.at(x, t_.at(y, z))) return;
        out_.push_back(t_);
    }

    int n_, m_ = 1;
    OpTable t_;
    std::vector<uint64_t> row_, col_;
    std::vector<OpTable> out_;
};

// ---------------------------------------------------------------------------
// Canonical relabelling.

std::vector<int> table_orders(const OpTable& op) {
    std::vector<int> ord(op.n(), 1);
    for (int a = 0; a < op.n(); ++a) {
        int x = a, k = 1;
        while (x != 0) {
            x = op.at(x, a);
            ++k;
        }
        ord[a] = k;
    }
    return ord;
}

// Branch-and-bound minimization of the concatenated relabelled tables over
// permutations fixing 0.  A partial labelling of k elements determines a
// prefix of the encoding; cells whose value has no label yet compare as
// "at least k + 1", which is enough to prune against the best candidate.
class Canon {
public:
    explicit Canon(std::vector<const OpTable*> tabs)
        : tabs_(std::move(tabs)), n_(tabs_.front()->n()) {
        sigma_.assign(n_, -1);
        pi_.assign(n_, -1);
        used_.assign(n_, 0);
        sigma_[0] = 0;
        pi_[0] = 0;
        used_[0] = 1;

        // Try candidates in invariant order so the first full descent is
        // already close to minimal.
        std::vector<std::vector<int>> ords;
        for (auto* t : tabs_) ords.push_back(table_orders(*t));
        order_.resize(n_ - 1);
        for (int x = 1; x < n_; ++x) order_[x - 1] = x;
        std::sort(order_.begin(), order_.end(), [&](int x, int y) {
            for (const auto& o : ords)
                if (o[x] != o[y]) return o[x] < o[y];
            return x < y;
        });
    }

    std::vector<unsigned char> minimize() {
        dfs(1);
        // Rebuild the full tables from the winning reduced cells.
        std::vector<unsigned char> bytes;
        bytes.push_back(static_cast<unsigned char>(n_));
        size_t idx = 0;
        for (size_t t = 0; t < tabs_.size(); ++t)
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) {
                    int v;
                    if (i == 0)
                        v = j;
                    else if (j == 0)
                        v = i;
                    else
                        v = best_[idx++];
                    bytes.push_back(static_cast<unsigned char>(v));
                }
        return bytes;
    }

private:
    // True when the current prefix can still reach or beat best_.
    bool viable(int k) {
        if (best_.empty()) return true;
        size_t idx = 0;
        for (auto* t : tabs_)
            for (int i = 1; i < n_; ++i)
                for (int j = 1; j < n_; ++j, ++idx) {
                    if (i > k || j > k) return true;
                    int lbl = pi_[t->at(sigma_[i], sigma_[j])];
                    int bv = best_[idx];
                    if (lbl < 0) return k + 1 <= bv;
                    if (lbl != bv) return lbl < bv;
                }
        return true;
    }

    void dfs(int k) {
        if (k == n_) {
            std::vector<int> cur;
            cur.reserve(tabs_.size() * (n_ - 1) * (n_ - 1));
            for (auto* t : tabs_)
                for (int i = 1; i < n_; ++i)
                    for (int j = 1; j < n_; ++j) cur.push_back(pi_[t->at(sigma_[i], sigma_[j])]);
            if (best_.empty() || cur < best_) best_ = std::move(cur);
            return;
        }
        for (int x : order_) {
            if (used_[x]) continue;
            sigma_[k] = x;
            pi_[x] = k;
            used_[x] = 1;
            if (viable(k)) dfs(k + 1);
            used_[x] = 0;
            pi_[x] = -1;
            sigma_[k] = -1;
        }
    }

    std::vector<const OpTable*> tabs_;
    int n_;
    std::vector<int> sigma_, pi_, order_;
    std::vector<char> used_;
    std::vector<int> best_;
};

OpTable table_from_bytes(const unsigned char* cells, int n) {
    OpTable t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.set(i, j, cells[i * n + j]);
    return t;
}

}  // namespace

std::string CanonicalForm::digest() const {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

CanonicalForm canonical_form(const BracePtr& a) {
    if (a->order() > 255) throw BoundExceededError("canonical form needs order <= 255");
    Canon c({&a->tables().add, &a->tables().circ});
    return CanonicalForm{c.minimize()};
}

std::vector<unsigned char> canonical_group_table(const OpTable& add) {
    if (add.n() > 255) throw BoundExceededError("canonical form needs order <= 255");
    Canon c({&add});
    return c.minimize();
}

std::vector<OpTable> groups_of_order(int n) {
    check_order_bound(n);
    static std::map<int, std::vector<OpTable>> cache;
    static std::mutex mu;
    {
        std::scoped_lock lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    std::vector<OpTable> raw = GroupSearch(n).run();
    std::set<std::vector<unsigned char>> forms;
    for (const auto& t : raw) forms.insert(canonical_group_table(t));
    std::vector<OpTable> out;
    for (const auto& f : forms) out.push_back(table_from_bytes(f.data() + 1, n));
    std::scoped_lock lock(mu);
    cache[n] = out;
    return out;
}

// ---------------------------------------------------------------------------
// Automorphisms and homomorphism search.

namespace {

// Greedy generating sequence under the closure `close`, which grows a flag
// vector from a seed list.
template <typename CloseFn>
std::vector<int> greedy_generators(int n, CloseFn close) {
    std::vector<int> gens;
    std::vector<char> span = close(gens);
    while (true) {
        int next = -1;
        for (int x = 0; x < n && next < 0; ++x)
            if (!span[x]) next = x;
        if (next < 0) return gens;
        gens.push_back(next);
        span = close(gens);
    }
}

std::vector<char> group_span(const OpTable& op, const std::vector<int>& seed) {
    const int n = op.n();
    std::vector<char> in(n, 0);
    std::vector<int> work{0};
    in[0] = 1;
    for (int g : seed)
        if (!in[g]) {
            in[g] = 1;
            work.push_back(g);
        }
    std::vector<int> all{0};
    for (int g : seed)
        if (std::find(all.begin(), all.end(), g) == all.end()) all.push_back(g);
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        for (size_t i = 0; i < all.size(); ++i) {
            for (int p : {op.at(x, all[i]), op.at(all[i], x)})
                if (!in[p]) {
                    in[p] = 1;
                    work.push_back(p);
                    all.push_back(p);
                }
        }
        if (std::find(all.begin(), all.end(), x) == all.end()) all.push_back(x);
    }
    return in;
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const OpTable& add) {
    const int n = add.n();
    auto orders = table_orders(add);
    auto gens = greedy_generators(n, [&](const std::vector<int>& seed) {
        return group_span(add, seed);
    });

    std::vector<std::vector<int>> found;
    std::vector<int> map(n, -1);
    map[0] = 0;
    std::vector<int> assigned{0};

    // Assign one generator image, then close under products, checking
    // consistency pairwise.
    auto extend = [&](int x, int v, size_t& mark) -> bool {
        mark = assigned.size();
        if (map[x] >= 0) return map[x] == v;
        map[x] = v;
        assigned.push_back(x);
        for (size_t qi = mark; qi < assigned.size(); ++qi) {
            int u = assigned[qi];
            for (size_t wi = 0; wi < assigned.size(); ++wi) {
                int w = assigned[wi];
                for (auto [p, q] : {std::pair{add.at(u, w), add.at(map[u], map[w])},
                                    std::pair{add.at(w, u), add.at(map[w], map[u])}}) {
                    if (map[p] < 0) {
                        map[p] = q;
                        assigned.push_back(p);
                    } else if (map[p] != q) {
                        return false;
                    }
                }
            }
        }
        return true;
    };
    auto retract = [&](size_t mark) {
        while (assigned.size() > mark) {
            map[assigned.back()] = -1;
            assigned.pop_back();
        }
    };

    auto rec = [&](auto&& self, size_t gi) -> void {
        if (gi == gens.size()) {
            std::vector<char> hit(n, 0);
            for (int v : map) {
                if (v < 0 || hit[v]) return;
                hit[v] = 1;
            }
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (map[add.at(a, b)] != add.at(map[a], map[b])) return;
            found.push_back(map);
            return;
        }
        int g = gens[gi];
        for (int v = 0; v < n; ++v) {
            if (orders[v] != orders[g]) continue;
            size_t mark;
            if (extend(g, v, mark)) self(self, gi + 1);
            retract(mark);
        }
    };
    rec(rec, 0);
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<int> brace_generators(const BracePtr& a) {
    const int n = a->order();
    return greedy_generators(n, [&](const std::vector<int>& seed) {
        std::vector<char> in(n, 0);
        std::vector<int> all{0}, work{0};
        in[0] = 1;
        for (int g : seed)
            if (!in[g]) {
                in[g] = 1;
                all.push_back(g);
                work.push_back(g);
            }
        while (!work.empty()) {
            int x = work.back();
            work.pop_back();
            auto push = [&](int p) {
                if (!in[p]) {
                    in[p] = 1;
                    all.push_back(p);
                    work.push_back(p);
                }
            };
            push(a->neg(x));
            push(a->circ_inv(x));
            for (size_t i = 0; i < all.size(); ++i) {
                int y = all[i];
                push(a->add(x, y));
                push(a->add(y, x));
                push(a->circ(x, y));
                push(a->circ(y, x));
            }
        }
        return in;
    });
}

std::vector<Hom> all_homs(const BracePtr& a, const BracePtr& b, int bound) {
    if (a->order() > bound || b->order() > bound)
        throw BoundExceededError("homomorphism search bound " + std::to_string(bound) +
                                 " exceeded");
    const int n = a->order();
    auto gens = brace_generators(a);

    std::vector<std::vector<int>> maps;
    std::vector<int> map(n, -1);
    map[0] = 0;
    std::vector<int> assigned{0};

    auto extend = [&](int x, int v, size_t& mark) -> bool {
        mark = assigned.size();
        if (map[x] >= 0) return map[x] == v;
        map[x] = v;
        assigned.push_back(x);
        for (size_t qi = mark; qi < assigned.size(); ++qi) {
            int u = assigned[qi];
            auto derive = [&](int p, int q) {
                if (map[p] < 0) {
                    map[p] = q;
                    assigned.push_back(p);
                    return true;
                }
                return map[p] == q;
            };
            if (!derive(a->neg(u), b->neg(map[u]))) return false;
            if (!derive(a->circ_inv(u), b->circ_inv(map[u]))) return false;
            for (size_t wi = 0; wi < assigned.size(); ++wi) {
                int w = assigned[wi];
                if (!derive(a->add(u, w), b->add(map[u], map[w]))) return false;
                if (!derive(a->add(w, u), b->add(map[w], map[u]))) return false;
                if (!derive(a->circ(u, w), b->circ(map[u], map[w]))) return false;
                if (!derive(a->circ(w, u), b->circ(map[w], map[u]))) return false;
            }
        }
        return true;
    };
    auto retract = [&](size_t mark) {
        while (assigned.size() > mark) {
            map[assigned.back()] = -1;
            assigned.pop_back();
        }
    };

    auto rec = [&](auto&& self, size_t gi) -> void {
        if (gi == gens.size()) {
            if (preserves_operations(*a, *b, map)) maps.push_back(map);
            return;
        }
        for (int v = 0; v < b->order(); ++v) {
            size_t mark;
            if (extend(gens[gi], v, mark)) self(self, gi + 1);
            retract(mark);
        }
    };
    rec(rec, 0);
    std::sort(maps.begin(), maps.end());

    std::vector<Hom> out;
    out.reserve(maps.size());
    for (auto& m : maps) {
        Hom h{a, b, std::move(m), true, false};
        std::vector<char> hit(b->order(), 0);
        for (int v : h.map) hit[v] = 1;
        h.is_surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
        out.push_back(std::move(h));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism.

bool are_isomorphic(const BracePtr& a, const BracePtr& b) {
    const int n = a->order();
    if (n != b->order()) return false;
    std::vector<std::pair<int, int>> inva(n), invb(n);
    for (int x = 0; x < n; ++x) {
        inva[x] = {a->add_order(x), a->circ_order(x)};
        invb[x] = {b->add_order(x), b->circ_order(x)};
    }
    {
        auto sa = inva, sb = invb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    std::vector<int> sigma(n, -1);
    std::vector<char> used(n, 0);
    sigma[0] = 0;
    used[0] = 1;

    // Assign images in element order; check every pair whose three players
    // are all assigned.
    auto consistent = [&](int k) {
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) {
                if (i != k && j != k && a->add(i, j) != k && a->circ(i, j) != k) continue;
                int p = a->add(i, j);
                if (p <= k && sigma[p] >= 0 && b->add(sigma[i], sigma[j]) != sigma[p])
                    return false;
                p = a->circ(i, j);
                if (p <= k && sigma[p] >= 0 && b->circ(sigma[i], sigma[j]) != sigma[p])
                    return false;
            }
        return true;
    };
    auto rec = [&](auto&& self, int k) -> bool {
        if (k == n) return true;
        for (int y = 0; y < n; ++y) {
            if (used[y] || invb[y] != inva[k]) continue;
            sigma[k] = y;
            used[y] = 1;
            if (consistent(k) && self(self, k + 1)) return true;
            used[y] = 0;
            sigma[k] = -1;
        }
        return false;
    };
    return rec(rec, 1);
}

// ---------------------------------------------------------------------------
// Skew brace enumeration.

namespace {

std::vector<int> circ_cells(const OpTable& circ) { return circ.cells(); }

// All braces on one additive table by lambda assignment.  Raw hits are
// deduplicated by marking the whole automorphism-conjugation orbit of each
// circle table: braces sharing an additive group are isomorphic exactly
// when their circle tables are conjugate under Aut(add).
std::vector<BracePtr> braces_on_table(const OpTable& add) {
    const int n = add.n();
    BracePtr shell = trivial_brace(add);  // validates the group, provides neg

    auto auts = automorphisms(add);
    const int na = static_cast<int>(auts.size());
    std::map<std::vector<int>, int> aut_index;
    for (int i = 0; i < na; ++i) aut_index[auts[i]] = i;
    int id_idx = -1;
    {
        std::vector<int> id(n);
        for (int x = 0; x < n; ++x) id[x] = x;
        id_idx = aut_index.at(id);
    }
    std::vector<std::vector<int>> mul(na, std::vector<int>(na));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            std::vector<int> c(n);
            for (int x = 0; x < n; ++x) c[x] = auts[i][auts[j][x]];
            mul[i][j] = aut_index.at(c);
        }

    std::vector<int> lam(n, -1);
    lam[0] = id_idx;
    std::vector<int> assigned{0};

    auto extend = [&](int x, int v, size_t& mark) -> bool {
        mark = assigned.size();
        lam[x] = v;
        assigned.push_back(x);
        for (size_t qi = mark; qi < assigned.size(); ++qi) {
            int u = assigned[qi];
            for (size_t wi = 0; wi < assigned.size(); ++wi) {
                int w = assigned[wi];
                // u o w lands at add(u, lam_u(w)) and must carry lam_u lam_w.
                int c = add.at(u, auts[lam[u]][w]);
                int req = mul[lam[u]][lam[w]];
                if (lam[c] < 0) {
                    lam[c] = req;
                    assigned.push_back(c);
                } else if (lam[c] != req) {
                    return false;
                }
                c = add.at(w, auts[lam[w]][u]);
                req = mul[lam[w]][lam[u]];
                if (lam[c] < 0) {
                    lam[c] = req;
                    assigned.push_back(c);
                } else if (lam[c] != req) {
                    return false;
                }
            }
        }
        return true;
    };
    auto retract = [&](size_t mark) {
        while (assigned.size() > mark) {
            lam[assigned.back()] = -1;
            assigned.pop_back();
        }
    };

    std::set<std::vector<int>> visited;
    std::vector<BracePtr> found;

    auto emit = [&] {
        OpTable circ(n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) circ.set(x, y, add.at(x, auts[lam[x]][y]));
        if (visited.count(circ_cells(circ))) return;
        for (const auto& p : auts) {
            std::vector<int> pinv(n);
            for (int x = 0; x < n; ++x) pinv[p[x]] = x;
            OpTable conj(n);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) conj.set(x, y, p[circ.at(pinv[x], pinv[y])]);
            visited.insert(circ_cells(conj));
        }
        found.push_back(SkewBrace::validate({add, circ}));
    };

    auto rec = [&](auto&& self) -> void {
        int a = -1;
        for (int x = 0; x < n && a < 0; ++x)
            if (lam[x] < 0) a = x;
        if (a < 0) {
            emit();
            return;
        }
        for (int v = 0; v < na; ++v) {
            size_t mark;
            if (extend(a, v, mark)) self(self);
            retract(mark);
        }
    };
    rec(rec);
    return found;
}

std::vector<BracePtr> sort_by_canonical(std::vector<BracePtr> braces) {
    std::vector<std::pair<CanonicalForm, BracePtr>> keyed;
    keyed.reserve(braces.size());
    for (auto& b : braces) keyed.emplace_back(canonical_form(b), std::move(b));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& x, const auto& y) { return x.first.bytes < y.first.bytes; });
    std::vector<BracePtr> out;
    for (size_t i = 0; i < keyed.size(); ++i) {
        if (i > 0 && keyed[i].first == keyed[i - 1].first) continue;
        out.push_back(std::move(keyed[i].second));
    }
    return out;
}

}  // namespace

std::vector<BracePtr> skew_braces_on(const OpTable& add) {
    return sort_by_canonical(braces_on_table(add));
}

std::vector<BracePtr> skew_braces_on_by_table_search(const OpTable& add) {
    const int n = add.n();
    BracePtr shell = trivial_brace(add);

    auto gens = greedy_generators(n, [&](const std::vector<int>& seed) {
        return group_span(add, seed);
    });
    if (gens.empty()) gens.push_back(0);

    OpTable circ(n);
    for (int j = 0; j < n; ++j) circ.set(0, j, j);
    std::vector<uint64_t> colmask(n);
    for (int j = 0; j < n; ++j) colmask[j] = 1ull << j;

    std::vector<BracePtr> found;

    // Row a is determined by the images of the additive generators through
    // a o (b + g) = a o b - a + a o g; conflicts along different additive
    // words kill the choice.
    auto build_row = [&](int a, const std::vector<int>& imgs, std::vector<int>& row) -> bool {
        row.assign(n, -1);
        row[0] = a;
        uint64_t rowmask = 1ull << a;
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int g = gens[gi];
            int v = imgs[gi];
            if (row[g] < 0) {
                if (rowmask >> v & 1) return false;
                row[g] = v;
                rowmask |= 1ull << v;
            } else if (row[g] != v) {
                return false;
            }
        }
        // Propagate along generator edges until every cell is set.
        bool grew = true;
        while (grew) {
            grew = false;
            for (int b = 0; b < n; ++b) {
                if (row[b] < 0) continue;
                for (size_t gi = 0; gi < gens.size(); ++gi) {
                    int g = gens[gi];
                    int nb = add.at(b, g);
                    int val = add.at(add.at(row[b], shell->neg(a)), row[g]);
                    if (row[nb] < 0) {
                        if (rowmask >> val & 1) return false;
                        row[nb] = val;
                        rowmask |= 1ull << val;
                        grew = true;
                    } else if (row[nb] != val) {
                        return false;
                    }
                }
            }
        }
        for (int b = 0; b < n; ++b)
            if (row[b] < 0) return false;
        for (int b = 0; b < n; ++b)
            if (colmask[b] >> row[b] & 1) return false;
        return true;
    };

    auto emit = [&] {
        // Circle must itself be a group; everything else is rechecked by
        // the validator.
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (circ.at(circ.at(x, y), z) != circ.at(x, circ.at(y, z))) return;
        BracePtr b = SkewBrace::validate({add, circ});
        for (const auto& seen : found)
            if (are_isomorphic(seen, b)) return;
        found.push_back(b);
    };

    auto rec = [&](auto&& self, int a) -> void {
        if (a == n) {
            emit();
            return;
        }
        // imgs is per level: the recursion below mutates deeper rows' image
        // tuples, so sharing one vector would corrupt the sweep on backtrack.
        std::vector<int> imgs(gens.size(), 0);
        std::vector<int> row;
        auto sweep = [&](auto&& sweep_self, size_t gi) -> void {
            if (gi == gens.size()) {
                if (!build_row(a, imgs, row)) return;
                for (int j = 0; j < n; ++j) {
                    circ.set(a, j, row[j]);
                    colmask[j] |= 1ull << row[j];
                }
                self(self, a + 1);
                for (int j = 0; j < n; ++j) {
                    colmask[j] &= ~(1ull << row[j]);
                    circ.set(a, j, -1);
                }
                return;
            }
            for (int v = 0; v < n; ++v) {
                imgs[gi] = v;
                sweep_self(sweep_self, gi + 1);
            }
        };
        sweep(sweep, 0);
    };
    rec(rec, 1);
    return sort_by_canonical(std::move(found));
}

std::vector<BracePtr> all_skew_braces(int n) {
    check_order_bound(n);
    static std::map<int, std::vector<BracePtr>> cache;
    static std::mutex mu;
    {
        std::scoped_lock lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    auto groups = groups_of_order(n);
    std::vector<std::vector<BracePtr>> per_group(groups.size());
    parallel_for(static_cast<int>(groups.size()),
                 [&](int i) { per_group[i] = braces_on_table(groups[i]); });
    std::vector<BracePtr> all;
    for (auto& v : per_group)
        for (auto& b : v) all.push_back(std::move(b));
    auto out = sort_by_canonical(std::move(all));
    std::scoped_lock lock(mu);
    cache[n] = out;
    return out;
}

std::vector<BracePtr> load_brace_database(const std::string& path) {
    std::vector<BracePtr> out;
    for (const auto& rec : read_sbrace_file(path)) out.push_back(SkewBrace::validate(rec.tables));
    return out;
}

}  // namespace bracekit
