#include "treedeck/canon.hpp"

#include <algorithm>
#include <stdexcept>

namespace treedeck {

bool code_less(const CanonCode& a, const CanonCode& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

namespace {

// BFS order from root; parent[root] == root.
void bfs_order(const Tree& t, int root, std::vector<int>& parent, std::vector<int>& order) {
    parent.assign(t.n(), -1);
    order.clear();
    order.reserve(t.n());
    parent[root] = root;
    order.push_back(root);
    for (size_t i = 0; i < order.size(); ++i)
        for (int w : t.neighbors(order[i]))
            if (parent[w] == -1) {
                parent[w] = order[i];
                order.push_back(w);
            }
}

// Subtree code of every vertex for the given rooting.
std::vector<CanonCode> subtree_codes(const Tree& t, int root, std::vector<int>& parent) {
    std::vector<int> order;
    bfs_order(t, root, parent, order);
    std::vector<CanonCode> code(t.n());
    for (int i = t.n() - 1; i >= 0; --i) {
        int v = order[i];
        std::vector<const CanonCode*> kids;
        for (int w : t.neighbors(v))
            if (parent[w] == v) kids.push_back(&code[w]);
        std::sort(kids.begin(), kids.end(),
                  [](const CanonCode* x, const CanonCode* y) { return code_less(*x, *y); });
        CanonCode& c = code[v];
        size_t len = 2;
        for (const CanonCode* k : kids) len += k->size();
        c.reserve(len);
        c.push_back('(');
        for (const CanonCode* k : kids) c += *k;
        c.push_back(')');
    }
    return code;
}

}  // namespace

CanonCode rooted_code(const Tree& t, int root) {
    if (root < 0 || root >= t.n()) throw std::out_of_range("root out of range");
    std::vector<int> parent;
    return subtree_codes(t, root, parent)[root];
}

CanonCode free_code(const Tree& t) {
    VertexSet cs = centers(t);
    if (cs.size() == 1) return rooted_code(t, cs[0]);
    CanonCode a = rooted_code(t, cs[0]);
    CanonCode b = rooted_code(t, cs[1]);
    return a <= b ? a : b;  // equal lengths, plain byte order
}

CanonCode forest_code(const Forest& f) {
    std::vector<CanonCode> parts;
    for (const Tree& c : forest_components(f)) parts.push_back(free_code(c));
    std::sort(parts.begin(), parts.end(), code_less);
    CanonCode out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out.push_back(';');
        out += parts[i];
    }
    return out;
}

bool isomorphic(const Tree& a, const Tree& b) { return free_code(a) == free_code(b); }
bool isomorphic(const Forest& a, const Forest& b) { return forest_code(a) == forest_code(b); }
bool isomorphic(const Tree& a, const Forest& b) { return free_code(a) == forest_code(b); }
bool isomorphic(const Forest& a, const Tree& b) { return forest_code(a) == free_code(b); }

std::vector<CanonCode> vertex_codes(const Tree& t) {
    std::vector<CanonCode> out(t.n());
    for (int v = 0; v < t.n(); ++v) out[v] = rooted_code(t, v);
    return out;
}

OrbitPartition orbits(const Tree& t) {
    std::vector<CanonCode> codes = vertex_codes(t);
    OrbitPartition classes;
    std::vector<int> rep;  // representative vertex per class, in discovery order
    for (int v = 0; v < t.n(); ++v) {
        bool placed = false;
        for (size_t c = 0; c < classes.size(); ++c)
            if (codes[rep[c]] == codes[v]) {
                classes[c].push_back(v);
                placed = true;
                break;
            }
        if (!placed) {
            classes.push_back({v});
            rep.push_back(v);
        }
    }
    return classes;
}

VertexMapping find_isomorphism(const Tree& a, const Tree& b) {
    if (a.n() != b.n() || free_code(a) != free_code(b))
        throw std::invalid_argument("find_isomorphism: trees are not isomorphic");
    VertexSet ca = centers(a), cb = centers(b);
    int root_a = ca[0];
    CanonCode best = rooted_code(a, ca[0]);
    if (ca.size() == 2) {
        CanonCode other = rooted_code(a, ca[1]);
        if (other < best) {
            best = other;
            root_a = ca[1];
        }
    }
    int root_b = -1;
    for (int c : cb)
        if (rooted_code(b, c) == best) {
            root_b = c;
            break;
        }
    // codes agree, so a matching center rooting must exist
    std::vector<int> parent_a, parent_b;
    std::vector<CanonCode> code_a = subtree_codes(a, root_a, parent_a);
    std::vector<CanonCode> code_b = subtree_codes(b, root_b, parent_b);

    VertexMapping map(a.n(), -1);
    std::vector<std::pair<int, int>> queue{{root_a, root_b}};
    map[root_a] = root_b;
    for (size_t i = 0; i < queue.size(); ++i) {
        auto [va, vb] = queue[i];
        auto kids_of = [](const Tree& t, const std::vector<int>& parent,
                          const std::vector<CanonCode>& code, int v) {
            std::vector<std::pair<const CanonCode*, int>> kids;
            for (int w : t.neighbors(v))
                if (parent[w] == v) kids.emplace_back(&code[w], w);
            std::sort(kids.begin(), kids.end(), [](const auto& x, const auto& y) {
                if (*x.first != *y.first) return code_less(*x.first, *y.first);
                return x.second < y.second;
            });
            return kids;
        };
        auto kids_a = kids_of(a, parent_a, code_a, va);
        auto kids_b = kids_of(b, parent_b, code_b, vb);
        // equal subtree codes give equal sorted child-code sequences
        for (size_t j = 0; j < kids_a.size(); ++j) {
            map[kids_a[j].second] = kids_b[j].second;
            queue.emplace_back(kids_a[j].second, kids_b[j].second);
        }
    }
    return map;
}

std::vector<std::pair<int, int>> similar_after_deletion_check(const Tree& t, DeletionKind kind) {
    if (t.n() < 3) throw std::invalid_argument("similar_after_deletion_check: needs n >= 3");
    VertexSet vs = kind == DeletionKind::leaf ? leaves(t) : near_leaves(t);
    std::vector<CanonCode> cards(vs.size());
    for (size_t i = 0; i < vs.size(); ++i) cards[i] = forest_code(delete_vertex(t, vs[i]));
    std::vector<CanonCode> vcodes = vertex_codes(t);
    std::vector<std::pair<int, int>> violations;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (cards[i] == cards[j] && vcodes[vs[i]] != vcodes[vs[j]])
                violations.emplace_back(vs[i], vs[j]);
    return violations;
}

// ---- packed codes ----

namespace {

constexpr int kPackedMaxN = 31;

struct PackedView {
    int n;
    const std::uint8_t* deg;
    const std::uint8_t* nbr;
    int stride;
};

// Packed subtree comparison matching code_less: shorter first, then
// byte-ascending, which for MSB-aligned equal-length words with '(' = 1 is
// integer-descending.
inline bool packed_less(std::uint64_t ab, int al, std::uint64_t bb, int bl) {
    if (al != bl) return al < bl;
    return ab > bb;
}

std::uint64_t packed_rooted(const PackedView& g, int root) {
    int parent[kPackedMaxN + 1];
    int order[kPackedMaxN + 1];
    std::uint64_t bits[kPackedMaxN + 1];
    int len[kPackedMaxN + 1];
    for (int v = 0; v < g.n; ++v) parent[v] = -1;
    parent[root] = root;
    order[0] = root;
    int filled = 1;
    for (int i = 0; i < filled; ++i) {
        int v = order[i];
        for (int j = 0; j < g.deg[v]; ++j) {
            int w = g.nbr[v * g.stride + j];
            if (parent[w] == -1) {
                parent[w] = v;
                order[filled++] = w;
            }
        }
    }
    for (int i = g.n - 1; i >= 0; --i) {
        int v = order[i];
        std::uint64_t kb[kPackedMaxN];
        int kl[kPackedMaxN];
        int k = 0;
        for (int j = 0; j < g.deg[v]; ++j) {
            int w = g.nbr[v * g.stride + j];
            if (parent[w] == v) {
                kb[k] = bits[w];
                kl[k] = len[w];
                ++k;
            }
        }
        for (int x = 1; x < k; ++x) {  // insertion sort, k is tiny
            std::uint64_t tb = kb[x];
            int tl = kl[x];
            int y = x;
            while (y > 0 && packed_less(tb, tl, kb[y - 1], kl[y - 1])) {
                kb[y] = kb[y - 1];
                kl[y] = kl[y - 1];
                --y;
            }
            kb[y] = tb;
            kl[y] = tl;
        }
        std::uint64_t acc = 1;  // '('
        int L = 1;
        for (int x = 0; x < k; ++x) {
            acc = (acc << kl[x]) | kb[x];
            L += kl[x];
        }
        acc <<= 1;  // ')'
        ++L;
        bits[v] = acc;
        len[v] = L;
    }
    return bits[root];
}

}  // namespace

std::uint64_t packed_free_code(int n, const std::uint8_t* deg, const std::uint8_t* nbr,
                               int stride) {
    if (n < 1 || n > kPackedMaxN) throw std::out_of_range("packed_free_code: n must be 1..31");
    PackedView g{n, deg, nbr, stride};
    // centers by iterated leaf removal
    std::uint8_t d[kPackedMaxN + 1];
    bool removed[kPackedMaxN + 1];
    int layer[kPackedMaxN + 1], next[kPackedMaxN + 1];
    int nl = 0;
    for (int v = 0; v < n; ++v) {
        d[v] = deg[v];
        removed[v] = false;
        if (d[v] <= 1) layer[nl++] = v;
    }
    int remaining = n;
    while (remaining > 2) {
        int nn = 0;
        for (int i = 0; i < nl; ++i) {
            removed[layer[i]] = true;
            --remaining;
        }
        for (int i = 0; i < nl; ++i) {
            int v = layer[i];
            for (int j = 0; j < deg[v]; ++j) {
                int w = nbr[v * stride + j];
                if (!removed[w] && --d[w] == 1) next[nn++] = w;
            }
        }
        for (int i = 0; i < nn; ++i) layer[i] = next[i];
        nl = nn;
    }
    int c1 = -1, c2 = -1;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) (c1 < 0 ? c1 : c2) = v;
    std::uint64_t p1 = packed_rooted(g, c1);
    if (c2 < 0) return p1;
    std::uint64_t p2 = packed_rooted(g, c2);
    // byte-wise minimum string is the larger packed word
    return p1 >= p2 ? p1 : p2;
}

std::uint64_t free_code_bits(const Tree& t) {
    const int n = t.n();
    if (n > kPackedMaxN) throw std::out_of_range("free_code_bits: n must be <= 31");
    std::uint8_t deg[kPackedMaxN + 1] = {};
    std::uint8_t nbr[(kPackedMaxN + 1) * kPackedMaxN];
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<std::uint8_t>(t.degree(v));
        int j = 0;
        for (int w : t.neighbors(v)) nbr[v * kPackedMaxN + j++] = static_cast<std::uint8_t>(w);
    }
    return packed_free_code(n, deg, nbr, kPackedMaxN);
}

}  // namespace treedeck
