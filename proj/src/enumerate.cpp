#include "treedeck/enumerate.hpp"

#include <numeric>
#include <stdexcept>

#include "treedeck/canon.hpp"

namespace treedeck {

// Rooted trees are generated as canonical level sequences (root at depth 1,
// successor by truncate-and-copy), and a rooted tree survives the free-tree
// filter only when its root is a centre — with a rooted-code tie-break for
// bicentral trees so each isomorphism class appears exactly once.

TreeStream::TreeStream(int n) : n_(n), levels_(n), fresh_(true), done_(n < 1) {
    if (n < 1) throw std::out_of_range("TreeStream: order must be >= 1");
    std::iota(levels_.begin(), levels_.end(), 1);  // the path: 1,2,...,n
}

bool TreeStream::advance() {
    int p = -1;
    for (int i = n_ - 1; i >= 0; --i)
        if (levels_[i] > 2) {
            p = i;
            break;
        }
    if (p < 0) return false;
    int q = p - 1;
    while (levels_[q] != levels_[p] - 1) --q;
    for (int i = p; i < n_; ++i) levels_[i] = levels_[i - (p - q)];
    return true;
}

bool TreeStream::next(Tree& out) {
    while (!done_) {
        if (!fresh_ && !advance()) {
            done_ = true;
            break;
        }
        fresh_ = false;
        EdgeList edges;
        edges.reserve(n_ - 1);
        std::vector<int> last_at(n_ + 1, 0);  // last vertex seen per depth
        last_at[1] = 0;
        for (int i = 1; i < n_; ++i) {
            edges.emplace_back(last_at[levels_[i] - 1], i);
            last_at[levels_[i]] = i;
        }
        Tree t(n_, edges);
        VertexSet cs = centers(t);
        if (cs[0] != 0) continue;  // root must be a centre
        if (cs.size() == 2 && rooted_code(t, cs[1]) < rooted_code(t, 0))
            continue;  // bicentral: keep the rooting with the smaller code
        out = std::move(t);
        return true;
    }
    return false;
}

std::vector<Tree> enumerate_free_trees(int n, int cap) {
    if (n < 1 || n > cap) throw std::out_of_range("enumerate_free_trees: order out of range");
    std::vector<Tree> out;
    TreeStream s(n);
    Tree t;
    while (s.next(t)) out.push_back(t);
    return out;
}

long long count_free_trees(int n, int cap) {
    if (n < 1 || n > cap) throw std::out_of_range("count_free_trees: order out of range");
    long long c = 0;
    TreeStream s(n);
    Tree t;
    while (s.next(t)) ++c;
    return c;
}

long long prufer_oracle_count(int n) {
    if (n < 2 || n > 10) throw std::out_of_range("prufer_oracle_count: order must be 2..10");
    if (n == 2) return 1;
    const int m = n - 2;
    std::vector<std::uint8_t> seen(1u << (2 * n), 0);  // packed codes use 2n bits
    std::uint8_t seq[8] = {};
    std::uint8_t deg[10], dcount[10], nbr[10 * 10];
    long long distinct = 0;
    for (;;) {
        for (int v = 0; v < n; ++v) {
            deg[v] = 1;
            dcount[v] = 0;
        }
        for (int i = 0; i < m; ++i) ++deg[seq[i]];
        auto add_edge = [&](int a, int b) {
            nbr[a * 10 + dcount[a]++] = static_cast<std::uint8_t>(b);
            nbr[b * 10 + dcount[b]++] = static_cast<std::uint8_t>(a);
        };
        int ptr = 0;
        while (deg[ptr] != 1) ++ptr;
        int leaf = ptr;
        for (int i = 0; i < m; ++i) {
            int v = seq[i];
            add_edge(leaf, v);
            if (--deg[v] == 1 && v < ptr) {
                leaf = v;
            } else {
                ++ptr;
                while (deg[ptr] != 1) ++ptr;
                leaf = ptr;
            }
        }
        add_edge(leaf, n - 1);
        std::uint64_t code = packed_free_code(n, dcount, nbr, 10);
        std::uint8_t& cell = seen[static_cast<size_t>(code)];
        if (!cell) {
            cell = 1;
            ++distinct;
        }
        int i = m - 1;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return distinct;
}

}  // namespace treedeck
