#include "treedeck/tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace treedeck {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    // false if x and y were already connected
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent[rx] = ry;
        return true;
    }
};

}  // namespace

Forest::Forest(int n, EdgeList edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("forest: negative vertex count");
    UnionFind uf(n_);
    for (auto& [a, b] : edges_) {
        if (a < 0 || a >= n_ || b < 0 || b >= n_)
            throw std::out_of_range("forest: edge endpoint out of range");
        if (a == b) throw std::invalid_argument("forest: self-loop");
        if (a > b) std::swap(a, b);
        if (!uf.unite(a, b)) throw std::invalid_argument("forest: cycle or duplicate edge");
    }
    std::sort(edges_.begin(), edges_.end());
    adj_.assign(n_, {});
    for (const auto& [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
}

const std::vector<int>& Forest::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v));
    return adj_[v];
}

int Forest::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

std::vector<VertexSet> Forest::component_vertices() const {
    std::vector<VertexSet> comps;
    std::vector<char> seen(n_, 0);
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        VertexSet comp{s};
        seen[s] = 1;
        for (size_t i = 0; i < comp.size(); ++i)
            for (int w : adj_[comp[i]])
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Forest::connected() const {
    return n_ >= 1 && static_cast<int>(edges_.size()) == n_ - 1;
}

Tree::Tree() : Tree(1, {}) {}

Tree::Tree(int n, EdgeList edges) : Forest(n, std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("tree: needs at least one vertex");
    if (static_cast<int>(edges_.size()) != n_ - 1)
        throw std::invalid_argument("tree: expected n-1 edges");
    // acyclic with n-1 edges implies connected
}

int degree(const Tree& t, int v) { return t.degree(v); }

VertexSet leaves(const Tree& t) {
    VertexSet out;
    for (int v = 0; v < t.n(); ++v)
        if (t.degree(v) <= 1) out.push_back(v);
    return out;
}

VertexSet near_leaves(const Tree& t) {
    std::vector<char> internal(t.n(), 0);
    for (int v = 0; v < t.n(); ++v) internal[v] = t.degree(v) >= 2;
    VertexSet out;
    for (int v = 0; v < t.n(); ++v) {
        if (!internal[v]) continue;
        int d = 0;
        for (int w : t.neighbors(v)) d += internal[w];
        if (d <= 1) out.push_back(v);
    }
    return out;
}

VertexSet centers(const Tree& t) {
    const int n = t.n();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
    std::vector<char> removed(n, 0);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --remaining;
        }
        for (int v : layer)
            for (int w : t.neighbors(v))
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    VertexSet out;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) out.push_back(v);
    return out;
}

Forest delete_vertex(const Tree& t, int v) {
    if (v < 0 || v >= t.n()) throw std::out_of_range("vertex " + std::to_string(v));
    if (t.n() < 2) throw std::invalid_argument("delete_vertex: tree must have n >= 2");
    EdgeList out;
    out.reserve(t.edges().size());
    for (const auto& [a, b] : t.edges()) {
        if (a == v || b == v) continue;
        out.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return Forest(t.n() - 1, std::move(out));
}

Tree attach_leaf(const Tree& t, int w) {
    if (w < 0 || w >= t.n()) throw std::out_of_range("vertex " + std::to_string(w));
    EdgeList out = t.edges();
    out.emplace_back(w, t.n());
    return Tree(t.n() + 1, std::move(out));
}

std::vector<Tree> forest_components(const Forest& f) {
    std::vector<Tree> out;
    for (const VertexSet& comp : f.component_vertices()) {
        std::vector<int> relabel(f.n(), -1);
        for (size_t i = 0; i < comp.size(); ++i) relabel[comp[i]] = static_cast<int>(i);
        EdgeList edges;
        for (int v : comp)
            for (int w : f.neighbors(v))
                if (v < w) edges.emplace_back(relabel[v], relabel[w]);
        out.emplace_back(static_cast<int>(comp.size()), std::move(edges));
    }
    return out;
}

Tree tree_from_forest(const Forest& f) {
    if (!f.connected()) throw std::invalid_argument("forest is not connected");
    return Tree(f.n(), f.edges());
}

}  // namespace treedeck
