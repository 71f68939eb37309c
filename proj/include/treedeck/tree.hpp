#pragma once

#include <utility>
#include <vector>

namespace treedeck {

// Sorted list of vertex ids, strictly increasing.
using VertexSet = std::vector<int>;

// Unordered edges stored as (a, b) with a < b, list sorted.
using EdgeList = std::vector<std::pair<int, int>>;

// Immutable forest on vertices 0..n-1. Isolated vertices are retained and
// counted in n. Construction validates simplicity and acyclicity.
class Forest {
public:
    Forest() = default;
    Forest(int n, EdgeList edges);

    int n() const { return n_; }
    const EdgeList& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;

    // Vertex groups per connected component, each sorted ascending,
    // ordered by smallest member.
    std::vector<VertexSet> component_vertices() const;
    bool connected() const;

    bool operator==(const Forest&) const = default;

protected:
    int n_ = 0;
    EdgeList edges_;
    std::vector<std::vector<int>> adj_;
};

// Immutable tree on vertices 0..n-1 (n >= 1, exactly n-1 edges, connected).
class Tree : public Forest {
public:
    Tree();  // the one-vertex tree
    Tree(int n, EdgeList edges);
};

// Number of edges incident to v; throws std::out_of_range on a bad vertex.
int degree(const Tree& t, int v);

// Vertices of degree <= 1. The sole vertex of a one-vertex tree counts as a
// leaf, so near_leaves stays total on stars.
VertexSet leaves(const Tree& t);

// Leaves of the forest obtained by deleting all leaves; an isolated survivor
// counts as a leaf of its component.
VertexSet near_leaves(const Tree& t);

// The 1 or 2 vertices minimizing eccentricity, by iterated leaf removal.
VertexSet centers(const Tree& t);

// Forest on n-1 vertices, relabelled order-preservingly (k > v becomes k-1).
// Requires t.n() >= 2.
Forest delete_vertex(const Tree& t, int v);

// Tree on n+1 vertices with new vertex n adjacent only to w.
Tree attach_leaf(const Tree& t, int w);

// The components of f as trees, relabelled order-preservingly within each
// component, ordered by smallest original vertex.
std::vector<Tree> forest_components(const Forest& f);

// Reinterpret a connected forest as a tree; throws if not connected.
Tree tree_from_forest(const Forest& f);

}  // namespace treedeck
