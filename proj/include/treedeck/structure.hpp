#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "treedeck/tree.hpp"

namespace treedeck {

// Maximal star K_{1,k} whose outer vertices are leaves of the tree.  The
// root carries every leaf neighbor it has (maximality) plus exactly one
// further neighbor, which is not a leaf; so its degree is k+1.
struct Brush {
    int root = -1;
    VertexSet brush_leaves;  // ascending vertex ids
    int k = 0;               // == brush_leaves.size()
};

// All brushes, sorted by root.  A vertex roots at most one brush.
// Throws std::invalid_argument below 3 vertices.
std::vector<Brush> find_brushes(const Tree& t);

// Every (brush leaf, brush root) pair, sorted by root then leaf.
std::vector<std::pair<int, int>> brush_pairs(const Tree& t);

// Whether some single deletion leaves only components on 1 or 2 vertices.
bool is_starlike(const Tree& t);

// End vertex and second vertex of the lexicographically smallest longest
// path; the second vertex roots a brush containing the end.  Empty for
// stars and for trees below 4 vertices, which have no such configuration.
std::optional<std::pair<int, int>> radial_brush_leaf(const Tree& t);

}  // namespace treedeck
