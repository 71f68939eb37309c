#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treedeck/tree.hpp"

namespace treedeck {

// ASCII balanced-parenthesis string identifying a rooted tree, free tree, or
// forest up to isomorphism. For a rooted tree on k vertices the length is 2k;
// forest component codes are joined with ';'.
using CanonCode = std::string;

// Code ordering used everywhere child blocks or components are sorted:
// shorter first, then byte-wise.
bool code_less(const CanonCode& a, const CanonCode& b);

struct CodeLess {
    bool operator()(const CanonCode& a, const CanonCode& b) const { return code_less(a, b); }
};

// AHU encoding: a leaf is `()`, an internal vertex wraps its children's codes
// in sorted order.
CanonCode rooted_code(const Tree& t, int root);

// rooted_code at the unique center; for bicentral trees the byte-wise minimum
// of the two center rootings.
CanonCode free_code(const Tree& t);

// Component free codes sorted and joined with ';'. Empty forest encodes as "".
CanonCode forest_code(const Forest& f);

bool isomorphic(const Tree& a, const Tree& b);
bool isomorphic(const Forest& a, const Forest& b);
bool isomorphic(const Tree& a, const Forest& b);
bool isomorphic(const Forest& a, const Tree& b);

// rooted_code of t at every vertex; two vertices get equal entries iff they
// lie in the same automorphism orbit.
std::vector<CanonCode> vertex_codes(const Tree& t);

// Partition of 0..n-1 into automorphism orbits, classes ordered by smallest
// member.
using OrbitPartition = std::vector<VertexSet>;
OrbitPartition orbits(const Tree& t);

// Explicit adjacency-preserving bijection a -> b, recovered by matching
// sorted child codes during simultaneous decomposition. Throws
// std::invalid_argument when the trees are not isomorphic.
using VertexMapping = std::vector<int>;
VertexMapping find_isomorphism(const Tree& a, const Tree& b);

enum class DeletionKind { leaf, near_leaf };

// Pairs (a, b) of the given vertex kind whose deletion cards are isomorphic
// but whose orbits differ. Requires t.n() >= 3.
std::vector<std::pair<int, int>> similar_after_deletion_check(const Tree& t, DeletionKind kind);

// Free code packed into a 64-bit word: the paren string bit by bit, MSB
// first, '(' = 1. Valid for n <= 31; equal to free_code under the obvious
// bijection. Meant for tight enumeration loops.
std::uint64_t free_code_bits(const Tree& t);

// Same, over a raw adjacency view: neighbors of v are
// nbr[v*stride .. v*stride+deg[v]).
std::uint64_t packed_free_code(int n, const std::uint8_t* deg, const std::uint8_t* nbr,
                               int stride);

}  // namespace treedeck
