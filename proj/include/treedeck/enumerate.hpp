#pragma once

#include <cstdint>
#include <vector>

#include "treedeck/tree.hpp"

namespace treedeck {

// Streams every free tree on n vertices, one representative per isomorphism
// class, in a fixed deterministic order.  Restarting a stream replays the
// identical sequence.
class TreeStream {
public:
    explicit TreeStream(int n);

    // Next tree, or false once the class list is exhausted.
    bool next(Tree& out);

    int order() const { return n_; }

private:
    bool advance();  // step the level-sequence generator; false when spent

    int n_;
    std::vector<int> levels_;
    bool fresh_;
    bool done_;
};

// All free trees on n vertices.  Throws std::out_of_range unless 1 <= n <= cap;
// the cap guards against accidentally materialising an astronomical list.
std::vector<Tree> enumerate_free_trees(int n, int cap = 20);

// Number of isomorphism classes the stream yields for order n.
long long count_free_trees(int n, int cap = 20);

// Independent class count: decodes every Prüfer sequence of length n-2 over
// [0,n)^(n-2), canonises each labelled tree, and counts distinct codes.
// Exhaustive, so only small orders are allowed (2 <= n <= 10).
long long prufer_oracle_count(int n);

}  // namespace treedeck
