#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "treedeck/tree.hpp"

namespace treedeck {

// Text formats. Tree: first line `n`, then n-1 lines `a b` with
// 0 <= a < b < n, ASCII decimal, single space, LF line ends.
// Forest: first line `n m`, then m edge lines. Lines starting `#` are
// ignored on input.

Tree read_tree(std::istream& in);
Forest read_forest(std::istream& in);

// Reads either format, detected by the number of fields on the header line.
Forest read_graph_auto(std::istream& in);

// std::nullopt once the stream has no further tree block (blocks are
// separated by blank lines).
std::optional<Tree> read_next_tree(std::istream& in);

void write_tree(std::ostream& out, const Tree& t);
void write_forest(std::ostream& out, const Forest& f);

Tree read_tree_file(const std::string& path);
Forest read_graph_file(const std::string& path);

}  // namespace treedeck
