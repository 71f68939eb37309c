#include "treedeck/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace treedeck {

std::vector<Brush> find_brushes(const Tree& t) {
    if (t.n() < 3) throw std::invalid_argument("find_brushes: tree must have n >= 3");
    std::vector<Brush> out;
    for (int v = 0; v < t.n(); ++v) {
        VertexSet leaf_nbrs;
        for (int w : t.neighbors(v))
            if (t.degree(w) == 1) leaf_nbrs.push_back(w);
        int k = static_cast<int>(leaf_nbrs.size());
        // exactly one neighbor left over, and it is not a leaf
        if (k >= 1 && t.degree(v) == k + 1) {
            std::sort(leaf_nbrs.begin(), leaf_nbrs.end());
            out.push_back({v, std::move(leaf_nbrs), k});
        }
    }
    return out;  // ascending v, hence sorted by root
}

std::vector<std::pair<int, int>> brush_pairs(const Tree& t) {
    std::vector<std::pair<int, int>> out;
    for (const Brush& b : find_brushes(t))
        for (int u : b.brush_leaves) out.emplace_back(u, b.root);
    return out;
}

bool is_starlike(const Tree& t) {
    if (t.n() < 2) throw std::invalid_argument("is_starlike: tree must have n >= 2");
    for (int u = 0; u < t.n(); ++u) {
        bool ok = true;
        for (const Tree& comp : forest_components(delete_vertex(t, u)))
            if (comp.n() > 2) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

namespace {

// Longest distance from start, ignoring one banned vertex.
int height_avoiding(const Tree& t, int start, int banned) {
    std::vector<int> dist(t.n(), -1);
    std::vector<int> queue{start};
    dist[start] = 0;
    int best = 0;
    for (size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        best = std::max(best, dist[v]);
        for (int w : t.neighbors(v))
            if (w != banned && dist[w] == -1) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return best;
}

}  // namespace

std::optional<std::pair<int, int>> radial_brush_leaf(const Tree& t) {
    if (t.n() < 4) return std::nullopt;
    std::vector<int> ecc(t.n());
    int diameter = 0;
    for (int v = 0; v < t.n(); ++v) {
        ecc[v] = height_avoiding(t, v, -1);
        diameter = std::max(diameter, ecc[v]);
    }
    if (diameter <= 2) return std::nullopt;  // a star: no brushes at all
    int end = 0;
    while (ecc[end] != diameter) ++end;
    // second vertex of the smallest longest path starting at `end`
    for (int y : t.neighbors(end))
        if (height_avoiding(t, y, end) == diameter - 1) return std::make_pair(end, y);
    return std::nullopt;  // unreachable: some longest path leaves `end`
}

}  // namespace treedeck
