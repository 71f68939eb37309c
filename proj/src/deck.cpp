#include "treedeck/deck.hpp"

#include <algorithm>
#include <stdexcept>

#include "treedeck/enumerate.hpp"
#include "treedeck/parallel.hpp"

namespace treedeck {

CanonCode card(const Tree& t, int v) {
    if (t.n() < 2) throw std::invalid_argument("card: tree must have n >= 2");
    return forest_code(delete_vertex(t, v));
}

Deck deck_of(const Tree& t) {
    Deck d;
    d.order = t.n();
    for (int v = 0; v < t.n(); ++v) ++d.cards[card(t, v)];
    return d;
}

bool subdeck_contained(const CodeMultiset& sub, const Deck& d) {
    for (const auto& [code, mult] : sub) {
        auto it = d.cards.find(code);
        if (it == d.cards.end() || it->second < mult) return false;
    }
    return true;
}

CardIndex build_card_index(int n, int jobs, int cap) {
    if (n < 2) throw std::out_of_range("build_card_index: order must be >= 2");
    std::vector<Tree> trees = enumerate_free_trees(n, cap);

    struct Entry {
        CanonCode tree_code;
        Deck deck;
    };
    std::function<std::vector<Entry>(long long, long long)> shard = [&](long long lo,
                                                                        long long hi) {
        std::vector<Entry> part;
        part.reserve(static_cast<size_t>(hi - lo));
        for (long long i = lo; i < hi; ++i) {
            const Tree& t = trees[static_cast<size_t>(i)];
            part.push_back({free_code(t), deck_of(t)});
        }
        return part;
    };
    auto parts = run_blocks<std::vector<Entry>>(static_cast<long long>(trees.size()), 64, jobs,
                                                shard);

    CardIndex ix;
    ix.order = n;
    ix.tree_count = static_cast<long long>(trees.size());
    for (auto& part : parts)
        for (auto& e : part) {
            for (const auto& [c1, m1] : e.deck.cards) {
                ix.by_card[c1].push_back(e.tree_code);
                for (const auto& [c2, m2] : e.deck.cards) {
                    if (code_less(c2, c1)) continue;        // unordered: c1 <= c2
                    if (c1 == c2 && m1 < 2) continue;       // equal pair needs two copies
                    ix.by_card_pair[{c1, c2}].push_back(e.tree_code);
                }
            }
            ix.decks.emplace(std::move(e.tree_code), std::move(e.deck));
        }
    for (auto& [c, v] : ix.by_card) std::sort(v.begin(), v.end(), code_less);
    for (auto& [c, v] : ix.by_card_pair) std::sort(v.begin(), v.end(), code_less);
    return ix;
}

}  // namespace treedeck
