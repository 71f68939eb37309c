#pragma once

#include <map>
#include <utility>
#include <vector>

#include "treedeck/canon.hpp"

namespace treedeck {

using CodeMultiset = std::map<CanonCode, int, CodeLess>;

// The multiset of all vertex-deleted subgraph codes of one tree; holds
// exactly `order` cards counting multiplicity.
struct Deck {
    int order = 0;
    CodeMultiset cards;
};

// Code of the vertex-deleted subgraph t - v.
CanonCode card(const Tree& t, int v);

Deck deck_of(const Tree& t);

// Multiset containment: every code of sub occurs in d with at least the
// same multiplicity.
bool subdeck_contained(const CodeMultiset& sub, const Deck& d);

struct CodePairLess {
    bool operator()(const std::pair<CanonCode, CanonCode>& a,
                    const std::pair<CanonCode, CanonCode>& b) const {
        if (a.first != b.first) return code_less(a.first, b.first);
        return code_less(a.second, b.second);
    }
};

// Cross-reference of every deck at one order: which trees carry a given
// card, which carry a given unordered pair of cards (an equal pair requires
// multiplicity two in the deck), and each tree's full deck, all keyed by
// canonical codes so the contents are independent of construction order.
struct CardIndex {
    int order = 0;
    long long tree_count = 0;
    std::map<CanonCode, std::vector<CanonCode>, CodeLess> by_card;
    std::map<std::pair<CanonCode, CanonCode>, std::vector<CanonCode>, CodePairLess> by_card_pair;
    std::map<CanonCode, Deck, CodeLess> decks;
};

CardIndex build_card_index(int n, int jobs = 1, int cap = 20);

}  // namespace treedeck
