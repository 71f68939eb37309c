#pragma once

#include <stdexcept>
#include <vector>

#include "treedeck/deck.hpp"
#include "treedeck/tree.hpp"

namespace treedeck {

// The two claimed cards: T - u for a brush leaf u (always a tree) and T - v
// for v the root of u's brush.  Whether a pair really arose that way cannot
// be decided from the cards themselves; reconstruction trusts the promise
// and fails loudly when no candidate fits it.
struct BrushCardPair {
    Forest card_u;
    Forest card_v;
};

struct NoCandidateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Only possible in checked mode and never expected: two accepted candidates
// in different isomorphism classes would contradict uniqueness.
struct TheoremViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Attach a new leaf at each orbit representative of card_u, keep candidates
// in which the new vertex lands in a brush whose root's deletion matches
// card_v, and return the first in deterministic order.  Checked mode accepts
// only after confirming all candidates are pairwise isomorphic.
Tree reconstruct_from_brush_cards(const BrushCardPair& p, bool checked = false);

struct CrnResult {
    int value = 0;                   // minimal card count, 1..3
    bool exceeds_three = false;      // safety valve; value is meaningless if set
    std::vector<CanonCode> witness;  // lexicographically smallest minimum sub-multiset
};

// Minimum number of cards of t contained, as a sub-multiset, in no other
// same-order tree's deck.  (The ally and adversary reconstruction numbers
// over all graphs are different quantities and are not computed here.)
CrnResult crn(const Tree& t, const CardIndex& index);

}  // namespace treedeck
