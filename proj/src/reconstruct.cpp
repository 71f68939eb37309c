#include "treedeck/reconstruct.hpp"

#include <algorithm>

#include "treedeck/structure.hpp"

namespace treedeck {

Tree reconstruct_from_brush_cards(const BrushCardPair& p, bool checked) {
    if (p.card_u.n() != p.card_v.n())
        throw NoCandidateError("cards disagree on order");
    if (p.card_u.n() < 3) throw NoCandidateError("cards too small to come from a brush pair");
    if (!p.card_u.connected())
        throw NoCandidateError("first card is disconnected, so its vertex was not a leaf");
    // deleting a brush root leaves its k >= 1 leaves isolated plus one
    // component holding everything beyond the root's non-leaf neighbor
    int isolated = 0, large = 0;
    for (const Tree& comp : forest_components(p.card_v))
        (comp.n() == 1 ? isolated : large) += 1;
    if (isolated < 1 || large != 1)
        throw NoCandidateError("second card does not have the shape of a deleted brush root");

    Tree base = tree_from_forest(p.card_u);
    CanonCode target = forest_code(p.card_v);

    // one attachment point per orbit, in rooted-code order
    std::vector<int> reps;
    for (const VertexSet& cls : orbits(base)) reps.push_back(cls.front());
    std::vector<CanonCode> rep_code(reps.size());
    for (size_t i = 0; i < reps.size(); ++i) rep_code[i] = rooted_code(base, reps[i]);
    std::vector<size_t> order(reps.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return code_less(rep_code[a], rep_code[b]); });

    std::vector<Tree> accepted;
    for (size_t i : order) {
        int w = reps[i];
        Tree cand = attach_leaf(base, w);
        int nv = cand.n() - 1;  // the vertex playing u
        bool in_brush = false;
        for (const Brush& b : find_brushes(cand))
            if (b.root == w &&
                std::binary_search(b.brush_leaves.begin(), b.brush_leaves.end(), nv)) {
                in_brush = true;
                break;
            }
        if (!in_brush) continue;
        if (forest_code(delete_vertex(cand, w)) != target) continue;
        if (!checked) return cand;
        accepted.push_back(std::move(cand));
    }
    if (accepted.empty()) throw NoCandidateError("no attachment reproduces the second card");
    for (size_t i = 1; i < accepted.size(); ++i)
        if (!isomorphic(accepted[0], accepted[i]))
            throw TheoremViolationError("accepted candidates are not isomorphic");
    return accepted.front();
}

namespace {

// Card multiset from support indices (repeats allowed, indices ascending).
CodeMultiset pick(const std::vector<const CanonCode*>& support, std::initializer_list<int> idx) {
    CodeMultiset m;
    for (int i : idx) ++m[*support[static_cast<size_t>(i)]];
    return m;
}

}  // namespace

CrnResult crn(const Tree& t, const CardIndex& index) {
    if (t.n() < 3) throw std::invalid_argument("crn: tree must have n >= 3");
    if (index.order != t.n()) throw std::invalid_argument("crn: index order mismatch");
    CanonCode code = free_code(t);
    auto deck_it = index.decks.find(code);
    if (deck_it == index.decks.end())
        throw std::invalid_argument("crn: tree missing from the index universe");
    const Deck& deck = deck_it->second;

    std::vector<const CanonCode*> support;
    std::vector<int> mult;
    for (const auto& [c, m] : deck.cards) {
        support.push_back(&c);
        mult.push_back(m);
    }
    const int s = static_cast<int>(support.size());

    // single card held by this tree alone?
    for (int i = 0; i < s; ++i)
        if (index.by_card.at(*support[i]).size() == 1)
            return {1, false, {*support[i]}};

    // pair of cards (two equal copies allowed when the deck has them)
    for (int i = 0; i < s; ++i)
        for (int j = i; j < s; ++j) {
            if (i == j && mult[i] < 2) continue;
            if (index.by_card_pair.at({*support[i], *support[j]}).size() == 1)
                return {2, false, {*support[i], *support[j]}};
        }

    // triple, checked by direct containment against every other deck
    for (int i = 0; i < s; ++i)
        for (int j = i; j < s; ++j)
            for (int k = j; k < s; ++k) {
                int need_i = 1 + (j == i) + (k == i);
                if (mult[i] < need_i) continue;
                if (j > i && mult[j] < 1 + (k == j)) continue;
                CodeMultiset sub = pick(support, {i, j, k});
                bool unique = true;
                for (const auto& [other_code, other_deck] : index.decks) {
                    if (other_code == code) continue;
                    if (subdeck_contained(sub, other_deck)) {
                        unique = false;
                        break;
                    }
                }
                if (unique) return {3, false, {*support[i], *support[j], *support[k]}};
            }

    return {0, true, {}};
}

}  // namespace treedeck
