#pragma once

#include <map>
#include <string>
#include <vector>

#include "treedeck/canon.hpp"
#include "treedeck/tree.hpp"

namespace treedeck {

// Outcome of one exhaustive suite at one order.  An empty violation list
// means the claim held across every tree scanned.
struct ViolationReport {
    std::string suite;
    int order = 0;
    long long trees_scanned = 0;
    std::vector<std::string> violations;  // sorted descriptor lines
};

struct ConjectureScan {
    ViolationReport report;
    std::map<int, long long> histogram;  // crn value -> tree count; 4 stands for exceeds-3
};

// Two cards held jointly by several non-isomorphic trees.
struct AmbiguousFamily {
    CanonCode card_a;                   // card_a <= card_b
    CanonCode card_b;
    std::vector<CanonCode> tree_codes;  // >= 2, sorted
};

// Tuple showing the brush conditions cannot be recognised from the cards:
// (u, v) is a brush pair of P, u_prime sits in a brush of Q whose root is
// NOT v_prime, both deletions match card-for-card, yet P and Q differ.
struct NonrecognizableWitness {
    CanonCode p_code;
    CanonCode q_code;
    int u = -1;
    int v = -1;
    int u_prime = -1;
    int v_prime = -1;
};

// Every (T-u, T-v) brush-pair key must select a single isomorphism class.
ViolationReport verify_theorem_main(int n, int jobs = 1, int cap = 20);

// Equal leaf cards (and equal near-leaf cards) force similar vertices.
ViolationReport verify_hp0(int n, int jobs = 1, int cap = 20);

// crn = 1 exactly for the starlike trees.
ViolationReport verify_remark(int n, int jobs = 1, int cap = 20);

// crn histogram over all trees of order n; any crn >= 3 is reported as a
// potential counterexample, not asserted away.
ConjectureScan check_conjecture(int n, int jobs = 1, int cap = 20);

std::vector<AmbiguousFamily> search_ambiguous_pairs(int n, int jobs = 1, int cap = 20);

std::vector<NonrecognizableWitness> search_nonrecognizable(int n, int jobs = 1, int cap = 20);

// Independent re-checks straight from a fresh enumeration, used to vet
// every reported witness without trusting index state.
bool reverify_ambiguous(const AmbiguousFamily& fam, int n, int cap = 20);
bool reverify_nonrecognizable(const NonrecognizableWitness& w, int n, int cap = 20);

// Byte-stable plain-text rendering shared by the CLI and the test suites.
std::string render_report(const ViolationReport& r);
std::string render_conjecture(const ConjectureScan& s);
std::string render_families(const std::vector<AmbiguousFamily>& fams, int n);
std::string render_witnesses(const std::vector<NonrecognizableWitness>& ws, int n);

}  // namespace treedeck
