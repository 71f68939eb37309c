// Release gate.  Each criterion prints exactly one PASS/FAIL line; the
// process exits nonzero if any of them failed.  Everything here rechecks
// the library against independent oracles or its own re-verification
// paths — nothing trusts a value computed by the code under test alone.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "oracles.hpp"
#include "treedeck/canon.hpp"
#include "treedeck/enumerate.hpp"
#include "treedeck/reconstruct.hpp"
#include "treedeck/structure.hpp"
#include "treedeck/tree.hpp"
#include "treedeck/verify.hpp"

using namespace treedeck;

namespace {

int failures = 0;

void report(int num, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << num << ": " << what << "\n";
    if (!ok) ++failures;
}

// Criterion 1: class counts against two independent oracles, plus a
// duplicate-free sweep of every canonical code, inside a two-minute budget.
bool counts_and_uniqueness(std::string& what) {
    auto start = std::chrono::steady_clock::now();
    for (int n = 2; n <= 10; ++n)
        if (count_free_trees(n) != prufer_oracle_count(n)) {
            what = "labelled-tree oracle disagrees at order " + std::to_string(n);
            return false;
        }
    std::vector<long long> rooted = oracles::rooted_tree_counts(16);
    for (int n = 1; n <= 16; ++n) {
        std::unordered_set<std::string> codes;
        TreeStream stream(n);
        Tree t;
        while (stream.next(t))
            if (!codes.insert(free_code(t)).second) {
                what = "duplicate class at order " + std::to_string(n);
                return false;
            }
        if (static_cast<long long>(codes.size()) != oracles::free_tree_count_formula(n, rooted)) {
            what = "counting recurrence disagrees at order " + std::to_string(n);
            return false;
        }
    }
    auto secs =
        std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start)
            .count();
    what = "enumeration matches both counting oracles and repeats no class through order 16 (" +
           std::to_string(secs) + "s)";
    return secs < 120;
}

// Criterion 2: canonical codes against brute-force permutation search.
bool codes_against_permutations(std::string& what) {
    std::mt19937 rng(90210);
    for (int n = 2; n <= 8; ++n) {
        std::vector<Tree> trees = enumerate_free_trees(n);
        for (size_t i = 0; i < trees.size(); ++i) {
            // distinct classes must disagree both ways
            for (size_t j = i + 1; j < trees.size(); ++j) {
                if (free_code(trees[i]) == free_code(trees[j]) ||
                    oracles::perm_isomorphic(trees[i], trees[j])) {
                    what = "distinct classes collide at order " + std::to_string(n);
                    return false;
                }
            }
            // a relabelled copy must agree both ways
            std::vector<int> relabel(n);
            std::iota(relabel.begin(), relabel.end(), 0);
            std::shuffle(relabel.begin(), relabel.end(), rng);
            EdgeList mapped;
            for (auto [a, b] : trees[i].edges()) mapped.push_back({relabel[a], relabel[b]});
            Tree shuffled(n, mapped);
            if (free_code(trees[i]) != free_code(shuffled) ||
                !oracles::perm_isomorphic(trees[i], shuffled)) {
                what = "relabelling changes a class at order " + std::to_string(n);
                return false;
            }
            if (orbits(trees[i]) != oracles::orbit_oracle(trees[i])) {
                what = "orbit partition disagrees at order " + std::to_string(n);
                return false;
            }
        }
    }
    what = "canonical codes match brute-force isomorphism and orbits match the automorphism "
           "oracle through order 8";
    return true;
}

bool suite_clean(const char* name, int lo, int hi, ViolationReport (*suite)(int, int, int),
                 std::string& what) {
    for (int n = lo; n <= hi; ++n) {
        ViolationReport r = suite(n, 1, 20);
        if (!r.violations.empty()) {
            what = std::string(name) + " found " + std::to_string(r.violations.size()) +
                   " violations at order " + std::to_string(n);
            return false;
        }
    }
    what = std::string(name) + " holds for every tree of orders " + std::to_string(lo) + ".." +
           std::to_string(hi);
    return true;
}

// Criterion 5: checked reconstruction round-trips every brush pair.
bool round_trips(std::string& what) {
    long long pairs = 0;
    for (int n = 4; n <= 10; ++n)
        for (const Tree& t : enumerate_free_trees(n)) {
            CanonCode expect = free_code(t);
            for (auto [u, v] : brush_pairs(t)) {
                BrushCardPair p{delete_vertex(t, u), delete_vertex(t, v)};
                try {
                    if (free_code(reconstruct_from_brush_cards(p, true)) != expect) {
                        what = "rebuilt the wrong tree at order " + std::to_string(n);
                        return false;
                    }
                } catch (const std::exception& e) {
                    what = "reconstruction failed at order " + std::to_string(n) + ": " + e.what();
                    return false;
                }
                ++pairs;
            }
        }
    what = "checked reconstruction returned the original tree for all " + std::to_string(pairs) +
           " brush-card pairs of orders 4..10";
    return true;
}

// Criterion 7: reconstruction numbers stay within the conjectured bound.
bool crn_bounded(std::string& what) {
    int max_seen = 0;
    for (int n = 3; n <= 11; ++n) {
        ConjectureScan s = check_conjecture(n);
        for (auto [bucket, count] : s.histogram) {
            if (count == 0) continue;
            if (bucket > 3) {
                what = "a tree of order " + std::to_string(n) + " needs more than three cards";
                return false;
            }
            max_seen = std::max(max_seen, bucket);
        }
    }
    what = "class reconstruction number stays within 3 for orders 3..11 (largest seen: " +
           std::to_string(max_seen) + ")";
    return true;
}

// Criterion 8: the two phenomena appear at their smallest orders and every
// reported witness survives an independent re-check.
bool phenomena(std::string& what) {
    std::vector<AmbiguousFamily> fams = search_ambiguous_pairs(4);
    if (fams.empty()) {
        what = "no ambiguous card pair at order 4";
        return false;
    }
    for (const AmbiguousFamily& fam : fams)
        if (!reverify_ambiguous(fam, 4)) {
            what = "an ambiguous family failed re-verification";
            return false;
        }
    if (!search_nonrecognizable(4).empty()) {
        what = "unexpected nonrecognizable witness at order 4";
        return false;
    }
    std::vector<NonrecognizableWitness> ws = search_nonrecognizable(5);
    if (ws.empty()) {
        what = "no nonrecognizable witness at order 5";
        return false;
    }
    for (const NonrecognizableWitness& w : ws)
        if (!reverify_nonrecognizable(w, 5)) {
            what = "a nonrecognizable witness failed re-verification";
            return false;
        }
    what = "ambiguous cards appear first at order 4, nonrecognizable brush cards at order 5, "
           "and every witness re-verified independently";
    return true;
}

// Criterion 9: repeated runs and worker counts never change a byte.
bool deterministic(std::string& what) {
    auto stable = [](const std::function<std::string(int)>& make) {
        std::string a = make(1);
        return make(4) == a && make(1) == a && make(4) == a;
    };
    bool ok =
        stable([](int j) { return render_report(verify_hp0(10, j)); }) &&
        stable([](int j) { return render_report(verify_theorem_main(10, j)); }) &&
        stable([](int j) { return render_conjecture(check_conjecture(9, j)); }) &&
        stable([](int j) { return render_families(search_ambiguous_pairs(8, j), 8); }) &&
        stable([](int j) { return render_witnesses(search_nonrecognizable(7, j), 7); });
    what = ok ? "rendered outputs are byte-identical across repeated runs with 1 and 4 workers"
              : "output changed between runs or worker counts";
    return ok;
}

}  // namespace

int main() {
    std::string what;

    report(1, counts_and_uniqueness(what), what);
    report(2, codes_against_permutations(what), what);
    report(3, suite_clean("similar-vertex check", 3, 12, verify_hp0, what), what);
    report(4, suite_clean("unique-reconstruction check", 4, 12, verify_theorem_main, what), what);
    report(5, round_trips(what), what);
    report(6, suite_clean("starlike characterisation", 3, 11, verify_remark, what), what);
    report(7, crn_bounded(what), what);
    report(8, phenomena(what), what);
    report(9, deterministic(what), what);

    return failures == 0 ? 0 : 1;
}
