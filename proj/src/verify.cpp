#include "treedeck/verify.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>

#include "treedeck/deck.hpp"
#include "treedeck/enumerate.hpp"
#include "treedeck/parallel.hpp"
#include "treedeck/reconstruct.hpp"
#include "treedeck/structure.hpp"

namespace treedeck {

namespace {

constexpr long long kBlock = 64;  // fixed shard size keeps merge order stable across job counts

std::string join_codes(const std::vector<CanonCode>& cs) {
    std::string out;
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) out.push_back(',');
        out += cs[i];
    }
    return out;
}

std::string crn_label(const CrnResult& r) {
    return r.exceeds_three ? std::string("exceeds-3") : std::to_string(r.value);
}

}  // namespace

ViolationReport verify_theorem_main(int n, int jobs, int cap) {
    if (n < 4) throw std::out_of_range("verify_theorem_main: order must be >= 4");
    std::vector<Tree> trees = enumerate_free_trees(n, cap);
    using Entry = std::pair<std::pair<CanonCode, CanonCode>, CanonCode>;
    std::function<std::vector<Entry>(long long, long long)> shard = [&](long long lo,
                                                                        long long hi) {
        std::vector<Entry> part;
        for (long long i = lo; i < hi; ++i) {
            const Tree& t = trees[static_cast<size_t>(i)];
            CanonCode tc = free_code(t);
            for (auto [u, v] : brush_pairs(t))
                part.push_back({{card(t, u), card(t, v)}, tc});
        }
        return part;
    };
    auto parts =
        run_blocks<std::vector<Entry>>(static_cast<long long>(trees.size()), kBlock, jobs, shard);

    std::map<std::pair<CanonCode, CanonCode>, std::vector<CanonCode>, CodePairLess> classes;
    for (auto& part : parts)
        for (auto& e : part) classes[std::move(e.first)].push_back(std::move(e.second));

    ViolationReport r{"thm1", n, static_cast<long long>(trees.size()), {}};
    for (auto& [key, codes] : classes) {
        std::sort(codes.begin(), codes.end(), code_less);
        codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
        if (codes.size() >= 2)
            r.violations.push_back("card_u=" + key.first + " card_v=" + key.second +
                                   " trees=" + join_codes(codes));
    }
    std::sort(r.violations.begin(), r.violations.end());
    return r;
}

ViolationReport verify_hp0(int n, int jobs, int cap) {
    if (n < 3) throw std::out_of_range("verify_hp0: order must be >= 3");
    std::vector<Tree> trees = enumerate_free_trees(n, cap);
    std::function<std::vector<std::string>(long long, long long)> shard = [&](long long lo,
                                                                              long long hi) {
        std::vector<std::string> part;
        for (long long i = lo; i < hi; ++i) {
            const Tree& t = trees[static_cast<size_t>(i)];
            CanonCode tc = free_code(t);
            for (DeletionKind kind : {DeletionKind::leaf, DeletionKind::near_leaf})
                for (auto [a, b] : similar_after_deletion_check(t, kind))
                    part.push_back("tree=" + tc + " kind=" +
                                   (kind == DeletionKind::leaf ? "leaf" : "near-leaf") +
                                   " a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
        return part;
    };
    auto parts = run_blocks<std::vector<std::string>>(static_cast<long long>(trees.size()),
                                                      kBlock, jobs, shard);
    ViolationReport r{"hp0", n, static_cast<long long>(trees.size()), {}};
    for (auto& part : parts)
        for (auto& line : part) r.violations.push_back(std::move(line));
    std::sort(r.violations.begin(), r.violations.end());
    return r;
}

ViolationReport verify_remark(int n, int jobs, int cap) {
    if (n < 3) throw std::out_of_range("verify_remark: order must be >= 3");
    CardIndex ix = build_card_index(n, jobs, cap);
    std::vector<Tree> trees = enumerate_free_trees(n, cap);
    std::function<std::vector<std::string>(long long, long long)> shard = [&](long long lo,
                                                                              long long hi) {
        std::vector<std::string> part;
        for (long long i = lo; i < hi; ++i) {
            const Tree& t = trees[static_cast<size_t>(i)];
            CrnResult res = crn(t, ix);
            bool star = is_starlike(t);
            bool one = !res.exceeds_three && res.value == 1;
            if (one != star)
                part.push_back("tree=" + free_code(t) + " crn=" + crn_label(res) +
                               " starlike=" + (star ? "yes" : "no"));
        }
        return part;
    };
    auto parts = run_blocks<std::vector<std::string>>(static_cast<long long>(trees.size()),
                                                      kBlock, jobs, shard);
    ViolationReport r{"remark", n, static_cast<long long>(trees.size()), {}};
    for (auto& part : parts)
        for (auto& line : part) r.violations.push_back(std::move(line));
    std::sort(r.violations.begin(), r.violations.end());
    return r;
}

ConjectureScan check_conjecture(int n, int jobs, int cap) {
    if (n < 3) throw std::out_of_range("check_conjecture: order must be >= 3");
    CardIndex ix = build_card_index(n, jobs, cap);
    std::vector<Tree> trees = enumerate_free_trees(n, cap);
    struct Part {
        std::map<int, long long> hist;
        std::vector<std::string> bad;
    };
    std::function<Part(long long, long long)> shard = [&](long long lo, long long hi) {
        Part part;
        for (long long i = lo; i < hi; ++i) {
            const Tree& t = trees[static_cast<size_t>(i)];
            CrnResult res = crn(t, ix);
            int bucket = res.exceeds_three ? 4 : res.value;
            ++part.hist[bucket];
            if (bucket >= 3)
                part.bad.push_back("tree=" + free_code(t) + " crn=" + crn_label(res));
        }
        return part;
    };
    auto parts = run_blocks<Part>(static_cast<long long>(trees.size()), kBlock, jobs, shard);
    ConjectureScan scan;
    scan.report = {"conjecture", n, static_cast<long long>(trees.size()), {}};
    for (auto& part : parts) {
        for (auto [bucket, count] : part.hist) scan.histogram[bucket] += count;
        for (auto& line : part.bad) scan.report.violations.push_back(std::move(line));
    }
    std::sort(scan.report.violations.begin(), scan.report.violations.end());
    return scan;
}

std::vector<AmbiguousFamily> search_ambiguous_pairs(int n, int jobs, int cap) {
    if (n < 4) throw std::out_of_range("search_ambiguous_pairs: order must be >= 4");
    CardIndex ix = build_card_index(n, jobs, cap);
    std::vector<AmbiguousFamily> out;
    for (const auto& [key, codes] : ix.by_card_pair) {
        if (codes.size() < 2) continue;
        // containment self-check before reporting
        CodeMultiset sub;
        ++sub[key.first];
        ++sub[key.second];
        bool all_contained = true;
        for (const CanonCode& tc : codes)
            if (!subdeck_contained(sub, ix.decks.at(tc))) {
                all_contained = false;
                break;
            }
        if (all_contained) out.push_back({key.first, key.second, codes});
    }
    return out;
}

std::vector<NonrecognizableWitness> search_nonrecognizable(int n, int jobs, int cap) {
    if (n < 4) throw std::out_of_range("search_nonrecognizable: order must be >= 4");
    std::vector<Tree> trees = enumerate_free_trees(n, cap);
    struct TreeData {
        CanonCode code;
        std::vector<CanonCode> vertex_cards;
        std::vector<std::pair<int, int>> pairs;  // (brush leaf, root)
    };
    std::function<std::vector<TreeData>(long long, long long)> shard = [&](long long lo,
                                                                           long long hi) {
        std::vector<TreeData> part;
        for (long long i = lo; i < hi; ++i) {
            const Tree& t = trees[static_cast<size_t>(i)];
            TreeData d;
            d.code = free_code(t);
            d.vertex_cards.resize(t.n());
            for (int v = 0; v < t.n(); ++v) d.vertex_cards[v] = card(t, v);
            d.pairs = brush_pairs(t);
            part.push_back(std::move(d));
        }
        return part;
    };
    auto parts = run_blocks<std::vector<TreeData>>(static_cast<long long>(trees.size()), kBlock,
                                                   jobs, shard);
    std::vector<TreeData> data;
    data.reserve(trees.size());
    for (auto& part : parts)
        for (auto& d : part) data.push_back(std::move(d));

    // all admissible (Q - u', Q - v') card pairs: u' in a brush whose root
    // is not v', and v' a genuinely different deletion
    std::map<std::pair<CanonCode, CanonCode>, std::vector<std::array<int, 3>>, CodePairLess>
        qside;
    for (int qi = 0; qi < static_cast<int>(data.size()); ++qi)
        for (auto [up, root] : data[qi].pairs)
            for (int vp = 0; vp < n; ++vp) {
                if (vp == root || vp == up) continue;
                qside[{data[qi].vertex_cards[up], data[qi].vertex_cards[vp]}].push_back(
                    {qi, up, vp});
            }

    std::vector<NonrecognizableWitness> out;
    for (const TreeData& p : data)
        for (auto [u, v] : p.pairs) {
            auto it = qside.find({p.vertex_cards[u], p.vertex_cards[v]});
            if (it == qside.end()) continue;
            for (auto [qi, up, vp] : it->second)
                if (data[static_cast<size_t>(qi)].code != p.code)
                    out.push_back({p.code, data[static_cast<size_t>(qi)].code, u, v, up, vp});
        }
    return out;
}

bool reverify_ambiguous(const AmbiguousFamily& fam, int n, int cap) {
    if (n < 2 || n > cap) return false;
    if (fam.tree_codes.size() < 2) return false;
    for (size_t i = 1; i < fam.tree_codes.size(); ++i)
        if (fam.tree_codes[i - 1] == fam.tree_codes[i]) return false;  // must be distinct
    CodeMultiset sub;
    ++sub[fam.card_a];
    ++sub[fam.card_b];
    size_t found = 0;
    TreeStream s(n);
    Tree t;
    while (s.next(t)) {
        CanonCode code = free_code(t);
        if (std::find(fam.tree_codes.begin(), fam.tree_codes.end(), code) ==
            fam.tree_codes.end())
            continue;
        ++found;
        if (!subdeck_contained(sub, deck_of(t))) return false;
    }
    return found == fam.tree_codes.size();
}

bool reverify_nonrecognizable(const NonrecognizableWitness& w, int n, int cap) {
    if (n < 4 || n > cap) return false;
    if (w.p_code == w.q_code) return false;
    std::optional<Tree> p, q;
    TreeStream s(n);
    Tree t;
    while (s.next(t)) {
        CanonCode code = free_code(t);
        if (code == w.p_code) p = t;
        if (code == w.q_code) q = t;
    }
    if (!p || !q) return false;
    for (int x : {w.u, w.v, w.u_prime, w.v_prime})
        if (x < 0 || x >= n) return false;
    auto bp = brush_pairs(*p);
    if (std::find(bp.begin(), bp.end(), std::make_pair(w.u, w.v)) == bp.end()) return false;
    int root = -1;
    for (const Brush& b : find_brushes(*q))
        if (std::binary_search(b.brush_leaves.begin(), b.brush_leaves.end(), w.u_prime))
            root = b.root;
    if (root < 0 || w.v_prime == root || w.v_prime == w.u_prime) return false;
    return card(*p, w.u) == card(*q, w.u_prime) && card(*p, w.v) == card(*q, w.v_prime);
}

std::string render_report(const ViolationReport& r) {
    std::string out = "suite=" + r.suite + " n=" + std::to_string(r.order) +
                      " trees=" + std::to_string(r.trees_scanned) +
                      " violations=" + std::to_string(r.violations.size()) + "\n";
    for (const std::string& line : r.violations) out += "violation " + line + "\n";
    return out;
}

std::string render_conjecture(const ConjectureScan& s) {
    std::string out = render_report(s.report);
    for (auto [bucket, count] : s.histogram)
        out += "crn=" + (bucket == 4 ? std::string("exceeds-3") : std::to_string(bucket)) +
               " count=" + std::to_string(count) + "\n";
    return out;
}

std::string render_families(const std::vector<AmbiguousFamily>& fams, int n) {
    std::string out = "suite=ambiguous n=" + std::to_string(n) +
                      " families=" + std::to_string(fams.size()) + "\n";
    for (const AmbiguousFamily& f : fams)
        out += "family card_a=" + f.card_a + " card_b=" + f.card_b +
               " trees=" + join_codes(f.tree_codes) + "\n";
    return out;
}

std::string render_witnesses(const std::vector<NonrecognizableWitness>& ws, int n) {
    std::string out = "suite=nonrecognizable n=" + std::to_string(n) +
                      " witnesses=" + std::to_string(ws.size()) + "\n";
    for (const NonrecognizableWitness& w : ws)
        out += "witness p=" + w.p_code + " q=" + w.q_code + " u=" + std::to_string(w.u) +
               " v=" + std::to_string(w.v) + " u_prime=" + std::to_string(w.u_prime) +
               " v_prime=" + std::to_string(w.v_prime) + "\n";
    return out;
}

}  // namespace treedeck
