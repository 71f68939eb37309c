#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "treedeck/deck.hpp"
#include "treedeck/enumerate.hpp"
#include "treedeck/io.hpp"
#include "treedeck/reconstruct.hpp"
#include "treedeck/structure.hpp"
#include "treedeck/verify.hpp"

namespace {

using namespace treedeck;

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string crn_line(const CanonCode& tree_code, const CrnResult& r) {
    std::string out = "tree=" + tree_code;
    if (r.exceeds_three) return out + " crn=exceeds-3";
    out += " crn=" + std::to_string(r.value) + " witness=";
    for (size_t i = 0; i < r.witness.size(); ++i) {
        if (i) out.push_back(',');
        out += r.witness[i];
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree deck toolkit: enumeration, cards, brushes, reconstruction, checks"};
    app.require_subcommand(1);

    int jobs = 1;
    int cap = 20;
    app.add_option("--jobs", jobs, "worker threads")
        ->envname("TREEDECK_JOBS")
        ->check(CLI::PositiveNumber);
    app.add_option("--cap", cap, "largest order the enumerator will accept")
        ->check(CLI::PositiveNumber);

    int exit_code = 0;

    // global --jobs/--cap stay usable after a subcommand name
    auto with_fallthrough = [](CLI::App* sub) {
        sub->fallthrough();
        return sub;
    };

    auto* cmd_enum = with_fallthrough(app.add_subcommand("enumerate", "all free trees of one order"));
    int enum_n = 0;
    bool count_only = false;
    cmd_enum->add_option("--n", enum_n, "number of vertices")->required();
    cmd_enum->add_flag("--count-only", count_only, "print only the class count");
    cmd_enum->callback([&] {
        if (count_only) {
            std::cout << count_free_trees(enum_n, cap) << "\n";
            return;
        }
        bool first = true;
        for (const Tree& t : enumerate_free_trees(enum_n, cap)) {
            if (!first) std::cout << "\n";
            first = false;
            write_tree(std::cout, t);
        }
    });

    auto* cmd_deck = with_fallthrough(app.add_subcommand("deck", "card multiset of a tree"));
    std::string deck_file;
    cmd_deck->add_option("--tree", deck_file, "tree file")->required();
    cmd_deck->callback([&] {
        Deck d = deck_of(read_tree_file(deck_file));
        for (const auto& [code, mult] : d.cards) std::cout << mult << "× " << code << "\n";
    });

    auto* cmd_brushes = with_fallthrough(app.add_subcommand("brushes", "brushes of a tree"));
    std::string brush_file;
    cmd_brushes->add_option("--tree", brush_file, "tree file")->required();
    cmd_brushes->callback([&] {
        for (const Brush& b : find_brushes(read_tree_file(brush_file)))
            std::cout << "root=" << b.root << " k=" << b.k << " leaves=" << join_ints(b.brush_leaves)
                      << "\n";
    });

    auto* cmd_rec = with_fallthrough(app.add_subcommand("reconstruct", "rebuild a tree from its two brush cards"));
    std::string card_u_file, card_v_file;
    bool checked = false;
    cmd_rec->add_option("--card-u", card_u_file, "leaf-deleted card (tree format)")->required();
    cmd_rec->add_option("--card-v", card_v_file, "root-deleted card (forest format)")->required();
    cmd_rec->add_flag("--checked", checked, "verify all candidates agree");
    cmd_rec->callback([&] {
        BrushCardPair p{read_graph_file(card_u_file), read_graph_file(card_v_file)};
        write_tree(std::cout, reconstruct_from_brush_cards(p, checked));
    });

    auto* cmd_crn = with_fallthrough(app.add_subcommand("crn", "class reconstruction numbers"));
    int crn_n = 0;
    std::string crn_file;
    cmd_crn->add_option("--n", crn_n, "number of vertices")->required();
    cmd_crn->add_option("--tree", crn_file, "restrict to one tree file");
    cmd_crn->callback([&] {
        CardIndex ix = build_card_index(crn_n, jobs, cap);
        if (!crn_file.empty()) {
            Tree t = read_tree_file(crn_file);
            std::cout << crn_line(free_code(t), crn(t, ix)) << "\n";
            return;
        }
        for (const Tree& t : enumerate_free_trees(crn_n, cap))
            std::cout << crn_line(free_code(t), crn(t, ix)) << "\n";
    });

    auto* cmd_verify = with_fallthrough(app.add_subcommand("verify", "exhaustive suites"));
    cmd_verify->require_subcommand(1);
    int verify_n = 0;
    auto add_suite = [&](const char* name, const char* desc, auto fn) {
        auto* sub = with_fallthrough(cmd_verify->add_subcommand(name, desc));
        sub->add_option("--n", verify_n, "number of vertices")->required();
        sub->callback([&, fn] {
            ViolationReport r = fn();
            std::cout << render_report(r);
            if (!r.violations.empty()) exit_code = 1;
        });
        return sub;
    };
    add_suite("thm1", "brush-card pairs determine the tree",
              [&] { return verify_theorem_main(verify_n, jobs, cap); });
    add_suite("hp0", "equal leaf or near-leaf cards force similar vertices",
              [&] { return verify_hp0(verify_n, jobs, cap); });
    add_suite("remark", "crn is 1 exactly for starlike trees",
              [&] { return verify_remark(verify_n, jobs, cap); });
    auto* sub_conj = with_fallthrough(cmd_verify->add_subcommand("conjecture", "crn histogram; 3+ is reported"));
    sub_conj->add_option("--n", verify_n, "number of vertices")->required();
    sub_conj->callback([&] {
        ConjectureScan s = check_conjecture(verify_n, jobs, cap);
        std::cout << render_conjecture(s);
        if (!s.report.violations.empty()) exit_code = 1;
    });

    auto* cmd_search = with_fallthrough(app.add_subcommand("search", "phenomenon searches"));
    cmd_search->require_subcommand(1);
    int search_n = 0;
    auto* sub_amb = with_fallthrough(cmd_search->add_subcommand("ambiguous", "two cards shared by several trees"));
    sub_amb->add_option("--n", search_n, "number of vertices")->required();
    sub_amb->callback(
        [&] { std::cout << render_families(search_ambiguous_pairs(search_n, jobs, cap), search_n); });
    auto* sub_nr =
        with_fallthrough(cmd_search->add_subcommand("nonrecognizable", "matching cards from a brush mismatch"));
    sub_nr->add_option("--n", search_n, "number of vertices")->required();
    sub_nr->callback(
        [&] { std::cout << render_witnesses(search_nonrecognizable(search_n, jobs, cap), search_n); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const TheoremViolationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
