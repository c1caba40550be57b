#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "repwords/oracle.hpp"
#include "repwords/patterns.hpp"
#include "test_helpers.hpp"

using namespace repwords;
using namespace repwords::testing;

namespace {

bool fp12_free(const LabeledGraph& g) { return !find_any(g, fp12_set()).has_value(); }

SearchBudget capped(int max_n) {
    SearchBudget b;
    b.max_n = max_n;
    return b;
}

}  // namespace

TEST_CASE("brute force finds, verifies and is deterministic") {
    LabeledGraph g = example6();
    OracleOutcome a = brute_force_representant(g, {});
    REQUIRE(a.kind == OracleKind::Found);
    CHECK(twelve_represents(a.word, g));
    CHECK(a.word.size() <= 2 * static_cast<std::size_t>(g.n()));
    OracleOutcome b = brute_force_representant(g, {});
    CHECK(a.word == b.word);

    CHECK(brute_force_representant(g, {}, capped(3)).kind == OracleKind::OverBudget);
}

TEST_CASE("brute force respects the avoid set") {
    OracleOutcome found = brute_force_representant(LabeledGraph::from_edges(3, {{1, 3}}),
                                                   {parse_word("321")});
    REQUIRE(found.kind == OracleKind::Found);
    CHECK(found.word == parse_word("2312"));
    CHECK(avoids(found.word, parse_word("321")));

    // any word representing a triangle keeps three descending letters
    OracleOutcome none = brute_force_representant(complete_graph(3), {parse_word("321")});
    CHECK(none.kind == OracleKind::Absent);
}

TEST_CASE("cycles beyond four vertices are not representable under any labeling") {
    CHECK(!unlabeled_representable(cycle_graph(5), {}));
    CHECK(!unlabeled_representable(cycle_graph(6), {}));
    CHECK(unlabeled_representable(cycle_graph(4), {}));
    CHECK(unlabeled_representable(complete_graph(4), {}));
}

TEST_CASE("search_labelings scans permutations lexicographically") {
    // center label 2 blocks the path; swapping 2 and 3 is the first fix
    LabeledGraph p3 = path_graph(3);
    CHECK(!fp12_free(p3));
    auto perm = search_labelings(p3, fp12_free);
    REQUIRE(perm.has_value());
    CHECK(*perm == std::vector<int>{1, 3, 2});
    CHECK(fp12_free(p3.relabel(*perm)));

    auto idperm = search_labelings(p3, [](const LabeledGraph&) { return true; });
    REQUIRE(idperm.has_value());
    CHECK(*idperm == std::vector<int>{1, 2, 3});
    CHECK(!search_labelings(p3, [](const LabeledGraph&) { return false; }).has_value());

    // no relabeling clears the 132 obstruction set from this graph
    CHECK(!search_labelings(twin_house(), [](const LabeledGraph& g) {
               return !find_any(g, fp132_set()).has_value();
           }).has_value());
}

TEST_CASE("distinct labelings and the canonical key") {
    LabeledGraph e13 = LabeledGraph::from_edges(3, {{1, 3}});
    std::vector<LabeledGraph> labs = distinct_labelings(e13);
    CHECK(labs.size() == 3);
    for (std::size_t i = 1; i < labs.size(); ++i)
        CHECK(labs[i - 1].adjacency_key() < labs[i].adjacency_key());
    for (const LabeledGraph& h : labs) CHECK(canonical_key(h) == canonical_key(e13));
    CHECK(canonical_key(e13) == labs.front().adjacency_key());

    CHECK(distinct_labelings(complete_graph(3)).size() == 1);
    CHECK(distinct_labelings(path_graph(4)).size() == 12);
}

TEST_CASE("key encoding roundtrips and enumerates all graphs") {
    for (int n = 1; n <= 4; ++n) {
        std::uint64_t total = labeled_graph_count(n);
        CHECK(total == (std::uint64_t{1} << (n * (n - 1) / 2)));
        for (std::uint64_t key = 0; key < total; ++key)
            CHECK(graph_from_key(n, key).adjacency_key() == key);
    }
}

TEST_CASE("one representative per isomorphism class") {
    const std::size_t expected[] = {1, 2, 4, 11, 34};
    for (int n = 1; n <= 5; ++n) {
        std::vector<LabeledGraph> reps = canonical_graphs(n);
        CHECK(reps.size() == expected[n - 1]);
        for (std::size_t i = 0; i < reps.size(); ++i) {
            CHECK(canonical_key(reps[i]) == reps[i].adjacency_key());
            if (i) CHECK(reps[i - 1].adjacency_key() < reps[i].adjacency_key());
        }
    }
}

TEST_CASE("class recognizers on the standard examples") {
    ClassFlags c4 = class_oracles(cycle_graph(4));
    CHECK(c4.permutation);
    CHECK(!c4.trivially_perfect);
    CHECK(c4.bipartite_permutation);
    CHECK(c4.interval_complementable);
    CHECK(!c4.interval_graph);
    CHECK(!c4.unit_interval);

    LabeledGraph claw = LabeledGraph::from_edges(4, {{1, 4}, {2, 4}, {3, 4}});
    ClassFlags cl = class_oracles(claw);
    CHECK(cl.permutation);
    CHECK(cl.trivially_perfect);
    CHECK(cl.bipartite_permutation);
    CHECK(cl.interval_graph);
    CHECK(!cl.unit_interval);

    ClassFlags p4 = class_oracles(path_graph(4));
    CHECK(p4.permutation);
    CHECK(!p4.trivially_perfect);
    CHECK(p4.bipartite_permutation);
    CHECK(p4.unit_interval);

    CHECK(!class_oracles(cycle_graph(5)).permutation);
    ClassFlags k4 = class_oracles(complete_graph(4));
    CHECK(k4.trivially_perfect);
    CHECK(k4.unit_interval);
}

TEST_CASE("census selectors and per-selector avoid sets") {
    CHECK(census_selectors().size() == 16);
    CHECK(selector_patterns("none").empty());
    CHECK(selector_patterns("123") == std::vector<Word>{parse_word("123")});
    CHECK(selector_patterns("set:121+212") ==
          std::vector<Word>{parse_word("121"), parse_word("212")});
    CHECK(selector_patterns("set:211+221") ==
          std::vector<Word>{parse_word("211"), parse_word("221")});
    CHECK_THROWS_AS(selector_patterns("banana"), std::invalid_argument);
    CHECK_THROWS_AS(selector_patterns("110"), std::invalid_argument);
    CHECK_THROWS_AS(selector_patterns("133"), std::invalid_argument);  // not reduced
}

TEST_CASE("census at n = 3, both methods on every selector") {
    struct Expect {
        const char* sel;
        std::int64_t pattern, oracle, unlabeled;
    };
    // -1 in the pattern column: selector has no forbidden-pattern test
    const Expect rows[] = {
        {"none", 7, 7, 4}, {"12", 1, 1, 1},  {"21", 1, 1, 1},  {"111", 7, 7, 4},
        {"112", -1, 7, 4}, {"121", 6, 6, 4}, {"122", -1, 7, 4}, {"123", 7, 7, 4},
        {"132", 6, 6, 4},  {"211", 7, 7, 4}, {"212", 6, 6, 4}, {"213", 6, 6, 4},
        {"221", 7, 7, 4},  {"231", 5, 5, 4}, {"312", 5, 5, 4}, {"321", -1, 6, 3},
    };
    for (const Expect& e : rows) {
        CAPTURE(e.sel);
        CensusRow r = census_row(3, e.sel);
        CHECK(r.labeled_total == 8);
        CHECK(r.unlabeled_total == 4);
        CHECK(r.labeled_count_pattern == e.pattern);
        CHECK(r.labeled_count_oracle == e.oracle);
        CHECK(r.unlabeled_count == e.unlabeled);
        CHECK(r.agree);
    }
}

TEST_CASE("census regression at n = 4") {
    struct Expect {
        const char* sel;
        std::int64_t pattern, oracle;
    };
    const Expect rows[] = {
        {"none", 38, 38}, {"111", 38, 38}, {"112", -1, 38}, {"122", -1, 38},
        {"121", 24, 24},  {"212", 24, 24}, {"123", 33, 33}, {"132", 22, 22},
        {"213", 22, 22},  {"211", 35, 35}, {"221", 35, 35}, {"231", 14, 14},
        {"312", 14, 14},  {"321", -1, 21},
    };
    for (const Expect& e : rows) {
        CAPTURE(e.sel);
        CensusRow r = census_row(4, e.sel);
        CHECK(r.labeled_total == 64);
        CHECK(r.unlabeled_total == 11);
        CHECK(r.labeled_count_pattern == e.pattern);
        CHECK(r.labeled_count_oracle == e.oracle);
        CHECK(r.agree);
    }
    CHECK(census_row(4, "132").unlabeled_count == 10);
    CHECK(census_row(4, "231").unlabeled_count == 9);
    CHECK(census_row(4, "321").unlabeled_count == 7);
}

TEST_CASE("census edge cases") {
    CHECK_THROWS_AS(census_row(0, "none"), std::invalid_argument);
    CHECK_THROWS_AS(census_row(7, "none"), std::invalid_argument);
    CHECK_THROWS_AS(census_row(3, "banana"), std::invalid_argument);

    // oracle shut off: oracle-only selectors report nothing but totals
    CensusRow starved = census_row(3, "321", capped(0));
    CHECK(starved.labeled_count_pattern == -1);
    CHECK(starved.labeled_count_oracle == -1);
    CHECK(starved.unlabeled_count == -1);
    CHECK(starved.agree);

    // pattern-backed selectors still fill their columns without the oracle
    CensusRow patt = census_row(3, "121", capped(0));
    CHECK(patt.labeled_count_pattern == 6);
    CHECK(patt.labeled_count_oracle == -1);
    CHECK(patt.unlabeled_count == 4);

    CensusRow set = census_row(3, "set:121+212");
    CHECK(set.labeled_count_pattern == 6);
    CHECK(set.labeled_count_oracle == 6);
    CHECK(set.agree);

    std::vector<CensusRow> batch = census(3, {"12", "21"});
    REQUIRE(batch.size() == 2);
    CHECK(batch[0].pattern == "12");
    CHECK(batch[1].pattern == "21");
}
