#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "repwords/graph.hpp"
#include "repwords/word.hpp"

namespace repwords {

// knobs for the exhaustive searches; two occurrences per letter are enough
// for any 12-representable graph, so max_occurrences = 2 is complete
struct SearchBudget {
    int max_n = 7;
    int max_occurrences = 2;   // 1 or 2
    std::int64_t time_cap_ms = 0;   // 0 = unlimited
    int jobs = 1;
};

enum class OracleKind { Found, Absent, OverBudget };

struct OracleOutcome {
    OracleKind kind = OracleKind::OverBudget;
    Word word;   // set when kind == Found
};

// complete search for a word that 12-represents g and avoids every pattern
// in `avoid`. Multiplicity choices are tried by (total length, subset value),
// branches by ascending letter, so the first word found is canonical.
OracleOutcome brute_force_representant(const LabeledGraph& g,
                                       const std::vector<Word>& avoid,
                                       const SearchBudget& budget = {});

// first permutation (lex order) whose relabeling of g satisfies pred.
// perm[i-1] is the new label of vertex i.
std::optional<std::vector<int>> search_labelings(
    const LabeledGraph& g, const std::function<bool(const LabeledGraph&)>& pred);

// all distinct graphs reachable from g by relabeling, sorted by adjacency key
std::vector<LabeledGraph> distinct_labelings(const LabeledGraph& g);

// smallest adjacency key over all relabelings: the unlabeled identity
std::uint64_t canonical_key(const LabeledGraph& g);

std::uint64_t labeled_graph_count(int n);   // 2^(n choose 2)
LabeledGraph graph_from_key(int n, std::uint64_t key);

// one representative per isomorphism class, ascending canonical key
std::vector<LabeledGraph> canonical_graphs(int n);

// true when some labeling of g admits a representant avoiding the patterns
bool unlabeled_representable(const LabeledGraph& g, const std::vector<Word>& avoid,
                             const SearchBudget& budget = {});

// recognizers for the graph classes the characterizations are checked against.
// trivially_perfect is computed twice (pattern labeling search and the
// independent P4-free and C4-free test); a mismatch throws.
struct ClassFlags {
    bool permutation = false;
    bool trivially_perfect = false;
    bool bipartite_permutation = false;
    bool interval_complementable = false;   // complement is an interval graph
    bool interval_graph = false;
    bool unit_interval = false;             // interval and claw-free
};
ClassFlags class_oracles(const LabeledGraph& g);

struct CensusRow {
    int n = 0;
    std::string pattern;                    // selector, e.g. "123", "set:211+221", "none"
    std::int64_t labeled_total = 0;
    std::int64_t unlabeled_total = 0;
    std::int64_t labeled_count_pattern = -1;   // -1: no pattern characterization
    std::int64_t labeled_count_oracle = -1;    // -1: oracle skipped (over budget)
    std::int64_t unlabeled_count = -1;
    bool agree = true;                      // methods matched wherever both ran
    std::int64_t wall_time_ms = 0;
};

// selectors accepted by census_row; single patterns plus the two sets and
// "none" (plain 12-representability)
const std::vector<std::string>& census_selectors();

// avoid-set for a selector ("none" -> empty), shared with the CLI
std::vector<Word> selector_patterns(const std::string& selector);

// counts representable labeled graphs and isomorphism classes on n vertices,
// by forbidden-pattern test and by exhaustive word search where feasible
CensusRow census_row(int n, const std::string& selector, const SearchBudget& budget = {});
std::vector<CensusRow> census(int n, const std::vector<std::string>& selectors,
                              const SearchBudget& budget = {});

}  // namespace repwords
