#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repwords/graph.hpp"

namespace repwords {

// A word is a finite sequence over {1..n}. A pattern is a word in reduced
// form (its distinct letters are exactly {1..k}). Both are plain values.
using Word = std::vector<int>;

// relabel letters order-isomorphically to {1..k}, k = #distinct letters
Word reduce(const Word& w);
bool is_reduced(const Word& p);

// increasing indices (0-based) i1<...<ik with red(w[i1]..w[ik]) = p, or absent.
// Lexicographically smallest index tuple. Requires red(p) = p.
std::optional<std::vector<int>> contains_pattern(const Word& w, const Word& p);
inline bool avoids(const Word& w, const Word& p) { return !contains_pattern(w, p).has_value(); }

// test oracle: all-subsequence scan (use for |w| <= 8)
std::optional<std::vector<int>> contains_pattern_naive(const Word& w, const Word& p);

// does some occurrence of p end exactly at the last position of w?
// (incremental form used by prefix-pruned searches)
bool pattern_occurrence_at_end(const Word& w, const Word& p);

// true iff w contains every letter of {1..G.n()} and for every pair i<j:
// ij is an edge iff the last j precedes the first i. Missing letter -> error.
bool twelve_represents(const Word& w, const LabeledGraph& g);

// the unique graph that w 12-represents (w must contain 1..max(w))
LabeledGraph graph_from_word(const Word& w);

// keep only the first and last occurrence of each letter; requires
// twelve_represents(w, g) and preserves it (result is a subsequence of w)
Word normalize_at_most_twice(const Word& w, const LabeledGraph& g);

Word reverse_word(const Word& w);
Word complement_word(const Word& w, int n);  // x -> n+1-x

std::string word_to_string(const Word& w);   // space-separated letters
Word parse_word(const std::string& s);

// compact pattern id: "123" when all letters are single digits, else spaced
std::string pattern_label(const Word& p);

}  // namespace repwords
