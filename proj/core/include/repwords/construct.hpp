#pragma once

#include <optional>
#include <vector>

#include "repwords/certificate.hpp"
#include "repwords/graph.hpp"
#include "repwords/oracle.hpp"

namespace repwords {

// orient each pair i < j as i -> j when ij is a non-edge and j -> i when it
// is an edge; the orientation is acyclic iff g has no FP_COMP or FP_COCOMP
// occurrence, and then its unique topological order 12-represents g
Word permutation_word(const LabeledGraph& g);   // throws PatternError when cyclic
Certificate permutation_representant(const LabeledGraph& g);

// decision procedures, one per pattern the characterizations cover.
// Certificates carry a representant or a forbidden-pattern witness and are
// re-verified on construction. Functions taking a budget may fall back to
// the exhaustive search and can return Unknown when it is exhausted.
Certificate represent_111(const LabeledGraph& g, const SearchBudget& budget = {});
Certificate represent_121(const LabeledGraph& g);
Certificate represent_212(const LabeledGraph& g);
Certificate represent_231(const LabeledGraph& g);
Certificate represent_312(const LabeledGraph& g);
Certificate represent_321(const LabeledGraph& g, const SearchBudget& budget = {});
Certificate represent_123(const LabeledGraph& g);
Certificate represent_213(const LabeledGraph& g);
Certificate represent_132(const LabeledGraph& g);
Certificate represent_211(const LabeledGraph& g);
Certificate represent_221(const LabeledGraph& g);
Certificate represent_112(const LabeledGraph& g, const SearchBudget& budget = {});
Certificate represent_122(const LabeledGraph& g, const SearchBudget& budget = {});

// plain 12-representability: forbidden-pattern refutation, permutation route,
// exhaustive search otherwise
Certificate represent_none(const LabeledGraph& g, const SearchBudget& budget = {});

enum class PatternSet { P121_212, P211_221 };
Certificate represent_set(const LabeledGraph& g, PatternSet s);

// umbrella closure G_1 = g, ..., G_n where step i adds edge ij for every
// umbrella (k, i, j); returns all n stages, last one umbrella-free
std::vector<LabeledGraph> closure_211_steps(const LabeledGraph& g);

// rewrites a 211-avoiding representant of g into the normal form s pi:
// doubled letters ascending, then a permutation of all of 1..n
Word canonicalize_211(const Word& w, const LabeledGraph& g);

// oracle confirmation that the k-clique admits no representant avoiding the
// descending pattern k (k-1) ... 1; nullopt when k is out of search range
std::optional<bool> descending_clique_check(int k, const SearchBudget& budget = {});

}  // namespace repwords
