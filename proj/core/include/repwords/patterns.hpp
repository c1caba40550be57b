#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "repwords/graph.hpp"

namespace repwords {

enum class PairConstraint { FREE, EDGE, NONEDGE };

// An ordered forbidden pattern: k slots x1 < ... < xk with a constraint per
// slot pair. Matched against the identity ordering of labels; searching over
// orderings is the oracle module's job.
struct OrderedPattern {
    std::string name;  // stable id used in JSON/CLI, e.g. "FP123.b"
    int arity = 0;
    std::vector<PairConstraint> pairs;  // (a,b), a<b, lexicographic; size C(k,2)

    PairConstraint at(int a, int b) const;  // 0-based slots, a < b
};

// builds a pattern from (a,b,constraint) triples; unlisted pairs are FREE
OrderedPattern make_pattern(std::string name, int arity,
                            std::initializer_list<std::tuple<int, int, PairConstraint>> cs);

struct PatternWitness {
    OrderedPattern pattern;
    std::vector<int> vertices;  // ascending labels
};

// the catalog: single patterns
const OrderedPattern& FP_INT();       // yz N, xz E
const OrderedPattern& FP_COMP();      // xy E, yz E, xz N
const OrderedPattern& FP_COCOMP();    // xy N, yz N, xz E
const OrderedPattern& FP_TRIANGLE();  // xy, yz, xz all E

// catalog sets; the order is stable and tests pin it (first entry of
// fp12/fp123/fp211 is FP_COMP, of cfp123 is FP_COCOMP)
const std::vector<OrderedPattern>& fp12_set();
const std::vector<OrderedPattern>& fp123_set();
const std::vector<OrderedPattern>& cfp123_set();
const std::vector<OrderedPattern>& fp132_set();
const std::vector<OrderedPattern>& fp211_set();
const std::vector<OrderedPattern>& fp_grounded_l_set();

// slot-reversed, edge-preserving transform: P has a witness in supplement(G)
// iff supplement_pattern(P) has one in G. Named "<base>.sup" unless the
// result coincides with P itself (FP_COMP, FP_COCOMP, FP_TRIANGLE do).
OrderedPattern supplement_pattern(const OrderedPattern& p);
std::vector<OrderedPattern> supplement_set(const std::vector<OrderedPattern>& ps);

// flips EDGE and NONEDGE: P has an occurrence in the complement of G at a
// tuple iff complement_pattern(P) has one in G at the same tuple.
// Named "<base>.co" when any pair is constrained.
OrderedPattern complement_pattern(const OrderedPattern& p);

// lexicographically smallest increasing tuple satisfying every non-FREE
// constraint, or absent
std::optional<PatternWitness> find_pattern(const LabeledGraph& g, const OrderedPattern& p);
// first witness scanning patterns in the given order
std::optional<PatternWitness> find_any(const LabeledGraph& g, const std::vector<OrderedPattern>& ps);
// test oracle: unpruned scan over all increasing k-tuples
std::optional<PatternWitness> find_pattern_naive(const LabeledGraph& g, const OrderedPattern& p);

// umbrella: a<b<c with ab, bc non-edges and ac an edge; b is a b-vertex
std::vector<std::array<int, 3>> umbrellas(const LabeledGraph& g);
std::vector<int> b_vertices(const LabeledGraph& g);  // ascending

// error carrying the witness that blocked a construction
class PatternError : public std::runtime_error {
public:
    PatternError(const std::string& what, PatternWitness w)
        : std::runtime_error(what), witness(std::move(w)) {}
    PatternWitness witness;
};

}  // namespace repwords
