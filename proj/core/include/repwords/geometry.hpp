#pragma once

#include <utility>
#include <vector>

#include "repwords/graph.hpp"
#include "repwords/patterns.hpp"
#include "repwords/rational.hpp"
#include "repwords/word.hpp"

namespace repwords {

// interval [l, r] with a marked point p, l <= p <= r
struct PointedInterval {
    Rational l, p, r;
};

// marked-point interval model; vertex i is intervals[i-1].
// adjacency rule: uv is an edge iff both marked points lie in the overlap
struct MptModel {
    std::vector<PointedInterval> intervals;
    int n() const { return static_cast<int>(intervals.size()); }
};

// one-sided piece of a pointed interval, [a, b] with b = p (left side)
// or a = p (right side); the pieces with a < b form the family the
// unit adjustment walks in ascending order of a
struct SidedInterval {
    int vertex = 0;        // 1-based
    bool left_side = false;   // true: [l, p], false: [p, r]
    Rational a, b;
};

// L-shape with corner on the line y = -x: corner (c, -c), top (c, -l),
// right (r, -c); l == c degenerates to a vertical stick, r == c to a
// horizontal one (never both)
struct Hook {
    Rational c, l, r;   // l <= c <= r
};

// corners strictly ascending along y = -x; vertex i is hooks[i-1].
// unit means every nonzero arm has length exactly 1
struct HookModel {
    std::vector<Hook> hooks;
    bool unit = false;
    int n() const { return static_cast<int>(hooks.size()); }
};

// interval model of the complement built from a graph with no FP132
// occurrence: vertex i gets [lprime_i - i/(n+1), i] where lprime_i is the
// smallest non-neighbor below i (i itself when none)
struct Co132IntervalModel {
    std::vector<int> lprime;
    std::vector<Rational> l;
    std::vector<Rational> r;
    int n() const { return static_cast<int>(lprime.size()); }
};

// axis-aligned segment with rational endpoints (may degenerate to a point)
struct Segment {
    Rational x1, y1, x2, y2;
};
bool segments_intersect(const Segment& s, const Segment& t);

// marked-point model of h from its labels; throws PatternError with a
// CFP123 witness when h has one. Isolated vertices get unit horizontal
// sticks between the blocks of consecutive non-isolated vertices.
MptModel build_mpt_model(const LabeledGraph& h);

// checks the adjacency rule pair by pair plus l <= p <= r
bool validate_mpt(const MptModel& m, const LabeledGraph& h);

// the one-sided pieces of positive length, ascending left endpoint;
// throws std::invalid_argument when one piece contains another
std::vector<SidedInterval> one_sided_family(const MptModel& m);

// order-preserving deformation making every one-sided piece length 1;
// idempotent on already-unit models
MptModel unit_adjust(const MptModel& m);

HookModel mpt_to_hook(const MptModel& m);
MptModel hook_to_mpt(const HookModel& hm);

// intersection graph with vertices labeled by corner order along y = -x
LabeledGraph hook_intersection_graph(const HookModel& hm);

// for a unit hook model: letters of the arm endpoints on y = -x + 1 read
// by descending x. The word 12-represents the complement of the
// intersection graph and avoids 123; both are re-verified
Word hook_word(const HookModel& hm);

// lprime[i-1] = smallest non-neighbor of i below i, or i when none
std::vector<int> co132_lprime(const LabeledGraph& g);

// throws PatternError with an FP132 witness when g has one
Co132IntervalModel build_co132_interval_model(const LabeledGraph& g);

// all 2n endpoint labels by descending coordinate; avoids 132 and
// 12-represents the disjointness graph of the model (re-verified)
Word co132_word(const Co132IntervalModel& m);

// unit interval graph (non-decreasing left endpoints, length-1 intervals,
// adjacency |t_u - t_v| <= 1) re-embedded as full unit hooks whose
// intersection graph matches with the same labels
HookModel unit_interval_to_hooks(const std::vector<Rational>& lefts);

}  // namespace repwords
