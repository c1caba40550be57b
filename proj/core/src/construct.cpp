#include "repwords/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include "repwords/geometry.hpp"
#include "repwords/patterns.hpp"
#include "repwords/word.hpp"

namespace repwords {

namespace {

Word pat(std::initializer_list<int> xs) { return Word(xs); }

// appends `from .. to` once each at the end, which makes them isolated.
// they are larger than every earlier letter and ascend, so a new pattern
// occurrence would have to end with an ascending run of the pattern's
// strictly largest letters; 321 ends with its smallest, so none appear
Word append_ascending(Word w, int from, int to) {
    for (int k = from; k <= to; ++k) w.push_back(k);
    return w;
}

const std::vector<OrderedPattern>& perm_obstructions() {
    static const std::vector<OrderedPattern> s = {FP_COMP(), FP_COCOMP()};
    return s;
}

}  // namespace

Word permutation_word(const LabeledGraph& g) {
    // orient i -> j for non-edges (i < j), j -> i for edges; a tournament is
    // acyclic iff it is transitive, and then every step has a unique source
    int n = g.n();
    std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (g.edge(i, j)) ++indeg[static_cast<std::size_t>(i)];
            else ++indeg[static_cast<std::size_t>(j)];
        }
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    Word out;
    out.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int src = 0;
        for (int v = 1; v <= n; ++v)
            if (!used[static_cast<std::size_t>(v)] && indeg[static_cast<std::size_t>(v)] == 0) {
                if (src) throw std::logic_error("two sources in a tournament");
                src = v;
            }
        if (!src) {
            auto w = find_any(g, perm_obstructions());
            if (!w) throw std::logic_error("cyclic orientation without a 3-cycle witness");
            throw PatternError("graph has no permutation representant: " + w->pattern.name +
                                   " occurrence",
                               *w);
        }
        used[static_cast<std::size_t>(src)] = 1;
        out.push_back(src);
        for (int v = 1; v <= n; ++v)
            if (!used[static_cast<std::size_t>(v)]) {
                bool arc = src < v ? !g.edge(src, v) : g.edge(v, src);
                if (arc) --indeg[static_cast<std::size_t>(v)];
            }
    }
    return out;
}

Certificate permutation_representant(const LabeledGraph& g) {
    if (auto w = find_any(g, perm_obstructions())) return Certificate::refuted(g, *w);
    return Certificate::represented(g, permutation_word(g), {}, "pattern");
}

Certificate represent_111(const LabeledGraph& g, const SearchBudget& budget) {
    if (auto w = find_any(g, fp12_set())) return Certificate::refuted(g, *w);
    if (!find_any(g, perm_obstructions()))
        return Certificate::represented(g, permutation_word(g), {pat({1, 1, 1})}, "pattern");
    // a word with at most two occurrences per letter avoids 111 for free
    OracleOutcome out = brute_force_representant(g, {}, budget);
    if (out.kind == OracleKind::Found)
        return Certificate::represented(g, out.word, {pat({1, 1, 1})}, "oracle");
    if (out.kind == OracleKind::Absent)
        throw std::logic_error("graph free of the 12-representability obstructions has no representant");
    return Certificate::unknown("search budget exhausted before a representant was found");
}

Certificate represent_none(const LabeledGraph& g, const SearchBudget& budget) {
    if (auto w = find_any(g, fp12_set())) return Certificate::refuted(g, *w);
    if (!find_any(g, perm_obstructions()))
        return Certificate::represented(g, permutation_word(g), {}, "pattern");
    OracleOutcome out = brute_force_representant(g, {}, budget);
    if (out.kind == OracleKind::Found)
        return Certificate::represented(g, out.word, {}, "oracle");
    if (out.kind == OracleKind::Absent)
        throw std::logic_error("graph free of the 12-representability obstructions has no representant");
    return Certificate::unknown("search budget exhausted before a representant was found");
}

Certificate represent_121(const LabeledGraph& g) {
    if (auto w = find_any(g, perm_obstructions())) return Certificate::refuted(g, *w);
    return Certificate::represented(g, permutation_word(g), {pat({1, 2, 1})}, "pattern");
}

Certificate represent_212(const LabeledGraph& g) {
    if (auto w = find_any(g, perm_obstructions())) return Certificate::refuted(g, *w);
    return Certificate::represented(g, permutation_word(g), {pat({2, 1, 2})}, "pattern");
}

Certificate represent_231(const LabeledGraph& g) {
    // every FP_COCOMP occurrence is an FP_INT occurrence, so the permutation
    // orientation is acyclic once these two are ruled out
    static const std::vector<OrderedPattern> obstructions = {FP_INT(), FP_COMP()};
    if (auto w = find_any(g, obstructions)) return Certificate::refuted(g, *w);
    return Certificate::represented(g, permutation_word(g), {pat({2, 3, 1})}, "pattern");
}

Certificate represent_312(const LabeledGraph& g) {
    static const std::vector<OrderedPattern> obstructions = {supplement_pattern(FP_INT()),
                                                             FP_COMP()};
    if (auto w = find_any(g, obstructions)) return Certificate::refuted(g, *w);
    // the relabeling i -> n+1-i turns a 231-avoiding representant of the
    // relabeled graph into a 312-avoiding one of g (reverse and complement)
    Word w = permutation_word(g.supplement());
    return Certificate::represented(g, complement_word(reverse_word(w), g.n()),
                                    {pat({3, 1, 2})}, "pattern");
}

Certificate represent_321(const LabeledGraph& g, const SearchBudget& budget) {
    int n = g.n();
    // vertices n, n-1, ... while isolated can be appended ascending at the
    // end of any representant of the rest without hurting 321-avoidance
    int core_n = n;
    while (core_n >= 1 && g.isolated(core_n)) --core_n;

    // an FP_COMP occurrence kills 12-representability outright; a triangle
    // forces 321 in every representant (restrict the word to its letters)
    static const std::vector<OrderedPattern> obstructions = {FP_COMP(), FP_TRIANGLE()};
    if (auto w = find_any(g, obstructions)) return Certificate::refuted(g, *w);

    std::vector<int> core_verts;
    core_verts.reserve(static_cast<std::size_t>(core_n));
    for (int v = 1; v <= core_n; ++v) core_verts.push_back(v);
    LabeledGraph core = g.induced(core_verts);

    if (!find_any(g, {FP_COCOMP()})) {
        // triangle-free graph: a 321 in the permutation would be a triangle
        Word w = append_ascending(permutation_word(core), core_n + 1, n);
        return Certificate::represented(g, w, {pat({3, 2, 1})}, "pattern");
    }
    OracleOutcome out = brute_force_representant(core, {pat({3, 2, 1})}, budget);
    if (out.kind == OracleKind::Found) {
        Word w = append_ascending(out.word, core_n + 1, n);
        return Certificate::represented(g, w, {pat({3, 2, 1})}, "oracle");
    }
    if (out.kind == OracleKind::Absent)
        return Certificate::refuted_by_oracle(
            "no word with at most two occurrences per letter 12-represents the graph "
            "and avoids 321 (isolated top vertices stripped first; they never matter)");
    return Certificate::unknown("search budget exhausted before deciding 321-avoidance");
}

Certificate represent_123(const LabeledGraph& g) {
    if (auto w = find_any(g, fp123_set())) return Certificate::refuted(g, *w);
    // the complement then has no CFP123 occurrence: build its marked-point
    // model, make the pieces unit, and read the word off the hook diagram
    MptModel m = build_mpt_model(g.complement());
    Word w = hook_word(mpt_to_hook(unit_adjust(m)));
    return Certificate::represented(g, w, {pat({1, 2, 3})}, "pattern");
}

Certificate represent_132(const LabeledGraph& g) {
    if (auto w = find_any(g, fp132_set())) return Certificate::refuted(g, *w);
    Word w = co132_word(build_co132_interval_model(g));
    return Certificate::represented(g, w, {pat({1, 3, 2})}, "pattern");
}

Certificate represent_213(const LabeledGraph& g) {
    static const std::vector<OrderedPattern> obstructions = supplement_set(fp132_set());
    if (auto w = find_any(g, obstructions)) return Certificate::refuted(g, *w);
    Certificate c = represent_132(g.supplement());
    if (c.status != CertStatus::Represented)
        throw std::logic_error("obstruction transport to the relabeled graph failed");
    Word w = complement_word(reverse_word(c.word), g.n());
    return Certificate::represented(g, w, {pat({2, 1, 3})}, "pattern");
}

std::vector<LabeledGraph> closure_211_steps(const LabeledGraph& g) {
    int n = g.n();
    std::vector<LabeledGraph> steps{g};
    for (int i = 2; i <= n; ++i) {
        const LabeledGraph& cur = steps.back();
        LabeledGraph next = cur;
        for (int j = i + 1; j <= n; ++j) {
            if (cur.edge(i, j)) continue;
            for (int k = 1; k < i; ++k)
                if (!cur.edge(k, i) && cur.edge(k, j)) {
                    next.add_edge(i, j);
                    break;
                }
        }
        steps.push_back(std::move(next));
    }
    return steps;
}

Certificate represent_211(const LabeledGraph& g) {
    if (auto w = find_any(g, fp211_set())) return Certificate::refuted(g, *w);
    // fill every umbrella bottom-up, then the closure is a permutation graph
    // whose word, prefixed by the b-vertices in ascending order, represents g
    std::vector<LabeledGraph> steps = closure_211_steps(g);
    Word w;
    for (int b : b_vertices(g)) w.push_back(b);
    for (int x : permutation_word(steps.back())) w.push_back(x);
    return Certificate::represented(g, w, {pat({2, 1, 1})}, "pattern");
}

Certificate represent_221(const LabeledGraph& g) {
    static const std::vector<OrderedPattern> obstructions = supplement_set(fp211_set());
    if (auto w = find_any(g, obstructions)) return Certificate::refuted(g, *w);
    Certificate c = represent_211(g.supplement());
    if (c.status != CertStatus::Represented)
        throw std::logic_error("obstruction transport to the relabeled graph failed");
    Word w = complement_word(reverse_word(c.word), g.n());
    return Certificate::represented(g, w, {pat({2, 2, 1})}, "pattern");
}

Certificate represent_112(const LabeledGraph& g, const SearchBudget& budget) {
    if (auto w = find_any(g, fp12_set())) return Certificate::refuted(g, *w);
    OracleOutcome out = brute_force_representant(g, {pat({1, 1, 2})}, budget);
    if (out.kind == OracleKind::Found)
        return Certificate::represented(g, out.word, {pat({1, 1, 2})}, "oracle");
    if (out.kind == OracleKind::Absent)
        return Certificate::refuted_by_oracle(
            "no word with at most two occurrences per letter 12-represents the graph "
            "and avoids 112");
    return Certificate::unknown("search budget exhausted before deciding 112-avoidance");
}

Certificate represent_122(const LabeledGraph& g, const SearchBudget& budget) {
    if (auto w = find_any(g, fp12_set())) return Certificate::refuted(g, *w);
    OracleOutcome out = brute_force_representant(g, {pat({1, 2, 2})}, budget);
    if (out.kind == OracleKind::Found)
        return Certificate::represented(g, out.word, {pat({1, 2, 2})}, "oracle");
    if (out.kind == OracleKind::Absent)
        return Certificate::refuted_by_oracle(
            "no word with at most two occurrences per letter 12-represents the graph "
            "and avoids 122");
    return Certificate::unknown("search budget exhausted before deciding 122-avoidance");
}

Certificate represent_set(const LabeledGraph& g, PatternSet s) {
    if (s == PatternSet::P121_212) {
        // letters of a {121, 212}-avoiding word never interleave, so doubled
        // letters collapse and only permutations remain
        if (auto w = find_any(g, perm_obstructions())) return Certificate::refuted(g, *w);
        return Certificate::represented(g, permutation_word(g),
                                        {pat({1, 2, 1}), pat({2, 1, 2})}, "pattern");
    }
    // {211, 221}: doubled letters must be isolated vertices, and the word is
    // s pi s with s the isolated labels ascending and pi a permutation of the
    // non-isolated core
    int n = g.n();
    std::vector<int> iso, core_verts;
    for (int v = 1; v <= n; ++v) (g.isolated(v) ? iso : core_verts).push_back(v);
    LabeledGraph core = g.induced(core_verts);
    if (auto w = find_any(core, perm_obstructions())) {
        for (int& v : w->vertices) v = core_verts[static_cast<std::size_t>(v - 1)];
        Certificate c = Certificate::refuted(g, *w);
        c.reason = "occurrence among the non-isolated vertices; isolated vertices only ever "
                   "contribute doubled letters";
        return c;
    }
    Word pi_local = permutation_word(core);
    Word w = Word(iso.begin(), iso.end());
    for (int x : pi_local) w.push_back(core_verts[static_cast<std::size_t>(x - 1)]);
    for (int v : iso) w.push_back(v);
    return Certificate::represented(g, w, {pat({2, 1, 1}), pat({2, 2, 1})}, "pattern");
}

Word canonicalize_211(const Word& w, const LabeledGraph& g) {
    if (!twelve_represents(w, g))
        throw std::invalid_argument("canonicalize_211: word does not 12-represent the graph");
    if (contains_pattern(w, pat({2, 1, 1})))
        throw std::invalid_argument("canonicalize_211: word contains 211");
    Word v = normalize_at_most_twice(w, g);
    int n = g.n();
    std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> last(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t pos = 0; pos < v.size(); ++pos) {
        ++count[static_cast<std::size_t>(v[pos])];
        last[static_cast<std::size_t>(v[pos])] = static_cast<int>(pos);
    }
    Word out;
    for (int x = 1; x <= n; ++x)
        if (count[static_cast<std::size_t>(x)] == 2) out.push_back(x);
    // one copy of every letter, ordered by last occurrence
    std::vector<int> tail(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) tail[static_cast<std::size_t>(x - 1)] = x;
    std::sort(tail.begin(), tail.end(), [&](int a, int b) {
        return last[static_cast<std::size_t>(a)] < last[static_cast<std::size_t>(b)];
    });
    for (int x : tail) out.push_back(x);
    if (!twelve_represents(out, g) || contains_pattern(out, pat({2, 1, 1})))
        throw std::logic_error("canonicalize_211: normal form failed verification");
    return out;
}

std::optional<bool> descending_clique_check(int k, const SearchBudget& budget) {
    if (k < 2) throw std::invalid_argument("descending_clique_check: k must be at least 2");
    if (k > 5 || k > budget.max_n) return std::nullopt;
    LabeledGraph clique(k);
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) clique.add_edge(i, j);
    Word desc;
    for (int x = k; x >= 1; --x) desc.push_back(x);
    OracleOutcome out = brute_force_representant(clique, {desc}, budget);
    if (out.kind == OracleKind::Absent) return true;
    if (out.kind == OracleKind::Found) return false;
    return std::nullopt;
}

}  // namespace repwords
