#include "repwords/patterns.hpp"

#include <algorithm>
#include <tuple>

namespace repwords {

static int pair_index(int arity, int a, int b) {
    if (!(0 <= a && a < b && b < arity)) throw std::out_of_range("pattern pair out of range");
    // lexicographic (a,b): pairs before row a, then offset within row
    int before = a * (2 * arity - a - 1) / 2;
    return before + (b - a - 1);
}

PairConstraint OrderedPattern::at(int a, int b) const {
    return pairs[static_cast<std::size_t>(pair_index(arity, a, b))];
}

OrderedPattern make_pattern(std::string name, int arity,
                            std::initializer_list<std::tuple<int, int, PairConstraint>> cs) {
    OrderedPattern p;
    p.name = std::move(name);
    p.arity = arity;
    p.pairs.assign(static_cast<std::size_t>(arity * (arity - 1) / 2), PairConstraint::FREE);
    for (auto [a, b, c] : cs) p.pairs[static_cast<std::size_t>(pair_index(arity, a, b))] = c;
    return p;
}

namespace {
constexpr auto E = PairConstraint::EDGE;
constexpr auto N = PairConstraint::NONEDGE;
}  // namespace

const OrderedPattern& FP_INT() {
    static const OrderedPattern p = make_pattern("FP_INT", 3, {{1, 2, N}, {0, 2, E}});
    return p;
}
const OrderedPattern& FP_COMP() {
    static const OrderedPattern p = make_pattern("FP_COMP", 3, {{0, 1, E}, {1, 2, E}, {0, 2, N}});
    return p;
}
const OrderedPattern& FP_COCOMP() {
    static const OrderedPattern p = make_pattern("FP_COCOMP", 3, {{0, 1, N}, {1, 2, N}, {0, 2, E}});
    return p;
}
const OrderedPattern& FP_TRIANGLE() {
    static const OrderedPattern p = make_pattern("FP_TRIANGLE", 3, {{0, 1, E}, {1, 2, E}, {0, 2, E}});
    return p;
}

const std::vector<OrderedPattern>& fp12_set() {
    static const std::vector<OrderedPattern> s = {
        FP_COMP(),
        make_pattern("FP12.b", 4, {{0, 2, E}, {1, 3, E}, {0, 3, N}, {0, 1, N}, {1, 2, N}, {2, 3, N}}),
        make_pattern("FP12.c", 4, {{0, 3, E}, {1, 2, E}, {0, 1, N}, {0, 2, N}, {1, 3, N}, {2, 3, N}}),
    };
    return s;
}

const std::vector<OrderedPattern>& fp123_set() {
    static const std::vector<OrderedPattern> s = {
        FP_COMP(),
        make_pattern("FP123.b", 4, {{0, 2, N}, {1, 3, N}, {1, 2, E}}),
        make_pattern("FP123.c", 4, {{0, 3, N}, {0, 2, E}, {1, 2, N}}),
        make_pattern("FP123.d", 4, {{0, 3, N}, {1, 3, E}, {1, 2, N}}),
    };
    return s;
}

const std::vector<OrderedPattern>& cfp123_set() {
    static const std::vector<OrderedPattern> s = {
        FP_COCOMP(),
        make_pattern("CFP123.b", 4, {{0, 2, E}, {1, 3, E}, {1, 2, N}}),
        make_pattern("CFP123.c", 4, {{0, 3, E}, {0, 2, N}, {1, 2, E}}),
        make_pattern("CFP123.d", 4, {{0, 3, E}, {1, 3, N}, {1, 2, E}}),
    };
    return s;
}

const std::vector<OrderedPattern>& fp132_set() {
    static const std::vector<OrderedPattern> s = {
        make_pattern("FP132.a", 3, {{1, 2, E}, {0, 2, N}}),
        make_pattern("FP132.b", 4, {{0, 2, N}, {1, 3, N}, {0, 3, E}}),
    };
    return s;
}

const std::vector<OrderedPattern>& fp211_set() {
    static const std::vector<OrderedPattern> s = {
        FP_COMP(),
        make_pattern("FP211.b", 4, {{0, 1, N}, {0, 3, E}, {1, 3, N}, {1, 2, E}}),
        make_pattern("FP211.c", 4, {{0, 1, N}, {0, 2, E}, {1, 2, N}, {1, 3, E}}),
    };
    return s;
}

const std::vector<OrderedPattern>& fp_grounded_l_set() {
    static const std::vector<OrderedPattern> s = {
        make_pattern("FP_GROUNDED_L.1", 4, {{0, 2, E}, {1, 3, E}, {0, 1, N}, {1, 2, N}}),
        make_pattern("FP_GROUNDED_L.2", 4, {{0, 3, E}, {0, 2, N}, {0, 1, E}, {1, 2, E}}),
    };
    return s;
}

OrderedPattern supplement_pattern(const OrderedPattern& p) {
    OrderedPattern q;
    q.arity = p.arity;
    q.pairs.assign(p.pairs.size(), PairConstraint::FREE);
    for (int a = 0; a < p.arity; ++a)
        for (int b = a + 1; b < p.arity; ++b) {
            // slot t maps to slot arity-1-t; edges stay edges
            int na = p.arity - 1 - b, nb = p.arity - 1 - a;
            q.pairs[static_cast<std::size_t>(pair_index(p.arity, na, nb))] = p.at(a, b);
        }
    q.name = (q.pairs == p.pairs) ? p.name : p.name + ".sup";
    return q;
}

std::vector<OrderedPattern> supplement_set(const std::vector<OrderedPattern>& ps) {
    std::vector<OrderedPattern> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(supplement_pattern(p));
    return out;
}

OrderedPattern complement_pattern(const OrderedPattern& p) {
    OrderedPattern q = p;
    bool changed = false;
    for (auto& c : q.pairs) {
        if (c == PairConstraint::EDGE) { c = PairConstraint::NONEDGE; changed = true; }
        else if (c == PairConstraint::NONEDGE) { c = PairConstraint::EDGE; changed = true; }
    }
    if (changed) q.name = p.name + ".co";
    return q;
}

namespace {

bool tuple_extends(const LabeledGraph& g, const OrderedPattern& p, const std::vector<int>& tup,
                   int depth, int v) {
    // constraints between the new slot `depth` and all chosen slots
    for (int a = 0; a < depth; ++a) {
        PairConstraint c = p.at(a, depth);
        if (c == PairConstraint::FREE) continue;
        bool e = g.edge(tup[static_cast<std::size_t>(a)], v);
        if ((c == PairConstraint::EDGE) != e) return false;
    }
    return true;
}

bool search_tuple(const LabeledGraph& g, const OrderedPattern& p, std::vector<int>& tup, int depth) {
    if (depth == p.arity) return true;
    int lo = depth == 0 ? 1 : tup[static_cast<std::size_t>(depth - 1)] + 1;
    for (int v = lo; v <= g.n() - (p.arity - 1 - depth); ++v) {
        if (!tuple_extends(g, p, tup, depth, v)) continue;
        tup[static_cast<std::size_t>(depth)] = v;
        if (search_tuple(g, p, tup, depth + 1)) return true;
    }
    return false;
}

}  // namespace

std::optional<PatternWitness> find_pattern(const LabeledGraph& g, const OrderedPattern& p) {
    if (g.n() < p.arity) return std::nullopt;
    std::vector<int> tup(static_cast<std::size_t>(p.arity), 0);
    if (search_tuple(g, p, tup, 0)) return PatternWitness{p, tup};
    return std::nullopt;
}

std::optional<PatternWitness> find_any(const LabeledGraph& g, const std::vector<OrderedPattern>& ps) {
    for (const auto& p : ps)
        if (auto w = find_pattern(g, p)) return w;
    return std::nullopt;
}

std::optional<PatternWitness> find_pattern_naive(const LabeledGraph& g, const OrderedPattern& p) {
    int k = p.arity;
    if (g.n() < k) return std::nullopt;
    std::vector<int> tup(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) tup[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        bool ok = true;
        for (int a = 0; a < k && ok; ++a)
            for (int b = a + 1; b < k && ok; ++b) {
                PairConstraint c = p.at(a, b);
                if (c == PairConstraint::FREE) continue;
                bool e = g.edge(tup[static_cast<std::size_t>(a)], tup[static_cast<std::size_t>(b)]);
                if ((c == PairConstraint::EDGE) != e) ok = false;
            }
        if (ok) return PatternWitness{p, tup};
        int pos = k - 1;
        while (pos >= 0 && tup[static_cast<std::size_t>(pos)] == g.n() - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++tup[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            tup[static_cast<std::size_t>(i)] = tup[static_cast<std::size_t>(i - 1)] + 1;
    }
    return std::nullopt;
}

std::vector<std::array<int, 3>> umbrellas(const LabeledGraph& g) {
    std::vector<std::array<int, 3>> out;
    for (int a = 1; a <= g.n(); ++a)
        for (int b = a + 1; b <= g.n(); ++b)
            for (int c = b + 1; c <= g.n(); ++c)
                if (!g.edge(a, b) && !g.edge(b, c) && g.edge(a, c)) out.push_back({a, b, c});
    return out;
}

std::vector<int> b_vertices(const LabeledGraph& g) {
    std::vector<char> mid(static_cast<std::size_t>(g.n()) + 1, 0);
    for (const auto& u : umbrellas(g)) mid[static_cast<std::size_t>(u[1])] = 1;
    std::vector<int> out;
    for (int v = 1; v <= g.n(); ++v)
        if (mid[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

}  // namespace repwords
