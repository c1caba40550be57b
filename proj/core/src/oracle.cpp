#include "repwords/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "repwords/patterns.hpp"

namespace repwords {

namespace {

using Clock = std::chrono::steady_clock;

// depth-first construction of representants, one fixed multiplicity vector at
// a time. Positions are filled left to right; branches try letters ascending,
// so the first word reached is the canonical one for this multiplicity.
// Exact prunes (they cut exactly the prefixes no leaf can extend):
//  - placing any copy of x needs every larger neighbor finished (an x after
//    a missing copy of a neighbor y > x would break last(y) < first(x))
//  - placing the final copy of x needs every smaller non-neighbor started
//    (otherwise last(x) < first(y) would turn the non-edge xy into an edge)
struct Dfs {
    const LabeledGraph* g = nullptr;
    const std::vector<Word>* avoid = nullptr;
    int n = 0;
    std::vector<std::vector<int>> larger_nbrs, smaller_nonnbrs;
    std::vector<int> remaining;
    std::vector<char> started;
    Word prefix;
    std::uint64_t nodes = 0;
    bool has_deadline = false;
    Clock::time_point deadline;
    bool over = false;
    bool memo_on = false;
    std::unordered_set<std::uint64_t> dead;

    void init(const LabeledGraph& graph, const std::vector<Word>& avoid_set) {
        g = &graph;
        avoid = &avoid_set;
        n = graph.n();
        larger_nbrs.assign(static_cast<std::size_t>(n) + 1, {});
        smaller_nonnbrs.assign(static_cast<std::size_t>(n) + 1, {});
        for (int x = 1; x <= n; ++x) {
            for (int y = x + 1; y <= n; ++y)
                if (graph.edge(x, y)) larger_nbrs[static_cast<std::size_t>(x)].push_back(y);
            for (int y = 1; y < x; ++y)
                if (!graph.edge(x, y)) smaller_nonnbrs[static_cast<std::size_t>(x)].push_back(y);
        }
        started.assign(static_cast<std::size_t>(n) + 1, 0);
        // without patterns to avoid, whether a partial word extends to a leaf
        // depends only on which letters are started and finished, so failed
        // states can be memoized
        memo_on = avoid_set.empty();
    }

    std::uint64_t state_key() const {
        std::uint64_t k = 0;
        for (int x = 1; x <= n; ++x) {
            int st = remaining[static_cast<std::size_t>(x)] == 0 ? 2
                     : started[static_cast<std::size_t>(x)]     ? 1
                                                                : 0;
            k = k * 3 + static_cast<std::uint64_t>(st);
        }
        return k;
    }

    bool run() {
        if ((++nodes & 0xFFF) == 0 && has_deadline && Clock::now() > deadline) {
            over = true;
            return false;
        }
        bool done = true;
        for (int x = 1; x <= n; ++x)
            if (remaining[static_cast<std::size_t>(x)]) {
                done = false;
                break;
            }
        if (done) return true;
        std::uint64_t key = 0;
        if (memo_on) {
            key = state_key();
            if (dead.count(key)) return false;
        }
        for (int x = 1; x <= n; ++x) {
            if (!remaining[static_cast<std::size_t>(x)]) continue;
            bool ok = true;
            for (int y : larger_nbrs[static_cast<std::size_t>(x)])
                if (remaining[static_cast<std::size_t>(y)]) {
                    ok = false;
                    break;
                }
            if (ok && remaining[static_cast<std::size_t>(x)] == 1)
                for (int y : smaller_nonnbrs[static_cast<std::size_t>(x)])
                    if (!started[static_cast<std::size_t>(y)]) {
                        ok = false;
                        break;
                    }
            if (!ok) continue;
            prefix.push_back(x);
            --remaining[static_cast<std::size_t>(x)];
            char was = started[static_cast<std::size_t>(x)];
            started[static_cast<std::size_t>(x)] = 1;
            bool pruned = false;
            for (const Word& p : *avoid)
                if (pattern_occurrence_at_end(prefix, p)) {
                    pruned = true;
                    break;
                }
            if (!pruned && run()) return true;
            prefix.pop_back();
            ++remaining[static_cast<std::size_t>(x)];
            started[static_cast<std::size_t>(x)] = was;
            if (over) return false;
        }
        if (memo_on) dead.insert(key);
        return false;
    }
};

// doubled-letter subsets ordered by word length, then numeric mask value
// (bit x-1 set: letter x occurs twice)
std::vector<std::uint32_t> multiplicity_masks(int n, int max_occurrences) {
    if (max_occurrences == 1) return {0};
    std::vector<std::uint32_t> masks(std::size_t{1} << n);
    std::iota(masks.begin(), masks.end(), 0u);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return masks;
}

// runs one multiplicity vector to completion; returns true with *out set on
// success, sets *over when the deadline cut the search
bool search_one_mask(const LabeledGraph& g, const std::vector<Word>& avoid, std::uint32_t mask,
                     bool has_deadline, Clock::time_point deadline, Word* out, bool* over) {
    Dfs d;
    d.init(g, avoid);
    d.has_deadline = has_deadline;
    d.deadline = deadline;
    d.remaining.assign(static_cast<std::size_t>(g.n()) + 1, 0);
    for (int x = 1; x <= g.n(); ++x)
        d.remaining[static_cast<std::size_t>(x)] = 1 + ((mask >> (x - 1)) & 1u);
    if (d.run()) {
        *out = d.prefix;
        return true;
    }
    if (d.over) *over = true;
    return false;
}

void verify_found(const LabeledGraph& g, const std::vector<Word>& avoid, const Word& w) {
    if (!twelve_represents(w, g))
        throw std::logic_error("search produced a word that does not represent the graph");
    for (const Word& p : avoid)
        if (contains_pattern(w, p))
            throw std::logic_error("search produced a word containing an avoided pattern");
}

}  // namespace

OracleOutcome brute_force_representant(const LabeledGraph& g, const std::vector<Word>& avoid,
                                       const SearchBudget& budget) {
    if (budget.max_occurrences != 1 && budget.max_occurrences != 2)
        throw std::invalid_argument("max_occurrences must be 1 or 2");
    for (const Word& p : avoid)
        if (!is_reduced(p)) throw std::invalid_argument("avoid patterns must be reduced words");
    int n = g.n();
    if (n > budget.max_n) return {OracleKind::OverBudget, {}};
    if (n > 20) throw std::invalid_argument("exhaustive search supports n <= 20");
    if (n == 0) return {OracleKind::Found, {}};

    std::vector<std::uint32_t> masks = multiplicity_masks(n, budget.max_occurrences);
    bool has_deadline = budget.time_cap_ms > 0;
    Clock::time_point deadline =
        Clock::now() + std::chrono::milliseconds(has_deadline ? budget.time_cap_ms : 0);

    if (budget.jobs <= 1) {
        for (std::uint32_t mask : masks) {
            Word w;
            bool over = false;
            if (search_one_mask(g, avoid, mask, has_deadline, deadline, &w, &over)) {
                verify_found(g, avoid, w);
                return {OracleKind::Found, w};
            }
            if (over) return {OracleKind::OverBudget, {}};
        }
        return {OracleKind::Absent, {}};
    }

    // workers take mask indices round-robin and give up past the best hit,
    // so without a deadline the result matches the sequential scan
    std::atomic<std::size_t> best{masks.size()};
    std::atomic<std::size_t> first_over{masks.size()};
    std::vector<Word> found(masks.size());
    int jobs = std::min(budget.jobs, static_cast<int>(masks.size()));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int wid = 0; wid < jobs; ++wid) {
        threads.emplace_back([&, wid] {
            for (std::size_t idx = static_cast<std::size_t>(wid); idx < masks.size();
                 idx += static_cast<std::size_t>(jobs)) {
                if (idx >= best.load()) break;
                Word w;
                bool over = false;
                if (search_one_mask(g, avoid, masks[idx], has_deadline, deadline, &w, &over)) {
                    found[idx] = w;
                    std::size_t cur = best.load();
                    while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                    }
                }
                if (over) {
                    std::size_t cur = first_over.load();
                    while (idx < cur && !first_over.compare_exchange_weak(cur, idx)) {
                    }
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    std::size_t b = best.load(), o = first_over.load();
    if (o < b) return {OracleKind::OverBudget, {}};
    if (b < masks.size()) {
        verify_found(g, avoid, found[b]);
        return {OracleKind::Found, found[b]};
    }
    if (o < masks.size()) return {OracleKind::OverBudget, {}};
    return {OracleKind::Absent, {}};
}

std::optional<std::vector<int>> search_labelings(
    const LabeledGraph& g, const std::function<bool(const LabeledGraph&)>& pred) {
    int n = g.n();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (pred(g.relabel(perm))) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::vector<LabeledGraph> distinct_labelings(const LabeledGraph& g) {
    int n = g.n();
    if (n > 8) throw std::invalid_argument("distinct_labelings supports n <= 8");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::uint64_t> keys;
    do {
        keys.push_back(g.relabel(perm).adjacency_key());
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<LabeledGraph> out;
    out.reserve(keys.size());
    for (std::uint64_t k : keys) out.push_back(graph_from_key(n, k));
    return out;
}

std::uint64_t canonical_key(const LabeledGraph& g) {
    int n = g.n();
    if (n > 8) throw std::invalid_argument("canonical_key supports n <= 8");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, g.relabel(perm).adjacency_key());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::uint64_t labeled_graph_count(int n) {
    if (n < 0 || n > 11) throw std::invalid_argument("labeled_graph_count supports n <= 11");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

LabeledGraph graph_from_key(int n, std::uint64_t key) {
    if (n < 0 || n > 11) throw std::invalid_argument("graph_from_key supports n <= 11");
    if (key >= labeled_graph_count(n)) throw std::invalid_argument("graph key out of range");
    LabeledGraph g(n);
    int bit = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++bit)
            if ((key >> bit) & 1u) g.add_edge(i, j);
    return g;
}

std::vector<LabeledGraph> canonical_graphs(int n) {
    if (n < 0 || n > 6) throw std::invalid_argument("canonical_graphs supports n <= 6");
    std::uint64_t total = labeled_graph_count(n);
    std::vector<char> seen(static_cast<std::size_t>(total), 0);
    std::vector<LabeledGraph> out;
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 1);
    for (std::uint64_t key = 0; key < total; ++key) {
        if (seen[static_cast<std::size_t>(key)]) continue;
        LabeledGraph g = graph_from_key(n, key);
        out.push_back(g);
        // mark the whole relabeling orbit; key is its minimum by scan order
        std::vector<int> perm = id;
        do {
            seen[static_cast<std::size_t>(g.relabel(perm).adjacency_key())] = 1;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

bool unlabeled_representable(const LabeledGraph& g, const std::vector<Word>& avoid,
                             const SearchBudget& budget) {
    for (const LabeledGraph& h : distinct_labelings(g)) {
        OracleOutcome out = brute_force_representant(h, avoid, budget);
        if (out.kind == OracleKind::Found) return true;
        if (out.kind == OracleKind::OverBudget)
            throw std::runtime_error("search budget exhausted while scanning labelings");
    }
    return false;
}

namespace {

bool pattern_free(const LabeledGraph& g, const std::vector<OrderedPattern>& ps) {
    return !find_any(g, ps).has_value();
}

bool has_claw(const LabeledGraph& g) {
    for (int v = 1; v <= g.n(); ++v) {
        std::vector<int> nbrs;
        for (int u = 1; u <= g.n(); ++u)
            if (g.edge(v, u)) nbrs.push_back(u);
        for (std::size_t a = 0; a < nbrs.size(); ++a)
            for (std::size_t b = a + 1; b < nbrs.size(); ++b)
                for (std::size_t c = b + 1; c < nbrs.size(); ++c)
                    if (!g.edge(nbrs[a], nbrs[b]) && !g.edge(nbrs[a], nbrs[c]) &&
                        !g.edge(nbrs[b], nbrs[c]))
                        return true;
    }
    return false;
}

// independent recognizer: trivially perfect = no induced path or cycle on 4
bool p4_c4_free(const LabeledGraph& g) {
    static const std::uint64_t p4_key =
        canonical_key(LabeledGraph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}}));
    static const std::uint64_t c4_key =
        canonical_key(LabeledGraph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
    int n = g.n();
    std::vector<int> sub(4);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    sub = {a, b, c, d};
                    std::uint64_t k = canonical_key(g.induced(sub));
                    if (k == p4_key || k == c4_key) return false;
                }
    return true;
}

}  // namespace

ClassFlags class_oracles(const LabeledGraph& g) {
    if (g.n() > 8) throw std::invalid_argument("class_oracles supports n <= 8");
    static const std::vector<OrderedPattern> perm_set = {FP_COMP(), FP_COCOMP()};
    static const std::vector<OrderedPattern> tp_set = {FP_INT(), FP_COMP()};
    static const std::vector<OrderedPattern> bp_set = {FP_COMP(), FP_COCOMP(), FP_TRIANGLE()};
    static const std::vector<OrderedPattern> int_set = {FP_INT()};
    ClassFlags f;
    f.permutation =
        search_labelings(g, [](const LabeledGraph& h) { return pattern_free(h, perm_set); })
            .has_value();
    f.trivially_perfect =
        search_labelings(g, [](const LabeledGraph& h) { return pattern_free(h, tp_set); })
            .has_value();
    if (f.trivially_perfect != p4_c4_free(g))
        throw std::logic_error("trivially perfect recognizers disagree");
    f.bipartite_permutation =
        search_labelings(g, [](const LabeledGraph& h) { return pattern_free(h, bp_set); })
            .has_value();
    f.interval_graph =
        search_labelings(g, [](const LabeledGraph& h) { return pattern_free(h, int_set); })
            .has_value();
    f.interval_complementable =
        search_labelings(g.complement(),
                         [](const LabeledGraph& h) { return pattern_free(h, int_set); })
            .has_value();
    f.unit_interval = f.interval_graph && !has_claw(g);
    return f;
}

const std::vector<std::string>& census_selectors() {
    static const std::vector<std::string> s = {"none", "12",  "21",  "111", "112", "121",
                                               "122",  "123", "132", "211", "212", "213",
                                               "221",  "231", "312", "321"};
    return s;
}

std::vector<Word> selector_patterns(const std::string& selector) {
    if (selector == "none") return {};
    if (selector == "set:121+212") return {Word{1, 2, 1}, Word{2, 1, 2}};
    if (selector == "set:211+221") return {Word{2, 1, 1}, Word{2, 2, 1}};
    Word p;
    for (char ch : selector) {
        if (ch < '1' || ch > '9')
            throw std::invalid_argument("unknown pattern selector: " + selector);
        p.push_back(ch - '0');
    }
    if (!is_reduced(p)) throw std::invalid_argument("pattern selector is not reduced: " + selector);
    return {p};
}

namespace {

// forbidden-pattern test per selector; empty when the selector has none
std::function<bool(const LabeledGraph&)> pattern_test(const std::string& selector) {
    static const std::vector<OrderedPattern> perm_set = {FP_COMP(), FP_COCOMP()};
    static const std::vector<OrderedPattern> tp_set = {FP_INT(), FP_COMP()};
    static const std::vector<OrderedPattern> tp_sup = {supplement_pattern(FP_INT()), FP_COMP()};
    static const std::vector<OrderedPattern> fp132_sup = supplement_set(fp132_set());
    static const std::vector<OrderedPattern> fp211_sup = supplement_set(fp211_set());
    if (selector == "none" || selector == "111")
        return [](const LabeledGraph& g) { return pattern_free(g, fp12_set()); };
    if (selector == "12")
        return [](const LabeledGraph& g) { return g.edge_count() == g.n() * (g.n() - 1) / 2; };
    if (selector == "21")
        return [](const LabeledGraph& g) { return g.edge_count() == 0; };
    if (selector == "121" || selector == "212" || selector == "set:121+212")
        return [](const LabeledGraph& g) { return pattern_free(g, perm_set); };
    if (selector == "231")
        return [](const LabeledGraph& g) { return pattern_free(g, tp_set); };
    if (selector == "312")
        return [](const LabeledGraph& g) { return pattern_free(g, tp_sup); };
    if (selector == "123")
        return [](const LabeledGraph& g) { return pattern_free(g, fp123_set()); };
    if (selector == "132")
        return [](const LabeledGraph& g) { return pattern_free(g, fp132_set()); };
    if (selector == "213")
        return [](const LabeledGraph& g) { return pattern_free(g, fp132_sup); };
    if (selector == "211")
        return [](const LabeledGraph& g) { return pattern_free(g, fp211_set()); };
    if (selector == "221")
        return [](const LabeledGraph& g) { return pattern_free(g, fp211_sup); };
    if (selector == "set:211+221")
        return [](const LabeledGraph& g) {
            std::vector<int> core;
            for (int v = 1; v <= g.n(); ++v)
                if (!g.isolated(v)) core.push_back(v);
            return pattern_free(g.induced(core), perm_set);
        };
    return {};  // 321, 112, 122: exhaustive search only
}

}  // namespace

CensusRow census_row(int n, const std::string& selector, const SearchBudget& budget) {
    if (n < 1 || n > 6) throw std::invalid_argument("census supports 1 <= n <= 6");
    std::vector<Word> avoid = selector_patterns(selector);  // validates the selector
    auto t0 = Clock::now();

    CensusRow row;
    row.n = n;
    row.pattern = selector;
    row.labeled_total = static_cast<std::int64_t>(labeled_graph_count(n));

    std::function<bool(const LabeledGraph&)> test = pattern_test(selector);
    bool run_oracle = n <= 5 && n <= budget.max_n;
    std::int64_t count_pattern = 0, count_oracle = 0;
    bool oracle_ok = run_oracle, agree = true;
    for (std::uint64_t key = 0; key < static_cast<std::uint64_t>(row.labeled_total); ++key) {
        LabeledGraph g = graph_from_key(n, key);
        std::optional<bool> by_pattern, by_oracle;
        if (test) {
            by_pattern = test(g);
            count_pattern += *by_pattern ? 1 : 0;
        }
        if (oracle_ok) {
            OracleOutcome out = brute_force_representant(g, avoid, budget);
            if (out.kind == OracleKind::OverBudget) {
                oracle_ok = false;
            } else {
                by_oracle = out.kind == OracleKind::Found;
                count_oracle += *by_oracle ? 1 : 0;
            }
        }
        if (by_pattern && by_oracle && *by_pattern != *by_oracle) agree = false;
    }
    row.labeled_count_pattern = test ? count_pattern : -1;
    row.labeled_count_oracle = oracle_ok ? count_oracle : -1;

    std::vector<LabeledGraph> reps = canonical_graphs(n);
    row.unlabeled_total = static_cast<std::int64_t>(reps.size());
    std::int64_t count_unlabeled = 0;
    bool unlabeled_ok = true;
    for (const LabeledGraph& rep : reps) {
        if (test) {
            if (search_labelings(rep, test)) ++count_unlabeled;
        } else if (run_oracle) {
            try {
                if (unlabeled_representable(rep, avoid, budget)) ++count_unlabeled;
            } catch (const std::runtime_error&) {
                unlabeled_ok = false;
                break;
            }
        } else {
            unlabeled_ok = false;
            break;
        }
    }
    row.unlabeled_count = unlabeled_ok ? count_unlabeled : -1;
    row.agree = agree;
    row.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return row;
}

std::vector<CensusRow> census(int n, const std::vector<std::string>& selectors,
                              const SearchBudget& budget) {
    std::vector<CensusRow> rows;
    rows.reserve(selectors.size());
    for (const std::string& s : selectors) rows.push_back(census_row(n, s, budget));
    return rows;
}

}  // namespace repwords
