// micro-benchmarks for the matcher, the constructors, the oracle and the
// geometry pipeline. fixtures are fixed graphs so every run measures the
// same work; nothing here is registered with ctest.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "repwords/construct.hpp"
#include "repwords/geometry.hpp"
#include "repwords/graph.hpp"
#include "repwords/oracle.hpp"
#include "repwords/patterns.hpp"
#include "repwords/word.hpp"

namespace {

using namespace repwords;

// deterministic word over 1..k, each letter twice, order shuffled by a
// fixed-seed generator
Word scrambled_word(int k) {
    Word w;
    for (int v = 1; v <= k; ++v) {
        w.push_back(v);
        w.push_back(v);
    }
    std::minstd_rand rng(12345);
    std::shuffle(w.begin(), w.end(), rng);
    return w;
}

LabeledGraph co_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (j != i + 1) edges.push_back({i, j});
    return LabeledGraph::from_edges(n, edges);
}

LabeledGraph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({1, n});
    return LabeledGraph::from_edges(n, edges);
}

LabeledGraph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
    return LabeledGraph::from_edges(n, edges);
}

void BM_word_pattern_scan(benchmark::State& state) {
    // descending double word has no increasing pair, so the scan never
    // short-circuits and the cost scales with the word
    Word w;
    for (int v = static_cast<int>(state.range(0)); v >= 1; --v) {
        w.push_back(v);
        w.push_back(v);
    }
    Word p = parse_word("123");
    for (auto _ : state) benchmark::DoNotOptimize(contains_pattern(w, p));
}
BENCHMARK(BM_word_pattern_scan)->Arg(16)->Arg(64)->Arg(256);

void BM_graph_from_word(benchmark::State& state) {
    Word w = scrambled_word(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(graph_from_word(w));
}
BENCHMARK(BM_graph_from_word)->Arg(8)->Arg(32);

void BM_twelve_represents(benchmark::State& state) {
    Word w = scrambled_word(static_cast<int>(state.range(0)));
    LabeledGraph g = graph_from_word(w);
    for (auto _ : state) benchmark::DoNotOptimize(twelve_represents(w, g));
}
BENCHMARK(BM_twelve_represents)->Arg(8)->Arg(32);

void BM_graph_pattern_scan(benchmark::State& state) {
    LabeledGraph g = co_path(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(find_any(g, fp132_set()));
}
BENCHMARK(BM_graph_pattern_scan)->Arg(6)->Arg(8)->Arg(10);

void BM_represent_121(benchmark::State& state) {
    // complement of a path is a permutation graph, so the fast route succeeds
    LabeledGraph g = co_path(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(represent_121(g));
}
BENCHMARK(BM_represent_121)->Arg(6)->Arg(10);

void BM_represent_123(benchmark::State& state) {
    // runs the whole marked-point pipeline on the complement
    LabeledGraph g = LabeledGraph::from_edges(
        5, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    for (auto _ : state) benchmark::DoNotOptimize(represent_123(g));
}
BENCHMARK(BM_represent_123);

void BM_represent_132(benchmark::State& state) {
    LabeledGraph g = complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(represent_132(g));
}
BENCHMARK(BM_represent_132)->Arg(4)->Arg(8);

void BM_oracle_absent(benchmark::State& state) {
    // C5 has no representant at all, so this measures a full exhausted search
    LabeledGraph g = cycle(5);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_representant(g, {}));
}
BENCHMARK(BM_oracle_absent);

void BM_oracle_found(benchmark::State& state) {
    LabeledGraph g = cycle(4);
    Word p = parse_word("111");
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_representant(g, {p}));
}
BENCHMARK(BM_oracle_found);

void BM_canonical_key(benchmark::State& state) {
    LabeledGraph g = co_path(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g));
}
BENCHMARK(BM_canonical_key)->Arg(5)->Arg(6)->Arg(7);

void BM_census_row(benchmark::State& state) {
    SearchBudget budget;
    for (auto _ : state)
        benchmark::DoNotOptimize(census_row(static_cast<int>(state.range(0)), "132", budget));
}
BENCHMARK(BM_census_row)->Arg(3)->Arg(4);

void BM_geometry_pipeline(benchmark::State& state) {
    // model -> unit adjustment -> hooks -> word, on the 5-vertex fixture
    LabeledGraph h = LabeledGraph::from_edges(
        5, {{1, 2}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
    for (auto _ : state) {
        HookModel hm = mpt_to_hook(unit_adjust(build_mpt_model(h)));
        benchmark::DoNotOptimize(hook_word(hm));
    }
}
BENCHMARK(BM_geometry_pipeline);

}  // namespace

BENCHMARK_MAIN();
