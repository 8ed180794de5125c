// Microbenchmarks for the order stream: per-order cost should stay flat as
// the graph grows, and preprocessing should stay separate from streaming.

#include "atfree/betweenness.hpp"
#include "atfree/gray.hpp"
#include "atfree/orders.hpp"

#include <benchmark/benchmark.h>

using namespace atfree;

namespace {

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, e);
}

// spine of length s, one pendant leg per spine vertex (interval, so AT-free)
Graph caterpillar(int s) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < s; ++i) e.push_back({i, i + 1});
    for (int i = 0; i < s; ++i) e.push_back({i, s + i});
    return Graph(2 * s, e);
}

Graph complete_split(int clique, int stable) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < clique; ++i)
        for (int j = i + 1; j < clique; ++j) e.push_back({i, j});
    for (int i = 0; i < clique; ++i)
        for (int j = 0; j < stable; ++j) e.push_back({i, clique + j});
    return Graph(clique + stable, e);
}

void stream(benchmark::State& state, const Graph& g) {
    long long orders = 0;
    for (auto _ : state) {
        long long c = 0;
        generate_gray(g, [&](const GrayStep& step) {
            benchmark::DoNotOptimize(step.swap_count);
            ++c;
        });
        orders = c;
    }
    state.SetItemsProcessed(state.iterations() * orders);
    state.counters["orders"] = static_cast<double>(orders);
}

void bench_stream_path(benchmark::State& state) {
    stream(state, path(static_cast<int>(state.range(0))));
}

void bench_stream_caterpillar(benchmark::State& state) {
    stream(state, caterpillar(static_cast<int>(state.range(0))));
}

void bench_stream_complete_split(benchmark::State& state) {
    stream(state, complete_split(3, static_cast<int>(state.range(0))));
}

// the baseline the stream replaces: prune-and-backtrack enumeration
void bench_enumerate_path(benchmark::State& state) {
    Graph g = path(static_cast<int>(state.range(0)));
    IntervalTable tbl = interval_table(g);
    long long orders = 0;
    for (auto _ : state) {
        auto all = enumerate_at_free_orders(g, tbl);
        benchmark::DoNotOptimize(all.data());
        orders = static_cast<long long>(all.size());
    }
    state.SetItemsProcessed(state.iterations() * orders);
}

// table construction alone, the one-off cost before streaming starts
void bench_preprocess(benchmark::State& state) {
    Graph g = path(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        IntervalTable tbl = interval_table(g);
        WitnessTable w(tbl);
        benchmark::DoNotOptimize(w.row(0, 1));
    }
}

}  // namespace

BENCHMARK(bench_stream_path)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_stream_caterpillar)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_stream_complete_split)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_enumerate_path)->DenseRange(8, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_preprocess)->Arg(16)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
