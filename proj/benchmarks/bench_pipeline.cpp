// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "qforge/device.hpp"
#include "qforge/encoders.hpp"
#include "qforge/graph.hpp"
#include "qforge/qaoa.hpp"
#include "qforge/qubo.hpp"
#include "qforge/recommender.hpp"

using namespace qforge;

static void BM_BruteForceMinimum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = random_regular_graph(n, 3, 5);
    const Qubo q = qubo_maxcut(g);
    for (auto _ : state) {
        BruteForceResult r = brute_force_minimum(q);
        benchmark::DoNotOptimize(r.min_value);
    }
    state.SetComplexityN(1LL << n);
}
BENCHMARK(BM_BruteForceMinimum)->DenseRange(8, 20, 4)->Complexity();

static void BM_TranspileRow(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto catalog = default_catalog();
    const Graph g = random_regular_graph(n, 3, 5);
    const Circuit bound = bind_qaoa(qaoa_circuit(qubo_maxcut(g), 1), {0.7}, {0.4});
    for (auto _ : state) {
        for (const auto& d : catalog) {
            if (bound.qubit_count > d.qubit_count) continue;
            TranspileResult t = transpile_for(bound, d);
            benchmark::DoNotOptimize(t.metrics.depth);
        }
    }
}
BENCHMARK(BM_TranspileRow)->Arg(8)->Arg(16)->Arg(32)->Arg(56);

static void BM_RecommendSweepRow(benchmark::State& state) {
    const auto catalog = default_catalog();
    const Graph g = random_regular_graph(static_cast<int>(state.range(0)), 3, 5);
    const Circuit bound = bind_qaoa(qaoa_circuit(qubo_maxcut(g), 1), {0.7}, {0.4});
    for (auto _ : state) {
        Recommendation r = recommend(bound, catalog, Weights{}, 4096);
        benchmark::DoNotOptimize(r.winner.total);
    }
}
BENCHMARK(BM_RecommendSweepRow)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
