// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "qforge/encoders.hpp"
#include "qforge/graph.hpp"
#include "qforge/qaoa.hpp"
#include "qforge/simulator.hpp"

using namespace qforge;

static void BM_HadamardLayer(benchmark::State& state) {
    const int qubits = static_cast<int>(state.range(0));
    Circuit c;
    c.qubit_count = qubits;
    for (int q = 0; q < qubits; ++q) c.add(GateKind::H, {q});
    for (auto _ : state) {
        StateVector s = simulate(c);
        benchmark::DoNotOptimize(s.amplitudes.data());
    }
    state.SetComplexityN(1LL << qubits);
}
BENCHMARK(BM_HadamardLayer)->DenseRange(8, 20, 4)->Complexity();

static void BM_QaoaSimulate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = random_regular_graph(n, 3, 11);
    const Circuit bound = bind_qaoa(qaoa_circuit(qubo_maxcut(g), 1), {0.7}, {0.4});
    for (auto _ : state) {
        StateVector s = simulate(bound);
        benchmark::DoNotOptimize(s.amplitudes.data());
    }
}
BENCHMARK(BM_QaoaSimulate)->DenseRange(8, 16, 4);

static void BM_Sampling(benchmark::State& state) {
    Circuit c;
    c.qubit_count = 12;
    for (int q = 0; q < 12; ++q) c.add(GateKind::H, {q});
    const StateVector s = simulate(c);
    for (auto _ : state) {
        Histogram h = sample(s, state.range(0), 7);
        benchmark::DoNotOptimize(h.counts.size());
    }
}
BENCHMARK(BM_Sampling)->Arg(1024)->Arg(4096)->Arg(16384);
