// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cmath>
#include <map>
#include <set>

#include "qforge/device.hpp"
#include "qforge/encoders.hpp"
#include "qforge/errors.hpp"
#include "qforge/qaoa.hpp"
#include "qforge/simulator.hpp"
#include "qforge/transpiler.hpp"

#include "support/test_util.hpp"

using namespace qforge;

namespace {

Circuit k_qaoa(int n, double gamma = 0.7, double beta = 0.4) {
    Graph g;
    g.vertex_count = n;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
    }
    return bind_qaoa(qaoa_circuit(qubo_maxcut(g), 1), {gamma}, {beta});
}

} // namespace

TEST_CASE("decompose: RZZ lowers to 2 CX + 1 RZ on CX-class sets") {
    Circuit c;
    c.qubit_count = 2;
    c.add(GateKind::RZZ, {0, 1}, 0.7);
    const Circuit low = decompose(c, NativeGateSet::generic_cx());
    CHECK(low.count(GateKind::CX) == 2);
    CHECK(low.count(GateKind::RZ) == 1);
    CHECK(verify_equivalence(c, low) >= 1.0 - 1e-9);
}

TEST_CASE("decompose: native circuits pass through unchanged") {
    Circuit c;
    c.qubit_count = 2;
    c.add(GateKind::H, {0});
    c.add(GateKind::CX, {0, 1});
    c.add(GateKind::RZ, {1}, 0.3);
    CHECK(decompose(c, NativeGateSet::generic_cx()) == c);
}

TEST_CASE("decompose: CCX becomes 6 CX and 9 one-qubit gates with unit fidelity") {
    Circuit c;
    c.qubit_count = 3;
    c.add(GateKind::CCX, {0, 1, 2});
    const Circuit low = decompose(c, NativeGateSet::generic_cx());
    CHECK(low.count(GateKind::CX) == 6);
    CHECK(low.count_1q() == 9);
    CHECK(verify_equivalence(c, low) >= 1.0 - 1e-9);
}

TEST_CASE("decompose: every alphabet gate lowers onto every shipped gate set") {
    const auto sets = {NativeGateSet::ibm_style(), NativeGateSet::rotation_cx(),
                       NativeGateSet::trapped_ion(), NativeGateSet::generic_cx()};
    for (std::uint64_t seed = 40; seed < 46; ++seed) {
        const Circuit c = test::random_circuit(3, 12, seed);
        for (const auto& gs : sets) {
            const Circuit low = decompose(c, gs);
            for (const Gate& g : low.gates) CHECK(gs.allows(g.kind));
            CHECK(verify_equivalence(c, low) >= 1.0 - 1e-9);
        }
    }
}

TEST_CASE("decompose: UnsupportedGateError when no identity applies") {
    NativeGateSet crippled{{GateKind::RZ, GateKind::CX}, NativeGateSet::Entangler::CXClass};
    Circuit c;
    c.qubit_count = 1;
    c.add(GateKind::H, {0});
    // H -> RZ RX RZ, but RX then needs H again: no convergence without RX/SX.
    CHECK_THROWS_AS(decompose(c, crippled), UnsupportedGateError);
}

TEST_CASE("route: all-to-all maps are untouched") {
    const Circuit c = k_qaoa(4);
    const RouteResult r = route(c, CouplingMap::fully_connected(10));
    CHECK(r.swap_count == 0);
    CHECK(r.circuit.gates == c.gates);
    CHECK(r.layout == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("route: CX(0,2) on a 3-line inserts exactly one SWAP") {
    Circuit c;
    c.qubit_count = 3;
    c.add(GateKind::CX, {0, 2});
    const RouteResult r = route(c, CouplingMap::line(3));
    CHECK(r.swap_count == 1);
    CHECK(verify_equivalence_routed(c, r.circuit, r.layout) >= 1.0 - 1e-9);

    // Structural topology compliance.
    const CouplingMap line = CouplingMap::line(3);
    for (const Gate& g : r.circuit.gates) {
        if (g.qubits.size() == 2) CHECK(line.coupled(g.qubits[0], g.qubits[1]));
    }
}

TEST_CASE("route: LayoutError when the device is too small") {
    CHECK_THROWS_AS(route(k_qaoa(4), CouplingMap::line(3)), LayoutError);
}

TEST_CASE("route: K4 QAOA on a line keeps the sampled distribution (TV <= 0.02)") {
    const Circuit ideal = k_qaoa(4);
    const RouteResult routed = route(ideal, CouplingMap::line(4));
    REQUIRE(routed.swap_count > 0);

    const long long shots = 100000;
    const Histogram ideal_hist = sample(simulate(ideal), shots, 99);

    std::vector<int> physical_of_compact;
    const Circuit compact = compact_circuit(routed.circuit, routed.layout, physical_of_compact);
    std::map<int, int> compact_of_physical;
    for (std::size_t i = 0; i < physical_of_compact.size(); ++i) {
        compact_of_physical[physical_of_compact[i]] = static_cast<int>(i);
    }
    const Histogram routed_hist = sample(simulate(compact), shots, 99);

    // Map physical outcomes back through the final layout.
    std::map<std::string, long long> corrected;
    for (const auto& [bits, count] : routed_hist.counts) {
        std::string logical(4, '0');
        for (int l = 0; l < 4; ++l) {
            logical[static_cast<std::size_t>(l)] =
                bits[static_cast<std::size_t>(compact_of_physical.at(routed.layout[static_cast<std::size_t>(l)]))];
        }
        corrected[logical] += count;
    }
    double tv = 0.0;
    std::set<std::string> keys;
    for (const auto& [k, v] : ideal_hist.counts) keys.insert(k);
    for (const auto& [k, v] : corrected) keys.insert(k);
    for (const auto& k : keys) {
        const double p = ideal_hist.counts.count(k) ? static_cast<double>(ideal_hist.counts.at(k)) / shots : 0.0;
        const double r = corrected.count(k) ? static_cast<double>(corrected.at(k)) / shots : 0.0;
        tv += std::abs(p - r);
    }
    CHECK(tv / 2.0 <= 0.02);
}

TEST_CASE("metrics: depth, counts and duration") {
    Circuit empty;
    empty.qubit_count = 2;
    const TranspileMetrics zero = metrics(empty, 1e-8, 1e-7);
    CHECK(zero.depth == 0);
    CHECK(zero.count_1q == 0);
    CHECK(zero.count_2q == 0);
    CHECK(zero.estimated_duration == 0.0);

    Circuit parallel;
    parallel.qubit_count = 2;
    parallel.add(GateKind::X, {0});
    parallel.add(GateKind::X, {1});
    const TranspileMetrics par = metrics(parallel, 1e-8, 1e-7);
    CHECK(par.depth == 1);
    CHECK(par.estimated_duration == doctest::Approx(1e-8));

    const Circuit lowered = decompose(k_qaoa(3), NativeGateSet::generic_cx());
    const TranspileMetrics m = metrics(lowered, 1e-8, 1e-7);
    CHECK(m.count_2q == 6); // 3 RZZ x 2 CX

    Circuit swapful;
    swapful.qubit_count = 2;
    swapful.add(GateKind::Swap, {0, 1});
    const TranspileMetrics sm = metrics(swapful, 1e-8, 1e-7);
    CHECK(sm.count_2q == 3);
    CHECK(sm.swap_count == 1);
    CHECK(sm.estimated_duration == doctest::Approx(3e-7));
}

TEST_CASE("verify_equivalence basics") {
    Circuit x;
    x.qubit_count = 1;
    x.add(GateKind::X, {0});
    CHECK(verify_equivalence(x, x) == doctest::Approx(1.0));

    Circuit h;
    h.qubit_count = 1;
    h.add(GateKind::H, {0});
    CHECK(verify_equivalence(x, h) < 1.0);

    Circuit big_a, big_b;
    big_a.qubit_count = big_b.qubit_count = 7;
    CHECK_THROWS_AS(verify_equivalence(big_a, big_b), SizeError);
}

TEST_CASE("transpile: semantic preservation across the whole catalog") {
    const auto catalog = default_catalog();
    REQUIRE(catalog.size() == 9);
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        const Circuit c = test::random_circuit(2 + static_cast<int>(seed % 3), 10, seed);
        for (const auto& device : catalog) {
            const TranspileResult t = transpile_for(c, device);
            for (const Gate& g : t.circuit.gates) {
                CHECK(device.native.allows(g.kind));
                if (g.qubits.size() == 2) CHECK(device.coupling.coupled(g.qubits[0], g.qubits[1]));
            }
            CHECK(verify_equivalence_routed(c, t.circuit, t.layout) >= 1.0 - 1e-9);
        }
    }
}

TEST_CASE("monotone cost: adding a coupling edge never increases swaps on the corpus") {
    struct Case {
        Circuit circuit;
        CouplingMap base;
        Edge extra;
    };
    std::vector<Case> corpus;

    Circuit long_cx;
    long_cx.qubit_count = 4;
    long_cx.add(GateKind::CX, {0, 3});
    corpus.push_back({long_cx, CouplingMap::line(4), {0, 3}});

    corpus.push_back({k_qaoa(4), CouplingMap::line(4), {0, 2}});
    corpus.push_back({k_qaoa(4), CouplingMap::line(4), {0, 3}});
    corpus.push_back({k_qaoa(5), CouplingMap::line(5), {1, 3}});

    for (const auto& c : corpus) {
        const int base_swaps = route(decompose(c.circuit, NativeGateSet::generic_cx()), c.base).swap_count;
        CouplingMap extended = c.base;
        extended.edges.push_back(c.extra);
        std::sort(extended.edges.begin(), extended.edges.end());
        const int extended_swaps =
            route(decompose(c.circuit, NativeGateSet::generic_cx()), extended).swap_count;
        CHECK(extended_swaps <= base_swaps);
    }
}
