// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <vector>

#include "qforge/circuit.hpp"
#include "qforge/graph.hpp"

namespace qforge {

/// Device-native gate alphabet. The entangler class decides which two-qubit
/// identity decompose() applies (RZZ -> CX RZ CX on CX-class hardware, CX ->
/// 1q rotations + RZZ on RZZ-class hardware).
struct NativeGateSet {
    enum class Entangler { CXClass, RZZClass };
    std::set<GateKind> allowed;
    Entangler entangler = Entangler::CXClass;

    bool allows(GateKind k) const { return allowed.count(k) > 0; }

    static NativeGateSet ibm_style();      // RZ, SX, X, CX
    static NativeGateSet rotation_cx();    // RX, RZ, CX
    static NativeGateSet trapped_ion();    // RX, RZ, RZZ
    static NativeGateSet generic_cx();     // H, X, RX, RZ, CX (for tests)
};

struct CouplingMap {
    int physical_qubits = 0;
    bool all_to_all = false;
    std::vector<Edge> edges; // sorted endpoint pairs, ignored when all_to_all

    bool coupled(int a, int b) const;
    std::vector<std::vector<int>> adjacency() const; // ascending neighbor lists
    bool connected() const;

    static CouplingMap fully_connected(int n);
    static CouplingMap line(int n);
};

struct TranspileMetrics {
    int depth = 0;
    int count_1q = 0;
    int count_2q = 0; // SWAP counted as 3 two-qubit gates
    int swap_count = 0;
    double estimated_duration = 0.0; // seconds, per-layer max-duration sum
};

/// Rewrites gates until only allowed kinds remain; the unitary is preserved
/// up to global phase. Throws UnsupportedGateError when no identity applies.
Circuit decompose(const Circuit& c, const NativeGateSet& gs);

struct RouteResult {
    Circuit circuit;         // over physical qubit indices
    std::vector<int> layout; // final logical -> physical map
    int swap_count = 0;
};

/// Greedy SWAP insertion along BFS shortest coupling paths with deterministic
/// tie-breaking (ascending neighbor order); the lesser-index gate operand is
/// moved. Identity initial layout. Requires gates of arity <= 2 unless the
/// map is all-to-all. Throws LayoutError when physical qubits are
/// insufficient.
RouteResult route(const Circuit& c, const CouplingMap& cm);

/// Structural metrics: depth is the longest dependency chain, duration sums
/// the per-layer maximum of the supplied per-kind gate durations.
TranspileMetrics metrics(const Circuit& c, double duration_1q, double duration_2q);

struct TranspileResult {
    Circuit circuit;
    std::vector<int> layout;
    TranspileMetrics metrics;
};

/// decompose -> route -> lower inserted SWAPs -> metrics.
TranspileResult transpile(const Circuit& c, const NativeGateSet& gs, const CouplingMap& cm,
                          double duration_1q, double duration_2q);

/// min over computational basis inputs of |<psi_a|psi_b>|^2; both circuits on
/// the same qubit count, at most 6 qubits (SizeError above).
double verify_equivalence(const Circuit& a, const Circuit& b);

/// Layout-corrected fidelity of a routed circuit against its logical
/// original: basis inputs enter at the identity initial layout, outputs are
/// read back through `layout`. The routed circuit is compacted to its touched
/// qubits before simulation.
double verify_equivalence_routed(const Circuit& logical, const Circuit& routed,
                                 const std::vector<int>& layout);

/// Restriction of a circuit to its touched qubits (plus `keep` indices);
/// `physical_of_compact` maps compact indices back.
Circuit compact_circuit(const Circuit& c, const std::vector<int>& keep,
                        std::vector<int>& physical_of_compact);

} // namespace qforge
