// SPDX-License-Identifier: Apache-2.0
#include "qforge/transpiler.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <string>

#include "qforge/errors.hpp"
#include "qforge/simulator.hpp"

namespace qforge {

namespace {

constexpr double kPi = std::numbers::pi;

} // namespace

NativeGateSet NativeGateSet::ibm_style() {
    return {{GateKind::RZ, GateKind::SX, GateKind::X, GateKind::CX}, Entangler::CXClass};
}

NativeGateSet NativeGateSet::rotation_cx() {
    return {{GateKind::RX, GateKind::RZ, GateKind::CX}, Entangler::CXClass};
}

NativeGateSet NativeGateSet::trapped_ion() {
    return {{GateKind::RX, GateKind::RZ, GateKind::RZZ}, Entangler::RZZClass};
}

NativeGateSet NativeGateSet::generic_cx() {
    return {{GateKind::H, GateKind::X, GateKind::RX, GateKind::RZ, GateKind::CX}, Entangler::CXClass};
}

bool CouplingMap::coupled(int a, int b) const {
    if (all_to_all) return a != b;
    Edge e{std::min(a, b), std::max(a, b)};
    return std::binary_search(edges.begin(), edges.end(), e);
}

std::vector<std::vector<int>> CouplingMap::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(physical_qubits));
    for (const auto& [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& n : adj) std::sort(n.begin(), n.end());
    return adj;
}

bool CouplingMap::connected() const {
    if (all_to_all || physical_qubits <= 1) return true;
    const auto adj = adjacency();
    std::vector<char> seen(static_cast<std::size_t>(physical_qubits), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int visited = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++visited;
                queue.push_back(w);
            }
        }
    }
    return visited == physical_qubits;
}

CouplingMap CouplingMap::fully_connected(int n) { return {n, true, {}}; }

CouplingMap CouplingMap::line(int n) {
    CouplingMap cm{n, false, {}};
    for (int i = 0; i + 1 < n; ++i) cm.edges.emplace_back(i, i + 1);
    return cm;
}

namespace {

// Standard T-gate CCX lowering: 6 CX plus 9 one-qubit gates (2 H, 7 T/Tdg),
// exact up to global phase. T = RZ(pi/4).
void emit_ccx(Circuit& out, int a, int b, int t) {
    const double T = kPi / 4.0;
    out.add(GateKind::H, {t});
    out.add(GateKind::CX, {b, t});
    out.add(GateKind::RZ, {t}, -T);
    out.add(GateKind::CX, {a, t});
    out.add(GateKind::RZ, {t}, T);
    out.add(GateKind::CX, {b, t});
    out.add(GateKind::RZ, {t}, -T);
    out.add(GateKind::CX, {a, t});
    out.add(GateKind::RZ, {b}, T);
    out.add(GateKind::RZ, {t}, T);
    out.add(GateKind::H, {t});
    out.add(GateKind::CX, {a, b});
    out.add(GateKind::RZ, {a}, T);
    out.add(GateKind::RZ, {b}, -T);
    out.add(GateKind::CX, {a, b});
}

// CX on an RZZ-class device: CX = phase * RZ(pi/2)_c RX(pi/2)_t H_t RZZ(-pi/2) H_t
// (the three factors commute).
void emit_cx_via_rzz(Circuit& out, int c, int t) {
    out.add(GateKind::H, {t});
    out.add(GateKind::RZZ, {c, t}, -kPi / 2.0);
    out.add(GateKind::H, {t});
    out.add(GateKind::RX, {t}, kPi / 2.0);
    out.add(GateKind::RZ, {c}, kPi / 2.0);
}

// Expand one gate a single level; returns false when the gate has no
// applicable identity.
bool expand_gate(Circuit& out, const Gate& g, const NativeGateSet& gs) {
    switch (g.kind) {
    case GateKind::CCX:
        emit_ccx(out, g.qubits[0], g.qubits[1], g.qubits[2]);
        return true;
    case GateKind::Swap:
        out.add(GateKind::CX, {g.qubits[0], g.qubits[1]});
        out.add(GateKind::CX, {g.qubits[1], g.qubits[0]});
        out.add(GateKind::CX, {g.qubits[0], g.qubits[1]});
        return true;
    case GateKind::RZZ:
        if (gs.entangler != NativeGateSet::Entangler::CXClass) return false;
        out.add(GateKind::CX, {g.qubits[0], g.qubits[1]});
        out.add(GateKind::RZ, {g.qubits[1]}, g.angle);
        out.add(GateKind::CX, {g.qubits[0], g.qubits[1]});
        return true;
    case GateKind::CX:
        if (gs.entangler != NativeGateSet::Entangler::RZZClass) return false;
        emit_cx_via_rzz(out, g.qubits[0], g.qubits[1]);
        return true;
    case GateKind::H:
        if (gs.allows(GateKind::SX)) {
            out.add(GateKind::RZ, {g.qubits[0]}, kPi / 2.0);
            out.add(GateKind::SX, {g.qubits[0]});
            out.add(GateKind::RZ, {g.qubits[0]}, kPi / 2.0);
        } else {
            out.add(GateKind::RZ, {g.qubits[0]}, kPi / 2.0);
            out.add(GateKind::RX, {g.qubits[0]}, kPi / 2.0);
            out.add(GateKind::RZ, {g.qubits[0]}, kPi / 2.0);
        }
        return true;
    case GateKind::X:
        out.add(GateKind::RX, {g.qubits[0]}, kPi);
        return true;
    case GateKind::SX:
        out.add(GateKind::RX, {g.qubits[0]}, kPi / 2.0);
        return true;
    case GateKind::RX:
        // RX(theta) = H RZ(theta) H, exactly.
        out.add(GateKind::H, {g.qubits[0]});
        out.add(GateKind::RZ, {g.qubits[0]}, g.angle);
        out.add(GateKind::H, {g.qubits[0]});
        return true;
    case GateKind::RZ:
        return false;
    }
    return false;
}

} // namespace

Circuit decompose(const Circuit& c, const NativeGateSet& gs) {
    if (!c.executable()) throw UnboundParameterError("decompose: circuit has free parameters");

    Circuit current = c;
    for (int pass = 0; pass < 16; ++pass) {
        bool dirty = false;
        Circuit next;
        next.qubit_count = current.qubit_count;
        next.registers = current.registers;
        for (const Gate& g : current.gates) {
            if (gs.allows(g.kind)) {
                next.gates.push_back(g);
                continue;
            }
            if (!expand_gate(next, g, gs)) {
                throw UnsupportedGateError(std::string("decompose: no identity lowers ") +
                                           gate_name(g.kind) + " to the native set");
            }
            dirty = true;
        }
        current = std::move(next);
        if (!dirty) return current;
    }
    throw UnsupportedGateError("decompose: rewriting did not converge");
}

RouteResult route(const Circuit& c, const CouplingMap& cm) {
    if (c.qubit_count > cm.physical_qubits) {
        throw LayoutError("route: circuit needs " + std::to_string(c.qubit_count) +
                          " qubits but the device has " + std::to_string(cm.physical_qubits));
    }
    if (!c.executable()) throw UnboundParameterError("route: circuit has free parameters");

    RouteResult out;
    if (cm.all_to_all) {
        out.circuit = c;
        out.layout.resize(static_cast<std::size_t>(c.qubit_count));
        for (int i = 0; i < c.qubit_count; ++i) out.layout[static_cast<std::size_t>(i)] = i;
        return out;
    }

    const auto adj = cm.adjacency();
    // pos[w]: current physical position of original wire w; wire[p]: inverse.
    std::vector<int> pos(static_cast<std::size_t>(cm.physical_qubits));
    std::vector<int> wire(static_cast<std::size_t>(cm.physical_qubits));
    for (int i = 0; i < cm.physical_qubits; ++i) pos[static_cast<std::size_t>(i)] = wire[static_cast<std::size_t>(i)] = i;

    Circuit routed;
    routed.qubit_count = cm.physical_qubits;
    routed.registers = c.registers;

    auto bfs_path = [&](int from, int to) {
        std::vector<int> parent(static_cast<std::size_t>(cm.physical_qubits), -1);
        std::deque<int> queue{from};
        parent[static_cast<std::size_t>(from)] = from;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            if (v == to) break;
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (parent[static_cast<std::size_t>(w)] == -1) {
                    parent[static_cast<std::size_t>(w)] = v;
                    queue.push_back(w);
                }
            }
        }
        if (parent[static_cast<std::size_t>(to)] == -1) {
            throw LayoutError("route: coupling map is disconnected between physical qubits " +
                              std::to_string(from) + " and " + std::to_string(to));
        }
        std::vector<int> path{to};
        while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
        std::reverse(path.begin(), path.end());
        return path;
    };

    auto emit_swap = [&](int p1, int p2) {
        routed.add(GateKind::Swap, {p1, p2});
        const int w1 = wire[static_cast<std::size_t>(p1)];
        const int w2 = wire[static_cast<std::size_t>(p2)];
        std::swap(wire[static_cast<std::size_t>(p1)], wire[static_cast<std::size_t>(p2)]);
        pos[static_cast<std::size_t>(w1)] = p2;
        pos[static_cast<std::size_t>(w2)] = p1;
        ++out.swap_count;
    };

    for (const Gate& g : c.gates) {
        if (g.qubits.size() == 1) {
            Gate moved = g;
            moved.qubits = {pos[static_cast<std::size_t>(g.qubits[0])]};
            routed.gates.push_back(std::move(moved));
            continue;
        }
        if (g.qubits.size() != 2) {
            throw UnsupportedGateError("route: gates must act on at most 2 qubits; decompose first");
        }
        const int l1 = g.qubits[0], l2 = g.qubits[1];
        int p1 = pos[static_cast<std::size_t>(l1)];
        int p2 = pos[static_cast<std::size_t>(l2)];
        if (!cm.coupled(p1, p2)) {
            // Move the lesser-index operand along the shortest path until the
            // pair is adjacent.
            const bool move_first = l1 < l2;
            const int from = move_first ? p1 : p2;
            const int to = move_first ? p2 : p1;
            const auto path = bfs_path(from, to);
            for (std::size_t i = 0; i + 2 < path.size(); ++i) emit_swap(path[i], path[i + 1]);
            p1 = pos[static_cast<std::size_t>(l1)];
            p2 = pos[static_cast<std::size_t>(l2)];
        }
        Gate moved = g;
        moved.qubits = {p1, p2};
        routed.gates.push_back(std::move(moved));
    }

    out.circuit = std::move(routed);
    out.layout.resize(static_cast<std::size_t>(c.qubit_count));
    for (int i = 0; i < c.qubit_count; ++i) out.layout[static_cast<std::size_t>(i)] = pos[static_cast<std::size_t>(i)];
    return out;
}

TranspileMetrics metrics(const Circuit& c, double duration_1q, double duration_2q) {
    TranspileMetrics m;
    m.count_1q = c.count_1q();
    m.count_2q = c.count_2q();
    m.swap_count = c.count(GateKind::Swap);

    std::vector<int> frontier(static_cast<std::size_t>(c.qubit_count), 0);
    std::vector<double> layer_duration;
    for (const Gate& g : c.gates) {
        int layer = 0;
        for (int q : g.qubits) layer = std::max(layer, frontier[static_cast<std::size_t>(q)]);
        ++layer;
        for (int q : g.qubits) frontier[static_cast<std::size_t>(q)] = layer;
        if (static_cast<std::size_t>(layer) > layer_duration.size()) layer_duration.resize(static_cast<std::size_t>(layer), 0.0);
        double d = gate_arity(g.kind) == 1 ? duration_1q : duration_2q;
        if (g.kind == GateKind::Swap) d = 3.0 * duration_2q;
        layer_duration[static_cast<std::size_t>(layer - 1)] = std::max(layer_duration[static_cast<std::size_t>(layer - 1)], d);
        m.depth = std::max(m.depth, layer);
    }
    for (double d : layer_duration) m.estimated_duration += d;
    return m;
}

TranspileResult transpile(const Circuit& c, const NativeGateSet& gs, const CouplingMap& cm,
                          double duration_1q, double duration_2q) {
    const Circuit lowered = decompose(c, gs);
    RouteResult routed = route(lowered, cm);
    Circuit final_circuit = routed.swap_count > 0 ? decompose(routed.circuit, gs) : std::move(routed.circuit);

    TranspileResult out;
    out.metrics = metrics(final_circuit, duration_1q, duration_2q);
    out.metrics.swap_count = routed.swap_count;
    out.circuit = std::move(final_circuit);
    out.layout = std::move(routed.layout);
    return out;
}

Circuit compact_circuit(const Circuit& c, const std::vector<int>& keep,
                        std::vector<int>& physical_of_compact) {
    std::set<int> used(keep.begin(), keep.end());
    for (const Gate& g : c.gates) used.insert(g.qubits.begin(), g.qubits.end());
    physical_of_compact.assign(used.begin(), used.end());

    std::vector<int> compact_of_physical(static_cast<std::size_t>(c.qubit_count), -1);
    for (std::size_t i = 0; i < physical_of_compact.size(); ++i) {
        compact_of_physical[static_cast<std::size_t>(physical_of_compact[i])] = static_cast<int>(i);
    }

    Circuit out;
    out.qubit_count = static_cast<int>(physical_of_compact.size());
    for (const Gate& g : c.gates) {
        Gate moved = g;
        for (int& q : moved.qubits) q = compact_of_physical[static_cast<std::size_t>(q)];
        out.gates.push_back(std::move(moved));
    }
    return out;
}

namespace {

Circuit with_basis_input(const Circuit& c, std::uint64_t x, const std::vector<int>& input_qubits) {
    Circuit out;
    out.qubit_count = c.qubit_count;
    out.registers = c.registers;
    for (std::size_t i = 0; i < input_qubits.size(); ++i) {
        if (x >> i & 1u) out.add(GateKind::X, {input_qubits[i]});
    }
    out.gates.insert(out.gates.end(), c.gates.begin(), c.gates.end());
    return out;
}

} // namespace

double verify_equivalence(const Circuit& a, const Circuit& b) {
    if (a.qubit_count != b.qubit_count) {
        throw DimensionError("verify_equivalence: qubit counts differ");
    }
    if (a.qubit_count > 6) throw SizeError("verify_equivalence: limited to 6 qubits");

    std::vector<int> inputs;
    for (int i = 0; i < a.qubit_count; ++i) inputs.push_back(i);

    double min_fidelity = 1.0;
    for (std::uint64_t x = 0; x < (1ULL << a.qubit_count); ++x) {
        const StateVector sa = simulate(with_basis_input(a, x, inputs));
        const StateVector sb = simulate(with_basis_input(b, x, inputs));
        std::complex<double> overlap = 0.0;
        for (std::size_t j = 0; j < sa.amplitudes.size(); ++j) {
            overlap += std::conj(sa.amplitudes[j]) * sb.amplitudes[j];
        }
        min_fidelity = std::min(min_fidelity, std::norm(overlap));
    }
    return min_fidelity;
}

double verify_equivalence_routed(const Circuit& logical, const Circuit& routed,
                                 const std::vector<int>& layout) {
    if (logical.qubit_count > 6) throw SizeError("verify_equivalence_routed: limited to 6 qubits");

    // Touched physical qubits only; basis inputs enter at the identity layout
    // (physical i = logical i) and read back through `layout`.
    std::vector<int> keep;
    for (int i = 0; i < logical.qubit_count; ++i) keep.push_back(i);
    keep.insert(keep.end(), layout.begin(), layout.end());
    std::vector<int> physical_of_compact;
    const Circuit compact = compact_circuit(routed, keep, physical_of_compact);
    if (compact.qubit_count > 22) throw SizeError("verify_equivalence_routed: routed circuit touches too many qubits");

    std::vector<int> compact_of_physical(static_cast<std::size_t>(routed.qubit_count), -1);
    for (std::size_t i = 0; i < physical_of_compact.size(); ++i) {
        compact_of_physical[static_cast<std::size_t>(physical_of_compact[i])] = static_cast<int>(i);
    }

    std::vector<int> logical_inputs;
    std::vector<int> compact_inputs;
    std::vector<int> compact_outputs;
    for (int i = 0; i < logical.qubit_count; ++i) {
        logical_inputs.push_back(i);
        compact_inputs.push_back(compact_of_physical[static_cast<std::size_t>(i)]);
        compact_outputs.push_back(compact_of_physical[static_cast<std::size_t>(layout[static_cast<std::size_t>(i)])]);
    }

    double min_fidelity = 1.0;
    for (std::uint64_t x = 0; x < (1ULL << logical.qubit_count); ++x) {
        const StateVector sl = simulate(with_basis_input(logical, x, logical_inputs));
        const StateVector sr = simulate(with_basis_input(compact, x, compact_inputs));
        std::complex<double> overlap = 0.0;
        for (std::uint64_t j = 0; j < sl.amplitudes.size(); ++j) {
            std::uint64_t embedded = 0;
            for (std::size_t i = 0; i < compact_outputs.size(); ++i) {
                if (j >> i & 1u) embedded |= 1ULL << compact_outputs[i];
            }
            overlap += std::conj(sl.amplitudes[j]) * sr.amplitudes[embedded];
        }
        min_fidelity = std::min(min_fidelity, std::norm(overlap));
    }
    return min_fidelity;
}

} // namespace qforge
