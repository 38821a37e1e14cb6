// SPDX-License-Identifier: Apache-2.0
#include "qforge/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

#include "qforge/errors.hpp"

namespace qforge {

const char* gate_name(GateKind k) {
    switch (k) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::SX: return "SX";
    case GateKind::CX: return "CX";
    case GateKind::CCX: return "CCX";
    case GateKind::Swap: return "SWAP";
    case GateKind::RX: return "RX";
    case GateKind::RZ: return "RZ";
    case GateKind::RZZ: return "RZZ";
    }
    return "?";
}

int gate_arity(GateKind k) {
    switch (k) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::SX:
    case GateKind::RX:
    case GateKind::RZ:
        return 1;
    case GateKind::CX:
    case GateKind::Swap:
    case GateKind::RZZ:
        return 2;
    case GateKind::CCX:
        return 3;
    }
    return 0;
}

bool gate_is_rotation(GateKind k) {
    return k == GateKind::RX || k == GateKind::RZ || k == GateKind::RZZ;
}

const Register* Circuit::find_register(RegisterRole role) const {
    for (const auto& r : registers) {
        if (r.role == role) return &r;
    }
    return nullptr;
}

void Circuit::add(GateKind kind, std::vector<int> qubits, double angle, int param) {
    if (static_cast<int>(qubits.size()) != gate_arity(kind)) {
        throw InputError(std::string("gate ") + gate_name(kind) + " expects " +
                         std::to_string(gate_arity(kind)) + " qubits");
    }
    std::set<int> distinct(qubits.begin(), qubits.end());
    if (distinct.size() != qubits.size()) {
        throw InputError(std::string("gate ") + gate_name(kind) + " has repeated qubit indices");
    }
    for (int q : qubits) {
        if (q < 0 || q >= qubit_count) {
            throw InputError(std::string("gate ") + gate_name(kind) + " qubit " + std::to_string(q) +
                             " out of range for " + std::to_string(qubit_count) + " qubits");
        }
    }
    gates.push_back(Gate{kind, std::move(qubits), angle, param});
}

int Circuit::count_1q() const {
    int n = 0;
    for (const auto& g : gates) {
        if (gate_arity(g.kind) == 1) ++n;
    }
    return n;
}

int Circuit::count_2q() const {
    int n = 0;
    for (const auto& g : gates) {
        if (g.kind == GateKind::Swap) {
            n += 3;
        } else if (gate_arity(g.kind) == 2) {
            ++n;
        }
    }
    return n;
}

int Circuit::count(GateKind k) const {
    return static_cast<int>(std::count_if(gates.begin(), gates.end(),
                                          [k](const Gate& g) { return g.kind == k; }));
}

Circuit bind(const Circuit& c, const std::map<std::string, double>& values) {
    Circuit out = c;
    out.parameters.clear();
    for (auto& g : out.gates) {
        if (g.param < 0) continue;
        const std::string& name = c.parameters[static_cast<std::size_t>(g.param)];
        auto it = values.find(name);
        if (it == values.end()) {
            throw UnboundParameterError("bind: no value for parameter \"" + name + "\"");
        }
        g.angle *= it->second;
        g.param = -1;
    }
    return out;
}

Circuit inverted(const Circuit& c) {
    if (!c.executable()) throw UnboundParameterError("inverted: circuit has free parameters");
    Circuit out;
    out.qubit_count = c.qubit_count;
    out.registers = c.registers;
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        Gate g = *it;
        if (gate_is_rotation(g.kind)) {
            g.angle = -g.angle;
        } else if (g.kind == GateKind::SX) {
            g.kind = GateKind::RX;
            g.angle = -std::numbers::pi / 2.0; // inverse up to global phase
        }
        out.gates.push_back(std::move(g));
    }
    return out;
}

std::string dump(const Circuit& c) {
    std::ostringstream os;
    char buf[64];
    for (const auto& g : c.gates) {
        os << gate_name(g.kind);
        for (int q : g.qubits) os << ' ' << q;
        if (gate_is_rotation(g.kind)) {
            std::snprintf(buf, sizeof buf, "%.17g", g.angle);
            if (g.param >= 0) {
                os << ' ' << buf << "*$" << c.parameters[static_cast<std::size_t>(g.param)];
            } else {
                os << ' ' << buf;
            }
        }
        os << '\n';
    }
    return os.str();
}

} // namespace qforge
