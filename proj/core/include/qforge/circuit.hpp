// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

namespace qforge {

enum class GateKind { X, H, SX, CX, CCX, Swap, RX, RZ, RZZ };

const char* gate_name(GateKind k);
int gate_arity(GateKind k);
bool gate_is_rotation(GateKind k); // RX / RZ / RZZ carry an angle

/// One gate instruction. Rotations either carry a bound angle or reference a
/// named parameter slot (param >= 0, index into Circuit::parameters); in the
/// parametric case `angle` holds a scale factor and binding sets the final
/// angle to scale * value (QAOA cost gates rotate by 2*gamma*coefficient).
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<int> qubits; // distinct indices, size == gate_arity(kind)
    double angle = 0.0;      // radians when bound, scale factor while parametric
    int param = -1;          // parameter slot, -1 when bound

    bool bound() const { return param < 0; }
    bool operator==(const Gate&) const = default;
};

enum class RegisterRole { InputA, InputB, Carry, Product, Qaoa };

/// Named contiguous qubit range; qubit `start + i` is bit i of the register.
struct Register {
    std::string name;
    RegisterRole role = RegisterRole::Qaoa;
    int start = 0;
    int size = 0;

    bool operator==(const Register&) const = default;
};

struct Circuit {
    int qubit_count = 0;
    std::vector<Gate> gates;
    std::vector<std::string> parameters; // named slots; empty means executable
    std::vector<Register> registers;

    bool executable() const { return parameters.empty(); }
    const Register* find_register(RegisterRole role) const;

    void add(GateKind kind, std::vector<int> qubits, double angle = 0.0, int param = -1);

    int count_1q() const;
    int count_2q() const; // SWAP counted as 3 two-qubit gates
    int count(GateKind k) const;

    bool operator==(const Circuit&) const = default;
};

/// Substitutes every parameter slot; throws UnboundParameterError when a slot
/// is missing from `values`. Binding an already-bound circuit is the identity.
Circuit bind(const Circuit& c, const std::map<std::string, double>& values);

/// Gate-wise inverse (reversed order, angles negated, SX lowered to RX(-pi/2)).
Circuit inverted(const Circuit& c);

/// Line-oriented debug dump, one gate per line: `RZZ 0 1 1.5707963267948966`.
std::string dump(const Circuit& c);

} // namespace qforge
