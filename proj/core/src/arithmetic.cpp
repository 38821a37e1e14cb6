// SPDX-License-Identifier: Apache-2.0
#include "qforge/arithmetic.hpp"

#include <string>

#include "qforge/errors.hpp"

namespace qforge {

namespace {

void check_bits(int bits, int max_bits, const char* who) {
    if (bits < 1 || bits > max_bits) {
        throw SizeError(std::string(who) + ": bit width must be in [1, " + std::to_string(max_bits) +
                        "], got " + std::to_string(bits));
    }
}

// Cuccaro ladder pieces. x carries the incoming carry, t is the sum target,
// y is the addend bit (the carry rides on y afterwards).
void maj(Circuit& c, int x, int t, int y) {
    c.add(GateKind::CX, {y, t});
    c.add(GateKind::CX, {y, x});
    c.add(GateKind::CCX, {x, t, y});
}

void uma(Circuit& c, int x, int t, int y) {
    c.add(GateKind::CCX, {x, t, y});
    c.add(GateKind::CX, {y, x});
    c.add(GateKind::CX, {x, t});
}

// Controlled ladder: only the gates that write the sum target are promoted
// to an extra control, which makes the uncontrolled remainder telescope to
// the identity when ctrl is off.
void cmaj(Circuit& c, int ctrl, int x, int t, int y) {
    c.add(GateKind::CCX, {ctrl, y, t});
    c.add(GateKind::CX, {y, x});
    c.add(GateKind::CCX, {x, t, y});
}

void cuma(Circuit& c, int ctrl, int x, int t, int y) {
    c.add(GateKind::CCX, {x, t, y});
    c.add(GateKind::CX, {y, x});
    c.add(GateKind::CCX, {ctrl, x, t});
}

} // namespace

Circuit adder_circuit(int bits) {
    check_bits(bits, 8, "adder_circuit");
    const int n = bits;
    Circuit c;
    c.qubit_count = 2 * n + 1;
    c.registers = {
        Register{"a", RegisterRole::InputA, 0, n},
        Register{"b", RegisterRole::InputB, n, n},
        Register{"carry", RegisterRole::Carry, 2 * n, 1},
    };
    const int carry = 2 * n;
    auto a = [](int i) { return i; };
    auto b = [n](int i) { return n + i; };

    for (int i = 0; i < n; ++i) maj(c, i == 0 ? carry : a(i - 1), b(i), a(i));
    // Modular convention: the top carry is dropped, no carry-out write.
    for (int i = n - 1; i >= 0; --i) uma(c, i == 0 ? carry : a(i - 1), b(i), a(i));
    return c;
}

Circuit subtractor_circuit(int bits) {
    check_bits(bits, 8, "subtractor_circuit");
    Circuit c = adder_circuit(bits);
    Circuit out;
    out.qubit_count = c.qubit_count;
    out.registers = c.registers;
    const Register* breg = out.find_register(RegisterRole::InputB);
    for (int i = 0; i < breg->size; ++i) out.add(GateKind::X, {breg->start + i});
    out.gates.insert(out.gates.end(), c.gates.begin(), c.gates.end());
    for (int i = 0; i < breg->size; ++i) out.add(GateKind::X, {breg->start + i});
    return out;
}

Circuit multiplier_circuit(int bits) {
    check_bits(bits, 3, "multiplier_circuit");
    const int n = bits;
    Circuit c;
    c.qubit_count = 4 * n + 1;
    c.registers = {
        Register{"a", RegisterRole::InputA, 0, n},
        Register{"b", RegisterRole::InputB, n, n},
        Register{"product", RegisterRole::Product, 2 * n, 2 * n},
        Register{"carry", RegisterRole::Carry, 4 * n, 1},
    };
    const int carry = 4 * n;
    auto a = [](int i) { return i; };
    auto b = [n](int i) { return n + i; };
    auto p = [n](int i) { return 2 * n + i; };

    // product += (a << k) when b_k is set; the carry out of the top slice bit
    // lands in product[k+n], which is still zero at that point.
    for (int k = 0; k < n; ++k) {
        const int ctrl = b(k);
        for (int i = 0; i < n; ++i) cmaj(c, ctrl, i == 0 ? carry : a(i - 1), p(k + i), a(i));
        c.add(GateKind::CCX, {ctrl, a(n - 1), p(k + n)});
        for (int i = n - 1; i >= 0; --i) cuma(c, ctrl, i == 0 ? carry : a(i - 1), p(k + i), a(i));
    }
    return c;
}

Circuit with_classical_inputs(const Circuit& c, long long a, long long b) {
    Circuit out;
    out.qubit_count = c.qubit_count;
    out.registers = c.registers;
    out.parameters = c.parameters;
    const Register* areg = c.find_register(RegisterRole::InputA);
    const Register* breg = c.find_register(RegisterRole::InputB);
    if (!areg || !breg) throw InputError("with_classical_inputs: circuit lacks input registers");
    for (int i = 0; i < areg->size; ++i) {
        if (a >> i & 1) out.add(GateKind::X, {areg->start + i});
    }
    for (int i = 0; i < breg->size; ++i) {
        if (b >> i & 1) out.add(GateKind::X, {breg->start + i});
    }
    out.gates.insert(out.gates.end(), c.gates.begin(), c.gates.end());
    return out;
}

} // namespace qforge
