// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qforge/circuit.hpp"

namespace qforge {

// Reversible arithmetic over X/CX/CCX with modular (wraparound) semantics:
// the final carry is dropped and results are taken mod 2^n. Register layout
// is a[0..n), b[0..n), then (for the multiplier) product[0..2n), and one
// carry ancilla restored to |0> on every classical input.

/// Ripple-carry adder (majority/unmajority ladder): |a>|b>|0> -> |a>|(a+b) mod 2^n>|0>.
/// 1 <= n <= 8.
Circuit adder_circuit(int bits);

/// Adder conjugated by X on the b register: |a>|b> -> |a>|(b-a) mod 2^n>
/// (two's-complement convention). 1 <= n <= 8.
Circuit subtractor_circuit(int bits);

/// Shift-and-add multiplier: |a>|b>|0> -> |a>|b>|a*b>, product register 2n
/// bits wide, built from n ripple-carry additions controlled on the b bits.
/// 1 <= n <= 3.
Circuit multiplier_circuit(int bits);

/// Copy with X-gate preparation of the classical operands prepended to the
/// input registers.
Circuit with_classical_inputs(const Circuit& c, long long a, long long b);

} // namespace qforge
