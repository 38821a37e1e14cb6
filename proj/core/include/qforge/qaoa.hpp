// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <tuple>
#include <vector>

#include "qforge/circuit.hpp"
#include "qforge/qubo.hpp"

namespace qforge {

/// Ising cost form of a QUBO under x = (1 - z) / 2: couplings are stored
/// sparsely as (i, k, j_ik) with i < k in lexicographic order.
struct IsingForm {
    std::vector<double> h;                            // per-qubit linear coefficients
    std::vector<std::tuple<int, int, double>> couplings;
    double constant = 0.0;

    /// Energy at a spin configuration given as the binary assignment x
    /// (z_i = 1 - 2 x_i).
    double energy(const Assignment& x) const;
};

IsingForm ising_from_qubo(const Qubo& q);

/// Parametric QAOA circuit: H on every qubit, then `layers` repetitions of
/// cost phases (RZ(2*gamma_l*h_i) on qubits with h_i != 0, RZZ(2*gamma_l*j_ik)
/// on coupled pairs) followed by the RX(2*beta_l) mixer on every qubit.
/// Parameter slots are named gamma1..gammaP, beta1..betaP.
Circuit qaoa_circuit(const Qubo& q, int layers);

/// Bound copy for concrete per-layer angles (sizes must equal the layer count).
Circuit bind_qaoa(const Circuit& c, const std::vector<double>& gammas,
                  const std::vector<double>& betas);

} // namespace qforge
