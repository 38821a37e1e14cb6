// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qforge/circuit.hpp"
#include "qforge/qubo.hpp"

namespace qforge {

/// Exact statevector; qubit 0 is the least-significant bit of the basis
/// index, and bitstrings render qubit i at string position i.
struct StateVector {
    int qubit_count = 0;
    std::vector<std::complex<double>> amplitudes; // size 2^qubit_count

    double probability(std::uint64_t basis_index) const {
        return std::norm(amplitudes[basis_index]);
    }
};

struct Histogram {
    std::map<std::string, long long> counts; // bitstring -> count, keys sorted
    long long shots = 0;
    std::uint64_t seed = 0;
    int qubit_count = 0;
};

/// Exact state after applying the gates in order from |0...0>. Requires an
/// executable circuit and qubit_count <= 22 (~64 MiB of amplitudes); checks
/// that the norm stays within 1e-10 of 1 after every gate.
StateVector simulate(const Circuit& c);

/// Seeded multinomial draw from |amp|^2. The generator is counter-based
/// (value depends only on (seed, shot index)), so identical inputs give
/// bit-identical histograms on every platform.
Histogram sample(const StateVector& s, long long shots, std::uint64_t seed);

/// sum_x |amp_x|^2 * evaluate(q, x) over the full state.
double expectation_qubo(const StateVector& s, const Qubo& q);

std::string bitstring_of_index(std::uint64_t index, int qubit_count);
std::uint64_t index_of_bitstring(const std::string& bits);

} // namespace qforge
