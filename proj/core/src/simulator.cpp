// SPDX-License-Identifier: Apache-2.0
#include "qforge/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qforge/errors.hpp"
#include "qforge/rng.hpp"

namespace qforge {

namespace {

using cd = std::complex<double>;

void apply_1q(std::vector<cd>& amp, int q, const cd m00, const cd m01, const cd m10, const cd m11) {
    const std::uint64_t mask = 1ULL << q;
    const std::uint64_t half = amp.size() >> 1;
    const std::uint64_t lo_mask = mask - 1;
    for (std::uint64_t i = 0; i < half; ++i) {
        const std::uint64_t i0 = ((i & ~lo_mask) << 1) | (i & lo_mask);
        const std::uint64_t i1 = i0 | mask;
        const cd a0 = amp[i0], a1 = amp[i1];
        amp[i0] = m00 * a0 + m01 * a1;
        amp[i1] = m10 * a0 + m11 * a1;
    }
}

void apply_x(std::vector<cd>& amp, int q) {
    const std::uint64_t mask = 1ULL << q;
    const std::uint64_t half = amp.size() >> 1;
    const std::uint64_t lo_mask = mask - 1;
    for (std::uint64_t i = 0; i < half; ++i) {
        const std::uint64_t i0 = ((i & ~lo_mask) << 1) | (i & lo_mask);
        std::swap(amp[i0], amp[i0 | mask]);
    }
}

void apply_cx(std::vector<cd>& amp, int control, int target) {
    const std::uint64_t cmask = 1ULL << control;
    const std::uint64_t tmask = 1ULL << target;
    for (std::uint64_t i = 0; i < amp.size(); ++i) {
        if ((i & cmask) && !(i & tmask)) std::swap(amp[i], amp[i | tmask]);
    }
}

void apply_ccx(std::vector<cd>& amp, int c1, int c2, int target) {
    const std::uint64_t cmask = (1ULL << c1) | (1ULL << c2);
    const std::uint64_t tmask = 1ULL << target;
    for (std::uint64_t i = 0; i < amp.size(); ++i) {
        if (((i & cmask) == cmask) && !(i & tmask)) std::swap(amp[i], amp[i | tmask]);
    }
}

void apply_swap(std::vector<cd>& amp, int a, int b) {
    const std::uint64_t amask = 1ULL << a;
    const std::uint64_t bmask = 1ULL << b;
    for (std::uint64_t i = 0; i < amp.size(); ++i) {
        if ((i & amask) && !(i & bmask)) std::swap(amp[i], amp[(i & ~amask) | bmask]);
    }
}

void apply_rz(std::vector<cd>& amp, int q, double theta) {
    const cd e_minus = std::polar(1.0, -theta / 2.0);
    const cd e_plus = std::polar(1.0, theta / 2.0);
    const std::uint64_t mask = 1ULL << q;
    for (std::uint64_t i = 0; i < amp.size(); ++i) {
        amp[i] *= (i & mask) ? e_plus : e_minus;
    }
}

void apply_rzz(std::vector<cd>& amp, int a, int b, double theta) {
    const cd e_minus = std::polar(1.0, -theta / 2.0); // equal bits
    const cd e_plus = std::polar(1.0, theta / 2.0);   // unequal bits
    const std::uint64_t amask = 1ULL << a;
    const std::uint64_t bmask = 1ULL << b;
    for (std::uint64_t i = 0; i < amp.size(); ++i) {
        const bool equal = static_cast<bool>(i & amask) == static_cast<bool>(i & bmask);
        amp[i] *= equal ? e_minus : e_plus;
    }
}

void apply_gate(std::vector<cd>& amp, const Gate& g) {
    switch (g.kind) {
    case GateKind::X:
        apply_x(amp, g.qubits[0]);
        break;
    case GateKind::H: {
        const double s = 1.0 / std::sqrt(2.0);
        apply_1q(amp, g.qubits[0], {s, 0}, {s, 0}, {s, 0}, {-s, 0});
        break;
    }
    case GateKind::SX:
        // sqrt(X) = 1/2 [[1+i, 1-i], [1-i, 1+i]]
        apply_1q(amp, g.qubits[0], {0.5, 0.5}, {0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5});
        break;
    case GateKind::RX: {
        const double c = std::cos(g.angle / 2.0);
        const double s = std::sin(g.angle / 2.0);
        apply_1q(amp, g.qubits[0], {c, 0}, {0, -s}, {0, -s}, {c, 0});
        break;
    }
    case GateKind::RZ:
        apply_rz(amp, g.qubits[0], g.angle);
        break;
    case GateKind::RZZ:
        apply_rzz(amp, g.qubits[0], g.qubits[1], g.angle);
        break;
    case GateKind::CX:
        apply_cx(amp, g.qubits[0], g.qubits[1]);
        break;
    case GateKind::CCX:
        apply_ccx(amp, g.qubits[0], g.qubits[1], g.qubits[2]);
        break;
    case GateKind::Swap:
        apply_swap(amp, g.qubits[0], g.qubits[1]);
        break;
    }
}

double norm_squared(const std::vector<cd>& amp) {
    double n = 0.0;
    for (const cd& a : amp) n += std::norm(a);
    return n;
}

} // namespace

StateVector simulate(const Circuit& c) {
    if (!c.executable()) {
        throw UnboundParameterError("simulate: circuit has free parameters");
    }
    if (c.qubit_count < 1 || c.qubit_count > 22) {
        throw SizeError("simulate: qubit count " + std::to_string(c.qubit_count) +
                        " outside the supported range [1, 22]");
    }
    StateVector s;
    s.qubit_count = c.qubit_count;
    s.amplitudes.assign(1ULL << c.qubit_count, cd{0.0, 0.0});
    s.amplitudes[0] = cd{1.0, 0.0};
    for (const Gate& g : c.gates) {
        apply_gate(s.amplitudes, g);
        if (std::abs(norm_squared(s.amplitudes) - 1.0) > 1e-10) {
            throw std::logic_error("simulate: state norm drifted beyond 1e-10 after gate " +
                                   std::string(gate_name(g.kind)));
        }
    }
    return s;
}

Histogram sample(const StateVector& s, long long shots, std::uint64_t seed) {
    if (shots < 1) throw InputError("sample: shots must be >= 1");
    std::vector<double> cumulative(s.amplitudes.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
        acc += std::norm(s.amplitudes[i]);
        cumulative[i] = acc;
    }

    Histogram h;
    h.shots = shots;
    h.seed = seed;
    h.qubit_count = s.qubit_count;
    for (long long shot = 0; shot < shots; ++shot) {
        const double u = counter_uniform(seed, static_cast<std::uint64_t>(shot)) * acc;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::uint64_t idx = static_cast<std::uint64_t>(it - cumulative.begin());
        if (idx >= s.amplitudes.size()) idx = s.amplitudes.size() - 1;
        ++h.counts[bitstring_of_index(idx, s.qubit_count)];
    }
    return h;
}

double expectation_qubo(const StateVector& s, const Qubo& q) {
    if (q.dim != s.qubit_count) {
        throw DimensionError("expectation_qubo: qubo dim " + std::to_string(q.dim) +
                             " != state qubits " + std::to_string(s.qubit_count));
    }
    // The offset enters exactly once so a flat landscape evaluates to the
    // offset bit-exactly, independent of rounding in the state norm.
    const QuboTerms terms(q);
    double e = 0.0;
    for (std::uint64_t x = 0; x < s.amplitudes.size(); ++x) {
        const double p = std::norm(s.amplitudes[x]);
        if (p > 0.0) e += p * terms.terms_at(x);
    }
    return q.offset + e;
}

std::string bitstring_of_index(std::uint64_t index, int qubit_count) {
    std::string bits(static_cast<std::size_t>(qubit_count), '0');
    for (int i = 0; i < qubit_count; ++i) {
        if (index >> i & 1u) bits[static_cast<std::size_t>(i)] = '1';
    }
    return bits;
}

std::uint64_t index_of_bitstring(const std::string& bits) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') idx |= 1ULL << i;
    }
    return idx;
}

} // namespace qforge
