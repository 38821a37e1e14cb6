// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qforge/circuit.hpp"
#include "qforge/rng.hpp"

namespace qforge::test {

using cd = std::complex<double>;

// Textbook gate matrices, column-major action on basis kets (m[row][col]).
inline std::vector<std::vector<cd>> gate_matrix(GateKind kind, double theta = 0.0) {
    const double s = 1.0 / std::sqrt(2.0);
    const cd i{0.0, 1.0};
    switch (kind) {
    case GateKind::X:
        return {{0, 1}, {1, 0}};
    case GateKind::H:
        return {{s, s}, {s, -s}};
    case GateKind::SX:
        return {{cd{0.5, 0.5}, cd{0.5, -0.5}}, {cd{0.5, -0.5}, cd{0.5, 0.5}}};
    case GateKind::RX: {
        const double c = std::cos(theta / 2.0), sn = std::sin(theta / 2.0);
        return {{c, -i * sn}, {-i * sn, c}};
    }
    case GateKind::RZ:
        return {{std::polar(1.0, -theta / 2.0), 0}, {0, std::polar(1.0, theta / 2.0)}};
    case GateKind::RZZ: {
        // basis order |q1 q0>: 00, 01, 10, 11 with qubit0 = LSB
        const cd em = std::polar(1.0, -theta / 2.0), ep = std::polar(1.0, theta / 2.0);
        return {{em, 0, 0, 0}, {0, ep, 0, 0}, {0, 0, ep, 0}, {0, 0, 0, em}};
    }
    case GateKind::CX:
        // control = qubit a (bit 0 of the index pair), target = qubit b
        return {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}};
    case GateKind::Swap:
        return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
    case GateKind::CCX: {
        std::vector<std::vector<cd>> m(8, std::vector<cd>(8, 0));
        for (int col = 0; col < 8; ++col) {
            int row = col;
            if ((col & 1) && (col & 2)) row = col ^ 4; // both controls set: flip target
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 1;
        }
        return m;
    }
    }
    return {};
}

/// Seeded random executable circuit over the full IR alphabet.
inline Circuit random_circuit(int qubits, int gates, std::uint64_t seed) {
    static const std::array<GateKind, 9> kinds = {GateKind::X,  GateKind::H,   GateKind::SX,
                                                  GateKind::CX, GateKind::CCX, GateKind::Swap,
                                                  GateKind::RX, GateKind::RZ,  GateKind::RZZ};
    Rng rng(seed);
    Circuit c;
    c.qubit_count = qubits;
    int emitted = 0;
    while (emitted < gates) {
        const GateKind kind = kinds[static_cast<std::size_t>(rng.next_below(kinds.size()))];
        const int arity = gate_arity(kind);
        if (arity > qubits) continue;
        std::vector<int> qs;
        while (static_cast<int>(qs.size()) < arity) {
            int q = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(qubits)));
            bool dup = false;
            for (int existing : qs) dup = dup || existing == q;
            if (!dup) qs.push_back(q);
        }
        const double angle = gate_is_rotation(kind) ? (rng.next_double() * 2.0 - 1.0) * 3.0 : 0.0;
        c.add(kind, qs, angle);
        ++emitted;
    }
    return c;
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& content) {
    std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    out << content;
}

/// Fresh scratch directory under the build tree.
inline std::filesystem::path scratch_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("qforge_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace qforge::test
