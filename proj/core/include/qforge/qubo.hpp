// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qforge {

/// Semantic meaning of one QUBO variable; decoding inverts this map.
struct VarLabel {
    enum class Kind { Vertex, VertexColor, VertexPosition, FactorP, FactorQ, FactorAncilla };
    Kind kind = Kind::Vertex;
    int i = 0; // vertex / bit index (first ancilla index for FactorAncilla)
    int j = 0; // color / tour position / second ancilla index

    std::string text() const;
    bool operator==(const VarLabel&) const = default;
};

/// Quantum-Compatible Format for the optimization families: minimize
/// x^T q x + offset over binary vectors x, with q exactly symmetric.
struct Qubo {
    int dim = 0;
    std::vector<double> q; // row-major dim x dim, symmetric
    double offset = 0.0;
    std::vector<VarLabel> var_labels; // size == dim

    double& at(int r, int c) { return q[static_cast<std::size_t>(r) * dim + c]; }
    double at(int r, int c) const { return q[static_cast<std::size_t>(r) * dim + c]; }

    /// Adds v to entry (r, c), mirrored to keep q symmetric.
    void add(int r, int c, double v);

    /// JSON debug dump {dim, matrix (row-major), offset, labels} for golden tests.
    std::string dump_json() const;
};

using Assignment = std::vector<std::uint8_t>; // binary vector, length == dim

/// Nonzero terms flattened once so 2^dim scans stay cheap on sparse matrices.
struct QuboTerms {
    std::vector<std::pair<int, double>> diagonal;            // (i, q_ii)
    std::vector<std::pair<std::pair<int, int>, double>> off; // ((i, j), 2*q_ij), i < j
    double offset = 0.0;

    explicit QuboTerms(const Qubo& q);
    double value_at(std::uint64_t x) const; // bit i of x = variable i
    double terms_at(std::uint64_t x) const; // without the offset
};

struct BruteForceResult {
    double min_value = 0.0;
    std::vector<Assignment> minimizers; // ascending order as binary numbers (bit 0 = index 0)
};

/// x^T q x + offset with a fixed summation order (diagonal then upper
/// triangle, row-major). Throws DimensionError on length mismatch.
double evaluate(const Qubo& q, const Assignment& x);

/// Exhaustive exact minimum and every attaining assignment. Guarded to
/// dim <= 24 (SizeError above); ties are collected within 1e-6 absolute,
/// which is exact for the integral coefficient data used throughout.
BruteForceResult brute_force_minimum(const Qubo& q);

/// Assignment for the basis-state index (bit i of `index` = variable i).
Assignment assignment_from_index(std::uint64_t index, int dim);
std::uint64_t index_from_assignment(const Assignment& x);

/// Mean of evaluate over all assignments (uniform-superposition expectation),
/// computed in closed form.
double uniform_mean(const Qubo& q);

} // namespace qforge
