// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qforge/graph.hpp"
#include "qforge/qubo.hpp"

namespace qforge {

// QUBO encoders for the optimization families. All matrices are exactly
// symmetric and follow the minimization convention value(x) = x^T q x + offset.

namespace penalty_defaults {
inline constexpr double kSubsetFamilies = 2.0; // MIS, Clique, VertexCover
inline constexpr double kKColoring = 1.0;
// TSP default is instance-dependent: n * max_weight + 1.
double tsp(const Graph& g);
} // namespace penalty_defaults

/// value(x) = -cut(x); dim = vertex_count.
Qubo qubo_maxcut(const Graph& g);

/// value(x) = -sum_i x_i + penalty * sum_{(i,j) in E} x_i x_j; penalty > 1.
Qubo qubo_mis(const Graph& g, double penalty = penalty_defaults::kSubsetFamilies);

/// value(x) = sum_i x_i + penalty * sum_{(i,j) in E} (1-x_i)(1-x_j); penalty > 1.
Qubo qubo_vertex_cover(const Graph& g, double penalty = penalty_defaults::kSubsetFamilies);

/// MIS on the complement graph; minimizers are maximum cliques of g.
Qubo qubo_clique(const Graph& g, double penalty = penalty_defaults::kSubsetFamilies);

/// One-hot coloring variables x_{v,c}; minimum 0 iff g is k-colorable.
Qubo qubo_kcoloring(const Graph& g, int k, double penalty = penalty_defaults::kKColoring);

/// Position one-hot tour variables x_{v,t} over a complete weighted graph;
/// penalty must exceed n * max_weight.
Qubo qubo_tsp(const Graph& g, double penalty);
Qubo qubo_tsp(const Graph& g); // default penalty n * max_weight + 1

/// Factorization QUBO: cost (n - p*q)^2 with products quadratized through one
/// Rosenberg ancilla per p_i q_j pair (penalty weight n^2). Ground-state value
/// is 0 exactly when the decoded pair multiplies to n. n must be odd, >= 9.
Qubo qubo_factor(long long n);

/// Bit width used for each factor register of qubo_factor(n): p and q range
/// over 1 + sum_{i=1..a} 2^i b_i.
int factor_register_bits(long long n);

} // namespace qforge
