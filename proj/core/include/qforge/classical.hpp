// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "qforge/graph.hpp"

namespace qforge {

// Exhaustive combinatorial solvers over the problem domain itself (subsets,
// colorings, tours, factor pairs). They never touch QUBO matrices, so they
// serve as the independent route against the encoder + brute_force_minimum
// path, and they back the approximation-ratio fields in reports.

using VertexMask = std::uint64_t; // bit v = vertex v in the subset

/// Unweighted cut size of the bipartition (mask side vs rest).
int cut_value(const Graph& g, VertexMask side);
bool is_independent_set(const Graph& g, VertexMask subset);
bool is_vertex_cover(const Graph& g, VertexMask subset);
bool is_clique(const Graph& g, VertexMask subset);

struct SubsetOptima {
    int value = 0;               // optimal objective (cut size / set size / cover size)
    std::set<VertexMask> sets;   // every optimal subset
};

SubsetOptima max_cut_bruteforce(const Graph& g);
SubsetOptima max_independent_set_bruteforce(const Graph& g);
SubsetOptima min_vertex_cover_bruteforce(const Graph& g);
SubsetOptima max_clique_bruteforce(const Graph& g);

/// All proper k-colorings, each as a per-vertex color vector; empty when the
/// graph is not k-colorable.
std::vector<std::vector<int>> proper_colorings(const Graph& g, int k);

/// Tour canonicalized up to rotation and reflection: starts at vertex 0 and
/// takes the direction with the smaller second vertex.
std::vector<int> canonical_tour(const std::vector<int>& tour);
double tour_length(const Graph& g, const std::vector<int>& tour);

struct TourOptima {
    double length = 0.0;
    std::set<std::vector<int>> tours; // canonical forms
};

/// Exhaustive Hamiltonian-tour minimum over a complete weighted graph.
TourOptima best_tours_bruteforce(const Graph& g);

struct FactorOptima {
    long long best_cost = 0; // min (n - p*q)^2 over representable pairs
    std::set<std::pair<long long, long long>> pairs;
};

/// Enumerates every ordered pair (p, q) with p, q in {1 + sum_{i=1..a} 2^i b_i}
/// and keeps the minimizers of (n - p*q)^2; cost 0 means exact factorization.
FactorOptima best_factor_pairs(long long n, int register_bits);

} // namespace qforge
