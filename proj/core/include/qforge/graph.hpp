// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace qforge {

using Edge = std::pair<int, int>; // always stored with first < second

/// Canonical undirected simple graph. Edges are endpoint-sorted, deduplicated
/// and kept in lexicographic order; `weights`, when non-empty, is parallel to
/// `edges`.
struct Graph {
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<double> weights;

    bool weighted() const { return !weights.empty(); }
    bool has_edge(int u, int v) const;
    std::optional<double> weight(int u, int v) const;
    std::vector<int> degrees() const;

    bool operator==(const Graph&) const = default;
};

/// Graph on the same vertices whose edges are exactly the non-edges of g.
Graph complement(const Graph& g);

/// True when every vertex pair is connected.
bool is_complete(const Graph& g);

/// Seeded random d-regular graph via the pairing model with whole-pairing
/// rejection of self-loops and multi-edges. Requires n*degree even and
/// degree < n.
Graph random_regular_graph(int n, int degree, std::uint64_t seed);

} // namespace qforge
