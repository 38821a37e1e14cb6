// SPDX-License-Identifier: Apache-2.0
#include "qforge/graph.hpp"

#include <algorithm>
#include <set>

#include "qforge/errors.hpp"
#include "qforge/rng.hpp"

namespace qforge {

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    Edge e{std::min(u, v), std::max(u, v)};
    return std::binary_search(edges.begin(), edges.end(), e);
}

std::optional<double> Graph::weight(int u, int v) const {
    if (weights.empty()) return std::nullopt;
    Edge e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) return std::nullopt;
    return weights[static_cast<std::size_t>(it - edges.begin())];
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(vertex_count), 0);
    for (const auto& [u, v] : edges) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    return deg;
}

Graph complement(const Graph& g) {
    Graph c;
    c.vertex_count = g.vertex_count;
    for (int u = 0; u < g.vertex_count; ++u) {
        for (int v = u + 1; v < g.vertex_count; ++v) {
            if (!g.has_edge(u, v)) c.edges.emplace_back(u, v);
        }
    }
    return c;
}

bool is_complete(const Graph& g) {
    const long n = g.vertex_count;
    return static_cast<long>(g.edges.size()) == n * (n - 1) / 2;
}

Graph random_regular_graph(int n, int degree, std::uint64_t seed) {
    if (n <= degree || (static_cast<long>(n) * degree) % 2 != 0) {
        throw InputError("random_regular_graph: need degree < n and n*degree even, got n=" +
                         std::to_string(n) + " degree=" + std::to_string(degree));
    }
    Rng rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(degree));
        for (int v = 0; v < n; ++v) {
            for (int d = 0; d < degree; ++d) stubs.push_back(v);
        }
        rng.shuffle(stubs);

        std::set<Edge> edge_set;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) { ok = false; break; }
            Edge e{std::min(u, v), std::max(u, v)};
            if (!edge_set.insert(e).second) { ok = false; break; }
        }
        if (!ok) continue;

        Graph g;
        g.vertex_count = n;
        g.edges.assign(edge_set.begin(), edge_set.end());
        return g;
    }
    throw InputError("random_regular_graph: pairing model failed to converge");
}

} // namespace qforge
