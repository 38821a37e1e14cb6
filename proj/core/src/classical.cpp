// SPDX-License-Identifier: Apache-2.0
#include "qforge/classical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <string>

#include "qforge/errors.hpp"

namespace qforge {

namespace {

void check_enumerable(const Graph& g, const char* who) {
    if (g.vertex_count > 26) {
        throw SizeError(std::string(who) + ": graph too large for exhaustive enumeration (" +
                        std::to_string(g.vertex_count) + " vertices)");
    }
}

template <typename Objective>
SubsetOptima best_subsets(const Graph& g, bool maximize, Objective obj) {
    SubsetOptima out;
    bool first = true;
    const VertexMask count = VertexMask{1} << g.vertex_count;
    for (VertexMask s = 0; s < count; ++s) {
        auto v = obj(s);
        if (!v) continue;
        if (first || (maximize ? *v > out.value : *v < out.value)) {
            out.value = *v;
            out.sets.clear();
            out.sets.insert(s);
            first = false;
        } else if (*v == out.value) {
            out.sets.insert(s);
        }
    }
    return out;
}

} // namespace

int cut_value(const Graph& g, VertexMask side) {
    int cut = 0;
    for (const auto& [u, v] : g.edges) {
        if (((side >> u) & 1u) != ((side >> v) & 1u)) ++cut;
    }
    return cut;
}

bool is_independent_set(const Graph& g, VertexMask subset) {
    for (const auto& [u, v] : g.edges) {
        if ((subset >> u & 1u) && (subset >> v & 1u)) return false;
    }
    return true;
}

bool is_vertex_cover(const Graph& g, VertexMask subset) {
    for (const auto& [u, v] : g.edges) {
        if (!(subset >> u & 1u) && !(subset >> v & 1u)) return false;
    }
    return true;
}

bool is_clique(const Graph& g, VertexMask subset) {
    for (int u = 0; u < g.vertex_count; ++u) {
        if (!(subset >> u & 1u)) continue;
        for (int v = u + 1; v < g.vertex_count; ++v) {
            if ((subset >> v & 1u) && !g.has_edge(u, v)) return false;
        }
    }
    return true;
}

SubsetOptima max_cut_bruteforce(const Graph& g) {
    check_enumerable(g, "max_cut_bruteforce");
    return best_subsets(g, true, [&](VertexMask s) { return std::optional<int>(cut_value(g, s)); });
}

SubsetOptima max_independent_set_bruteforce(const Graph& g) {
    check_enumerable(g, "max_independent_set_bruteforce");
    return best_subsets(g, true, [&](VertexMask s) -> std::optional<int> {
        if (!is_independent_set(g, s)) return std::nullopt;
        return static_cast<int>(std::popcount(s & ((VertexMask{1} << g.vertex_count) - 1)));
    });
}

SubsetOptima min_vertex_cover_bruteforce(const Graph& g) {
    check_enumerable(g, "min_vertex_cover_bruteforce");
    return best_subsets(g, false, [&](VertexMask s) -> std::optional<int> {
        if (!is_vertex_cover(g, s)) return std::nullopt;
        return static_cast<int>(std::popcount(s));
    });
}

SubsetOptima max_clique_bruteforce(const Graph& g) {
    check_enumerable(g, "max_clique_bruteforce");
    return best_subsets(g, true, [&](VertexMask s) -> std::optional<int> {
        if (!is_clique(g, s)) return std::nullopt;
        return static_cast<int>(std::popcount(s));
    });
}

std::vector<std::vector<int>> proper_colorings(const Graph& g, int k) {
    check_enumerable(g, "proper_colorings");
    std::vector<std::vector<int>> out;
    std::vector<int> coloring(static_cast<std::size_t>(g.vertex_count), 0);
    // Odometer over k^n assignments.
    while (true) {
        bool proper = true;
        for (const auto& [u, v] : g.edges) {
            if (coloring[static_cast<std::size_t>(u)] == coloring[static_cast<std::size_t>(v)]) {
                proper = false;
                break;
            }
        }
        if (proper) out.push_back(coloring);
        int pos = 0;
        while (pos < g.vertex_count && ++coloring[static_cast<std::size_t>(pos)] == k) {
            coloring[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == g.vertex_count) break;
    }
    return out;
}

std::vector<int> canonical_tour(const std::vector<int>& tour) {
    const std::size_t n = tour.size();
    std::size_t start = 0;
    while (start < n && tour[start] != 0) ++start;
    std::vector<int> fwd(n), bwd(n);
    for (std::size_t i = 0; i < n; ++i) {
        fwd[i] = tour[(start + i) % n];
        bwd[i] = tour[(start + n - i) % n];
    }
    return fwd <= bwd ? fwd : bwd;
}

double tour_length(const Graph& g, const std::vector<int>& tour) {
    double len = 0.0;
    for (std::size_t i = 0; i < tour.size(); ++i) {
        auto w = g.weight(tour[i], tour[(i + 1) % tour.size()]);
        if (!w) throw ShapeError("tour_length: missing edge weight");
        len += *w;
    }
    return len;
}

TourOptima best_tours_bruteforce(const Graph& g) {
    const int n = g.vertex_count;
    if (n < 3 || n > 10) throw SizeError("best_tours_bruteforce: needs 3 <= n <= 10 vertices");
    std::vector<int> rest;
    for (int v = 1; v < n; ++v) rest.push_back(v);

    TourOptima out;
    bool first = true;
    std::sort(rest.begin(), rest.end());
    do {
        std::vector<int> tour{0};
        tour.insert(tour.end(), rest.begin(), rest.end());
        const double len = tour_length(g, tour);
        if (first || len < out.length - 1e-9) {
            out.length = len;
            out.tours.clear();
            out.tours.insert(canonical_tour(tour));
            first = false;
        } else if (std::abs(len - out.length) <= 1e-9) {
            out.tours.insert(canonical_tour(tour));
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

FactorOptima best_factor_pairs(long long n, int register_bits) {
    const long long count = 1LL << register_bits;
    FactorOptima out;
    bool first = true;
    for (long long pm = 0; pm < count; ++pm) {
        long long p = 1;
        for (int i = 1; i <= register_bits; ++i) {
            if (pm >> (i - 1) & 1) p += 1LL << i;
        }
        for (long long qm = 0; qm < count; ++qm) {
            long long q = 1;
            for (int j = 1; j <= register_bits; ++j) {
                if (qm >> (j - 1) & 1) q += 1LL << j;
            }
            const long long d = n - p * q;
            const long long cost = d * d;
            if (first || cost < out.best_cost) {
                out.best_cost = cost;
                out.pairs.clear();
                out.pairs.insert({p, q});
                first = false;
            } else if (cost == out.best_cost) {
                out.pairs.insert({p, q});
            }
        }
    }
    return out;
}

} // namespace qforge
