// SPDX-License-Identifier: Apache-2.0
#include "qforge/encoders.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qforge/errors.hpp"

namespace qforge {

namespace {

Qubo make_qubo(int dim) {
    Qubo q;
    q.dim = dim;
    q.q.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0.0);
    q.var_labels.resize(static_cast<std::size_t>(dim));
    return q;
}

void require_penalty_above(double penalty, double bound, const char* who) {
    if (!(penalty > bound)) {
        throw PenaltyError(std::string(who) + ": penalty must exceed " + std::to_string(bound) +
                           ", got " + std::to_string(penalty));
    }
}

void vertex_labels(Qubo& q) {
    for (int i = 0; i < q.dim; ++i) q.var_labels[static_cast<std::size_t>(i)] = {VarLabel::Kind::Vertex, i, 0};
}

} // namespace

namespace penalty_defaults {
double tsp(const Graph& g) {
    double max_w = 0.0;
    for (double w : g.weights) max_w = std::max(max_w, w);
    return static_cast<double>(g.vertex_count) * max_w + 1.0;
}
} // namespace penalty_defaults

Qubo qubo_maxcut(const Graph& g) {
    Qubo q = make_qubo(g.vertex_count);
    vertex_labels(q);
    // -cut(x) = sum over edges of (-x_i - x_j + 2 x_i x_j)
    for (const auto& [i, j] : g.edges) {
        q.add(i, i, -1.0);
        q.add(j, j, -1.0);
        q.add(i, j, 2.0);
    }
    return q;
}

Qubo qubo_mis(const Graph& g, double penalty) {
    require_penalty_above(penalty, 1.0, "qubo_mis");
    Qubo q = make_qubo(g.vertex_count);
    vertex_labels(q);
    for (int i = 0; i < g.vertex_count; ++i) q.add(i, i, -1.0);
    for (const auto& [i, j] : g.edges) q.add(i, j, penalty);
    return q;
}

Qubo qubo_vertex_cover(const Graph& g, double penalty) {
    require_penalty_above(penalty, 1.0, "qubo_vertex_cover");
    Qubo q = make_qubo(g.vertex_count);
    vertex_labels(q);
    for (int i = 0; i < g.vertex_count; ++i) q.add(i, i, 1.0);
    // penalty * (1 - x_i)(1 - x_j) = penalty * (1 - x_i - x_j + x_i x_j)
    for (const auto& [i, j] : g.edges) {
        q.offset += penalty;
        q.add(i, i, -penalty);
        q.add(j, j, -penalty);
        q.add(i, j, penalty);
    }
    return q;
}

Qubo qubo_clique(const Graph& g, double penalty) {
    require_penalty_above(penalty, 1.0, "qubo_clique");
    return qubo_mis(complement(g), penalty);
}

Qubo qubo_kcoloring(const Graph& g, int k, double penalty) {
    if (!(penalty > 0.0)) throw PenaltyError("qubo_kcoloring: penalty must be positive");
    const int n = g.vertex_count;
    Qubo q = make_qubo(n * k);
    auto idx = [k](int v, int c) { return v * k + c; };
    for (int v = 0; v < n; ++v) {
        for (int c = 0; c < k; ++c) q.var_labels[static_cast<std::size_t>(idx(v, c))] = {VarLabel::Kind::VertexColor, v, c};
    }
    // (1 - sum_c x_{v,c})^2 = 1 - sum_c x_{v,c} + 2 sum_{c<c'} x_{v,c} x_{v,c'}
    for (int v = 0; v < n; ++v) {
        q.offset += penalty;
        for (int c = 0; c < k; ++c) {
            q.add(idx(v, c), idx(v, c), -penalty);
            for (int c2 = c + 1; c2 < k; ++c2) q.add(idx(v, c), idx(v, c2), 2.0 * penalty);
        }
    }
    for (const auto& [u, v] : g.edges) {
        for (int c = 0; c < k; ++c) q.add(idx(u, c), idx(v, c), penalty);
    }
    return q;
}

Qubo qubo_tsp(const Graph& g, double penalty) {
    const int n = g.vertex_count;
    if (n < 3 || !is_complete(g)) {
        throw ShapeError("qubo_tsp: requires a complete graph on >= 3 vertices");
    }
    if (!g.weighted()) throw ShapeError("qubo_tsp: requires edge weights");
    double max_w = 0.0;
    for (double w : g.weights) max_w = std::max(max_w, w);
    require_penalty_above(penalty, static_cast<double>(n) * max_w, "qubo_tsp");

    Qubo q = make_qubo(n * n);
    auto idx = [n](int v, int t) { return v * n + t; };
    for (int v = 0; v < n; ++v) {
        for (int t = 0; t < n; ++t) q.var_labels[static_cast<std::size_t>(idx(v, t))] = {VarLabel::Kind::VertexPosition, v, t};
    }
    // Each vertex appears at exactly one position.
    for (int v = 0; v < n; ++v) {
        q.offset += penalty;
        for (int t = 0; t < n; ++t) {
            q.add(idx(v, t), idx(v, t), -penalty);
            for (int t2 = t + 1; t2 < n; ++t2) q.add(idx(v, t), idx(v, t2), 2.0 * penalty);
        }
    }
    // Each position holds exactly one vertex.
    for (int t = 0; t < n; ++t) {
        q.offset += penalty;
        for (int v = 0; v < n; ++v) {
            q.add(idx(v, t), idx(v, t), -penalty);
            for (int v2 = v + 1; v2 < n; ++v2) q.add(idx(v, t), idx(v2, t), 2.0 * penalty);
        }
    }
    // Tour length over consecutive positions (cyclic).
    for (int t = 0; t < n; ++t) {
        const int t_next = (t + 1) % n;
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                q.add(idx(u, t), idx(v, t_next), *g.weight(u, v));
            }
        }
    }
    return q;
}

Qubo qubo_tsp(const Graph& g) { return qubo_tsp(g, penalty_defaults::tsp(g)); }

int factor_register_bits(long long n) {
    int bits = 0;
    for (long long v = n; v > 0; v >>= 1) ++bits;
    return (bits + 1) / 2; // ceil(bits / 2)
}

Qubo qubo_factor(long long n) {
    if (n < 9 || n % 2 == 0) {
        throw InputError("qubo_factor: requires odd n >= 9, got " + std::to_string(n));
    }
    const int a = factor_register_bits(n);
    const int dim = 2 * a + a * a;
    Qubo q = make_qubo(dim);

    // Variable layout: p_1..p_a, q_1..q_a, then ancillas w_{i,j} row-major.
    auto p_idx = [](int i) { return i - 1; };
    auto q_idx = [a](int j) { return a + j - 1; };
    auto w_idx = [a](int i, int j) { return 2 * a + (i - 1) * a + (j - 1); };
    for (int i = 1; i <= a; ++i) q.var_labels[static_cast<std::size_t>(p_idx(i))] = {VarLabel::Kind::FactorP, i, 0};
    for (int j = 1; j <= a; ++j) q.var_labels[static_cast<std::size_t>(q_idx(j))] = {VarLabel::Kind::FactorQ, j, 0};
    for (int i = 1; i <= a; ++i) {
        for (int j = 1; j <= a; ++j) q.var_labels[static_cast<std::size_t>(w_idx(i, j))] = {VarLabel::Kind::FactorAncilla, i, j};
    }

    // cost = (C - sum_v c_v x_v)^2 with C = n - 1 and per-variable weights
    // c_{p_i} = 2^i, c_{q_j} = 2^j, c_{w_ij} = 2^{i+j} (w substitutes p_i q_j).
    std::vector<double> coeff(static_cast<std::size_t>(dim), 0.0);
    for (int i = 1; i <= a; ++i) coeff[static_cast<std::size_t>(p_idx(i))] = std::ldexp(1.0, i);
    for (int j = 1; j <= a; ++j) coeff[static_cast<std::size_t>(q_idx(j))] = std::ldexp(1.0, j);
    for (int i = 1; i <= a; ++i) {
        for (int j = 1; j <= a; ++j) coeff[static_cast<std::size_t>(w_idx(i, j))] = std::ldexp(1.0, i + j);
    }
    const double c0 = static_cast<double>(n - 1);
    q.offset += c0 * c0;
    for (int v = 0; v < dim; ++v) {
        const double cv = coeff[static_cast<std::size_t>(v)];
        q.add(v, v, cv * cv - 2.0 * c0 * cv);
        for (int u = v + 1; u < dim; ++u) q.add(v, u, 2.0 * cv * coeff[static_cast<std::size_t>(u)]);
    }

    // Rosenberg penalty M * (p_i q_j - 2 p_i w - 2 q_j w + 3 w), M = n^2.
    const double m = static_cast<double>(n) * static_cast<double>(n);
    for (int i = 1; i <= a; ++i) {
        for (int j = 1; j <= a; ++j) {
            const int w = w_idx(i, j);
            q.add(p_idx(i), q_idx(j), m);
            q.add(p_idx(i), w, -2.0 * m);
            q.add(q_idx(j), w, -2.0 * m);
            q.add(w, w, 3.0 * m);
        }
    }
    return q;
}

} // namespace qforge
