// SPDX-License-Identifier: Apache-2.0
#include "qforge/decode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <set>

#include "qforge/classical.hpp"
#include "qforge/errors.hpp"

namespace qforge {

namespace {

std::string edge_text(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

Solution decode_subset(const DecodingContext& ctx, const Qubo& q, const Assignment& x) {
    Solution s;
    s.family = ctx.family;
    SubsetSolution subset;
    for (int i = 0; i < q.dim; ++i) {
        if (x[static_cast<std::size_t>(i)]) subset.vertices.push_back(q.var_labels[static_cast<std::size_t>(i)].i);
    }
    std::sort(subset.vertices.begin(), subset.vertices.end());

    VertexMask mask = 0;
    for (int v : subset.vertices) mask |= VertexMask{1} << v;

    switch (ctx.family) {
    case ProblemFamily::MaxCut:
        s.objective = cut_value(ctx.graph, mask);
        break;
    case ProblemFamily::MIS:
        s.objective = static_cast<double>(subset.vertices.size());
        for (const auto& [u, v] : ctx.graph.edges) {
            if ((mask >> u & 1u) && (mask >> v & 1u)) {
                s.violations.push_back("edge " + edge_text(u, v) + " inside set");
            }
        }
        break;
    case ProblemFamily::VertexCover:
        s.objective = static_cast<double>(subset.vertices.size());
        for (const auto& [u, v] : ctx.graph.edges) {
            if (!(mask >> u & 1u) && !(mask >> v & 1u)) {
                s.violations.push_back("edge " + edge_text(u, v) + " uncovered");
            }
        }
        break;
    case ProblemFamily::Clique:
        s.objective = static_cast<double>(subset.vertices.size());
        for (std::size_t a = 0; a < subset.vertices.size(); ++a) {
            for (std::size_t b = a + 1; b < subset.vertices.size(); ++b) {
                if (!ctx.graph.has_edge(subset.vertices[a], subset.vertices[b])) {
                    s.violations.push_back("pair " + edge_text(subset.vertices[a], subset.vertices[b]) +
                                           " not adjacent");
                }
            }
        }
        break;
    default:
        break;
    }
    s.data = std::move(subset);
    return s;
}

Solution decode_coloring(const DecodingContext& ctx, const Qubo& q, const Assignment& x) {
    Solution s;
    s.family = ctx.family;
    ColoringSolution coloring;
    coloring.colors.assign(static_cast<std::size_t>(ctx.graph.vertex_count), -1);
    std::vector<int> hits(static_cast<std::size_t>(ctx.graph.vertex_count), 0);
    for (int i = 0; i < q.dim; ++i) {
        if (!x[static_cast<std::size_t>(i)]) continue;
        const VarLabel& l = q.var_labels[static_cast<std::size_t>(i)];
        ++hits[static_cast<std::size_t>(l.i)];
        coloring.colors[static_cast<std::size_t>(l.i)] = l.j;
    }
    int bad = 0;
    for (int v = 0; v < ctx.graph.vertex_count; ++v) {
        if (hits[static_cast<std::size_t>(v)] != 1) {
            coloring.colors[static_cast<std::size_t>(v)] = -1;
            s.violations.push_back("vertex " + std::to_string(v) + " color row is not one-hot");
            ++bad;
        }
    }
    for (const auto& [u, v] : ctx.graph.edges) {
        const int cu = coloring.colors[static_cast<std::size_t>(u)];
        const int cv = coloring.colors[static_cast<std::size_t>(v)];
        if (cu >= 0 && cu == cv) {
            s.violations.push_back("edge " + edge_text(u, v) + " has equal colors");
        }
    }
    s.objective = static_cast<double>(s.violations.size());
    s.data = std::move(coloring);
    return s;
}

Solution decode_tour(const DecodingContext& ctx, const Qubo& q, const Assignment& x) {
    Solution s;
    s.family = ctx.family;
    const int n = ctx.graph.vertex_count;
    std::vector<int> at_position(static_cast<std::size_t>(n), -1);
    std::vector<int> position_hits(static_cast<std::size_t>(n), 0);
    std::vector<int> vertex_hits(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < q.dim; ++i) {
        if (!x[static_cast<std::size_t>(i)]) continue;
        const VarLabel& l = q.var_labels[static_cast<std::size_t>(i)]; // (vertex, position)
        ++vertex_hits[static_cast<std::size_t>(l.i)];
        ++position_hits[static_cast<std::size_t>(l.j)];
        at_position[static_cast<std::size_t>(l.j)] = l.i;
    }
    for (int v = 0; v < n; ++v) {
        if (vertex_hits[static_cast<std::size_t>(v)] != 1) {
            s.violations.push_back("vertex " + std::to_string(v) + " position row is not one-hot");
        }
    }
    for (int t = 0; t < n; ++t) {
        if (position_hits[static_cast<std::size_t>(t)] != 1) {
            s.violations.push_back("position " + std::to_string(t) + " is not one-hot");
        }
    }
    TourSolution tour;
    if (s.violations.empty()) {
        tour.order = canonical_tour(at_position);
        s.objective = tour_length(ctx.graph, tour.order);
    } else {
        s.objective = static_cast<double>(s.violations.size());
    }
    s.data = std::move(tour);
    return s;
}

Solution decode_factor(const DecodingContext& ctx, const Qubo& q, const Assignment& x) {
    Solution s;
    s.family = ctx.family;
    FactorSolution f{1, 1};
    for (int i = 0; i < q.dim; ++i) {
        const VarLabel& l = q.var_labels[static_cast<std::size_t>(i)];
        if (!x[static_cast<std::size_t>(i)]) continue;
        if (l.kind == VarLabel::Kind::FactorP) f.p += 1LL << l.i;
        if (l.kind == VarLabel::Kind::FactorQ) f.q += 1LL << l.i;
    }
    // Ancilla consistency: w_ij must equal p_i * q_j.
    std::vector<std::uint8_t> pbit(64, 0), qbit(64, 0);
    for (int i = 0; i < q.dim; ++i) {
        const VarLabel& l = q.var_labels[static_cast<std::size_t>(i)];
        if (l.kind == VarLabel::Kind::FactorP) pbit[static_cast<std::size_t>(l.i)] = x[static_cast<std::size_t>(i)];
        if (l.kind == VarLabel::Kind::FactorQ) qbit[static_cast<std::size_t>(l.i)] = x[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < q.dim; ++i) {
        const VarLabel& l = q.var_labels[static_cast<std::size_t>(i)];
        if (l.kind != VarLabel::Kind::FactorAncilla) continue;
        const std::uint8_t expected = pbit[static_cast<std::size_t>(l.i)] & qbit[static_cast<std::size_t>(l.j)];
        if (x[static_cast<std::size_t>(i)] != expected) {
            s.violations.push_back("ancilla w_" + std::to_string(l.i) + "," + std::to_string(l.j) +
                                   " inconsistent with p_" + std::to_string(l.i) + "*q_" + std::to_string(l.j));
        }
    }
    if (f.p * f.q != ctx.n) {
        s.violations.push_back("p*q = " + std::to_string(f.p * f.q) + " does not equal n = " +
                               std::to_string(ctx.n));
    }
    s.objective = static_cast<double>(std::llabs(ctx.n - f.p * f.q));
    s.data = f;
    return s;
}

} // namespace

bool family_maximizes(ProblemFamily f) {
    return f == ProblemFamily::MaxCut || f == ProblemFamily::MIS || f == ProblemFamily::Clique;
}

Solution decode_bits(const DecodingContext& ctx, const Qubo& q, const std::string& bits) {
    if (static_cast<int>(bits.size()) != q.dim) {
        throw DimensionError("decode_bits: bitstring length " + std::to_string(bits.size()) +
                             " != qubo dim " + std::to_string(q.dim));
    }
    Assignment x(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) x[i] = bits[i] == '1' ? 1 : 0;

    Solution s;
    switch (ctx.family) {
    case ProblemFamily::MaxCut:
    case ProblemFamily::MIS:
    case ProblemFamily::VertexCover:
    case ProblemFamily::Clique:
        s = decode_subset(ctx, q, x);
        break;
    case ProblemFamily::KColoring:
        s = decode_coloring(ctx, q, x);
        break;
    case ProblemFamily::TSP:
        s = decode_tour(ctx, q, x);
        break;
    case ProblemFamily::Factor:
        s = decode_factor(ctx, q, x);
        break;
    default:
        throw InputError("decode_bits: family has no QUBO decoding");
    }
    s.feasible = s.violations.empty();
    s.bits = bits;
    return s;
}

Solution best_of(const Histogram& hist, const DecodingContext& ctx, const Qubo& q) {
    if (hist.counts.empty()) throw InputError("best_of: empty histogram");

    const bool maximize = family_maximizes(ctx.family);
    std::optional<Solution> best_feasible;
    long long best_feasible_count = 0;
    std::optional<Solution> least_violating;
    long long least_violating_count = 0;

    for (const auto& [bits, count] : hist.counts) {
        Solution s = decode_bits(ctx, q, bits);
        if (s.feasible) {
            bool better = false;
            if (!best_feasible) {
                better = true;
            } else if (s.objective != best_feasible->objective) {
                better = maximize ? s.objective > best_feasible->objective
                                  : s.objective < best_feasible->objective;
            } else if (count != best_feasible_count) {
                better = count > best_feasible_count;
            } // equal objective and count: keep earlier (lexicographically smaller) bits
            if (better) {
                best_feasible = std::move(s);
                best_feasible_count = count;
            }
        } else if (!best_feasible) {
            bool better = false;
            if (!least_violating) {
                better = true;
            } else if (s.violations.size() != least_violating->violations.size()) {
                better = s.violations.size() < least_violating->violations.size();
            } else if (count != least_violating_count) {
                better = count > least_violating_count;
            }
            if (better) {
                least_violating = std::move(s);
                least_violating_count = count;
            }
        }
    }
    return best_feasible ? *best_feasible : *least_violating;
}

Solution decode_arithmetic(const StateVector& state, const Circuit& c, ProblemFamily family) {
    if (!is_arithmetic_family(family)) {
        throw InputError("decode_arithmetic: family is not ADD/SUB/MUL");
    }
    std::uint64_t best = 0;
    double best_p = 0.0;
    for (std::uint64_t i = 0; i < state.amplitudes.size(); ++i) {
        const double p = state.probability(i);
        if (p > best_p) {
            best_p = p;
            best = i;
        }
    }
    if (best_p < 0.999) {
        throw NonClassicalOutputError("decode_arithmetic: largest basis-state probability is " +
                                      std::to_string(best_p));
    }
    const Register* out = family == ProblemFamily::Mul ? c.find_register(RegisterRole::Product)
                                                       : c.find_register(RegisterRole::InputB);
    if (!out) throw InputError("decode_arithmetic: circuit lacks the output register");

    IntegerSolution value;
    for (int i = 0; i < out->size; ++i) {
        if (best >> (out->start + i) & 1ULL) value.value |= 1LL << i;
    }
    Solution s;
    s.family = family;
    s.objective = static_cast<double>(value.value);
    s.feasible = true;
    s.bits = bitstring_of_index(best, state.qubit_count);
    s.data = value;
    return s;
}

} // namespace qforge
