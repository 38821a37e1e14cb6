// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "qforge/graph.hpp"

namespace qforge {

enum class ProblemFamily { MaxCut, MIS, TSP, Clique, KColoring, VertexCover, Factor, Add, Sub, Mul };

const char* family_name(ProblemFamily f);
std::optional<ProblemFamily> family_from_name(const std::string& name);
bool is_graph_family(ProblemFamily f);
bool is_arithmetic_family(ProblemFamily f);

enum class GraphRep { EdgeList, AdjacencyMatrix };

/// One named graph exactly as the document provided it, before
/// canonicalization. Either `edges` (edge_list) or `matrix`
/// (adjacency_matrix) is populated, matching the instance's graph_rep.
struct RawGraph {
    std::vector<std::pair<int, int>> edges;
    std::optional<int> declared_vertices; // object form {"edges": ..., "vertices": n}
    std::vector<std::vector<double>> matrix;

    bool operator==(const RawGraph&) const = default;
};

struct GraphInstance {
    GraphRep rep = GraphRep::EdgeList;
    std::map<std::string, RawGraph> graphs; // name-sorted; each is a sub-instance
    std::optional<int> k;                   // KColoring
    std::vector<std::tuple<int, int, double>> weights; // TSP, edge_list form

    bool operator==(const GraphInstance&) const = default;
};

struct FactorInstance {
    long long n = 0;
    bool operator==(const FactorInstance&) const = default;
};

struct ArithmeticInstance {
    long long a = 0;
    long long b = 0;
    int bits = 0;
    bool operator==(const ArithmeticInstance&) const = default;
};

using InstancePayload = std::variant<GraphInstance, FactorInstance, ArithmeticInstance>;

struct ProblemSpec {
    ProblemFamily family = ProblemFamily::MaxCut;
    std::string goal;        // retained verbatim, never interpreted
    std::string description; // retained verbatim, never interpreted
    InstancePayload instance;

    bool operator==(const ProblemSpec&) const = default;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

/// Canonical graph plus the original vertex ids: position i held id
/// original_ids[i] before dense re-indexing.
struct CanonicalGraph {
    Graph graph;
    std::vector<int> original_ids;
};

/// Parse the JSON problem DSL. Throws SyntaxError on malformed JSON and
/// SchemaError on missing/mistyped/unknown fields; messages name the
/// offending path. Never crashes on arbitrary byte input.
ProblemSpec parse_spec(const std::string& text);

/// Consistency gate ahead of the encoder. Violations are data, not faults;
/// a passing report guarantees canonical_graph cannot fail on shape grounds.
ValidationReport validate_spec(const ProblemSpec& spec);

/// Canonical form of one named graph in a validated payload: deduplicated,
/// self-loop-free, endpoint-sorted, vertices re-indexed densely to 0..n-1.
/// Adjacency-matrix and edge-list representations of the same graph produce
/// identical results. Throws ShapeError on a non-square or asymmetric matrix.
CanonicalGraph canonical_graph(const GraphInstance& payload, const std::string& name);

/// Names of the sub-instances (named graphs) in sorted order; non-graph
/// payloads yield a single unnamed sub-instance.
std::vector<std::string> sub_instance_names(const ProblemSpec& spec);

/// Canonical DSL document for a spec; parse_spec(serialize_spec(s)) == s.
std::string serialize_spec(const ProblemSpec& spec);

} // namespace qforge
