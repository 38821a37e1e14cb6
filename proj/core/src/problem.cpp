// SPDX-License-Identifier: Apache-2.0
#include "qforge/problem.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "json.hpp"

#include "qforge/errors.hpp"

namespace qforge {

using nlohmann::json;

namespace {

const std::map<std::string, ProblemFamily> kFamilies = {
    {"MaxCut", ProblemFamily::MaxCut},   {"MIS", ProblemFamily::MIS},
    {"TSP", ProblemFamily::TSP},         {"Clique", ProblemFamily::Clique},
    {"KColoring", ProblemFamily::KColoring}, {"VertexCover", ProblemFamily::VertexCover},
    {"Factor", ProblemFamily::Factor},   {"ADD", ProblemFamily::Add},
    {"SUB", ProblemFamily::Sub},         {"MUL", ProblemFamily::Mul},
};

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    throw SchemaError(what + " (path: " + path + ")");
}

void require_string(const json& j, const std::string& path) {
    if (!j.is_string()) schema_error(path, "expected a string");
}

long long require_integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) schema_error(path, "expected an integer");
    return j.get<long long>();
}

int require_vertex_id(const json& j, const std::string& path) {
    long long v = require_integer(j, path);
    if (v < 0) schema_error(path, "vertex ids must be non-negative");
    if (v > 1'000'000) schema_error(path, "vertex id out of range");
    return static_cast<int>(v);
}

std::vector<std::pair<int, int>> parse_edge_array(const json& j, const std::string& path) {
    if (!j.is_array()) schema_error(path, "expected an array of [u, v] pairs");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& e = j[i];
        const std::string epath = path + "[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 2) schema_error(epath, "edge must be a [u, v] pair");
        edges.emplace_back(require_vertex_id(e[0], epath + "[0]"),
                           require_vertex_id(e[1], epath + "[1]"));
    }
    return edges;
}

std::vector<std::vector<double>> parse_matrix(const json& j, const std::string& path) {
    if (!j.is_array()) schema_error(path, "expected an adjacency matrix (array of rows)");
    std::vector<std::vector<double>> m;
    m.reserve(j.size());
    for (std::size_t r = 0; r < j.size(); ++r) {
        const json& row = j[r];
        const std::string rpath = path + "[" + std::to_string(r) + "]";
        if (!row.is_array()) schema_error(rpath, "matrix row must be an array");
        std::vector<double> out;
        out.reserve(row.size());
        for (std::size_t c = 0; c < row.size(); ++c) {
            const json& cell = row[c];
            if (!cell.is_number()) schema_error(rpath + "[" + std::to_string(c) + "]", "matrix entry must be a number");
            out.push_back(cell.get<double>());
        }
        m.push_back(std::move(out));
    }
    return m;
}

RawGraph parse_raw_graph(const json& j, GraphRep rep, const std::string& path) {
    RawGraph g;
    if (rep == GraphRep::AdjacencyMatrix) {
        g.matrix = parse_matrix(j, path);
        return g;
    }
    if (j.is_array()) {
        g.edges = parse_edge_array(j, path);
        return g;
    }
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (key == "edges") {
                g.edges = parse_edge_array(value, path + ".edges");
            } else if (key == "vertices") {
                long long n = require_integer(value, path + ".vertices");
                if (n < 0) schema_error(path + ".vertices", "vertex count must be non-negative");
                g.declared_vertices = static_cast<int>(n);
            } else {
                schema_error(path + "." + key, "unknown graph key");
            }
        }
        if (!j.contains("edges")) schema_error(path, "graph object requires an \"edges\" array");
        return g;
    }
    schema_error(path, "graph must be an edge array, a {\"edges\",\"vertices\"} object, or a matrix");
}

GraphInstance parse_graph_instance(const json& inst) {
    GraphInstance gi;
    const json& rep = inst.at("graph_rep");
    require_string(rep, "instance.graph_rep");
    const std::string rep_s = rep.get<std::string>();
    if (rep_s == "edge_list") {
        gi.rep = GraphRep::EdgeList;
    } else if (rep_s == "adjacency_matrix") {
        gi.rep = GraphRep::AdjacencyMatrix;
    } else {
        schema_error("instance.graph_rep", "unknown graph_rep \"" + rep_s + "\"");
    }

    const json& graphs = inst.at("graphs");
    if (!graphs.is_object() || graphs.empty()) {
        schema_error("instance.graphs", "expected a non-empty object of named graphs");
    }
    for (const auto& [name, g] : graphs.items()) {
        gi.graphs.emplace(name, parse_raw_graph(g, gi.rep, "instance.graphs." + name));
    }

    if (inst.contains("k")) {
        long long k = require_integer(inst.at("k"), "instance.k");
        if (k < 1) schema_error("instance.k", "k must be >= 1");
        gi.k = static_cast<int>(k);
    }
    if (inst.contains("weights")) {
        const json& w = inst.at("weights");
        if (!w.is_array()) schema_error("instance.weights", "expected an array of [u, v, w] triples");
        for (std::size_t i = 0; i < w.size(); ++i) {
            const json& t = w[i];
            const std::string tpath = "instance.weights[" + std::to_string(i) + "]";
            if (!t.is_array() || t.size() != 3) schema_error(tpath, "weight entry must be a [u, v, w] triple");
            int u = require_vertex_id(t[0], tpath + "[0]");
            int v = require_vertex_id(t[1], tpath + "[1]");
            if (!t[2].is_number()) schema_error(tpath + "[2]", "weight must be a number");
            gi.weights.emplace_back(u, v, t[2].get<double>());
        }
    }
    return gi;
}

} // namespace

const char* family_name(ProblemFamily f) {
    switch (f) {
    case ProblemFamily::MaxCut: return "MaxCut";
    case ProblemFamily::MIS: return "MIS";
    case ProblemFamily::TSP: return "TSP";
    case ProblemFamily::Clique: return "Clique";
    case ProblemFamily::KColoring: return "KColoring";
    case ProblemFamily::VertexCover: return "VertexCover";
    case ProblemFamily::Factor: return "Factor";
    case ProblemFamily::Add: return "ADD";
    case ProblemFamily::Sub: return "SUB";
    case ProblemFamily::Mul: return "MUL";
    }
    return "?";
}

std::optional<ProblemFamily> family_from_name(const std::string& name) {
    auto it = kFamilies.find(name);
    if (it == kFamilies.end()) return std::nullopt;
    return it->second;
}

bool is_graph_family(ProblemFamily f) {
    switch (f) {
    case ProblemFamily::MaxCut:
    case ProblemFamily::MIS:
    case ProblemFamily::TSP:
    case ProblemFamily::Clique:
    case ProblemFamily::KColoring:
    case ProblemFamily::VertexCover:
        return true;
    default:
        return false;
    }
}

bool is_arithmetic_family(ProblemFamily f) {
    return f == ProblemFamily::Add || f == ProblemFamily::Sub || f == ProblemFamily::Mul;
}

ProblemSpec parse_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("top-level document must be an object (path: $)");

    static const std::set<std::string> kTopKeys = {"family", "goal", "description", "instance"};
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (!kTopKeys.count(key)) schema_error(key, "unknown top-level key");
    }
    for (const auto& key : {"family", "instance"}) {
        if (!doc.contains(key)) schema_error(key, "missing required field");
    }

    ProblemSpec spec;
    require_string(doc.at("family"), "family");
    const std::string fam = doc.at("family").get<std::string>();
    auto f = family_from_name(fam);
    if (!f) schema_error("family", "unknown family \"" + fam + "\"");
    spec.family = *f;

    if (doc.contains("goal")) {
        require_string(doc.at("goal"), "goal");
        spec.goal = doc.at("goal").get<std::string>();
    }
    if (doc.contains("description")) {
        require_string(doc.at("description"), "description");
        spec.description = doc.at("description").get<std::string>();
    }

    const json& inst = doc.at("instance");
    if (!inst.is_object()) schema_error("instance", "expected an object");

    static const std::set<std::string> kInstKeys = {"graph_rep", "graphs", "n", "a", "b", "bits", "k", "weights"};
    for (const auto& [key, value] : inst.items()) {
        (void)value;
        if (!kInstKeys.count(key)) schema_error("instance." + key, "unknown instance key");
    }

    const bool has_graph = inst.contains("graph_rep") || inst.contains("graphs");
    const bool has_factor = inst.contains("n");
    const bool has_arith = inst.contains("a") || inst.contains("b") || inst.contains("bits");
    if (static_cast<int>(has_graph) + static_cast<int>(has_factor) + static_cast<int>(has_arith) != 1) {
        schema_error("instance", "payload must be exactly one of graph (graph_rep+graphs), factor (n), arithmetic (a,b,bits)");
    }

    if (has_graph) {
        if (!inst.contains("graph_rep")) schema_error("instance.graph_rep", "missing required field");
        if (!inst.contains("graphs")) schema_error("instance.graphs", "missing required field");
        spec.instance = parse_graph_instance(inst);
    } else if (has_factor) {
        FactorInstance fi;
        fi.n = require_integer(inst.at("n"), "instance.n");
        if (fi.n < 4) schema_error("instance.n", "Factor requires an integer >= 4");
        spec.instance = fi;
    } else {
        for (const auto& key : {"a", "b", "bits"}) {
            if (!inst.contains(key)) schema_error(std::string("instance.") + key, "missing required field");
        }
        ArithmeticInstance ai;
        ai.a = require_integer(inst.at("a"), "instance.a");
        ai.b = require_integer(inst.at("b"), "instance.b");
        long long bits = require_integer(inst.at("bits"), "instance.bits");
        if (ai.a < 0) schema_error("instance.a", "operands must be non-negative");
        if (ai.b < 0) schema_error("instance.b", "operands must be non-negative");
        if (bits < 1 || bits > 62) schema_error("instance.bits", "bit width must be in [1, 62]");
        ai.bits = static_cast<int>(bits);
        spec.instance = ai;
    }
    return spec;
}

namespace {

void validate_raw_graph(const GraphInstance& gi, const std::string& name, const RawGraph& g,
                        std::vector<std::string>& out) {
    const std::string path = "instance.graphs." + name;
    if (gi.rep == GraphRep::AdjacencyMatrix) {
        const auto& m = g.matrix;
        const std::size_t n = m.size();
        for (std::size_t r = 0; r < n; ++r) {
            if (m[r].size() != n) {
                out.push_back(path + ": adjacency matrix is not square");
                return;
            }
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (m[r][r] != 0.0) out.push_back(path + ": adjacency matrix has a nonzero diagonal entry at " + std::to_string(r));
            for (std::size_t c = r + 1; c < n; ++c) {
                if (m[r][c] != m[c][r]) {
                    out.push_back(path + ": adjacency matrix is not symmetric at (" + std::to_string(r) + "," + std::to_string(c) + ")");
                }
                if (m[r][c] < 0.0 || !std::isfinite(m[r][c])) {
                    out.push_back(path + ": matrix entries must be finite and non-negative");
                }
            }
        }
        return;
    }
    for (const auto& [u, v] : g.edges) {
        if (u == v) out.push_back(path + ": self-loop at vertex " + std::to_string(u));
    }
    if (g.declared_vertices) {
        int n = *g.declared_vertices;
        for (const auto& [u, v] : g.edges) {
            if (u >= n || v >= n) {
                out.push_back(path + ": edge endpoint exceeds declared vertex count " + std::to_string(n));
                break;
            }
        }
    }
}

} // namespace

ValidationReport validate_spec(const ProblemSpec& spec) {
    ValidationReport report;
    auto& out = report.violations;

    if (is_graph_family(spec.family)) {
        const auto* gi = std::get_if<GraphInstance>(&spec.instance);
        if (!gi) {
            out.push_back("instance: family " + std::string(family_name(spec.family)) + " requires a graph payload");
            return report;
        }
        for (const auto& [name, g] : gi->graphs) validate_raw_graph(*gi, name, g, out);

        if (gi->k && spec.family != ProblemFamily::KColoring) {
            out.push_back("instance.k: only valid for family KColoring");
        }
        if (!gi->weights.empty() && spec.family != ProblemFamily::TSP) {
            out.push_back("instance.weights: only valid for family TSP");
        }
        if (!gi->weights.empty() && gi->rep == GraphRep::AdjacencyMatrix) {
            out.push_back("instance.weights: unused with adjacency_matrix form (matrix entries carry the weights)");
        }
        if (spec.family == ProblemFamily::KColoring && !gi->k) {
            out.push_back("instance.k: KColoring requires k >= 1");
        }
        for (const auto& [u, v, w] : gi->weights) {
            if (u == v) out.push_back("instance.weights: self-loop weight at vertex " + std::to_string(u));
            if (!(w >= 0.0) || !std::isfinite(w)) {
                out.push_back("instance.weights: TSP edge weights must be non-negative finite reals");
            }
        }
        if (spec.family == ProblemFamily::TSP) {
            if (!out.empty()) return report; // shape problems first
            for (const auto& [name, raw] : gi->graphs) {
                CanonicalGraph cg = canonical_graph(*gi, name);
                const Graph& g = cg.graph;
                if (g.vertex_count < 3) {
                    out.push_back("instance.graphs." + name + ": TSP requires at least 3 vertices");
                    continue;
                }
                if (!is_complete(g)) {
                    out.push_back("instance.graphs." + name + ": TSP requires a complete graph");
                }
                if (!g.weighted()) {
                    out.push_back("instance.graphs." + name + ": TSP requires edge weights");
                }
            }
        }
    } else if (spec.family == ProblemFamily::Factor) {
        const auto* fi = std::get_if<FactorInstance>(&spec.instance);
        if (!fi) {
            out.push_back("instance: family Factor requires an integer payload (instance.n)");
            return report;
        }
        if (fi->n % 2 == 0 || fi->n < 9) {
            out.push_back("instance.n: Factor requires odd n >= 9");
        }
    } else {
        const auto* ai = std::get_if<ArithmeticInstance>(&spec.instance);
        if (!ai) {
            out.push_back("instance: family " + std::string(family_name(spec.family)) + " requires an arithmetic payload (a, b, bits)");
            return report;
        }
        if (ai->bits < 1) out.push_back("instance.bits: bit width must be >= 1");
        const long long cap = (ai->bits >= 62) ? -1 : (1LL << ai->bits);
        if (cap > 0) {
            if (ai->a >= cap) out.push_back("instance.a: operand does not fit in " + std::to_string(ai->bits) + " bits");
            if (ai->b >= cap) out.push_back("instance.b: operand does not fit in " + std::to_string(ai->bits) + " bits");
        }
    }
    return report;
}

CanonicalGraph canonical_graph(const GraphInstance& payload, const std::string& name) {
    auto it = payload.graphs.find(name);
    if (it == payload.graphs.end()) {
        throw ShapeError("no graph named \"" + name + "\" in payload");
    }
    const RawGraph& raw = it->second;

    // Collect edges with optional weights in the original id space.
    std::map<Edge, double> weighted;
    std::set<Edge> unweighted;
    std::set<int> ids;
    bool has_weights = false;
    int declared = -1;

    if (payload.rep == GraphRep::AdjacencyMatrix) {
        const auto& m = raw.matrix;
        const std::size_t n = m.size();
        for (std::size_t r = 0; r < n; ++r) {
            if (m[r].size() != n) throw ShapeError("instance.graphs." + name + ": adjacency matrix is not square");
        }
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = r + 1; c < n; ++c) {
                if (m[r][c] != m[c][r]) throw ShapeError("instance.graphs." + name + ": adjacency matrix is not symmetric");
                if (m[r][c] != 0.0) {
                    Edge e{static_cast<int>(r), static_cast<int>(c)};
                    unweighted.insert(e);
                    if (m[r][c] != 1.0) has_weights = true;
                    weighted[e] = m[r][c];
                }
            }
        }
        declared = static_cast<int>(n);
        for (int v = 0; v < declared; ++v) ids.insert(v);
    } else {
        for (const auto& [u, v] : raw.edges) {
            if (u == v) continue; // self-loops dropped; validate_spec reports them
            Edge e{std::min(u, v), std::max(u, v)};
            unweighted.insert(e);
            ids.insert(u);
            ids.insert(v);
        }
        for (const auto& [u, v, w] : payload.weights) {
            Edge e{std::min(u, v), std::max(u, v)};
            if (unweighted.count(e)) {
                weighted[e] = w;
                has_weights = true;
            }
        }
        if (raw.declared_vertices) {
            declared = *raw.declared_vertices;
            for (int v = 0; v < declared; ++v) ids.insert(v);
        }
    }

    // Dense re-index: sorted original ids become 0..n-1.
    CanonicalGraph out;
    out.original_ids.assign(ids.begin(), ids.end());
    std::map<int, int> to_dense;
    for (std::size_t i = 0; i < out.original_ids.size(); ++i) {
        to_dense[out.original_ids[i]] = static_cast<int>(i);
    }
    out.graph.vertex_count = static_cast<int>(out.original_ids.size());
    for (const Edge& e : unweighted) {
        out.graph.edges.emplace_back(to_dense.at(e.first), to_dense.at(e.second));
    }
    std::sort(out.graph.edges.begin(), out.graph.edges.end());
    if (has_weights) {
        out.graph.weights.reserve(out.graph.edges.size());
        for (const Edge& e : out.graph.edges) {
            Edge orig{out.original_ids[static_cast<std::size_t>(e.first)],
                      out.original_ids[static_cast<std::size_t>(e.second)]};
            auto w = weighted.find(orig);
            out.graph.weights.push_back(w == weighted.end() ? 1.0 : w->second);
        }
    }
    return out;
}

std::vector<std::string> sub_instance_names(const ProblemSpec& spec) {
    std::vector<std::string> names;
    if (const auto* gi = std::get_if<GraphInstance>(&spec.instance)) {
        for (const auto& [name, g] : gi->graphs) {
            (void)g;
            names.push_back(name);
        }
    } else {
        names.emplace_back("");
    }
    return names;
}

std::string serialize_spec(const ProblemSpec& spec) {
    json doc;
    doc["family"] = family_name(spec.family);
    doc["goal"] = spec.goal;
    doc["description"] = spec.description;
    json inst = json::object();
    if (const auto* gi = std::get_if<GraphInstance>(&spec.instance)) {
        inst["graph_rep"] = gi->rep == GraphRep::EdgeList ? "edge_list" : "adjacency_matrix";
        json graphs = json::object();
        for (const auto& [name, g] : gi->graphs) {
            if (gi->rep == GraphRep::AdjacencyMatrix) {
                graphs[name] = g.matrix;
            } else if (g.declared_vertices) {
                json obj = json::object();
                obj["edges"] = g.edges;
                obj["vertices"] = *g.declared_vertices;
                graphs[name] = obj;
            } else {
                graphs[name] = g.edges;
            }
        }
        inst["graphs"] = graphs;
        if (gi->k) inst["k"] = *gi->k;
        if (!gi->weights.empty()) {
            json ws = json::array();
            for (const auto& [u, v, w] : gi->weights) ws.push_back(json::array({u, v, w}));
            inst["weights"] = ws;
        }
    } else if (const auto* fi = std::get_if<FactorInstance>(&spec.instance)) {
        inst["n"] = fi->n;
    } else {
        const auto& ai = std::get<ArithmeticInstance>(spec.instance);
        inst["a"] = ai.a;
        inst["b"] = ai.b;
        inst["bits"] = ai.bits;
    }
    doc["instance"] = inst;
    return doc.dump(2);
}

} // namespace qforge
