// SPDX-License-Identifier: Apache-2.0
#include "qforge/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qforge/errors.hpp"

namespace qforge {

using nlohmann::json;

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw IoError(std::string("report field is not finite: ") + what);
}

json solution_to_json(const Solution& s) {
    json j;
    j["feasible"] = s.feasible;
    require_finite(s.objective, "solution.objective");
    j["objective"] = s.objective;
    j["violations"] = s.violations;
    if (!s.bits.empty()) j["bits"] = s.bits;
    if (const auto* subset = std::get_if<SubsetSolution>(&s.data)) {
        j["vertices"] = subset->vertices;
    } else if (const auto* coloring = std::get_if<ColoringSolution>(&s.data)) {
        j["colors"] = coloring->colors;
    } else if (const auto* tour = std::get_if<TourSolution>(&s.data)) {
        j["tour"] = tour->order;
    } else if (const auto* factor = std::get_if<FactorSolution>(&s.data)) {
        j["p"] = factor->p;
        j["q"] = factor->q;
        j["exact"] = s.feasible;
    } else if (const auto* integer = std::get_if<IntegerSolution>(&s.data)) {
        j["value"] = integer->value;
    }
    return j;
}

json breakdown_to_json(const ScoreBreakdown& b) {
    json j;
    j["device"] = b.device;
    j["provider"] = b.provider;
    j["eligible"] = b.eligible;
    if (!b.eligible) {
        j["reason"] = b.ineligible_reason;
        return j;
    }
    j["error"] = b.raw_error;
    j["time_seconds"] = b.raw_time;
    j["cost"] = b.raw_cost;
    j["norm_error"] = b.norm_error;
    j["norm_time"] = b.norm_time;
    j["norm_cost"] = b.norm_cost;
    j["score"] = b.total;
    j["depth"] = b.metrics.depth;
    j["count_1q"] = b.metrics.count_1q;
    j["count_2q"] = b.metrics.count_2q;
    j["swap_count"] = b.metrics.swap_count;
    j["duration_seconds"] = b.metrics.estimated_duration;
    return j;
}

json report_to_json(const RunReport& r) {
    json j;
    j["instance"] = r.instance_name;
    j["family"] = family_name(r.family);
    j["goal"] = r.goal;
    j["description"] = r.description;

    if (r.graph) {
        json g;
        g["vertices"] = r.graph->graph.vertex_count;
        json edges = json::array();
        for (const auto& [u, v] : r.graph->graph.edges) edges.push_back(json::array({u, v}));
        g["edges"] = edges;
        if (r.graph->graph.weighted()) g["weights"] = r.graph->graph.weights;
        bool reindexed = false;
        for (std::size_t i = 0; i < r.graph->original_ids.size(); ++i) {
            if (r.graph->original_ids[i] != static_cast<int>(i)) reindexed = true;
        }
        if (reindexed) g["original_ids"] = r.graph->original_ids;
        j["graph"] = g;
    }

    json qcf;
    qcf["kind"] = r.qcf.kind;
    if (r.qcf.kind == "qubo") {
        qcf["dim"] = r.qcf.dim;
        require_finite(r.qcf.offset, "qcf.offset");
        qcf["offset"] = r.qcf.offset;
    } else {
        qcf["bits"] = r.qcf.bits;
        qcf["a"] = r.qcf.a;
        qcf["b"] = r.qcf.b;
    }
    j["qcf"] = qcf;

    json c;
    c["qubits"] = r.circuit.qubits;
    c["depth"] = r.circuit.depth;
    c["gates_total"] = r.circuit.gate_total;
    c["count_1q"] = r.circuit.count_1q;
    c["count_2q"] = r.circuit.count_2q;
    if (r.circuit.layers > 0) c["layers"] = r.circuit.layers;
    j["circuit"] = c;

    json rec;
    rec["winner"] = breakdown_to_json(r.recommendation.winner);
    json details = json::array();
    for (const auto& b : r.recommendation.details) details.push_back(breakdown_to_json(b));
    rec["details"] = details;
    j["recommendation"] = rec;

    json exec;
    exec["shots"] = r.execution.shots;
    exec["seed"] = r.execution.seed;
    json top = json::array();
    for (const auto& [bits, count] : r.execution.top_outcomes) {
        top.push_back(json{{"bits", bits}, {"count", count}});
    }
    exec["top_outcomes"] = top;
    j["execution"] = exec;

    if (r.optimization) {
        json opt;
        opt["best_gammas"] = r.optimization->best_gammas;
        opt["best_betas"] = r.optimization->best_betas;
        require_finite(r.optimization->best_expectation, "optimization.best_expectation");
        opt["best_expectation"] = r.optimization->best_expectation;
        opt["evaluations"] = r.optimization->evaluations;
        j["optimization"] = opt;
    }

    j["solution"] = solution_to_json(r.solution);

    if (r.optimum) {
        require_finite(*r.optimum, "optimum");
        j["quality"]["optimum"] = *r.optimum;
    }
    if (r.approximation_ratio) {
        require_finite(*r.approximation_ratio, "approximation_ratio");
        j["quality"]["approximation_ratio"] = *r.approximation_ratio;
    }
    return j;
}

} // namespace

std::string report_json(const RunReport& r) { return report_to_json(r).dump(2); }

std::string report_markdown(const RunReport& r) {
    std::ostringstream md;
    md << "# Run report: " << r.instance_name << "\n\n";
    md << "- family: " << family_name(r.family) << "\n";
    if (!r.goal.empty()) md << "- goal: " << r.goal << "\n";
    if (!r.description.empty()) md << "- description: " << r.description << "\n";
    if (r.graph) {
        md << "- graph: " << r.graph->graph.vertex_count << " vertices, "
           << r.graph->graph.edges.size() << " edges\n";
    }
    md << "\n## Quantum-compatible format\n\n";
    if (r.qcf.kind == "qubo") {
        md << "- " << r.qcf.dim << "x" << r.qcf.dim << " QUBO matrix, offset " << r.qcf.offset << "\n";
    } else {
        md << "- reversible arithmetic task: a=" << r.qcf.a << ", b=" << r.qcf.b
           << ", " << r.qcf.bits << "-bit registers\n";
    }
    md << "\n## Circuit\n\n";
    md << "- " << r.circuit.qubits << "-qubit circuit, depth " << r.circuit.depth << ", "
       << r.circuit.gate_total << " gates (" << r.circuit.count_1q << " one-qubit, "
       << r.circuit.count_2q << " two-qubit)";
    if (r.circuit.layers > 0) md << ", QAOA layers: " << r.circuit.layers;
    md << "\n";

    md << "\n## Recommended backend\n\n";
    const auto& w = r.recommendation.winner;
    md << "- winner: **" << w.device << "** (" << w.provider << "), score " << w.total << "\n";
    md << "- estimated error " << w.raw_error << ", time " << w.raw_time << " s, cost "
       << w.raw_cost << "\n";
    md << "\n| device | eligible | error | time (s) | cost | score |\n";
    md << "|---|---|---|---|---|---|\n";
    for (const auto& b : r.recommendation.details) {
        if (b.eligible) {
            md << "| " << b.device << " | yes | " << b.raw_error << " | " << b.raw_time << " | "
               << b.raw_cost << " | " << b.total << " |\n";
        } else {
            md << "| " << b.device << " | no (" << b.ineligible_reason << ") | - | - | - | - |\n";
        }
    }

    md << "\n## Execution\n\n";
    md << "- shots: " << r.execution.shots << ", seed: " << r.execution.seed << "\n";
    if (r.optimization) {
        md << "- QAOA optimization: best expectation " << r.optimization->best_expectation << " after "
           << r.optimization->evaluations << " evaluations\n";
    }
    if (!r.execution.top_outcomes.empty()) {
        md << "- top outcomes:";
        for (const auto& [bits, count] : r.execution.top_outcomes) md << " " << bits << " (" << count << ")";
        md << "\n";
    }

    md << "\n## Solution\n\n";
    const Solution& s = r.solution;
    md << "- feasible: " << (s.feasible ? "yes" : "no") << "\n";
    md << "- objective: " << s.objective << "\n";
    if (const auto* subset = std::get_if<SubsetSolution>(&s.data)) {
        md << "- vertices: {";
        for (std::size_t i = 0; i < subset->vertices.size(); ++i) {
            if (i) md << ", ";
            md << subset->vertices[i];
        }
        md << "}\n";
    } else if (const auto* coloring = std::get_if<ColoringSolution>(&s.data)) {
        md << "- colors:";
        for (std::size_t v = 0; v < coloring->colors.size(); ++v) {
            md << " " << v << ":" << coloring->colors[v];
        }
        md << "\n";
    } else if (const auto* tour = std::get_if<TourSolution>(&s.data)) {
        md << "- tour:";
        for (int v : tour->order) md << " " << v;
        md << "\n";
    } else if (const auto* factor = std::get_if<FactorSolution>(&s.data)) {
        if (s.feasible) {
            md << "- factors: " << factor->p << " x " << factor->q << "\n";
        } else {
            md << "- no exact factorization found (best candidate " << factor->p << " x "
               << factor->q << ")\n";
        }
    } else if (const auto* integer = std::get_if<IntegerSolution>(&s.data)) {
        md << "- result: " << integer->value << "\n";
    }
    if (!s.violations.empty()) {
        md << "- violations:\n";
        for (const auto& v : s.violations) md << "  - " << v << "\n";
    }
    if (r.optimum) md << "- classical optimum: " << *r.optimum << "\n";
    if (r.approximation_ratio) md << "- approximation ratio: " << *r.approximation_ratio << "\n";
    return md.str();
}

void emit_report(const RunReport& r, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

    auto write_file = [&](const char* name, const std::string& content) {
        const auto path = out_dir / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot open " + path.string() + " for writing");
        out << content;
        if (!out) throw IoError("failed writing " + path.string());
    };
    write_file("report.json", report_json(r) + "\n");
    write_file("report.md", report_markdown(r));
    if (!r.timings_ms.empty()) {
        json t;
        for (const auto& [k, v] : r.timings_ms) t[k] = v;
        write_file("timings.json", t.dump(2) + "\n");
    }
}

void write_batch_summary(const std::vector<BatchEntry>& entries,
                         const std::filesystem::path& out_dir) {
    json instances = json::array();
    int passed = 0;
    for (const auto& e : entries) {
        json j;
        j["name"] = e.name;
        j["ok"] = e.ok;
        if (e.ok) {
            j["family"] = e.family;
            j["feasible"] = e.feasible;
            j["objective"] = e.objective;
            ++passed;
        } else {
            j["error"] = e.error;
        }
        instances.push_back(j);
    }
    json summary;
    summary["instances"] = instances;
    summary["total"] = entries.size();
    summary["passed"] = passed;
    summary["failed"] = entries.size() - passed;

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    const auto path = out_dir / "summary.json";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << summary.dump(2) << "\n";
}

} // namespace qforge
