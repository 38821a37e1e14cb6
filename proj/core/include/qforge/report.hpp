// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qforge/decode.hpp"
#include "qforge/problem.hpp"
#include "qforge/recommender.hpp"

namespace qforge {

/// Per-run report. Everything except `timings_ms` serializes canonically
/// (sorted keys, deterministic given the run seed); wall-clock timings go to
/// a separate sidecar so report.json stays byte-identical across reruns.
struct RunReport {
    std::string instance_name;
    ProblemFamily family = ProblemFamily::MaxCut;
    std::string goal;
    std::string description;

    std::optional<CanonicalGraph> graph;

    struct QcfSummary {
        std::string kind; // "qubo" | "arithmetic"
        int dim = 0;      // qubo
        double offset = 0.0;
        int bits = 0;     // arithmetic
        long long a = 0;
        long long b = 0;
    } qcf;

    struct CircuitSummary {
        int qubits = 0;
        int depth = 0;
        int gate_total = 0;
        int count_1q = 0;
        int count_2q = 0;
        int layers = 0; // QAOA layers, 0 for arithmetic
    } circuit;

    Recommendation recommendation;

    struct Execution {
        long long shots = 0;
        std::uint64_t seed = 0;
        std::vector<std::pair<std::string, long long>> top_outcomes; // count-desc, lex tie
    } execution;

    struct Optimization {
        std::vector<double> best_gammas;
        std::vector<double> best_betas;
        double best_expectation = 0.0;
        int evaluations = 0;
    };
    std::optional<Optimization> optimization;

    Solution solution;

    std::optional<double> optimum;             // classical optimum when desk-computable
    std::optional<double> approximation_ratio; // in [0, 1], 1 = optimal

    std::map<std::string, double> timings_ms; // diagnostics only, not canonical
};

/// Canonical JSON document (sorted keys, finite numbers only).
std::string report_json(const RunReport& r);

/// Human-readable Markdown with the same content as report.json.
std::string report_markdown(const RunReport& r);

/// Writes report.json and report.md (and timings.json when timings exist)
/// under out_dir. Throws IoError when the directory cannot be written.
void emit_report(const RunReport& r, const std::filesystem::path& out_dir);

struct BatchEntry {
    std::string name;
    bool ok = false;
    std::string family;
    bool feasible = false;
    double objective = 0.0;
    std::string error; // populated when !ok
};

/// Batch index over all instances, canonical JSON, single writer.
void write_batch_summary(const std::vector<BatchEntry>& entries,
                         const std::filesystem::path& out_dir);

} // namespace qforge
