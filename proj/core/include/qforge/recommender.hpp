// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qforge/circuit.hpp"
#include "qforge/device.hpp"

namespace qforge {

struct Weights {
    double error = 0.5;
    double time = 0.25;
    double cost = 0.25;
};

struct ScoreBreakdown {
    std::string device;
    std::string provider;
    bool eligible = false;
    std::string ineligible_reason;
    double raw_error = 0.0;
    double raw_time = 0.0;
    double raw_cost = 0.0;
    double norm_error = 0.0;
    double norm_time = 0.0;
    double norm_cost = 0.0;
    double total = 0.0;
    TranspileMetrics metrics;
};

struct Recommendation {
    ScoreBreakdown winner;
    std::vector<ScoreBreakdown> details; // catalog order, ineligible rows included
};

/// Aggregate failure probability under the independent-error product model:
/// 1 - (1-e1)^n1q * (1-e2)^n2q * (1-er)^n_measured.
double estimate_error(const TranspileMetrics& m, const DeviceProfile& d, int n_measured);

/// shots * (circuit duration + readout) + queue overhead, in seconds.
double estimate_time(const TranspileMetrics& m, const DeviceProfile& d, long long shots);

/// Evaluates the device's pricing model on the metrics.
double estimate_cost(const TranspileMetrics& m, const DeviceProfile& d, long long shots, int n_measured);

/// Transpiles the circuit for every catalog device, scores eligible ones with
/// min-max normalization per metric (constant columns normalize to 0) and the
/// given weights (normalized internally to sum 1), and picks the lowest total.
/// Ties break on lower raw error, then lexicographic name. Throws
/// NoEligibleDeviceError when nothing fits.
Recommendation recommend(const Circuit& c, const std::vector<DeviceProfile>& catalog,
                         const Weights& weights, long long shots);

struct SweepRow {
    int size = 0;
    std::vector<ScoreBreakdown> breakdowns; // catalog order
    std::string winner;
    double winner_score = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<std::string> devices; // catalog order
};

/// Experiment sweep: for each even size n, build a seeded random 3-regular
/// graph, encode MaxCut, build a p=1 QAOA circuit, transpile per device and
/// score; no simulation happens. Rows fan out across worker threads and are
/// reduced in order, so outputs are identical regardless of parallelism.
SweepResult sweep_maxcut(const std::vector<int>& sizes, const std::vector<DeviceProfile>& catalog,
                         const Weights& weights, long long shots, std::uint64_t seed);

/// Writes errors_wide.csv, times_wide.csv, prices_wide.csv, winners.csv and
/// details.csv (RFC 4180, 6 significant digits, "NA" for ineligible cells).
void write_sweep_csvs(const SweepResult& sweep, const std::filesystem::path& out_dir);

} // namespace qforge
