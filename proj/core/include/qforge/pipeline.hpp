// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qforge/recommender.hpp"
#include "qforge/report.hpp"

namespace qforge {

struct RunConfig {
    std::filesystem::path input;                  // DSL file (run) or directory (batch)
    std::filesystem::path out_dir = "artifacts";
    std::uint64_t seed = 7;
    long long shots = 4096;
    int layers = 1;
    Weights weights;                              // (0.5, 0.25, 0.25)
    std::optional<double> penalty;                // encoder penalty override
    std::optional<std::filesystem::path> catalog; // device catalog override
    std::vector<int> sweep_sizes;                 // empty -> 4..56 step 4
    int optimizer_budget = 200;
    int jobs = 0;                                 // batch workers, 0 = hardware
};

// Exit-code contract: 0 success, 1 validation/input failure, 2 internal error.
int cmd_run(const RunConfig& config);
int cmd_batch(const RunConfig& config);
int cmd_recommend(const RunConfig& config);
int cmd_doctor(const RunConfig& config);

/// Full pipeline over one parsed DSL file: every named graph becomes an
/// independent sub-instance in name-sorted order. `stem` names the instance
/// (sub-instances append "__<graph>" when a file carries several graphs).
std::vector<RunReport> run_file(const std::filesystem::path& file, const std::string& stem,
                                const RunConfig& config,
                                const std::vector<DeviceProfile>& catalog);

/// Deterministic per-instance seed: parallel batch workers cannot change it.
std::uint64_t instance_seed(std::uint64_t root_seed, const std::string& instance_name);

} // namespace qforge
