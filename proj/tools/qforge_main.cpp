// SPDX-License-Identifier: Apache-2.0
//
// qforge: classical problem specs in, executed quantum results out.
//
//   qforge run --input problem.json [--out artifacts] [--seed 7] [--shots 4096]
//   qforge batch --input corpus_dir [--out artifacts] [--jobs N]
//   qforge recommend [--out artifacts/recommender] [--weights 0.5,0.25,0.25]
//   qforge doctor [--catalog devices.json]

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qforge/pipeline.hpp"

namespace {

bool parse_weights(const std::string& text, qforge::Weights& w) {
    std::stringstream ss(text);
    std::string part;
    std::vector<double> values;
    while (std::getline(ss, part, ',')) {
        try {
            values.push_back(std::stod(part));
        } catch (...) {
            return false;
        }
    }
    if (values.size() != 3) return false;
    w = {values[0], values[1], values[2]};
    return true;
}

void add_common_flags(CLI::App* cmd, qforge::RunConfig& config, std::string& weights_text,
                      std::string& catalog_path) {
    cmd->add_option("--out", config.out_dir, "Output directory (default: artifacts)");
    cmd->add_option("--seed", config.seed, "Root seed for all randomness (default: 7)");
    cmd->add_option("--shots", config.shots, "Measurement shots (default: 4096)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--layers", config.layers, "QAOA layers (default: 1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--weights", weights_text, "Scoring weights error,time,cost (default: 0.5,0.25,0.25)");
    cmd->add_option("--catalog", catalog_path, "Device catalog JSON (default: built-in nine profiles)");
    cmd->add_option("--penalty", config.penalty, "Encoder penalty override");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qforge: compile classical problem specs to simulated quantum results"};
    app.require_subcommand(1);

    qforge::RunConfig config;
    std::string weights_text;
    std::string catalog_path;

    auto* run = app.add_subcommand("run", "Run the full pipeline on one JSON problem spec");
    run->add_option("--input", config.input, "Problem DSL file")->required();
    add_common_flags(run, config, weights_text, catalog_path);

    auto* batch = app.add_subcommand("batch", "Run every JSON spec in a directory");
    batch->add_option("--input", config.input, "Directory of problem DSL files")->required();
    add_common_flags(batch, config, weights_text, catalog_path);

    auto* recommend = app.add_subcommand("recommend", "Device sweep over 3-regular MaxCut QAOA (n = 4..56)");
    add_common_flags(recommend, config, weights_text, catalog_path);

    auto* doctor = app.add_subcommand("doctor", "Check catalog, simulator self-test and output directory");
    add_common_flags(doctor, config, weights_text, catalog_path);

    CLI11_PARSE(app, argc, argv);

    if (!weights_text.empty() && !parse_weights(weights_text, config.weights)) {
        std::fprintf(stderr, "error: SchemaError: --weights expects three comma-separated numbers\n");
        return 1;
    }
    if (!catalog_path.empty()) config.catalog = catalog_path;

    if (run->parsed()) return qforge::cmd_run(config);
    if (batch->parsed()) return qforge::cmd_batch(config);
    if (recommend->parsed()) {
        if (config.out_dir == "artifacts") config.out_dir = "artifacts/recommender";
        return qforge::cmd_recommend(config);
    }
    if (doctor->parsed()) return qforge::cmd_doctor(config);
    return 2;
}
