// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qforge/errors.hpp"
#include "qforge/pipeline.hpp"
#include "qforge/problem.hpp"

#include "support/test_util.hpp"

using namespace qforge;

namespace {

const std::filesystem::path kSource = QFORGE_SOURCE_DIR;
const std::filesystem::path kSmoke = kSource / "data" / "smoke";

RunConfig fast_config(const std::filesystem::path& out) {
    RunConfig config;
    config.out_dir = out;
    config.shots = 1024;
    config.optimizer_budget = 80;
    return config;
}

} // namespace

TEST_CASE("cmd_run: the minimal MIS document yields a size-2 independent set") {
    const auto dir = test::scratch_dir("cli_run");
    RunConfig config = fast_config(dir);
    config.input = kSmoke / "mis_01.json";
    CHECK(cmd_run(config) == 0);

    const auto report = nlohmann::json::parse(test::read_file(dir / "mis_01" / "report.json"));
    CHECK(report.at("family") == "MIS");
    CHECK(report.at("solution").at("feasible") == true);
    CHECK(report.at("solution").at("objective") == 2.0);
    CHECK(report.at("quality").at("approximation_ratio") == 1.0);
}

TEST_CASE("cmd_run: malformed input exits 1, missing input exits 1") {
    const auto dir = test::scratch_dir("cli_bad");
    test::write_file(dir / "broken.json", "{family: MIS");
    RunConfig config = fast_config(dir / "out");
    config.input = dir / "broken.json";
    CHECK(cmd_run(config) == 1);

    config.input = dir / "does_not_exist.json";
    CHECK(cmd_run(config) == 1);
}

TEST_CASE("cmd_run: Factor(15) names the factors 3 x 5") {
    const auto dir = test::scratch_dir("cli_factor");
    RunConfig config = fast_config(dir);
    config.input = kSmoke / "factor_01.json";
    CHECK(cmd_run(config) == 0);

    const auto report = nlohmann::json::parse(test::read_file(dir / "factor_01" / "report.json"));
    CHECK(report.at("solution").at("exact") == true);
    const long long p = report.at("solution").at("p").get<long long>();
    const long long q = report.at("solution").at("q").get<long long>();
    CHECK(p * q == 15);
    CHECK(std::min(p, q) == 3);
    CHECK(std::max(p, q) == 5);

    const std::string md = test::read_file(dir / "factor_01" / "report.md");
    CHECK(md.find("factors: ") != std::string::npos);
}

TEST_CASE("cmd_batch: smoke corpus gives four passing reports") {
    const auto dir = test::scratch_dir("cli_batch");
    RunConfig config = fast_config(dir);
    config.input = kSmoke;
    CHECK(cmd_batch(config) == 0);

    const auto summary = nlohmann::json::parse(test::read_file(dir / "summary.json"));
    CHECK(summary.at("total") == 4);
    CHECK(summary.at("passed") == 4);
    CHECK(summary.at("failed") == 0);
    for (const char* name : {"add_01", "factor_01", "maxcut_01", "mis_01"}) {
        CHECK(std::filesystem::exists(dir / name / "report.json"));
        CHECK(std::filesystem::exists(dir / name / "report.md"));
    }
}

TEST_CASE("cmd_batch: empty directory exits 1; broken files are recorded") {
    const auto empty = test::scratch_dir("cli_empty");
    RunConfig config = fast_config(empty / "out");
    config.input = empty;
    CHECK(cmd_batch(config) == 1);

    const auto mixed = test::scratch_dir("cli_mixed");
    std::filesystem::copy_file(kSmoke / "add_01.json", mixed / "add_01.json");
    test::write_file(mixed / "broken.json", "{");
    RunConfig mixed_config = fast_config(mixed / "out");
    mixed_config.input = mixed;
    CHECK(cmd_batch(mixed_config) == 1);
    const auto summary = nlohmann::json::parse(test::read_file(mixed / "out" / "summary.json"));
    CHECK(summary.at("total") == 2);
    CHECK(summary.at("passed") == 1);
    CHECK(summary.at("failed") == 1);
}

TEST_CASE("determinism: reruns and parallel batches are byte-identical") {
    const auto dir = test::scratch_dir("cli_det");

    RunConfig serial = fast_config(dir / "serial");
    serial.input = kSmoke;
    serial.jobs = 1;
    REQUIRE(cmd_batch(serial) == 0);

    RunConfig parallel = fast_config(dir / "parallel");
    parallel.input = kSmoke;
    parallel.jobs = 4;
    REQUIRE(cmd_batch(parallel) == 0);

    for (const char* name : {"add_01", "factor_01", "maxcut_01", "mis_01"}) {
        CHECK(test::read_file(dir / "serial" / name / "report.json") ==
              test::read_file(dir / "parallel" / name / "report.json"));
    }
    CHECK(test::read_file(dir / "serial" / "summary.json") ==
          test::read_file(dir / "parallel" / "summary.json"));
}

TEST_CASE("cmd_recommend: five CSVs, cost-only weights pick the cheapest row-wise") {
    const auto dir = test::scratch_dir("cli_rec");
    RunConfig config;
    config.out_dir = dir;
    config.weights = {0.0, 0.0, 1.0};
    config.sweep_sizes = {4, 8, 12};
    REQUIRE(cmd_recommend(config) == 0);

    for (const char* name : {"errors_wide.csv", "times_wide.csv", "prices_wide.csv", "winners.csv", "details.csv"}) {
        CHECK(std::filesystem::exists(dir / name));
    }

    // winners.csv rows must match the per-row minimum of prices_wide.csv.
    std::istringstream prices(test::read_file(dir / "prices_wide.csv"));
    std::istringstream winners(test::read_file(dir / "winners.csv"));
    std::string pheader, wheader;
    std::getline(prices, pheader);
    std::getline(winners, wheader);
    std::vector<std::string> devices;
    {
        std::stringstream hs(pheader);
        std::string cell;
        std::getline(hs, cell, ','); // "n"
        while (std::getline(hs, cell, ',')) {
            if (!cell.empty() && cell.back() == '\r') cell.pop_back();
            devices.push_back(cell);
        }
    }
    std::string pline, wline;
    while (std::getline(prices, pline) && std::getline(winners, wline)) {
        if (!pline.empty() && pline.back() == '\r') pline.pop_back();
        if (!wline.empty() && wline.back() == '\r') wline.pop_back();
        if (pline.empty()) continue;
        std::stringstream ps(pline);
        std::string cell;
        std::getline(ps, cell, ','); // n
        double best = 1e300;
        std::string best_device;
        for (std::size_t d = 0; std::getline(ps, cell, ','); ++d) {
            if (cell == "NA") continue;
            const double v = std::stod(cell);
            if (v < best) {
                best = v;
                best_device = devices[d];
            }
        }
        std::stringstream ws(wline);
        std::string n_cell, winner;
        std::getline(ws, n_cell, ',');
        std::getline(ws, winner, ',');
        CHECK(winner == best_device);
    }
}

TEST_CASE("cmd_doctor: healthy checkout passes, corrupt catalog fails naming the file") {
    const auto dir = test::scratch_dir("cli_doc");
    RunConfig config;
    config.out_dir = dir;
    CHECK(cmd_doctor(config) == 0);

    test::write_file(dir / "corrupt.json", "{\"devices\": [");
    config.catalog = dir / "corrupt.json";
    CHECK(cmd_doctor(config) == 1);
}

TEST_CASE("cmd_doctor: unwritable output directory fails the write probe") {
    RunConfig config;
    config.out_dir = "/proc/qforge/definitely/not/writable";
    CHECK(cmd_doctor(config) == 1);
}

TEST_CASE("cmd_run: two QAOA layers work end to end") {
    const auto dir = test::scratch_dir("cli_p2");
    RunConfig config = fast_config(dir);
    config.input = kSmoke / "maxcut_01.json";
    config.layers = 2;
    config.optimizer_budget = 100;
    CHECK(cmd_run(config) == 0);

    const auto report = nlohmann::json::parse(test::read_file(dir / "maxcut_01" / "report.json"));
    CHECK(report.at("circuit").at("layers") == 2);
    CHECK(report.at("optimization").at("best_gammas").size() == 2);
    CHECK(report.at("solution").at("objective") == 4.0);
}

TEST_CASE("validate: arithmetic operands must fit the register width") {
    const ProblemSpec spec = parse_spec(R"({"family": "ADD", "instance": {"a": 5, "b": 1, "bits": 2}})");
    const ValidationReport report = validate_spec(spec);
    REQUIRE_FALSE(report.pass());
    CHECK(report.violations[0].find("does not fit") != std::string::npos);
}

TEST_CASE("cmd_run: KColoring without k is a validation failure") {
    const auto dir = test::scratch_dir("cli_nok");
    test::write_file(dir / "nok.json", R"({
      "family": "KColoring",
      "instance": {"graph_rep": "edge_list", "graphs": {"G": [[0, 1]]}}
    })");
    RunConfig config = fast_config(dir / "out");
    config.input = dir / "nok.json";
    CHECK(cmd_run(config) == 1);
}

TEST_CASE("cmd_run: multiple named graphs become name-sorted sub-instances") {
    const auto dir = test::scratch_dir("cli_multi");
    test::write_file(dir / "pair.json", R"({
      "family": "MaxCut",
      "instance": {"graph_rep": "edge_list",
                   "graphs": {"Gb": [[0, 1]], "Ga": [[0, 1], [1, 2]]}}
    })");
    RunConfig config = fast_config(dir / "out");
    config.input = dir / "pair.json";
    CHECK(cmd_run(config) == 0);
    CHECK(std::filesystem::exists(dir / "out" / "pair__Ga" / "report.json"));
    CHECK(std::filesystem::exists(dir / "out" / "pair__Gb" / "report.json"));

    const auto ga = nlohmann::json::parse(test::read_file(dir / "out" / "pair__Ga" / "report.json"));
    CHECK(ga.at("solution").at("objective") == 2.0);
}

TEST_CASE("cmd_run: sparse vertex ids are re-indexed and recorded in the report") {
    const auto dir = test::scratch_dir("cli_sparse");
    test::write_file(dir / "sparse.json", R"({
      "family": "MaxCut",
      "instance": {"graph_rep": "edge_list", "graphs": {"G": [[0, 5], [5, 7]]}}
    })");
    RunConfig config = fast_config(dir / "out");
    config.input = dir / "sparse.json";
    CHECK(cmd_run(config) == 0);

    const auto report = nlohmann::json::parse(test::read_file(dir / "out" / "sparse" / "report.json"));
    CHECK(report.at("graph").at("vertices") == 3);
    CHECK(report.at("graph").at("original_ids") == nlohmann::json::array({0, 5, 7}));
}

TEST_CASE("qforge binary: run subcommand works end to end") {
    const auto dir = test::scratch_dir("cli_bin");
    const std::string cmd = std::string("\"") + QFORGE_CLI_PATH + "\" run --input \"" +
                            (kSmoke / "mis_01.json").string() + "\" --out \"" + dir.string() +
                            "\" --shots 256 > /dev/null 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(std::filesystem::exists(dir / "mis_01" / "report.json"));
}
