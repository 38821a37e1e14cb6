// SPDX-License-Identifier: Apache-2.0
#include "qforge/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "qforge/arithmetic.hpp"
#include "qforge/classical.hpp"
#include "qforge/decode.hpp"
#include "qforge/encoders.hpp"
#include "qforge/errors.hpp"
#include "qforge/optimizer.hpp"
#include "qforge/qaoa.hpp"
#include "qforge/rng.hpp"

namespace qforge {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<DeviceProfile> catalog_for(const RunConfig& config) {
    return config.catalog ? load_catalog(*config.catalog) : default_catalog();
}

std::vector<std::pair<std::string, long long>> top_outcomes(const Histogram& hist, std::size_t limit) {
    std::vector<std::pair<std::string, long long>> all(hist.counts.begin(), hist.counts.end());
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (all.size() > limit) all.resize(limit);
    return all;
}

double encoder_penalty(const RunConfig& config, double fallback) {
    return config.penalty ? *config.penalty : fallback;
}

Qubo encode_graph_family(ProblemFamily family, const Graph& g, int k, const RunConfig& config) {
    switch (family) {
    case ProblemFamily::MaxCut:
        return qubo_maxcut(g);
    case ProblemFamily::MIS:
        return qubo_mis(g, encoder_penalty(config, penalty_defaults::kSubsetFamilies));
    case ProblemFamily::VertexCover:
        return qubo_vertex_cover(g, encoder_penalty(config, penalty_defaults::kSubsetFamilies));
    case ProblemFamily::Clique:
        return qubo_clique(g, encoder_penalty(config, penalty_defaults::kSubsetFamilies));
    case ProblemFamily::KColoring:
        return qubo_kcoloring(g, k, encoder_penalty(config, penalty_defaults::kKColoring));
    case ProblemFamily::TSP:
        return qubo_tsp(g, encoder_penalty(config, penalty_defaults::tsp(g)));
    default:
        throw InputError("encode_graph_family: not a QUBO graph family");
    }
}

// Classical optimum and [0,1] approximation ratio, only when desk-computable
// within the dim <= 24 oracle guard.
void attach_quality(RunReport& report, const DecodingContext& ctx, int qubo_dim) {
    if (qubo_dim > 24) return;
    const Solution& s = report.solution;
    auto ratio_max = [&](double optimum) -> std::optional<double> {
        if (optimum <= 0.0) return s.objective == optimum ? std::optional<double>(1.0) : std::nullopt;
        return s.objective / optimum;
    };
    auto ratio_min = [&](double optimum) -> std::optional<double> {
        if (s.objective <= 0.0) return optimum == s.objective ? std::optional<double>(1.0) : std::nullopt;
        return optimum / s.objective;
    };
    switch (ctx.family) {
    case ProblemFamily::MaxCut: {
        const auto opt = max_cut_bruteforce(ctx.graph);
        report.optimum = opt.value;
        if (s.feasible) report.approximation_ratio = ratio_max(opt.value);
        break;
    }
    case ProblemFamily::MIS: {
        const auto opt = max_independent_set_bruteforce(ctx.graph);
        report.optimum = opt.value;
        if (s.feasible) report.approximation_ratio = ratio_max(opt.value);
        break;
    }
    case ProblemFamily::Clique: {
        const auto opt = max_clique_bruteforce(ctx.graph);
        report.optimum = opt.value;
        if (s.feasible) report.approximation_ratio = ratio_max(opt.value);
        break;
    }
    case ProblemFamily::VertexCover: {
        const auto opt = min_vertex_cover_bruteforce(ctx.graph);
        report.optimum = opt.value;
        if (s.feasible) report.approximation_ratio = ratio_min(opt.value);
        break;
    }
    case ProblemFamily::TSP: {
        const auto opt = best_tours_bruteforce(ctx.graph);
        report.optimum = opt.length;
        if (s.feasible) report.approximation_ratio = ratio_min(opt.length);
        break;
    }
    case ProblemFamily::KColoring:
        if (s.feasible) {
            report.optimum = 0.0;
            report.approximation_ratio = 1.0;
        }
        break;
    default:
        break; // Factor and arithmetic report exactness via the feasible flag
    }
}

RunReport run_qubo_route(const ProblemSpec& spec, const std::string& name, const Qubo& qubo,
                         const DecodingContext& ctx, const RunConfig& config,
                         const std::vector<DeviceProfile>& catalog) {
    RunReport report;
    report.instance_name = name;
    report.family = spec.family;
    report.goal = spec.goal;
    report.description = spec.description;
    report.qcf = {"qubo", qubo.dim, qubo.offset, 0, 0, 0};

    const std::uint64_t seed = instance_seed(config.seed, name);
    const auto t0 = Clock::now();

    if (qubo.dim > 22) {
        throw SizeError("instance needs " + std::to_string(qubo.dim) +
                        " qubits; the statevector backend is capped at 22");
    }

    OptimizationResult opt = optimize_qaoa(qubo, config.layers, config.optimizer_budget,
                                           derive_seed(seed, "optimize"));
    report.timings_ms["optimize"] = ms_since(t0);
    report.optimization = RunReport::Optimization{opt.best_gammas, opt.best_betas,
                                                  opt.best_expectation, opt.evaluations};

    const Circuit bound = bind_qaoa(qaoa_circuit(qubo, config.layers), opt.best_gammas, opt.best_betas);
    const TranspileMetrics logical_metrics = metrics(bound, 1.0, 1.0);
    report.circuit = {bound.qubit_count, logical_metrics.depth,
                      static_cast<int>(bound.gates.size()), bound.count_1q(), bound.count_2q(),
                      config.layers};

    const auto t1 = Clock::now();
    report.recommendation = recommend(bound, catalog, config.weights, config.shots);
    report.timings_ms["recommend"] = ms_since(t1);

    const auto t2 = Clock::now();
    const StateVector state = simulate(bound);
    const Histogram hist = sample(state, config.shots, derive_seed(seed, "sample"));
    report.timings_ms["simulate"] = ms_since(t2);

    report.execution = {config.shots, seed, top_outcomes(hist, 8)};
    report.solution = best_of(hist, ctx, qubo);
    attach_quality(report, ctx, qubo.dim);
    report.timings_ms["total"] = ms_since(t0);
    return report;
}

RunReport run_arithmetic(const ProblemSpec& spec, const std::string& name, const RunConfig& config,
                         const std::vector<DeviceProfile>& catalog) {
    const auto& ai = std::get<ArithmeticInstance>(spec.instance);
    RunReport report;
    report.instance_name = name;
    report.family = spec.family;
    report.goal = spec.goal;
    report.description = spec.description;
    report.qcf = {"arithmetic", 0, 0.0, ai.bits, ai.a, ai.b};

    const std::uint64_t seed = instance_seed(config.seed, name);
    const auto t0 = Clock::now();

    Circuit base;
    switch (spec.family) {
    case ProblemFamily::Add:
        base = adder_circuit(ai.bits);
        break;
    case ProblemFamily::Sub:
        base = subtractor_circuit(ai.bits);
        break;
    case ProblemFamily::Mul:
        base = multiplier_circuit(ai.bits);
        break;
    default:
        throw InputError("run_arithmetic: not an arithmetic family");
    }
    const Circuit prepared = with_classical_inputs(base, ai.a, ai.b);
    const TranspileMetrics logical_metrics = metrics(prepared, 1.0, 1.0);
    report.circuit = {prepared.qubit_count, logical_metrics.depth,
                      static_cast<int>(prepared.gates.size()), prepared.count_1q(),
                      prepared.count_2q(), 0};

    report.recommendation = recommend(prepared, catalog, config.weights, config.shots);

    const StateVector state = simulate(prepared);
    report.solution = decode_arithmetic(state, prepared, spec.family);
    const Histogram hist = sample(state, config.shots, derive_seed(seed, "sample"));
    report.execution = {config.shots, seed, top_outcomes(hist, 8)};
    report.timings_ms["total"] = ms_since(t0);
    return report;
}

} // namespace

std::uint64_t instance_seed(std::uint64_t root_seed, const std::string& instance_name) {
    return derive_seed(root_seed, instance_name);
}

std::vector<RunReport> run_file(const std::filesystem::path& file, const std::string& stem,
                                const RunConfig& config,
                                const std::vector<DeviceProfile>& catalog) {
    const ProblemSpec spec = parse_spec(read_text_file(file));
    const ValidationReport validation = validate_spec(spec);
    if (!validation.pass()) {
        std::string joined;
        for (const auto& v : validation.violations) {
            if (!joined.empty()) joined += "; ";
            joined += v;
        }
        throw SchemaError("validation failed for " + file.string() + ": " + joined);
    }

    std::vector<RunReport> reports;
    if (const auto* gi = std::get_if<GraphInstance>(&spec.instance)) {
        const auto names = sub_instance_names(spec);
        for (const auto& gname : names) {
            const std::string instance_name = names.size() == 1 ? stem : stem + "__" + gname;
            CanonicalGraph cg = canonical_graph(*gi, gname);
            DecodingContext ctx;
            ctx.family = spec.family;
            ctx.graph = cg.graph;
            ctx.k = gi->k.value_or(0);
            const Qubo qubo = encode_graph_family(spec.family, cg.graph, ctx.k, config);
            RunReport r = run_qubo_route(spec, instance_name, qubo, ctx, config, catalog);
            r.graph = std::move(cg);
            reports.push_back(std::move(r));
        }
    } else if (const auto* fi = std::get_if<FactorInstance>(&spec.instance)) {
        DecodingContext ctx;
        ctx.family = spec.family;
        ctx.n = fi->n;
        const Qubo qubo = qubo_factor(fi->n);
        reports.push_back(run_qubo_route(spec, stem, qubo, ctx, config, catalog));
    } else {
        reports.push_back(run_arithmetic(spec, stem, config, catalog));
    }
    return reports;
}

namespace {

int classify_exit(const std::exception& e) {
    return dynamic_cast<const Error*>(&e) ? 1 : 2;
}

void print_error(const std::exception& e) {
    if (const auto* err = dynamic_cast<const Error*>(&e)) {
        std::cerr << "error: " << err->what() << "\n";
    } else {
        std::cerr << "error: InternalError: " << e.what() << "\n";
    }
}

void print_report_line(const RunReport& r) {
    std::cout << "ok " << r.instance_name << " family=" << family_name(r.family)
              << " feasible=" << (r.solution.feasible ? "yes" : "no")
              << " objective=" << r.solution.objective
              << " winner=" << r.recommendation.winner.device << "\n";
}

std::vector<std::filesystem::path> list_dsl_files(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

} // namespace

int cmd_run(const RunConfig& config) {
    try {
        const auto catalog = catalog_for(config);
        const std::string stem = config.input.stem().string();
        const auto reports = run_file(config.input, stem, config, catalog);
        for (const auto& r : reports) {
            emit_report(r, config.out_dir / r.instance_name);
            print_report_line(r);
        }
        return 0;
    } catch (const std::exception& e) {
        print_error(e);
        return classify_exit(e);
    }
}

int cmd_batch(const RunConfig& config) {
    try {
        if (!std::filesystem::is_directory(config.input)) {
            throw InputError("batch input is not a directory: " + config.input.string());
        }
        const auto files = list_dsl_files(config.input);
        if (files.empty()) {
            throw InputError("no instances in " + config.input.string());
        }
        const auto catalog = catalog_for(config);

        struct Task {
            std::filesystem::path file;
            std::string stem;
            std::vector<BatchEntry> entries;
        };
        std::vector<Task> tasks;
        for (const auto& f : files) tasks.push_back({f, f.stem().string(), {}});

        auto run_task = [&](Task& task) {
            try {
                const auto reports = run_file(task.file, task.stem, config, catalog);
                for (const auto& r : reports) {
                    emit_report(r, config.out_dir / r.instance_name);
                    BatchEntry e;
                    e.name = r.instance_name;
                    e.ok = true;
                    e.family = family_name(r.family);
                    e.feasible = r.solution.feasible;
                    e.objective = r.solution.objective;
                    task.entries.push_back(std::move(e));
                }
            } catch (const std::exception& e) {
                BatchEntry entry;
                entry.name = task.stem;
                entry.ok = false;
                entry.error = e.what();
                task.entries.push_back(std::move(entry));
            }
        };

        const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        const unsigned workers = std::min<unsigned>(
            config.jobs > 0 ? static_cast<unsigned>(config.jobs) : hw,
            static_cast<unsigned>(tasks.size()));
        if (workers <= 1) {
            for (auto& t : tasks) run_task(t);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::future<void>> futures;
            for (unsigned w = 0; w < workers; ++w) {
                futures.push_back(std::async(std::launch::async, [&] {
                    for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
                        run_task(tasks[i]);
                    }
                }));
            }
            for (auto& f : futures) f.get();
        }

        std::vector<BatchEntry> entries;
        bool all_ok = true;
        for (const auto& t : tasks) {
            for (const auto& e : t.entries) {
                all_ok = all_ok && e.ok;
                entries.push_back(e);
            }
        }
        write_batch_summary(entries, config.out_dir);
        for (const auto& e : entries) {
            if (e.ok) {
                std::cout << "ok " << e.name << " objective=" << e.objective << "\n";
            } else {
                std::cout << "fail " << e.name << ": " << e.error << "\n";
            }
        }
        return all_ok ? 0 : 1;
    } catch (const std::exception& e) {
        print_error(e);
        return classify_exit(e);
    }
}

int cmd_recommend(const RunConfig& config) {
    try {
        const auto catalog = catalog_for(config);
        std::vector<int> sizes = config.sweep_sizes;
        if (sizes.empty()) {
            for (int n = 4; n <= 56; n += 4) sizes.push_back(n);
        }
        const SweepResult sweep = sweep_maxcut(sizes, catalog, config.weights, config.shots, config.seed);
        write_sweep_csvs(sweep, config.out_dir);
        for (const auto& row : sweep.rows) {
            std::cout << "n=" << row.size << " winner=" << row.winner << "\n";
        }
        std::cout << "wrote errors_wide.csv times_wide.csv prices_wide.csv winners.csv details.csv to "
                  << config.out_dir.string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        print_error(e);
        return classify_exit(e);
    }
}

int cmd_doctor(const RunConfig& config) {
    int failures = 0;
    auto check = [&](const std::string& name, auto&& fn) {
        try {
            const std::string detail = fn();
            std::cout << "ok    " << name << (detail.empty() ? "" : ": " + detail) << "\n";
        } catch (const std::exception& e) {
            std::cout << "fail  " << name << ": " << e.what() << "\n";
            ++failures;
        }
    };

    check("catalog", [&] {
        const auto catalog = catalog_for(config);
        std::set<std::string> providers;
        for (const auto& d : catalog) providers.insert(d.provider);
        return std::to_string(catalog.size()) + " devices from " + std::to_string(providers.size()) +
               " providers";
    });

    check("simulator", [&] {
        Circuit h;
        h.qubit_count = 1;
        h.add(GateKind::H, {0});
        const StateVector plus = simulate(h);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        if (std::abs(plus.amplitudes[0].real() - inv_sqrt2) > 1e-12 ||
            std::abs(plus.amplitudes[1].real() - inv_sqrt2) > 1e-12) {
            throw std::runtime_error("H gate basis check failed");
        }
        Circuit bell;
        bell.qubit_count = 2;
        bell.add(GateKind::X, {0});
        bell.add(GateKind::CX, {0, 1});
        const StateVector s = simulate(bell);
        if (std::abs(std::abs(s.amplitudes[3]) - 1.0) > 1e-12) {
            throw std::runtime_error("CX gate basis check failed");
        }
        return std::string("H/CX basis checks pass");
    });

    check("output-dir", [&] {
        std::filesystem::create_directories(config.out_dir);
        const auto probe = config.out_dir / ".qforge_doctor_probe";
        {
            std::ofstream out(probe, std::ios::binary);
            if (!out) throw IoError("cannot write in " + config.out_dir.string());
            out << "probe";
        }
        std::filesystem::remove(probe);
        return config.out_dir.string() + " is writable";
    });

    return failures == 0 ? 0 : 1;
}

} // namespace qforge
