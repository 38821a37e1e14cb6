// SPDX-License-Identifier: Apache-2.0
#include "qforge/recommender.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <limits>
#include <numbers>
#include <thread>

#include "qforge/encoders.hpp"
#include "qforge/errors.hpp"
#include "qforge/graph.hpp"
#include "qforge/qaoa.hpp"
#include "qforge/rng.hpp"

namespace qforge {

namespace {

void check_weights(const Weights& w) {
    if (w.error < 0.0 || w.time < 0.0 || w.cost < 0.0) {
        throw InputError("weights must be non-negative");
    }
    if (!(w.error + w.time + w.cost > 0.0)) {
        throw InputError("at least one weight must be positive");
    }
}

// Min-max normalization over the eligible subset; a constant column maps to 0.
void normalize(std::vector<ScoreBreakdown>& rows, double ScoreBreakdown::* raw,
               double ScoreBreakdown::* norm) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& r : rows) {
        if (!r.eligible) continue;
        lo = std::min(lo, r.*raw);
        hi = std::max(hi, r.*raw);
    }
    for (auto& r : rows) {
        if (!r.eligible) continue;
        r.*norm = hi > lo ? (r.*raw - lo) / (hi - lo) : 0.0;
    }
}

std::vector<ScoreBreakdown> score_devices(const Circuit& c, const std::vector<DeviceProfile>& catalog,
                                          const Weights& weights, long long shots) {
    check_weights(weights);
    const double wsum = weights.error + weights.time + weights.cost;
    const double we = weights.error / wsum;
    const double wt = weights.time / wsum;
    const double wc = weights.cost / wsum;

    std::vector<ScoreBreakdown> rows;
    rows.reserve(catalog.size());
    for (const auto& d : catalog) {
        ScoreBreakdown row;
        row.device = d.name;
        row.provider = d.provider;
        if (c.qubit_count > d.qubit_count) {
            row.eligible = false;
            row.ineligible_reason = "needs " + std::to_string(c.qubit_count) + " qubits, device has " +
                                    std::to_string(d.qubit_count);
            rows.push_back(std::move(row));
            continue;
        }
        const TranspileResult tr = transpile_for(c, d);
        row.eligible = true;
        row.metrics = tr.metrics;
        row.raw_error = estimate_error(tr.metrics, d, c.qubit_count);
        row.raw_time = estimate_time(tr.metrics, d, shots);
        row.raw_cost = estimate_cost(tr.metrics, d, shots, c.qubit_count);
        rows.push_back(std::move(row));
    }

    normalize(rows, &ScoreBreakdown::raw_error, &ScoreBreakdown::norm_error);
    normalize(rows, &ScoreBreakdown::raw_time, &ScoreBreakdown::norm_time);
    normalize(rows, &ScoreBreakdown::raw_cost, &ScoreBreakdown::norm_cost);
    for (auto& r : rows) {
        if (r.eligible) r.total = we * r.norm_error + wt * r.norm_time + wc * r.norm_cost;
    }
    return rows;
}

const ScoreBreakdown* pick_winner(const std::vector<ScoreBreakdown>& rows) {
    const ScoreBreakdown* best = nullptr;
    for (const auto& r : rows) {
        if (!r.eligible) continue;
        if (!best) {
            best = &r;
            continue;
        }
        if (r.total < best->total ||
            (r.total == best->total &&
             (r.raw_error < best->raw_error ||
              (r.raw_error == best->raw_error && r.device < best->device)))) {
            best = &r;
        }
    }
    return best;
}

} // namespace

double estimate_error(const TranspileMetrics& m, const DeviceProfile& d, int n_measured) {
    const double p_ok = std::pow(1.0 - d.error_1q, m.count_1q) *
                        std::pow(1.0 - d.error_2q, m.count_2q) *
                        std::pow(1.0 - d.error_readout, n_measured);
    return 1.0 - p_ok;
}

double estimate_time(const TranspileMetrics& m, const DeviceProfile& d, long long shots) {
    return static_cast<double>(shots) * (m.estimated_duration + d.duration_readout) + d.queue_overhead;
}

double estimate_cost(const TranspileMetrics& m, const DeviceProfile& d, long long shots, int n_measured) {
    const auto& p = d.pricing;
    switch (p.kind) {
    case PricingModel::Kind::PerTaskSeconds:
        return p.rate_per_second * static_cast<double>(shots) * (m.estimated_duration + d.duration_readout);
    case PricingModel::Kind::PerShotGates: {
        const double computed = static_cast<double>(shots) *
                                (m.count_1q * p.price_1q + m.count_2q * p.price_2q);
        return std::max(p.minimum, computed);
    }
    case PricingModel::Kind::CreditFormula: {
        const double weighted = m.count_1q + p.alpha * m.count_2q + p.beta * n_measured;
        const double credits = p.base_credits + static_cast<double>(shots) * weighted / p.unit;
        return p.credit_price * credits;
    }
    }
    return 0.0;
}

Recommendation recommend(const Circuit& c, const std::vector<DeviceProfile>& catalog,
                         const Weights& weights, long long shots) {
    if (catalog.empty()) throw NoEligibleDeviceError("recommend: catalog is empty");
    Recommendation rec;
    rec.details = score_devices(c, catalog, weights, shots);
    const ScoreBreakdown* best = pick_winner(rec.details);
    if (!best) {
        throw NoEligibleDeviceError("recommend: no device offers " + std::to_string(c.qubit_count) + " qubits");
    }
    rec.winner = *best;
    return rec;
}

SweepResult sweep_maxcut(const std::vector<int>& sizes, const std::vector<DeviceProfile>& catalog,
                         const Weights& weights, long long shots, std::uint64_t seed) {
    check_weights(weights);
    for (int n : sizes) {
        if (n % 2 != 0 || n < 4) {
            throw InputError("sweep_maxcut: sizes must be even and >= 4 (3-regular existence), got " +
                             std::to_string(n));
        }
        if (n > 56) throw InputError("sweep_maxcut: sizes are capped at 56, got " + std::to_string(n));
    }

    SweepResult result;
    for (const auto& d : catalog) result.devices.push_back(d.name);
    result.rows.resize(sizes.size());

    auto build_row = [&](std::size_t i) {
        const int n = sizes[i];
        const Graph g = random_regular_graph(n, 3, derive_seed(seed, "sweep-" + std::to_string(n)));
        const Qubo q = qubo_maxcut(g);
        // Nominal angles; gate counts do not depend on the values.
        const Circuit bound = bind_qaoa(qaoa_circuit(q, 1), {std::numbers::pi / 4.0}, {std::numbers::pi / 8.0});

        SweepRow row;
        row.size = n;
        row.breakdowns = score_devices(bound, catalog, weights, shots);
        const ScoreBreakdown* best = pick_winner(row.breakdowns);
        if (!best) throw NoEligibleDeviceError("sweep_maxcut: no eligible device at n=" + std::to_string(n));
        row.winner = best->device;
        row.winner_score = best->total;
        result.rows[i] = std::move(row);
    };

    // Row fan-out; the ordered result vector is the reduction.
    const unsigned workers = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                                                static_cast<unsigned>(sizes.size()));
    if (workers <= 1 || sizes.size() <= 1) {
        for (std::size_t i = 0; i < sizes.size(); ++i) build_row(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::future<void>> futures;
        futures.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            futures.push_back(std::async(std::launch::async, [&] {
                for (std::size_t i = next.fetch_add(1); i < sizes.size(); i = next.fetch_add(1)) {
                    build_row(i);
                }
            }));
        }
        for (auto& f : futures) f.get();
    }
    return result;
}

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

class CsvWriter {
public:
    explicit CsvWriter(const std::filesystem::path& path) : out_(path, std::ios::binary) {
        if (!out_) throw IoError("cannot open " + path.string() + " for writing");
    }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << escape(cells[i]);
        }
        out_ << "\r\n"; // RFC 4180 line ending
    }

private:
    static std::string escape(const std::string& cell) {
        if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
        std::string quoted = "\"";
        for (char ch : cell) {
            if (ch == '"') quoted += '"';
            quoted += ch;
        }
        quoted += '"';
        return quoted;
    }

    std::ofstream out_;
};

void write_wide(const SweepResult& sweep, const std::filesystem::path& path,
                double ScoreBreakdown::* field) {
    CsvWriter csv(path);
    std::vector<std::string> header{"n"};
    header.insert(header.end(), sweep.devices.begin(), sweep.devices.end());
    csv.row(header);
    for (const auto& row : sweep.rows) {
        std::vector<std::string> cells{std::to_string(row.size)};
        for (const auto& b : row.breakdowns) {
            cells.push_back(b.eligible ? fmt6(b.*field) : std::string("NA"));
        }
        csv.row(cells);
    }
}

} // namespace

void write_sweep_csvs(const SweepResult& sweep, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    write_wide(sweep, out_dir / "errors_wide.csv", &ScoreBreakdown::raw_error);
    write_wide(sweep, out_dir / "times_wide.csv", &ScoreBreakdown::raw_time);
    write_wide(sweep, out_dir / "prices_wide.csv", &ScoreBreakdown::raw_cost);

    {
        CsvWriter csv(out_dir / "winners.csv");
        csv.row({"n", "winner", "score"});
        for (const auto& row : sweep.rows) {
            csv.row({std::to_string(row.size), row.winner, fmt6(row.winner_score)});
        }
    }
    {
        CsvWriter csv(out_dir / "details.csv");
        csv.row({"n", "device", "provider", "eligible", "reason", "raw_error", "raw_time", "raw_cost",
                 "norm_error", "norm_time", "norm_cost", "total", "depth", "count_1q", "count_2q",
                 "swap_count", "duration"});
        for (const auto& row : sweep.rows) {
            for (const auto& b : row.breakdowns) {
                if (b.eligible) {
                    csv.row({std::to_string(row.size), b.device, b.provider, "yes", "",
                             fmt6(b.raw_error), fmt6(b.raw_time), fmt6(b.raw_cost), fmt6(b.norm_error),
                             fmt6(b.norm_time), fmt6(b.norm_cost), fmt6(b.total),
                             std::to_string(b.metrics.depth), std::to_string(b.metrics.count_1q),
                             std::to_string(b.metrics.count_2q), std::to_string(b.metrics.swap_count),
                             fmt6(b.metrics.estimated_duration)});
                } else {
                    csv.row({std::to_string(row.size), b.device, b.provider, "no", b.ineligible_reason,
                             "NA", "NA", "NA", "NA", "NA", "NA", "NA", "NA", "NA", "NA", "NA", "NA"});
                }
            }
        }
    }
}

} // namespace qforge
