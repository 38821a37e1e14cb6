// SPDX-License-Identifier: Apache-2.0
#include "qforge/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qforge/errors.hpp"
#include "qforge/qaoa.hpp"
#include "qforge/rng.hpp"
#include "qforge/simulator.hpp"

namespace qforge {

namespace {

constexpr double kPi = std::numbers::pi;

struct Evaluator {
    const Qubo& qubo;
    Circuit circuit; // parametric
    int layers;
    int budget;
    OptimizationResult result;

    Evaluator(const Qubo& q, int p, int b) : qubo(q), circuit(qaoa_circuit(q, p)), layers(p), budget(b) {
        result.best_expectation = std::numeric_limits<double>::infinity();
    }

    bool exhausted() const { return result.evaluations >= budget; }

    double eval(const std::vector<double>& params) {
        if (exhausted()) return std::numeric_limits<double>::infinity();
        std::vector<double> gammas(params.begin(), params.begin() + layers);
        std::vector<double> betas(params.begin() + layers, params.end());
        const Circuit bound = bind_qaoa(circuit, gammas, betas);
        const double value = expectation_qubo(simulate(bound), qubo);
        ++result.evaluations;
        result.trace.emplace_back(params, value);
        if (value < result.best_expectation) {
            result.best_expectation = value;
            result.best_gammas = gammas;
            result.best_betas = betas;
        }
        return value;
    }
};

std::vector<double> grid_point(int gi, int bi) {
    return {static_cast<double>(gi) * kPi / 8.0, static_cast<double>(bi) * kPi / 16.0};
}

void nelder_mead(Evaluator& ev, std::vector<double> start) {
    const std::size_t d = start.size();
    const double step = kPi / 16.0;

    struct Point {
        std::vector<double> x;
        double f;
    };
    std::vector<Point> simplex;
    simplex.push_back({start, ev.eval(start)});
    for (std::size_t i = 0; i < d && !ev.exhausted(); ++i) {
        std::vector<double> x = start;
        x[i] += step;
        simplex.push_back({x, ev.eval(x)});
    }
    if (simplex.size() != d + 1) return;

    auto order = [&] {
        std::stable_sort(simplex.begin(), simplex.end(),
                         [](const Point& a, const Point& b) { return a.f < b.f; });
    };

    double prev_best = simplex.front().f;
    while (!ev.exhausted()) {
        order();
        // Centroid of all but the worst.
        std::vector<double> centroid(d, 0.0);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t k = 0; k < d; ++k) centroid[k] += simplex[i].x[k];
        }
        for (double& c : centroid) c /= static_cast<double>(d);
        const Point& worst = simplex.back();

        auto blend = [&](double t) {
            std::vector<double> x(d);
            for (std::size_t k = 0; k < d; ++k) x[k] = centroid[k] + t * (centroid[k] - worst.x[k]);
            return x;
        };

        const auto reflected = blend(1.0);
        const double fr = ev.eval(reflected);
        if (fr < simplex.front().f && !ev.exhausted()) {
            const auto expanded = blend(2.0);
            const double fe = ev.eval(expanded);
            simplex.back() = fe < fr ? Point{expanded, fe} : Point{reflected, fr};
        } else if (fr < simplex[d - 1].f) {
            simplex.back() = {reflected, fr};
        } else if (!ev.exhausted()) {
            const bool outside = fr < worst.f;
            const auto contracted = blend(outside ? 0.5 : -0.5);
            const double fc = ev.eval(contracted);
            if (fc < std::min(fr, worst.f)) {
                simplex.back() = {contracted, fc};
            } else {
                // Shrink toward the best vertex.
                for (std::size_t i = 1; i <= d && !ev.exhausted(); ++i) {
                    for (std::size_t k = 0; k < d; ++k) {
                        simplex[i].x[k] = simplex[0].x[k] + 0.5 * (simplex[i].x[k] - simplex[0].x[k]);
                    }
                    simplex[i].f = ev.eval(simplex[i].x);
                }
            }
        }

        order();
        const double best = simplex.front().f;
        if (std::abs(prev_best - best) < 1e-6 * std::max(1.0, std::abs(prev_best))) break;
        prev_best = best;
    }
}

} // namespace

OptimizationResult optimize_qaoa(const Qubo& q, int layers, int budget, std::uint64_t seed) {
    if (layers < 1) throw InputError("optimize_qaoa: layers must be >= 1");
    if (budget < 1) throw InputError("optimize_qaoa: budget must be >= 1");

    Evaluator ev(q, layers, budget);

    if (layers == 1) {
        for (int gi = 0; gi < 8 && !ev.exhausted(); ++gi) {
            for (int bi = 0; bi < 8 && !ev.exhausted(); ++bi) ev.eval(grid_point(gi, bi));
        }
    } else {
        Rng rng(seed);
        for (int t = 0; t < 64 && !ev.exhausted(); ++t) {
            std::vector<double> params(static_cast<std::size_t>(2 * layers));
            for (int l = 0; l < layers; ++l) {
                params[static_cast<std::size_t>(l)] = static_cast<double>(rng.next_below(8)) * kPi / 8.0;
                params[static_cast<std::size_t>(layers + l)] = static_cast<double>(rng.next_below(8)) * kPi / 16.0;
            }
            ev.eval(params);
        }
    }

    if (!ev.exhausted()) {
        std::vector<double> start(ev.result.best_gammas);
        start.insert(start.end(), ev.result.best_betas.begin(), ev.result.best_betas.end());
        nelder_mead(ev, std::move(start));
    }
    return ev.result;
}

} // namespace qforge
