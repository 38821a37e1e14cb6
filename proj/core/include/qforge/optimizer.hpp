// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qforge/qubo.hpp"

namespace qforge {

struct OptimizationResult {
    std::vector<double> best_gammas;
    std::vector<double> best_betas;
    double best_expectation = 0.0;
    int evaluations = 0;
    // Flattened parameters [gamma_1..gamma_p, beta_1..beta_p] per evaluation.
    std::vector<std::pair<std::vector<double>, double>> trace;
};

/// Two-phase QAOA parameter search: a coarse 8x8 grid over
/// (gamma, beta) in [0, pi) x [0, pi/2) for p = 1 (seeded per-layer samples of
/// the same grid for p > 1), then Nelder-Mead refinement from the best grid
/// point until `budget` total evaluations or relative improvement below 1e-6.
/// Deterministic given (q, layers, budget, seed); first-point tie-breaking on
/// flat landscapes.
OptimizationResult optimize_qaoa(const Qubo& q, int layers, int budget, std::uint64_t seed);

} // namespace qforge
