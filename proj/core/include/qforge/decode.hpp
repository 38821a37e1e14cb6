// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qforge/circuit.hpp"
#include "qforge/graph.hpp"
#include "qforge/problem.hpp"
#include "qforge/qubo.hpp"
#include "qforge/simulator.hpp"

namespace qforge {

struct SubsetSolution {
    std::vector<int> vertices; // ascending
    bool operator==(const SubsetSolution&) const = default;
};
struct ColoringSolution {
    std::vector<int> colors; // per vertex, -1 when the one-hot row is broken
    bool operator==(const ColoringSolution&) const = default;
};
struct TourSolution {
    std::vector<int> order; // canonical rotation/reflection
    bool operator==(const TourSolution&) const = default;
};
struct FactorSolution {
    long long p = 0;
    long long q = 0;
    bool operator==(const FactorSolution&) const = default;
};
struct IntegerSolution {
    long long value = 0;
    bool operator==(const IntegerSolution&) const = default;
};

using SolutionData =
    std::variant<SubsetSolution, ColoringSolution, TourSolution, FactorSolution, IntegerSolution>;

/// Decoded, feasibility-checked answer. The objective always comes from the
/// classical evaluator over the domain solution, never from the QUBO value.
struct Solution {
    ProblemFamily family = ProblemFamily::MaxCut;
    SolutionData data;
    double objective = 0.0;
    bool feasible = false;
    std::vector<std::string> violations;
    std::string bits; // decoded measurement bitstring (empty for arithmetic)
};

/// Everything decode needs besides the bits: the canonical instance.
struct DecodingContext {
    ProblemFamily family = ProblemFamily::MaxCut;
    Graph graph;        // graph families
    int k = 0;          // KColoring
    long long n = 0;    // Factor
};

/// True when the family maximizes its objective (MaxCut, MIS, Clique);
/// the others minimize.
bool family_maximizes(ProblemFamily f);

/// Inverts the QUBO's variable labels over a measured bitstring.
/// Throws DimensionError when lengths mismatch.
Solution decode_bits(const DecodingContext& ctx, const Qubo& q, const std::string& bits);

/// Decodes every observed outcome, keeps the feasible ones and returns the
/// best by classical objective; with no feasible outcome, returns the
/// least-violating one flagged infeasible. Ties break on higher count, then
/// lexicographically smaller bitstring.
Solution best_of(const Histogram& hist, const DecodingContext& ctx, const Qubo& q);

/// Reads the output register (b for ADD/SUB, product for MUL) from the unique
/// high-probability basis state; throws NonClassicalOutputError when no basis
/// state reaches probability 0.999.
Solution decode_arithmetic(const StateVector& state, const Circuit& c, ProblemFamily family);

} // namespace qforge
