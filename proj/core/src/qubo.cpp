// SPDX-License-Identifier: Apache-2.0
#include "qforge/qubo.hpp"

#include <cmath>

#include "json.hpp"

#include "qforge/errors.hpp"

namespace qforge {

std::string VarLabel::text() const {
    switch (kind) {
    case Kind::Vertex: return "vertex " + std::to_string(i);
    case Kind::VertexColor: return "vertex " + std::to_string(i) + " color " + std::to_string(j);
    case Kind::VertexPosition: return "vertex " + std::to_string(i) + " position " + std::to_string(j);
    case Kind::FactorP: return "p_" + std::to_string(i);
    case Kind::FactorQ: return "q_" + std::to_string(i);
    case Kind::FactorAncilla: return "w_" + std::to_string(i) + "," + std::to_string(j);
    }
    return "?";
}

void Qubo::add(int r, int c, double v) {
    if (r == c) {
        at(r, c) += v;
    } else {
        at(r, c) += v / 2.0;
        at(c, r) += v / 2.0;
    }
}

std::string Qubo::dump_json() const {
    nlohmann::json j;
    j["dim"] = dim;
    j["matrix"] = q;
    j["offset"] = offset;
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& l : var_labels) labels.push_back(l.text());
    j["labels"] = labels;
    return j.dump(2);
}

double evaluate(const Qubo& q, const Assignment& x) {
    if (static_cast<int>(x.size()) != q.dim) {
        throw DimensionError("evaluate: assignment length " + std::to_string(x.size()) +
                             " != qubo dim " + std::to_string(q.dim));
    }
    double value = q.offset;
    for (int i = 0; i < q.dim; ++i) {
        if (!x[static_cast<std::size_t>(i)]) continue;
        value += q.at(i, i);
        for (int j = i + 1; j < q.dim; ++j) {
            if (x[static_cast<std::size_t>(j)]) value += 2.0 * q.at(i, j);
        }
    }
    return value;
}

QuboTerms::QuboTerms(const Qubo& q) : offset(q.offset) {
    for (int i = 0; i < q.dim; ++i) {
        if (q.at(i, i) != 0.0) diagonal.push_back({i, q.at(i, i)});
        for (int j = i + 1; j < q.dim; ++j) {
            if (q.at(i, j) != 0.0) off.push_back({{i, j}, 2.0 * q.at(i, j)});
        }
    }
}

double QuboTerms::value_at(std::uint64_t x) const { return offset + terms_at(x); }

double QuboTerms::terms_at(std::uint64_t x) const {
    double v = 0.0;
    for (const auto& [i, c] : diagonal) {
        if (x >> i & 1u) v += c;
    }
    for (const auto& [ij, c] : off) {
        if ((x >> ij.first & 1u) && (x >> ij.second & 1u)) v += c;
    }
    return v;
}

BruteForceResult brute_force_minimum(const Qubo& q) {
    if (q.dim > 24) {
        throw SizeError("brute_force_minimum: dim " + std::to_string(q.dim) + " exceeds the 24-variable guard");
    }
    const QuboTerms terms(q);
    const std::uint64_t count = 1ULL << q.dim;
    constexpr double kTieTol = 1e-6;

    double best = terms.value_at(0);
    for (std::uint64_t x = 1; x < count; ++x) {
        best = std::min(best, terms.value_at(x));
    }

    BruteForceResult out;
    out.min_value = best;
    for (std::uint64_t x = 0; x < count; ++x) {
        if (terms.value_at(x) <= best + kTieTol) {
            out.minimizers.push_back(assignment_from_index(x, q.dim));
        }
    }
    return out;
}

Assignment assignment_from_index(std::uint64_t index, int dim) {
    Assignment x(static_cast<std::size_t>(dim), 0);
    for (int i = 0; i < dim; ++i) x[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(index >> i & 1u);
    return x;
}

std::uint64_t index_from_assignment(const Assignment& x) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i]) idx |= 1ULL << i;
    }
    return idx;
}

double uniform_mean(const Qubo& q) {
    // E[x_i] = 1/2, E[x_i x_j] = 1/4 under the uniform distribution.
    double mean = q.offset;
    for (int i = 0; i < q.dim; ++i) {
        mean += q.at(i, i) / 2.0;
        for (int j = i + 1; j < q.dim; ++j) mean += 2.0 * q.at(i, j) / 4.0;
    }
    return mean;
}

} // namespace qforge
