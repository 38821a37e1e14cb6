// SPDX-License-Identifier: Apache-2.0
#include "qforge/qaoa.hpp"

#include <map>
#include <string>

#include "qforge/errors.hpp"

namespace qforge {

double IsingForm::energy(const Assignment& x) const {
    double e = constant;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const double z = x[i] ? -1.0 : 1.0;
        e += h[i] * z;
    }
    for (const auto& [i, k, j] : couplings) {
        const double zi = x[static_cast<std::size_t>(i)] ? -1.0 : 1.0;
        const double zk = x[static_cast<std::size_t>(k)] ? -1.0 : 1.0;
        e += j * zi * zk;
    }
    return e;
}

IsingForm ising_from_qubo(const Qubo& q) {
    IsingForm f;
    f.h.assign(static_cast<std::size_t>(q.dim), 0.0);
    f.constant = q.offset;
    // x_i = (1 - z_i)/2 with x_i^2 = x_i:
    //   q_ii x_i            -> q_ii/2 - (q_ii/2) z_i
    //   2 q_ik x_i x_k (i<k) -> q_ik/2 (1 - z_i - z_k + z_i z_k)
    for (int i = 0; i < q.dim; ++i) {
        const double d = q.at(i, i);
        f.constant += d / 2.0;
        f.h[static_cast<std::size_t>(i)] -= d / 2.0;
        for (int k = i + 1; k < q.dim; ++k) {
            const double c = q.at(i, k);
            if (c == 0.0) continue;
            f.constant += c / 2.0;
            f.h[static_cast<std::size_t>(i)] -= c / 2.0;
            f.h[static_cast<std::size_t>(k)] -= c / 2.0;
            f.couplings.emplace_back(i, k, c / 2.0);
        }
    }
    return f;
}

Circuit qaoa_circuit(const Qubo& q, int layers) {
    if (layers < 1) throw InputError("qaoa_circuit: layers must be >= 1");
    if (q.dim < 1) throw InputError("qaoa_circuit: empty QUBO");

    const IsingForm ising = ising_from_qubo(q);
    Circuit c;
    c.qubit_count = q.dim;
    c.registers.push_back(Register{"qaoa", RegisterRole::Qaoa, 0, q.dim});
    for (int l = 1; l <= layers; ++l) {
        c.parameters.push_back("gamma" + std::to_string(l));
        c.parameters.push_back("beta" + std::to_string(l));
    }

    for (int i = 0; i < q.dim; ++i) c.add(GateKind::H, {i});
    for (int l = 0; l < layers; ++l) {
        const int gamma_slot = 2 * l;
        const int beta_slot = 2 * l + 1;
        // Cost layer. Angles scale the bound parameter: RZ(2*gamma*h_i) is
        // stored as slot=gamma with angle holding the 2*h_i prefactor; bind()
        // multiplies in the parameter value.
        for (int i = 0; i < q.dim; ++i) {
            if (ising.h[static_cast<std::size_t>(i)] != 0.0) {
                c.add(GateKind::RZ, {i}, 2.0 * ising.h[static_cast<std::size_t>(i)], gamma_slot);
            }
        }
        for (const auto& [i, k, j] : ising.couplings) {
            c.add(GateKind::RZZ, {i, k}, 2.0 * j, gamma_slot);
        }
        // Mixer layer.
        for (int i = 0; i < q.dim; ++i) c.add(GateKind::RX, {i}, 2.0, beta_slot);
    }
    return c;
}

Circuit bind_qaoa(const Circuit& c, const std::vector<double>& gammas,
                  const std::vector<double>& betas) {
    std::map<std::string, double> values;
    for (std::size_t l = 0; l < gammas.size(); ++l) values["gamma" + std::to_string(l + 1)] = gammas[l];
    for (std::size_t l = 0; l < betas.size(); ++l) values["beta" + std::to_string(l + 1)] = betas[l];
    return bind(c, values);
}

} // namespace qforge
