// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qforge/transpiler.hpp"

namespace qforge {

/// How a provider charges for one job; all rates are in abstract cost units.
struct PricingModel {
    enum class Kind { PerTaskSeconds, PerShotGates, CreditFormula };
    Kind kind = Kind::PerTaskSeconds;

    // PerTaskSeconds: rate * shots * (circuit duration + readout duration)
    double rate_per_second = 0.0;

    // PerShotGates: max(minimum, shots * (n1q * price_1q + n2q * price_2q))
    double price_1q = 0.0;
    double price_2q = 0.0;
    double minimum = 0.0;

    // CreditFormula: credit_price * (base_credits +
    //                shots * (n1q + alpha*n2q + beta*n_measured) / unit)
    double base_credits = 0.0;
    double unit = 1.0;
    double credit_price = 0.0;
    double alpha = 10.0;
    double beta = 5.0;
};

struct DeviceProfile {
    std::string name;
    std::string provider; // IBM, IonQ, IQM, Rigetti, Quantinuum
    int qubit_count = 0;
    CouplingMap coupling;
    NativeGateSet native;
    double error_1q = 0.0;
    double error_2q = 0.0;
    double error_readout = 0.0;
    double duration_1q = 0.0;      // seconds
    double duration_2q = 0.0;      // seconds
    double duration_readout = 0.0; // seconds
    PricingModel pricing;
    double queue_overhead = 0.0; // seconds
};

/// Parses and validates a catalog file; throws CatalogError naming the
/// offending field path.
std::vector<DeviceProfile> load_catalog(const std::filesystem::path& path);

/// Catalog from a JSON string (same schema as the file form).
std::vector<DeviceProfile> parse_catalog(const std::string& text, const std::string& origin);

/// The nine shipped profiles (2 IBM, 2 IonQ, 1 IQM, 2 Rigetti, 2 Quantinuum),
/// embedded at build time from core/data/devices.json.
std::vector<DeviceProfile> default_catalog();

/// Convenience overload with the device's per-kind gate durations.
TranspileMetrics device_metrics(const Circuit& transpiled, const DeviceProfile& d);

/// Full lowering pipeline against one device.
TranspileResult transpile_for(const Circuit& c, const DeviceProfile& d);

} // namespace qforge
