// SPDX-License-Identifier: Apache-2.0
#include "qforge/device.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "qforge/errors.hpp"
#include "qforge_default_catalog.hpp"

namespace qforge {

using nlohmann::json;

namespace {

[[noreturn]] void catalog_error(const std::string& origin, const std::string& path, const std::string& what) {
    throw CatalogError(origin + ": " + what + " (path: " + path + ")");
}

double require_number(const json& j, const std::string& origin, const std::string& path) {
    if (!j.is_number()) catalog_error(origin, path, "expected a number");
    return j.get<double>();
}

double probability_field(const json& dev, const std::string& origin, const std::string& path, const char* key) {
    if (!dev.contains(key)) catalog_error(origin, path + "." + key, "missing field");
    const double v = require_number(dev.at(key), origin, path + "." + key);
    if (!(v >= 0.0 && v < 1.0)) catalog_error(origin, path + "." + key, "probability must be in [0, 1)");
    return v;
}

double duration_field(const json& dev, const std::string& origin, const std::string& path, const char* key) {
    if (!dev.contains(key)) catalog_error(origin, path + "." + key, "missing field");
    const double v = require_number(dev.at(key), origin, path + "." + key);
    if (!(v > 0.0)) catalog_error(origin, path + "." + key, "duration must be positive");
    return v;
}

double rate_field(const json& obj, const std::string& origin, const std::string& path, const char* key,
                  double fallback, bool required) {
    if (!obj.contains(key)) {
        if (required) catalog_error(origin, path + "." + key, "missing field");
        return fallback;
    }
    const double v = require_number(obj.at(key), origin, path + "." + key);
    if (v < 0.0) catalog_error(origin, path + "." + key, "rate must be non-negative");
    return v;
}

GateKind gate_kind_from(const std::string& s, const std::string& origin, const std::string& path) {
    if (s == "X") return GateKind::X;
    if (s == "H") return GateKind::H;
    if (s == "SX") return GateKind::SX;
    if (s == "CX") return GateKind::CX;
    if (s == "CCX") return GateKind::CCX;
    if (s == "SWAP") return GateKind::Swap;
    if (s == "RX") return GateKind::RX;
    if (s == "RZ") return GateKind::RZ;
    if (s == "RZZ") return GateKind::RZZ;
    catalog_error(origin, path, "unknown gate kind \"" + s + "\"");
}

DeviceProfile parse_device(const json& dev, const std::string& origin, const std::string& path) {
    DeviceProfile d;
    if (!dev.contains("name") || !dev.at("name").is_string()) catalog_error(origin, path + ".name", "missing or non-string");
    d.name = dev.at("name").get<std::string>();

    static const std::set<std::string> kProviders = {"IBM", "IonQ", "IQM", "Rigetti", "Quantinuum"};
    if (!dev.contains("provider") || !dev.at("provider").is_string()) catalog_error(origin, path + ".provider", "missing or non-string");
    d.provider = dev.at("provider").get<std::string>();
    if (!kProviders.count(d.provider)) catalog_error(origin, path + ".provider", "unknown provider \"" + d.provider + "\"");

    if (!dev.contains("qubits") || !dev.at("qubits").is_number_integer()) catalog_error(origin, path + ".qubits", "missing or non-integer");
    d.qubit_count = dev.at("qubits").get<int>();
    if (d.qubit_count < 1) catalog_error(origin, path + ".qubits", "qubit count must be >= 1");

    const json& coupling = dev.contains("coupling") ? dev.at("coupling") : json();
    if (coupling.is_string() && coupling.get<std::string>() == "all_to_all") {
        d.coupling = CouplingMap::fully_connected(d.qubit_count);
    } else if (coupling.is_object() && coupling.contains("edges")) {
        d.coupling.physical_qubits = d.qubit_count;
        d.coupling.all_to_all = false;
        for (const auto& e : coupling.at("edges")) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
                catalog_error(origin, path + ".coupling.edges", "edges must be [a, b] integer pairs");
            }
            int a = e[0].get<int>(), b = e[1].get<int>();
            if (a == b || a < 0 || b < 0 || a >= d.qubit_count || b >= d.qubit_count) {
                catalog_error(origin, path + ".coupling.edges", "edge endpoints must be distinct qubits on the device");
            }
            d.coupling.edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(d.coupling.edges.begin(), d.coupling.edges.end());
        d.coupling.edges.erase(std::unique(d.coupling.edges.begin(), d.coupling.edges.end()), d.coupling.edges.end());
        if (!d.coupling.connected()) catalog_error(origin, path + ".coupling", "coupling graph must be connected");
    } else {
        catalog_error(origin, path + ".coupling", "expected \"all_to_all\" or an object with \"edges\"");
    }

    if (!dev.contains("native_gates") || !dev.at("native_gates").is_object()) {
        catalog_error(origin, path + ".native_gates", "missing object");
    }
    const json& ng = dev.at("native_gates");
    if (!ng.contains("gates") || !ng.at("gates").is_array() || ng.at("gates").empty()) {
        catalog_error(origin, path + ".native_gates.gates", "expected a non-empty array");
    }
    for (const auto& g : ng.at("gates")) {
        if (!g.is_string()) catalog_error(origin, path + ".native_gates.gates", "gate names must be strings");
        d.native.allowed.insert(gate_kind_from(g.get<std::string>(), origin, path + ".native_gates.gates"));
    }
    const std::string ent = ng.contains("entangler") && ng.at("entangler").is_string()
                                ? ng.at("entangler").get<std::string>()
                                : "cx";
    if (ent == "cx") {
        d.native.entangler = NativeGateSet::Entangler::CXClass;
    } else if (ent == "rzz") {
        d.native.entangler = NativeGateSet::Entangler::RZZClass;
    } else {
        catalog_error(origin, path + ".native_gates.entangler", "expected \"cx\" or \"rzz\"");
    }
    bool has_1q_rotation = d.native.allows(GateKind::RX) || d.native.allows(GateKind::RZ);
    bool has_2q = d.native.allows(GateKind::CX) || d.native.allows(GateKind::RZZ);
    if (!has_1q_rotation || !has_2q) {
        catalog_error(origin, path + ".native_gates", "need at least one 1-qubit rotation family and one 2-qubit gate");
    }

    d.error_1q = probability_field(dev, origin, path, "error_1q");
    d.error_2q = probability_field(dev, origin, path, "error_2q");
    d.error_readout = probability_field(dev, origin, path, "error_readout");
    d.duration_1q = duration_field(dev, origin, path, "duration_1q");
    d.duration_2q = duration_field(dev, origin, path, "duration_2q");
    d.duration_readout = duration_field(dev, origin, path, "duration_readout");
    d.queue_overhead = rate_field(dev, origin, path, "queue_overhead", 0.0, false);

    if (!dev.contains("pricing") || !dev.at("pricing").is_object()) catalog_error(origin, path + ".pricing", "missing object");
    const json& pr = dev.at("pricing");
    const std::string model = pr.contains("model") && pr.at("model").is_string() ? pr.at("model").get<std::string>() : "";
    const std::string ppath = path + ".pricing";
    if (model == "per_task_seconds") {
        d.pricing.kind = PricingModel::Kind::PerTaskSeconds;
        d.pricing.rate_per_second = rate_field(pr, origin, ppath, "rate_per_second", 0.0, true);
    } else if (model == "per_shot_gates") {
        d.pricing.kind = PricingModel::Kind::PerShotGates;
        d.pricing.price_1q = rate_field(pr, origin, ppath, "price_1q", 0.0, true);
        d.pricing.price_2q = rate_field(pr, origin, ppath, "price_2q", 0.0, true);
        d.pricing.minimum = rate_field(pr, origin, ppath, "minimum", 0.0, false);
    } else if (model == "credit_formula") {
        d.pricing.kind = PricingModel::Kind::CreditFormula;
        d.pricing.base_credits = rate_field(pr, origin, ppath, "base_credits", 0.0, true);
        d.pricing.unit = rate_field(pr, origin, ppath, "unit", 1.0, true);
        if (d.pricing.unit <= 0.0) catalog_error(origin, ppath + ".unit", "unit must be positive");
        d.pricing.credit_price = rate_field(pr, origin, ppath, "credit_price", 0.0, true);
        d.pricing.alpha = rate_field(pr, origin, ppath, "alpha", 10.0, false);
        d.pricing.beta = rate_field(pr, origin, ppath, "beta", 5.0, false);
    } else {
        catalog_error(origin, ppath + ".model", "expected per_task_seconds, per_shot_gates or credit_formula");
    }
    return d;
}

} // namespace

std::vector<DeviceProfile> parse_catalog(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw CatalogError(origin + ": malformed JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("devices") || !doc.at("devices").is_array()) {
        catalog_error(origin, "devices", "catalog must be an object with a \"devices\" array");
    }
    std::vector<DeviceProfile> out;
    std::set<std::string> names;
    const auto& arr = doc.at("devices");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        DeviceProfile d = parse_device(arr[i], origin, "devices[" + std::to_string(i) + "]");
        if (!names.insert(d.name).second) {
            catalog_error(origin, "devices[" + std::to_string(i) + "].name", "duplicate device name \"" + d.name + "\"");
        }
        out.push_back(std::move(d));
    }
    if (out.empty()) catalog_error(origin, "devices", "catalog lists no devices");
    return out;
}

std::vector<DeviceProfile> load_catalog(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CatalogError(path.string() + ": cannot open catalog file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str(), path.string());
}

std::vector<DeviceProfile> default_catalog() {
    return parse_catalog(detail::kDefaultCatalogJson, "<default catalog>");
}

TranspileMetrics device_metrics(const Circuit& transpiled, const DeviceProfile& d) {
    return metrics(transpiled, d.duration_1q, d.duration_2q);
}

TranspileResult transpile_for(const Circuit& c, const DeviceProfile& d) {
    return transpile(c, d.native, d.coupling, d.duration_1q, d.duration_2q);
}

} // namespace qforge
