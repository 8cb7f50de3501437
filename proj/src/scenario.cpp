#include "qmine/scenario.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qmine::netstats {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Strict object reader: every key must be consumed, leftovers are schema
// errors naming the offending key.
class ObjReader {
public:
    ObjReader(const json& obj, std::string path, std::string source)
        : obj_(obj), path_(std::move(path)), source_(std::move(source)) {
        if (!obj_.is_object()) {
            fail("expected an object");
        }
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ScenarioSchemaError(source_ + ": " + path_ + ": " + what);
    }

    bool has(const std::string& key) {
        return obj_.contains(key);
    }

    const json& child(const std::string& key) {
        if (!obj_.contains(key)) {
            fail("missing required key \"" + key + "\"");
        }
        seen_.insert(key);
        return obj_.at(key);
    }

    double number(const std::string& key) {
        const json& v = child(key);
        if (!v.is_number()) {
            fail("key \"" + key + "\" must be a number");
        }
        return v.get<double>();
    }

    std::optional<double> optional_number(const std::string& key) {
        if (!obj_.contains(key)) {
            return std::nullopt;
        }
        return number(key);
    }

    std::int64_t integer(const std::string& key) {
        const json& v = child(key);
        if (!v.is_number_integer()) {
            fail("key \"" + key + "\" must be an integer");
        }
        return v.get<std::int64_t>();
    }

    std::string string(const std::string& key) {
        const json& v = child(key);
        if (!v.is_string()) {
            fail("key \"" + key + "\" must be a string");
        }
        return v.get<std::string>();
    }

    std::string child_path(const std::string& key) const {
        return path_ + "." + key;
    }

    const std::string& source() const { return source_; }

    void finish() const {
        for (const auto& [key, value] : obj_.items()) {
            (void)value;
            if (!seen_.contains(key)) {
                fail("unknown key \"" + key + "\" (strict schema)");
            }
        }
    }

private:
    const json& obj_;
    std::string path_;
    std::string source_;
    std::set<std::string> seen_;
};

classical::NetworkSnapshot read_network(const json& j, const std::string& path,
                                        const std::string& source) {
    ObjReader r(j, path, source);
    classical::NetworkSnapshot snap;
    snap.difficulty = r.number("difficulty");
    snap.network_hashrate_th_per_s = r.number("network_hashrate_th_per_s");
    snap.block_time_s = r.number("block_time_s");
    snap.network_energy_per_block_j = r.number("network_energy_per_block_j");
    const std::string target_text = r.string("max_target");
    try {
        snap.max_target = parse_biguint(target_text);
    } catch (const std::exception&) {
        r.fail("key \"max_target\" is not a valid integer literal");
    }
    snap.annual_consumption_twh = r.optional_number("annual_consumption_twh");
    r.finish();
    return snap;
}

classical::AsicSpec read_asic(const json& j, const std::string& path,
                              const std::string& source) {
    ObjReader r(j, path, source);
    classical::AsicSpec spec;
    spec.hashrate_th_per_s = r.number("hashrate_th_per_s");
    spec.nameplate_power_w = r.number("nameplate_power_w");
    spec.nameplate_energy_per_block_j = r.number("nameplate_energy_per_block_j");
    spec.nand_per_hash = r.integer("nand_per_hash");
    spec.bits_per_nand = r.number("bits_per_nand");
    r.finish();
    return spec;
}

quantum::QuantumArchitecture read_arch(const json& j, const std::string& path,
                                       const std::string& source) {
    ObjReader r(j, path, source);
    quantum::QuantumArchitecture arch;
    arch.label = r.string("label");
    arch.ecc_layers = static_cast<int>(r.integer("ecc_layers"));
    arch.measurements_per_ec_step = static_cast<int>(r.integer("measurements_per_ec_step"));
    arch.gates_per_iteration = static_cast<int>(r.integer("gates_per_iteration"));
    arch.corrected_qubits = static_cast<int>(r.integer("corrected_qubits"));
    arch.output_qubits = static_cast<int>(r.integer("output_qubits"));
    r.finish();
    return arch;
}

FixtureConstants read_fixture_constants(const json& j, const std::string& path,
                                        const std::string& source) {
    ObjReader r(j, path, source);
    FixtureConstants fc;
    fc.bits_per_block_override = r.optional_number("bits_per_block_override");
    fc.ec_steps_paper = r.optional_number("ec_steps_paper");
    fc.rounded_share = r.optional_number("rounded_share");
    r.finish();
    return fc;
}

}  // namespace

void Scenario::validate() const {
    try {
        if (schema_version != kSchemaVersion) {
            throw std::invalid_argument("schema_version must be " +
                                        std::to_string(kSchemaVersion));
        }
        if (name.empty()) {
            throw std::invalid_argument("name must not be empty");
        }
        network.validate();
        asic.validate();
        for (const auto& arch : quantum_architectures) {
            arch.validate();
        }
        if (ratios.empty()) {
            throw std::invalid_argument("ratios must not be empty");
        }
        for (double r : ratios) {
            if (!std::isfinite(r) || r <= 0.0) {
                throw std::invalid_argument("ratios entries must be finite and > 0");
            }
        }
        if (fixture_constants.ec_steps_paper && *fixture_constants.ec_steps_paper < 0.0) {
            throw std::invalid_argument("fixture_constants.ec_steps_paper must be >= 0");
        }
        if (fixture_constants.rounded_share &&
            (*fixture_constants.rounded_share <= 0.0 || *fixture_constants.rounded_share > 1.0)) {
            throw std::invalid_argument("fixture_constants.rounded_share must be in (0, 1]");
        }
    } catch (const std::invalid_argument& e) {
        throw ScenarioValidationError("scenario \"" + name + "\": " + e.what());
    } catch (const std::domain_error& e) {
        throw ScenarioValidationError("scenario \"" + name + "\": " + e.what());
    }
}

Scenario parse_scenario(const std::string& text, const std::string& source) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioParseError(source + ": " + e.what());
    }
    ObjReader r(j, "$", source);
    Scenario s;
    const std::int64_t version = r.integer("schema_version");
    s.schema_version = static_cast<int>(version);
    s.name = r.string("name");
    s.network = read_network(r.child("network"), "$.network", source);
    s.asic = read_asic(r.child("asic"), "$.asic", source);

    const json& archs = r.child("quantum_architectures");
    if (!archs.is_array()) {
        r.fail("key \"quantum_architectures\" must be an array");
    }
    for (std::size_t i = 0; i < archs.size(); ++i) {
        s.quantum_architectures.push_back(read_arch(
            archs[i], "$.quantum_architectures[" + std::to_string(i) + "]", source));
    }

    const json& ratios = r.child("ratios");
    if (!ratios.is_array()) {
        r.fail("key \"ratios\" must be an array");
    }
    for (const auto& v : ratios) {
        if (!v.is_number()) {
            r.fail("\"ratios\" entries must be numbers");
        }
        s.ratios.push_back(v.get<double>());
    }

    const double temp = r.number("temperature_k");
    if (!std::isfinite(temp) || temp <= 0.0) {
        throw ScenarioValidationError(source + ": $.temperature_k must be > 0");
    }
    s.temperature = physics::TemperatureK(temp);

    if (r.has("fixture_constants")) {
        s.fixture_constants = read_fixture_constants(r.child("fixture_constants"),
                                                     "$.fixture_constants", source);
    }
    r.finish();

    // The override lives with the fixture constants in the file but is an
    // AsicSpec knob in the model.
    s.asic.bits_per_block_override = s.fixture_constants.bits_per_block_override;

    s.validate();
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ScenarioIoError("cannot open scenario file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path.string());
}

std::string scenario_to_json(const Scenario& s) {
    ordered_json j;
    j["schema_version"] = s.schema_version;
    j["name"] = s.name;
    ordered_json net;
    net["difficulty"] = s.network.difficulty;
    net["network_hashrate_th_per_s"] = s.network.network_hashrate_th_per_s;
    net["block_time_s"] = s.network.block_time_s;
    net["network_energy_per_block_j"] = s.network.network_energy_per_block_j;
    net["max_target"] = to_hex_string(s.network.max_target);
    if (s.network.annual_consumption_twh) {
        net["annual_consumption_twh"] = *s.network.annual_consumption_twh;
    }
    j["network"] = std::move(net);
    ordered_json asic;
    asic["hashrate_th_per_s"] = s.asic.hashrate_th_per_s;
    asic["nameplate_power_w"] = s.asic.nameplate_power_w;
    asic["nameplate_energy_per_block_j"] = s.asic.nameplate_energy_per_block_j;
    asic["nand_per_hash"] = s.asic.nand_per_hash;
    asic["bits_per_nand"] = s.asic.bits_per_nand;
    j["asic"] = std::move(asic);
    j["quantum_architectures"] = ordered_json::array();
    for (const auto& arch : s.quantum_architectures) {
        ordered_json a;
        a["label"] = arch.label;
        a["ecc_layers"] = arch.ecc_layers;
        a["measurements_per_ec_step"] = arch.measurements_per_ec_step;
        a["gates_per_iteration"] = arch.gates_per_iteration;
        a["corrected_qubits"] = arch.corrected_qubits;
        a["output_qubits"] = arch.output_qubits;
        j["quantum_architectures"].push_back(std::move(a));
    }
    j["ratios"] = s.ratios;
    j["temperature_k"] = s.temperature.kelvin();
    ordered_json fc;
    if (s.fixture_constants.bits_per_block_override) {
        fc["bits_per_block_override"] = *s.fixture_constants.bits_per_block_override;
    }
    if (s.fixture_constants.ec_steps_paper) {
        fc["ec_steps_paper"] = *s.fixture_constants.ec_steps_paper;
    }
    if (s.fixture_constants.rounded_share) {
        fc["rounded_share"] = *s.fixture_constants.rounded_share;
    }
    j["fixture_constants"] = std::move(fc);
    return j.dump(2) + "\n";
}

const std::string& bundled_paper_fixture_json() {
    static const std::string text = R"json({
  "schema_version": 1,
  "name": "paper-2022",
  "network": {
    "difficulty": 2.8079e13,
    "network_hashrate_th_per_s": 201e6,
    "block_time_s": 600,
    "network_energy_per_block_j": 3.2267e9,
    "max_target": "0xffff0000000000000000000000000000000000000000000000000000",
    "annual_consumption_twh": 126.7
  },
  "asic": {
    "hashrate_th_per_s": 140,
    "nameplate_power_w": 3010,
    "nameplate_energy_per_block_j": 502,
    "nand_per_hash": 8588,
    "bits_per_nand": 0.625
  },
  "quantum_architectures": [
    {
      "label": "Non-ECC NISQ Miner",
      "ecc_layers": 0,
      "measurements_per_ec_step": 12,
      "gates_per_iteration": 1280,
      "corrected_qubits": 512,
      "output_qubits": 512
    },
    {
      "label": "1 Layer ECC Quantum Miner",
      "ecc_layers": 1,
      "measurements_per_ec_step": 12,
      "gates_per_iteration": 1280,
      "corrected_qubits": 512,
      "output_qubits": 512
    },
    {
      "label": "2 Layer ECC Quantum Miner",
      "ecc_layers": 2,
      "measurements_per_ec_step": 12,
      "gates_per_iteration": 1280,
      "corrected_qubits": 512,
      "output_qubits": 512
    }
  ],
  "ratios": [379, 1706],
  "temperature_k": 293.0,
  "fixture_constants": {
    "bits_per_block_override": 4.72e20,
    "ec_steps_paper": 1.1159814903e10,
    "rounded_share": 7.0e-7
  }
})json";
    return text;
}

const std::string& bundled_self_consistent_fixture_json() {
    static const std::string text = R"json({
  "schema_version": 1,
  "name": "self-consistent",
  "network": {
    "difficulty": 2.8079e13,
    "network_hashrate_th_per_s": 201e6,
    "block_time_s": 600,
    "network_energy_per_block_j": 3.2267e9,
    "max_target": "0xffff0000000000000000000000000000000000000000000000000000",
    "annual_consumption_twh": 126.7
  },
  "asic": {
    "hashrate_th_per_s": 140,
    "nameplate_power_w": 3010,
    "nameplate_energy_per_block_j": 502,
    "nand_per_hash": 8588,
    "bits_per_nand": 0.625
  },
  "quantum_architectures": [
    {
      "label": "Non-ECC NISQ Miner",
      "ecc_layers": 0,
      "measurements_per_ec_step": 12,
      "gates_per_iteration": 1280,
      "corrected_qubits": 512,
      "output_qubits": 512
    },
    {
      "label": "1 Layer ECC Quantum Miner",
      "ecc_layers": 1,
      "measurements_per_ec_step": 12,
      "gates_per_iteration": 1280,
      "corrected_qubits": 512,
      "output_qubits": 512
    },
    {
      "label": "2 Layer ECC Quantum Miner",
      "ecc_layers": 2,
      "measurements_per_ec_step": 12,
      "gates_per_iteration": 1280,
      "corrected_qubits": 512,
      "output_qubits": 512
    }
  ],
  "ratios": [379, 1706],
  "temperature_k": 293.0
})json";
    return text;
}

Scenario bundled_paper_scenario() {
    return parse_scenario(bundled_paper_fixture_json(), "<bundled paper-2022>");
}

Scenario bundled_self_consistent_scenario() {
    return parse_scenario(bundled_self_consistent_fixture_json(),
                          "<bundled self-consistent>");
}

report::ReportDocument race_report_document(const race::RaceConfig& config,
                                            const race::RaceReport& rep) {
    report::ReportDocument doc;
    doc.title = "Miner race report";
    doc.scenario_id = "seed=" + std::to_string(config.seed) +
                      " blocks=" + std::to_string(config.num_blocks);
    doc.label_header = "Agent";
    doc.columns = {"Blocks Won (count)", "Total Energy (J)",
                   "Energy per Won Block (J)"};
    for (const auto& a : rep.agents) {
        report::Row row;
        row.label = a.label;
        row.values = {static_cast<double>(a.blocks_won), a.total_energy_j};
        if (a.energy_per_won_block_j) {
            row.values.push_back(*a.energy_per_won_block_j);
        }
        doc.rows.push_back(std::move(row));
    }
    doc.rows.push_back({"Simulated Blocks (count)",
                        {static_cast<double>(rep.total_blocks)}});
    doc.rows.push_back({"Final Difficulty (dimensionless)", {rep.final_difficulty}});
    return doc;
}

void write_report_to(const report::ReportDocument& doc, report::Format format,
                     const std::string& destination) {
    if (destination.empty() || destination == "-") {
        report::write(doc, format, std::cout);
        return;
    }
    std::ofstream out(destination);
    if (!out) {
        throw ScenarioIoError("cannot open destination for writing: " + destination);
    }
    report::write(doc, format, out);
    if (!out.good()) {
        throw ScenarioIoError("write failed: " + destination);
    }
}

}  // namespace qmine::netstats
