#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmine/classical.hpp"
#include "qmine/physics.hpp"
#include "qmine/quantum.hpp"
#include "qmine/race.hpp"
#include "qmine/report.hpp"

namespace qmine::netstats {

inline constexpr int kSchemaVersion = 1;

struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// File missing / unreadable / unwritable.
struct ScenarioIoError : ScenarioError {
    using ScenarioError::ScenarioError;
};
// Not valid JSON.
struct ScenarioParseError : ScenarioError {
    using ScenarioError::ScenarioError;
};
// Valid JSON, wrong shape: unknown key, missing key, wrong type.
struct ScenarioSchemaError : ScenarioError {
    using ScenarioError::ScenarioError;
};
// Shape fine, values break a domain invariant.
struct ScenarioValidationError : ScenarioError {
    using ScenarioError::ScenarioError;
};

// Named overrides that pin published figures which cannot be recomputed
// from the other inputs. All optional; a fully self-consistent scenario
// sets none of them.
struct FixtureConstants {
    std::optional<double> bits_per_block_override;
    std::optional<double> ec_steps_paper;
    std::optional<double> rounded_share;
};

struct Scenario {
    std::string name;
    int schema_version = kSchemaVersion;
    classical::NetworkSnapshot network;
    classical::AsicSpec asic;
    std::vector<quantum::QuantumArchitecture> quantum_architectures;
    std::vector<double> ratios;
    physics::TemperatureK temperature{physics::kDefaultHeatSinkK};
    FixtureConstants fixture_constants;

    void validate() const;
};

/// Strict-schema load: unknown keys are rejected with the offending key
/// named; every error message carries source + field path.
Scenario load_scenario(const std::filesystem::path& path);
Scenario parse_scenario(const std::string& text, const std::string& source);

/// Full-precision serialization; load(parse(to_json(s))) == s.
std::string scenario_to_json(const Scenario& s);

const std::string& bundled_paper_fixture_json();
const std::string& bundled_self_consistent_fixture_json();
Scenario bundled_paper_scenario();
Scenario bundled_self_consistent_scenario();

/// Race report as a deterministic structured document (netstats_io owns all
/// report serialization).
report::ReportDocument race_report_document(const race::RaceConfig& config,
                                            const race::RaceReport& rep);

/// Write a rendered report to a file path or "-" for stdout.
void write_report_to(const report::ReportDocument& doc, report::Format format,
                     const std::string& destination);

}  // namespace qmine::netstats
