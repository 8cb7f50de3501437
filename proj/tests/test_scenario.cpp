#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qmine/report.hpp"
#include "qmine/scenario.hpp"

using namespace qmine;

namespace {

std::string patch_paper_json(const std::string& pointer, nlohmann::json value) {
    auto j = nlohmann::json::parse(netstats::bundled_paper_fixture_json());
    j[nlohmann::json::json_pointer(pointer)] = std::move(value);
    return j.dump();
}

std::filesystem::path repo_scenario(const std::string& name) {
    return std::filesystem::path(QMINE_SCENARIO_DIR) / name;
}

}  // namespace

TEST_CASE("bundled paper fixture carries the published constants") {
    const auto s = netstats::bundled_paper_scenario();
    CHECK(s.name == "paper-2022");
    CHECK(s.asic.hashrate_th_per_s == 140.0);
    CHECK(s.network.network_hashrate_th_per_s == 201e6);
    CHECK(s.network.network_energy_per_block_j == 3.2267e9);
    CHECK(s.asic.nand_per_hash == 8588);
    CHECK(s.asic.bits_per_nand == 0.625);
    CHECK(s.network.max_target == BigUint(0xffff) << 208);
    CHECK(s.temperature.kelvin() == 293.0);
    CHECK(s.ratios == std::vector<double>{379.0, 1706.0});
    CHECK(*s.fixture_constants.bits_per_block_override == 4.72e20);
    CHECK(*s.fixture_constants.ec_steps_paper == 1.1159814903e10);
    CHECK(*s.fixture_constants.rounded_share == 7.0e-7);
    REQUIRE(s.quantum_architectures.size() == 3);
    CHECK(s.quantum_architectures[0].ecc_layers == 0);
    CHECK(s.quantum_architectures[1].ecc_layers == 1);
    CHECK(s.quantum_architectures[2].ecc_layers == 2);
    for (const auto& arch : s.quantum_architectures) {
        CHECK(arch.measurements_per_ec_step == 12);
        CHECK(arch.gates_per_iteration == 1280);
        CHECK(arch.output_qubits == 512);
    }
}

TEST_CASE("self-consistent fixture has no overrides") {
    const auto s = netstats::bundled_self_consistent_scenario();
    CHECK_FALSE(s.fixture_constants.bits_per_block_override.has_value());
    CHECK_FALSE(s.fixture_constants.ec_steps_paper.has_value());
    CHECK_FALSE(s.fixture_constants.rounded_share.has_value());
    CHECK_FALSE(s.asic.bits_per_block_override.has_value());
}

TEST_CASE("strict mode rejects unknown keys, naming them") {
    auto j = nlohmann::json::parse(netstats::bundled_paper_fixture_json());
    j["foo"] = 1;
    CHECK_THROWS_WITH_AS(netstats::parse_scenario(j.dump(), "test"),
                         doctest::Contains("\"foo\""), netstats::ScenarioSchemaError);

    j = nlohmann::json::parse(netstats::bundled_paper_fixture_json());
    j["network"]["typo_key"] = 2;
    CHECK_THROWS_WITH_AS(netstats::parse_scenario(j.dump(), "test"),
                         doctest::Contains("typo_key"), netstats::ScenarioSchemaError);
}

TEST_CASE("invariant violations name the offending field") {
    CHECK_THROWS_WITH_AS(
        netstats::parse_scenario(
            patch_paper_json("/network/network_hashrate_th_per_s", 0.0), "test"),
        doctest::Contains("network_hashrate_th_per_s"),
        netstats::ScenarioValidationError);
    CHECK_THROWS_AS(
        netstats::parse_scenario(patch_paper_json("/schema_version", 99), "test"),
        netstats::ScenarioValidationError);
    CHECK_THROWS_AS(netstats::parse_scenario("{ not json", "test"),
                    netstats::ScenarioParseError);
    CHECK_THROWS_AS(netstats::load_scenario("/definitely/not/here.json"),
                    netstats::ScenarioIoError);
}

TEST_CASE("missing required keys are schema errors") {
    auto j = nlohmann::json::parse(netstats::bundled_paper_fixture_json());
    j.erase("ratios");
    CHECK_THROWS_WITH_AS(netstats::parse_scenario(j.dump(), "test"),
                         doctest::Contains("ratios"), netstats::ScenarioSchemaError);
}

TEST_CASE("scenario serialization round-trips") {
    const auto original = netstats::bundled_paper_scenario();
    const auto restored =
        netstats::parse_scenario(netstats::scenario_to_json(original), "round-trip");
    CHECK(restored.name == original.name);
    CHECK(restored.network.difficulty == original.network.difficulty);
    CHECK(restored.network.max_target == original.network.max_target);
    CHECK(restored.asic.bits_per_nand == original.asic.bits_per_nand);
    CHECK(restored.temperature.kelvin() == original.temperature.kelvin());
    CHECK(restored.ratios == original.ratios);
    CHECK(*restored.fixture_constants.rounded_share ==
          *original.fixture_constants.rounded_share);
    CHECK(restored.quantum_architectures.size() ==
          original.quantum_architectures.size());
}

TEST_CASE("shipped scenario files match the bundled fixtures") {
    const auto paper = netstats::load_scenario(repo_scenario("paper-2022.json"));
    const auto bundled = netstats::bundled_paper_scenario();
    CHECK(netstats::scenario_to_json(paper) == netstats::scenario_to_json(bundled));

    const auto self = netstats::load_scenario(repo_scenario("self-consistent.json"));
    CHECK(netstats::scenario_to_json(self) ==
          netstats::scenario_to_json(netstats::bundled_self_consistent_scenario()));
}

TEST_CASE("structured report round-trips losslessly") {
    report::ReportDocument doc;
    doc.title = "t";
    doc.scenario_id = "s";
    doc.label_header = "Row";
    doc.columns = {"A (J)", "B (J)"};
    doc.rows = {{"x", {1.0 / 3.0, 2.258691234567891e3}},
                {"y, with \"comma\"", {1.4336e-18}}};

    std::stringstream structured(report::to_string(doc, report::Format::kStructured));
    const auto restored = report::read_structured(structured);
    CHECK(restored.title == doc.title);
    CHECK(restored.columns == doc.columns);
    REQUIRE(restored.rows.size() == doc.rows.size());
    for (std::size_t i = 0; i < doc.rows.size(); ++i) {
        CHECK(restored.rows[i].label == doc.rows[i].label);
        CHECK(restored.rows[i].values == doc.rows[i].values);  // bit-exact
    }

    std::stringstream csv(report::to_string(doc, report::Format::kCsv));
    const auto cells = report::parse_csv(csv);
    REQUIRE(cells.size() == 3);
    CHECK(cells[0][0] == "Row");
    CHECK(cells[2][0] == "y, with \"comma\"");
    CHECK(std::stod(cells[1][1]) == 1.0 / 3.0);           // full precision
    CHECK(std::stod(cells[1][2]) == 2.258691234567891e3);
    CHECK(std::stod(cells[2][1]) == 1.4336e-18);
}

TEST_CASE("empty row list writes a header-only document") {
    report::ReportDocument doc;
    doc.title = "empty";
    doc.columns = {"A (J)"};
    for (auto format : {report::Format::kText, report::Format::kCsv,
                        report::Format::kStructured}) {
        CHECK_NOTHROW(report::to_string(doc, format));
    }
    std::stringstream csv(report::to_string(doc, report::Format::kCsv));
    CHECK(report::parse_csv(csv).size() == 1);
}

TEST_CASE("full-precision formatting keeps at least 15 significant digits") {
    const double v = 2258.6912345678912;
    CHECK(std::stod(report::format_full(v)) == v);
    CHECK(std::stod(report::format_full(1.4336e-18)) == 1.4336e-18);
}

TEST_CASE("write_report_to rejects unwritable destinations") {
    report::ReportDocument doc;
    doc.columns = {"A (J)"};
    CHECK_THROWS_AS(
        netstats::write_report_to(doc, report::Format::kText, "/no/such/dir/out.txt"),
        netstats::ScenarioIoError);
}
