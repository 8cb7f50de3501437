#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <string>

#include "qmine/classical.hpp"
#include "qmine/grover.hpp"
#include "qmine/physics.hpp"
#include "qmine/quantum.hpp"
#include "qmine/race.hpp"
#include "qmine/report.hpp"
#include "qmine/scenario.hpp"
#include "qmine/tables.hpp"

namespace py = pybind11;
using namespace qmine;

namespace {

// cpp_int <-> arbitrary-precision python int, via decimal strings.
BigUint big_from_py(const py::int_& v) {
    return parse_biguint(py::str(v).cast<std::string>());
}

py::int_ big_to_py(const BigUint& v) {
    return py::int_(py::str(v.str()));
}

std::string render(const report::ReportDocument& doc, const std::string& format) {
    return report::to_string(doc, report::parse_format(format));
}

}  // namespace

PYBIND11_MODULE(qmine, m) {
    m.doc() = "Energy-cost model for classical vs quantum proof-of-work miners";

    // physics
    m.attr("BOLTZMANN_J_PER_K") = physics::kBoltzmannJPerK;
    m.attr("DEFAULT_HEAT_SINK_K") = physics::kDefaultHeatSinkK;
    m.def("landauer_bit_energy",
          [](double kelvin) { return physics::landauer_bit_energy(physics::TemperatureK(kelvin)); },
          py::arg("kelvin"));
    m.def("erasure_energy",
          [](double bits, double kelvin) {
              return physics::erasure_energy(bits, physics::TemperatureK(kelvin)).energy_joules;
          },
          py::arg("bits"), py::arg("kelvin"));

    // classical model
    py::class_<classical::AsicSpec>(m, "AsicSpec")
        .def(py::init<>())
        .def_readwrite("hashrate_th_per_s", &classical::AsicSpec::hashrate_th_per_s)
        .def_readwrite("nameplate_power_w", &classical::AsicSpec::nameplate_power_w)
        .def_readwrite("nameplate_energy_per_block_j",
                       &classical::AsicSpec::nameplate_energy_per_block_j)
        .def_readwrite("nand_per_hash", &classical::AsicSpec::nand_per_hash)
        .def_readwrite("bits_per_nand", &classical::AsicSpec::bits_per_nand)
        .def_readwrite("bits_per_block_override",
                       &classical::AsicSpec::bits_per_block_override);

    py::class_<classical::NetworkSnapshot>(m, "NetworkSnapshot")
        .def(py::init<>())
        .def_readwrite("difficulty", &classical::NetworkSnapshot::difficulty)
        .def_readwrite("network_hashrate_th_per_s",
                       &classical::NetworkSnapshot::network_hashrate_th_per_s)
        .def_readwrite("block_time_s", &classical::NetworkSnapshot::block_time_s)
        .def_readwrite("network_energy_per_block_j",
                       &classical::NetworkSnapshot::network_energy_per_block_j)
        .def_readwrite("annual_consumption_twh",
                       &classical::NetworkSnapshot::annual_consumption_twh)
        .def_property("max_target",
                      [](const classical::NetworkSnapshot& s) { return big_to_py(s.max_target); },
                      [](classical::NetworkSnapshot& s, const py::int_& v) {
                          s.max_target = big_from_py(v);
                      });

    py::enum_<classical::AttributionMethod>(m, "AttributionMethod")
        .value("NETWORK_ATTRIBUTION", classical::AttributionMethod::kNetworkAttribution)
        .value("NAMEPLATE", classical::AttributionMethod::kNameplate);

    m.def("hashes_per_block", &classical::hashes_per_block);
    m.def("bits_erased_per_hash", &classical::bits_erased_per_hash);
    m.def("classical_landauer_per_block",
          [](const classical::AsicSpec& spec, const classical::NetworkSnapshot& snap,
             double kelvin) {
              return classical::landauer_per_block(spec, snap, physics::TemperatureK(kelvin))
                  .energy_joules;
          },
          py::arg("spec"), py::arg("snapshot"), py::arg("kelvin"));
    m.def("network_share", &classical::network_share);
    m.def("actual_energy_per_block", &classical::actual_energy_per_block,
          py::arg("spec"), py::arg("snapshot"), py::arg("method"),
          py::arg("share_override") = std::nullopt);
    m.def("efficiency_ratio",
          [](double actual_j, double landauer_j) {
              return classical::efficiency_ratio(actual_j, landauer_j).ratio;
          });

    // quantum model
    py::class_<quantum::QuantumArchitecture>(m, "QuantumArchitecture")
        .def(py::init<>())
        .def_readwrite("label", &quantum::QuantumArchitecture::label)
        .def_readwrite("ecc_layers", &quantum::QuantumArchitecture::ecc_layers)
        .def_readwrite("measurements_per_ec_step",
                       &quantum::QuantumArchitecture::measurements_per_ec_step)
        .def_readwrite("gates_per_iteration",
                       &quantum::QuantumArchitecture::gates_per_iteration)
        .def_readwrite("corrected_qubits", &quantum::QuantumArchitecture::corrected_qubits)
        .def_readwrite("output_qubits", &quantum::QuantumArchitecture::output_qubits);

    m.def("pow_target_m",
          [](const py::int_& max_target, double difficulty) {
              return quantum::pow_target_m(big_from_py(max_target), difficulty);
          },
          py::arg("max_target"), py::arg("difficulty"));
    m.def("grover_iterations_paper",
          [](double n, double m_count) { return quantum::grover_iterations_paper(n, m_count); });
    m.def("grover_iterations_optimal", &quantum::grover_iterations_optimal);
    m.def("grover_success_probability", &quantum::grover_success_probability,
          py::arg("search_space"), py::arg("marked_count"), py::arg("iterations"));
    m.def("iterations_for_success", &quantum::iterations_for_success,
          py::arg("search_space"), py::arg("marked_count"), py::arg("p_target"));
    m.def("gate_count", &quantum::gate_count);
    m.def("ec_steps", &quantum::ec_steps);
    m.def("ec_steps_total",
          [](const py::int_& search_space, const py::int_& max_target, double difficulty,
             double g, double d) {
              return quantum::ec_steps_total(big_from_py(search_space),
                                             big_from_py(max_target), difficulty, g, d);
          });
    m.def("erased_bits", &quantum::erased_bits);
    m.def("quantum_landauer_energy",
          [](const quantum::QuantumArchitecture& arch, double steps, double kelvin) {
              return quantum::landauer_energy(arch, steps, physics::TemperatureK(kelvin));
          },
          py::arg("arch"), py::arg("ec_steps"), py::arg("kelvin"));
    m.def("projected_actual_energy", &quantum::projected_actual_energy);
    m.def("break_even_ratio", &quantum::break_even_ratio);
    m.def("advantage_factor", &quantum::advantage_factor);
    m.def("annual_savings_twh", &quantum::annual_savings_twh);

    // grover simulator
    py::class_<grover::ToyPowInstance>(m, "ToyPowInstance")
        .def(py::init<>())
        .def_readwrite("nonce_bits", &grover::ToyPowInstance::nonce_bits)
        .def_readwrite("digest_bits", &grover::ToyPowInstance::digest_bits)
        .def_readwrite("target", &grover::ToyPowInstance::target)
        .def("validate", &grover::ToyPowInstance::validate)
        .def_static("with_difficulty_target",
                    [](int nonce_bits, int digest_bits, std::uint64_t difficulty,
                       unsigned shift) {
                        return grover::ToyPowInstance::with_difficulty_target(
                            nonce_bits, digest_bits, difficulty, shift);
                    });

    py::class_<grover::MiningOutcome>(m, "MiningOutcome")
        .def_readonly("success_probability", &grover::MiningOutcome::success_probability)
        .def_readonly("sampled_nonce", &grover::MiningOutcome::sampled_nonce)
        .def_readonly("sample_satisfies_target",
                      &grover::MiningOutcome::sample_satisfies_target)
        .def_readonly("iterations_used", &grover::MiningOutcome::iterations_used);

    m.def("toy_hash", &grover::toy_hash);
    m.def("count_marked", &grover::count_marked);
    m.def("grover_run", &grover::run, py::arg("instance"), py::arg("iterations"),
          py::arg("seed"));

    // race simulator
    py::enum_<race::MinerKind>(m, "MinerKind")
        .value("CLASSICAL", race::MinerKind::kClassical)
        .value("QUANTUM", race::MinerKind::kQuantum);

    py::class_<race::MinerAgent>(m, "MinerAgent")
        .def(py::init([](race::MinerKind kind, double p, double energy,
                         const std::string& label) {
                 return race::MinerAgent{kind, p, energy, label};
             }),
             py::arg("kind"), py::arg("per_block_success_prob"),
             py::arg("energy_per_block_j"), py::arg("label"))
        .def_readwrite("kind", &race::MinerAgent::kind)
        .def_readwrite("per_block_success_prob", &race::MinerAgent::per_block_success_prob)
        .def_readwrite("energy_per_block_j", &race::MinerAgent::energy_per_block_j)
        .def_readwrite("label", &race::MinerAgent::label);

    py::class_<race::RaceConfig>(m, "RaceConfig")
        .def(py::init<>())
        .def_readwrite("agents", &race::RaceConfig::agents)
        .def_readwrite("num_blocks", &race::RaceConfig::num_blocks)
        .def_readwrite("seed", &race::RaceConfig::seed)
        .def_readwrite("retarget_interval_blocks", &race::RaceConfig::retarget_interval_blocks)
        .def_readwrite("target_block_time_s", &race::RaceConfig::target_block_time_s)
        .def_readwrite("difficulty", &race::RaceConfig::difficulty);

    py::class_<race::AgentStats>(m, "AgentStats")
        .def_readonly("label", &race::AgentStats::label)
        .def_readonly("blocks_won", &race::AgentStats::blocks_won)
        .def_readonly("total_energy_j", &race::AgentStats::total_energy_j)
        .def_readonly("energy_per_won_block_j", &race::AgentStats::energy_per_won_block_j);

    py::class_<race::RaceReport>(m, "RaceReport")
        .def_readonly("agents", &race::RaceReport::agents)
        .def_readonly("final_difficulty", &race::RaceReport::final_difficulty)
        .def_readonly("total_blocks", &race::RaceReport::total_blocks);

    m.def("retarget_difficulty", &race::retarget_difficulty);
    m.def("run_race", &race::run_race);
    m.def("race_report", [](const race::RaceConfig& config, const std::string& format) {
        return render(netstats::race_report_document(config, race::run_race(config)), format);
    }, py::arg("config"), py::arg("format") = "structured");

    // scenarios and tables
    py::class_<netstats::Scenario>(m, "Scenario")
        .def_readonly("name", &netstats::Scenario::name)
        .def_readonly("network", &netstats::Scenario::network)
        .def_readonly("asic", &netstats::Scenario::asic)
        .def_readonly("quantum_architectures", &netstats::Scenario::quantum_architectures)
        .def_readonly("ratios", &netstats::Scenario::ratios)
        .def_property_readonly("temperature_k", [](const netstats::Scenario& s) {
            return s.temperature.kelvin();
        })
        .def("to_json", &netstats::scenario_to_json);

    m.def("load_scenario", &netstats::load_scenario, py::arg("path"));
    m.def("parse_scenario", &netstats::parse_scenario, py::arg("text"), py::arg("source"));
    m.def("bundled_paper_scenario", &netstats::bundled_paper_scenario);
    m.def("bundled_self_consistent_scenario", &netstats::bundled_self_consistent_scenario);

    m.def("energy_table", [](const netstats::Scenario& s, const std::string& format) {
        return render(tables::energy_table(s), format);
    }, py::arg("scenario"), py::arg("format") = "text");
    m.def("breakeven_table", [](const netstats::Scenario& s, const std::string& format) {
        return render(tables::breakeven_table(s), format);
    }, py::arg("scenario"), py::arg("format") = "text");
    m.def("methodology_report", [](const netstats::Scenario& s, const std::string& format) {
        return render(tables::methodology_report(s), format);
    }, py::arg("scenario"), py::arg("format") = "text");
    m.def("check_energy_table", [](const netstats::Scenario& s) {
        py::list out;
        for (const auto& c : tables::check_energy_table(s)) {
            out.append(py::make_tuple(c.row, c.column, c.computed, c.reference,
                                      c.rel_deviation));
        }
        return out;
    });
    m.def("check_breakeven_table", [](const netstats::Scenario& s) {
        py::list out;
        for (const auto& c : tables::check_breakeven_table(s)) {
            out.append(py::make_tuple(c.row, c.column, c.computed, c.reference,
                                      c.rel_deviation));
        }
        return out;
    });

    py::register_exception<netstats::ScenarioError>(m, "ScenarioError");
}
