#include "qmine/tables.hpp"

#include <cmath>
#include <stdexcept>

#include "qmine/classical.hpp"
#include "qmine/quantum.hpp"

namespace qmine::tables {

BigUint full_search_space() {
    return BigUint(1) << 256;
}

namespace {

double arch_ec_steps(const netstats::Scenario& s,
                     const quantum::QuantumArchitecture& arch) {
    if (arch.ecc_layers == 0) {
        return 0.0;  // never enters the erasure count
    }
    if (s.fixture_constants.ec_steps_paper) {
        return *s.fixture_constants.ec_steps_paper;
    }
    return quantum::ec_steps_total(full_search_space(), s.network.max_target,
                                   s.network.difficulty,
                                   static_cast<double>(arch.gates_per_iteration),
                                   static_cast<double>(arch.corrected_qubits));
}

}  // namespace

PipelineResult run_pipeline(const netstats::Scenario& s) {
    s.validate();
    PipelineResult out;
    out.share = classical::network_share(s.asic, s.network);
    out.share_used = s.fixture_constants.rounded_share.value_or(out.share);
    out.classical_landauer_j =
        classical::landauer_per_block(s.asic, s.network, s.temperature).energy_joules;
    out.classical_actual_j = classical::actual_energy_per_block(
        s.asic, s.network, classical::AttributionMethod::kNetworkAttribution,
        out.share_used);
    out.classical_nameplate_j = classical::actual_energy_per_block(
        s.asic, s.network, classical::AttributionMethod::kNameplate);
    for (double r : s.ratios) {
        out.classical_projected_j.push_back(
            quantum::projected_actual_energy(out.classical_landauer_j, r));
    }
    out.classical_ratio =
        classical::efficiency_ratio(out.classical_actual_j, out.classical_landauer_j).ratio;

    for (const auto& arch : s.quantum_architectures) {
        ArchCosts costs;
        costs.label = arch.label;
        costs.ec_steps = arch_ec_steps(s, arch);
        costs.erased_bits = quantum::erased_bits(arch, costs.ec_steps);
        costs.landauer_j = quantum::landauer_energy(arch, costs.ec_steps, s.temperature);
        for (double r : s.ratios) {
            costs.projected_j.push_back(
                quantum::projected_actual_energy(costs.landauer_j, r));
        }
        costs.break_even =
            quantum::break_even_ratio(out.classical_actual_j, costs.landauer_j);
        out.archs.push_back(std::move(costs));
    }
    return out;
}

report::ReportDocument energy_table(const netstats::Scenario& s) {
    const PipelineResult p = run_pipeline(s);
    report::ReportDocument doc;
    doc.title = "Energy consumption per block";
    doc.scenario_id = s.name;
    doc.label_header = "Infrastructure";
    doc.columns = {"Landauer Theoretical Minimum (J)"};
    for (double r : s.ratios) {
        doc.columns.push_back("Ratio (1:" + report::format_sig4(r) + ") (J)");
    }
    report::Row classical_row{"Classical", {p.classical_landauer_j}};
    classical_row.values.insert(classical_row.values.end(),
                                p.classical_projected_j.begin(),
                                p.classical_projected_j.end());
    doc.rows.push_back(std::move(classical_row));
    for (const auto& arch : p.archs) {
        report::Row row{arch.label, {arch.landauer_j}};
        row.values.insert(row.values.end(), arch.projected_j.begin(),
                          arch.projected_j.end());
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

report::ReportDocument breakeven_table(const netstats::Scenario& s) {
    const PipelineResult p = run_pipeline(s);
    report::ReportDocument doc;
    doc.title = "Required efficiency ratio to equal classical actual energy";
    doc.scenario_id = s.name;
    doc.label_header = "Infrastructure";
    doc.columns = {"Landauer Theoretical Minimum (J)",
                   "Ratio to Equal Classical Actual (dimensionless)"};
    doc.rows.push_back({"Classical", {p.classical_landauer_j, p.classical_ratio}});
    for (const auto& arch : p.archs) {
        doc.rows.push_back({arch.label, {arch.landauer_j, arch.break_even}});
    }
    return doc;
}

report::ReportDocument methodology_report(const netstats::Scenario& s) {
    const PipelineResult p = run_pipeline(s);
    report::ReportDocument doc;
    doc.title = "Methodology chain";
    doc.scenario_id = s.name;
    doc.label_header = "Quantity";
    doc.columns = {"Value"};
    doc.rows.push_back({"Network hash-rate share (fraction)", {p.share}});
    doc.rows.push_back({"Share used for attribution (fraction)", {p.share_used}});
    doc.rows.push_back({"Classical Landauer minimum per block (J)",
                        {p.classical_landauer_j}});
    doc.rows.push_back({"Classical actual, network attribution (J)",
                        {p.classical_actual_j}});
    doc.rows.push_back({"Classical actual, nameplate (J)", {p.classical_nameplate_j}});
    doc.rows.push_back({"Classical efficiency ratio (dimensionless)",
                        {p.classical_ratio}});
    for (const auto& arch : p.archs) {
        doc.rows.push_back({arch.label + ": error-correction steps (count)",
                            {arch.ec_steps}});
        doc.rows.push_back({arch.label + ": erased bits per block (bits)",
                            {arch.erased_bits}});
        doc.rows.push_back({arch.label + ": Landauer minimum (J)", {arch.landauer_j}});
        for (std::size_t i = 0; i < s.ratios.size(); ++i) {
            doc.rows.push_back(
                {arch.label + ": projected at 1:" + report::format_sig4(s.ratios[i]) + " (J)",
                 {arch.projected_j[i]}});
        }
        if (!arch.projected_j.empty()) {
            const double advantage = quantum::advantage_factor(
                p.classical_actual_j, arch.projected_j.back());
            doc.rows.push_back({arch.label + ": advantage factor (dimensionless)",
                                {advantage}});
            if (s.network.annual_consumption_twh) {
                doc.rows.push_back(
                    {arch.label + ": annual network savings (TWh/yr)",
                     {quantum::annual_savings_twh(s.network, advantage)}});
            }
        }
    }
    return doc;
}

const ReferenceCells& published_reference() {
    // Row order: classical, non-ECC, 1-layer, 2-layer. Energy columns:
    // Landauer minimum, ratio 379, ratio 1706.
    static const ReferenceCells cells{
        {
            {1.324, 502.0, 2258.69},
            {1.43e-18, 5.43e-16, 1.43e-15},
            {3.75e-10, 1.42e-7, 6.4e-7},
            {4.5e-9, 1.70e-6, 7.68e-6},
        },
        {1706.0, 1.575753e21, 6.02e12, 5.02e11},
    };
    return cells;
}

namespace {

std::vector<CellDeviation> deviations(const report::ReportDocument& doc,
                                      const std::vector<std::vector<double>>& reference) {
    std::vector<CellDeviation> out;
    for (std::size_t r = 0; r < doc.rows.size() && r < reference.size(); ++r) {
        const auto& row = doc.rows[r];
        const auto& ref = reference[r];
        for (std::size_t c = 0; c < row.values.size() && c < ref.size(); ++c) {
            const double computed = row.values[c];
            const double expected = ref[c];
            out.push_back(CellDeviation{
                row.label, doc.columns[c], computed, expected,
                std::abs(computed - expected) / std::abs(expected)});
        }
    }
    return out;
}

}  // namespace

std::vector<CellDeviation> check_energy_table(const netstats::Scenario& s) {
    return deviations(energy_table(s), published_reference().energy);
}

std::vector<CellDeviation> check_breakeven_table(const netstats::Scenario& s) {
    const auto& ref = published_reference().break_even;
    std::vector<std::vector<double>> padded;
    for (double v : ref) {
        padded.push_back({std::nan(""), v});  // skip the Landauer column
    }
    auto cells = deviations(breakeven_table(s), padded);
    std::erase_if(cells, [](const CellDeviation& c) { return std::isnan(c.reference); });
    return cells;
}

double max_rel_deviation(const std::vector<CellDeviation>& cells) {
    double worst = 0.0;
    for (const auto& c : cells) {
        worst = std::max(worst, c.rel_deviation);
    }
    return worst;
}

}  // namespace qmine::tables
