#pragma once

#include <string>
#include <vector>

#include "qmine/report.hpp"
#include "qmine/scenario.hpp"

namespace qmine::tables {

// Full search space of the modeled PoW scheme (256-bit nonce).
BigUint full_search_space();

// End-to-end intermediate quantities for one scenario, computed once and
// shared by every table/report builder.
struct ArchCosts {
    std::string label;
    double ec_steps;
    double erased_bits;
    double landauer_j;
    std::vector<double> projected_j;  // one per scenario ratio
    double break_even;                // vs classical actual
};

struct PipelineResult {
    double share;              // exact hash-rate share
    double share_used;         // rounded fixture share when present
    double classical_landauer_j;
    double classical_actual_j;     // network attribution
    double classical_nameplate_j;
    std::vector<double> classical_projected_j;  // landauer * each ratio
    double classical_ratio;    // actual / landauer
    std::vector<ArchCosts> archs;
};

PipelineResult run_pipeline(const netstats::Scenario& scenario);

/// Energy-per-block table: one row per infrastructure, columns = Landauer
/// minimum plus one projected column per ratio.
report::ReportDocument energy_table(const netstats::Scenario& scenario);

/// Break-even table: Landauer minimum and the ratio at which each
/// infrastructure's energy equals the classical actual energy.
report::ReportDocument breakeven_table(const netstats::Scenario& scenario);

/// Methodology chain as a quantity list (share, attribution, erasure
/// counts, advantage, annual savings).
report::ReportDocument methodology_report(const netstats::Scenario& scenario);

// Published reference cells for --check. Row order: classical, then the
// scenario's architectures in declared order.
struct ReferenceCells {
    std::vector<std::vector<double>> energy;    // rows x (1 + ratios) columns
    std::vector<double> break_even;             // one per row
};
const ReferenceCells& published_reference();

struct CellDeviation {
    std::string row;
    std::string column;
    double computed;
    double reference;
    double rel_deviation;
};

std::vector<CellDeviation> check_energy_table(const netstats::Scenario& scenario);
std::vector<CellDeviation> check_breakeven_table(const netstats::Scenario& scenario);

double max_rel_deviation(const std::vector<CellDeviation>& cells);

}  // namespace qmine::tables
