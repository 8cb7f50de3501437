#include <algorithm>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmine/grover.hpp"
#include "qmine/quantum.hpp"
#include "qmine/race.hpp"
#include "qmine/report.hpp"
#include "qmine/scenario.hpp"
#include "qmine/tables.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
    std::string scenario_path;
    double temperature_k = 0.0;  // 0 = scenario value
    std::vector<double> ratios;
    std::string format = "text";
    std::string destination = "-";
    std::uint64_t seed = 0;
};

qmine::netstats::Scenario load(const CommonOptions& opts) {
    qmine::netstats::Scenario s =
        opts.scenario_path.empty()
            ? qmine::netstats::bundled_paper_scenario()
            : qmine::netstats::load_scenario(opts.scenario_path);
    if (opts.temperature_k > 0.0) {
        s.temperature = qmine::physics::TemperatureK(opts.temperature_k);
    }
    if (!opts.ratios.empty()) {
        s.ratios = opts.ratios;
        s.validate();
    }
    return s;
}

void emit(const qmine::report::ReportDocument& doc, const CommonOptions& opts) {
    qmine::netstats::write_report_to(doc, qmine::report::parse_format(opts.format),
                                     opts.destination);
}

void print_deviations(const std::string& heading,
                      const std::vector<qmine::tables::CellDeviation>& cells) {
    std::cout << heading << "\n";
    for (const auto& c : cells) {
        std::cout << (c.rel_deviation <= 0.01 ? "  ok   " : "  WARN ") << c.row
                  << " / " << c.column << ": computed "
                  << qmine::report::format_sig4(c.computed) << ", published "
                  << qmine::report::format_sig4(c.reference) << ", rel dev "
                  << qmine::report::format_sig4(c.rel_deviation) << "\n";
    }
    std::cout << "  max relative deviation: "
              << qmine::report::format_sig4(qmine::tables::max_rel_deviation(cells))
              << "\n";
}

int cmd_tables(const CommonOptions& opts, bool check) {
    const auto scenario = load(opts);
    emit(qmine::tables::energy_table(scenario), opts);
    emit(qmine::tables::breakeven_table(scenario), opts);
    if (check) {
        print_deviations("check: energy table vs published values",
                         qmine::tables::check_energy_table(scenario));
        print_deviations("check: break-even table vs published values",
                         qmine::tables::check_breakeven_table(scenario));
    }
    return kExitOk;
}

int cmd_energy(const CommonOptions& opts) {
    emit(qmine::tables::energy_table(load(opts)), opts);
    return kExitOk;
}

int cmd_breakeven(const CommonOptions& opts) {
    emit(qmine::tables::breakeven_table(load(opts)), opts);
    return kExitOk;
}

struct GroverOptions {
    int qubits = 3;
    int digest_bits = 0;  // 0 = same as qubits
    std::optional<std::uint64_t> target;
    std::optional<std::uint64_t> marked;
    std::optional<int> iterations;
    std::optional<double> p_target;
};

int cmd_grover(const CommonOptions& opts, const GroverOptions& g) {
    using namespace qmine;
    const int digest_bits = g.digest_bits > 0 ? g.digest_bits : g.qubits;
    const double n = static_cast<double>(std::uint64_t{1} << g.qubits);

    // With neither --target nor --marked, run the textbook single-marked-state
    // demo instead of failing on an empty search.
    std::optional<std::uint64_t> marked_count = g.marked;
    if (!g.target && !marked_count) marked_count = 1;

    std::vector<std::uint32_t> marked;
    grover::ToyPowInstance instance;
    instance.nonce_bits = g.qubits;
    instance.digest_bits = digest_bits;
    bool have_instance = false;
    if (marked_count) {
        // Deterministic marked set of exactly M nonces: smallest by
        // (digest, nonce).
        if (*marked_count == 0 || *marked_count > static_cast<std::uint64_t>(n)) {
            throw std::domain_error("--marked must be in [1, 2^qubits]");
        }
        instance.target = (std::uint64_t{1} << digest_bits) - 1;
        std::vector<std::uint32_t> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(),
                  [&](std::uint32_t a, std::uint32_t b) {
                      const auto da = grover::toy_hash(a, instance);
                      const auto db = grover::toy_hash(b, instance);
                      return da != db ? da < db : a < b;
                  });
        marked.assign(order.begin(), order.begin() + *marked_count);
        std::sort(marked.begin(), marked.end());
    } else {
        instance.target = g.target.value_or(0);
        instance.validate();
        marked = grover::marked_indices(instance);
        have_instance = true;
    }
    const double m = static_cast<double>(marked.size());
    if (marked.empty()) {
        throw std::domain_error("no nonce satisfies the target; nothing to search for");
    }

    int t;
    if (g.iterations) {
        t = *g.iterations;
    } else if (g.p_target) {
        t = static_cast<int>(quantum::iterations_for_success(n, m, *g.p_target));
    } else {
        t = static_cast<int>(quantum::grover_iterations_optimal(n, m));
    }

    const double analytic = quantum::grover_success_probability(n, m, t);
    const auto outcome =
        have_instance ? grover::run(instance, t, opts.seed)
                      : grover::run_with_marked(g.qubits, marked, t, opts.seed);

    report::ReportDocument doc;
    doc.title = "Grover mining demo";
    doc.scenario_id = "n=" + std::to_string(g.qubits) + " seed=" + std::to_string(opts.seed);
    doc.columns = {"Value"};
    doc.rows.push_back({"Search space N (states)", {n}});
    doc.rows.push_back({"Marked count M (states)", {m}});
    doc.rows.push_back({"Iterations t (count)", {static_cast<double>(t)}});
    doc.rows.push_back({"Analytic success probability (fraction)", {analytic}});
    doc.rows.push_back({"Simulated success probability (fraction)",
                        {outcome.success_probability}});
    doc.rows.push_back({"Absolute gap (fraction)",
                        {std::abs(analytic - outcome.success_probability)}});
    doc.rows.push_back({"Sampled nonce (value)",
                        {static_cast<double>(outcome.sampled_nonce)}});
    doc.rows.push_back({"Sample satisfies target (boolean)",
                        {outcome.sample_satisfies_target ? 1.0 : 0.0}});
    emit(doc, opts);
    return kExitOk;
}

struct RaceOptions {
    std::uint64_t blocks = 2016;
    std::uint64_t retarget_interval = 2016;
    double target_block_time_s = 600.0;
};

int cmd_race(const CommonOptions& opts, const RaceOptions& r) {
    using namespace qmine;
    const auto scenario = load(opts);
    const auto pipeline = tables::run_pipeline(scenario);

    race::RaceConfig config;
    config.num_blocks = r.blocks;
    config.seed = opts.seed;
    config.retarget_interval_blocks = r.retarget_interval;
    config.target_block_time_s = r.target_block_time_s;
    config.difficulty = scenario.network.difficulty;
    config.agents.push_back({race::MinerKind::kClassical, pipeline.share_used,
                             pipeline.classical_actual_j, "Classical"});
    for (const auto& arch : pipeline.archs) {
        // Same win probability as the classical device, energy projected at
        // the last configured ratio.
        config.agents.push_back({race::MinerKind::kQuantum, pipeline.share_used,
                                 arch.projected_j.back(), arch.label});
    }
    emit(netstats::race_report_document(config, race::run_race(config)), opts);
    return kExitOk;
}

int cmd_validate(const CommonOptions& opts) {
    using namespace qmine::netstats;
    try {
        const auto s = load(opts);
        const auto ratio = qmine::classical::efficiency_ratio(
            qmine::classical::actual_energy_per_block(
                s.asic, s.network,
                qmine::classical::AttributionMethod::kNetworkAttribution,
                s.fixture_constants.rounded_share),
            qmine::classical::landauer_per_block(s.asic, s.network, s.temperature)
                .energy_joules);
        if (!ratio.physically_realizable()) {
            std::cout << "warning: classical efficiency ratio below 1 "
                         "(device beats the Landauer bound)\n";
        }
        std::cout << "scenario \"" << s.name << "\": valid\n";
        return kExitOk;
    } catch (const ScenarioIoError&) {
        throw;  // missing file is a usage error, not a verdict
    } catch (const ScenarioError& e) {
        std::cout << "scenario invalid: " << e.what() << "\n";
        return kExitValidationFailure;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Energy-cost pipeline for classical ASIC vs quantum proof-of-work "
                 "miners, with a desk-scale Grover simulator and a miner-race "
                 "simulator"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOptions opts;
    app.add_option("--scenario", opts.scenario_path,
                   "Scenario file (default: bundled paper-2022 fixture)");
    app.add_option("--temperature", opts.temperature_k,
                   "Heat-sink temperature override (K)");
    app.add_option("--ratio", opts.ratios, "Efficiency ratio list override")
        ->delimiter(',');
    app.add_option("--seed", opts.seed, "RNG seed");
    app.add_option("--format", opts.format, "Output format: text|csv|structured")
        ->check(CLI::IsMember({"text", "csv", "structured"}));
    app.add_option("--out", opts.destination, "Output destination path, or - for stdout");

    bool check = false;
    auto* tables_cmd =
        app.add_subcommand("tables", "Reproduce the energy and break-even tables");
    tables_cmd->add_flag("--check", check,
                         "Compare computed cells against the published values");

    app.add_subcommand("energy", "Per-infrastructure Landauer and projected energies");
    app.add_subcommand("breakeven", "Break-even efficiency ratios");

    GroverOptions grover_opts;
    auto* grover_cmd = app.add_subcommand("grover", "Exact statevector Grover demo");
    grover_cmd->add_option("-n,--qubits", grover_opts.qubits, "Nonce bits (<= 24)")
        ->check(CLI::Range(1, qmine::grover::kMaxQubits));
    grover_cmd->add_option("--digest-bits", grover_opts.digest_bits,
                           "Digest bits (default: same as --qubits)");
    auto* target_opt = grover_cmd->add_option("--target", grover_opts.target,
                                              "Mark nonces with digest <= target");
    grover_cmd->add_option("--marked", grover_opts.marked,
                           "Mark exactly M nonces (smallest digests first)")
        ->excludes(target_opt);
    auto* iter_opt = grover_cmd->add_option("-t,--iterations", grover_opts.iterations,
                                            "Grover iteration count");
    grover_cmd->add_option("--success", grover_opts.p_target,
                           "Choose iterations for this success probability")
        ->excludes(iter_opt);

    RaceOptions race_opts;
    auto* race_cmd = app.add_subcommand("race", "Seeded block-cycle miner race");
    race_cmd->add_option("--blocks", race_opts.blocks, "Number of block cycles");
    race_cmd->add_option("--retarget-interval", race_opts.retarget_interval,
                         "Blocks between difficulty retargets (0 disables)");
    race_cmd->add_option("--target-block-time", race_opts.target_block_time_s,
                         "Target block time (s)");

    app.add_subcommand("validate", "Validate a scenario file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand("tables")) return cmd_tables(opts, check);
        if (app.got_subcommand("energy")) return cmd_energy(opts);
        if (app.got_subcommand("breakeven")) return cmd_breakeven(opts);
        if (app.got_subcommand("grover")) return cmd_grover(opts, grover_opts);
        if (app.got_subcommand("race")) return cmd_race(opts, race_opts);
        if (app.got_subcommand("validate")) return cmd_validate(opts);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const qmine::netstats::ScenarioError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
