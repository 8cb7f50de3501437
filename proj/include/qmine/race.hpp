#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qmine::race {

enum class MinerKind { kClassical, kQuantum };

struct MinerAgent {
    MinerKind kind = MinerKind::kClassical;
    double per_block_success_prob = 0.0;  // in (0, 1]
    double energy_per_block_j = 0.0;
    std::string label;

    void validate() const;
};

struct RaceConfig {
    std::vector<MinerAgent> agents;
    std::uint64_t num_blocks = 0;
    std::uint64_t seed = 0;
    // 0 disables retargeting.
    std::uint64_t retarget_interval_blocks = 2016;
    double target_block_time_s = 600.0;
    double difficulty = 1.0;

    void validate() const;
};

struct AgentStats {
    std::string label;
    std::uint64_t blocks_won = 0;
    double total_energy_j = 0.0;
    // Absent when the agent never won a block.
    std::optional<double> energy_per_won_block_j;
};

struct RaceReport {
    std::vector<AgentStats> agents;
    double final_difficulty = 0.0;
    std::uint64_t total_blocks = 0;
};

/// Proportional retarget clamped to a factor of 4 per adjustment.
double retarget_difficulty(double current_difficulty,
                           double observed_mean_block_time_s, double target_s);

/// One attempt per agent per block cycle; at most one winner per block,
/// chosen uniformly among that block's successes (unclaimed blocks go to the
/// unmodeled remainder of the network). Deterministic given the seed;
/// per-agent draws come from decoupled substreams.
RaceReport run_race(const RaceConfig& config);

}  // namespace qmine::race
