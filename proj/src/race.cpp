#include "qmine/race.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qmine/rng.hpp"

namespace qmine::race {

void MinerAgent::validate() const {
    if (!std::isfinite(per_block_success_prob) || per_block_success_prob <= 0.0 ||
        per_block_success_prob > 1.0) {
        throw std::invalid_argument("MinerAgent.per_block_success_prob must be in (0, 1]");
    }
    if (!std::isfinite(energy_per_block_j) || energy_per_block_j <= 0.0) {
        throw std::invalid_argument("MinerAgent.energy_per_block_j must be > 0");
    }
}

void RaceConfig::validate() const {
    if (agents.empty()) {
        throw std::invalid_argument("RaceConfig.agents must not be empty");
    }
    for (const auto& a : agents) {
        a.validate();
    }
    if (num_blocks == 0) {
        throw std::invalid_argument("RaceConfig.num_blocks must be > 0");
    }
    if (retarget_interval_blocks > 0 && num_blocks < retarget_interval_blocks) {
        throw std::invalid_argument(
            "RaceConfig.num_blocks must be >= retarget_interval_blocks when retargeting");
    }
    if (!std::isfinite(target_block_time_s) || target_block_time_s <= 0.0) {
        throw std::invalid_argument("RaceConfig.target_block_time_s must be > 0");
    }
    if (!std::isfinite(difficulty) || difficulty <= 0.0) {
        throw std::invalid_argument("RaceConfig.difficulty must be > 0");
    }
}

double retarget_difficulty(double current_difficulty,
                           double observed_mean_block_time_s, double target_s) {
    if (current_difficulty <= 0.0 || observed_mean_block_time_s <= 0.0 || target_s <= 0.0) {
        throw std::domain_error("retarget_difficulty: inputs must be > 0");
    }
    const double proposed = current_difficulty * (target_s / observed_mean_block_time_s);
    return std::clamp(proposed, current_difficulty / 4.0, current_difficulty * 4.0);
}

RaceReport run_race(const RaceConfig& config) {
    config.validate();
    const std::size_t n_agents = config.agents.size();

    // Stream layout: one per agent, then block-time, then winner tie-break.
    // Both shared streams consume exactly one draw per block so that changing
    // one agent's parameters never shifts anyone else's sequence.
    std::vector<rng::SplitMix64> agent_streams;
    agent_streams.reserve(n_agents);
    for (std::size_t i = 0; i < n_agents; ++i) {
        agent_streams.push_back(rng::substream(config.seed, i));
    }
    rng::SplitMix64 blocktime_stream = rng::substream(config.seed, n_agents);
    rng::SplitMix64 tiebreak_stream = rng::substream(config.seed, n_agents + 1);

    std::vector<std::uint64_t> wins(n_agents, 0);
    std::vector<std::size_t> successes;
    successes.reserve(n_agents);

    double difficulty = config.difficulty;
    double interval_time_s = 0.0;
    std::uint64_t interval_blocks = 0;

    for (std::uint64_t block = 0; block < config.num_blocks; ++block) {
        successes.clear();
        for (std::size_t i = 0; i < n_agents; ++i) {
            if (agent_streams[i].next_unit() < config.agents[i].per_block_success_prob) {
                successes.push_back(i);
            }
        }
        const double tie_u = tiebreak_stream.next_unit();  // consumed unconditionally
        if (!successes.empty()) {
            const auto pick = static_cast<std::size_t>(
                tie_u * static_cast<double>(successes.size()));
            wins[successes[std::min(pick, successes.size() - 1)]] += 1;
        }

        // The unmodeled network's hash power is calibrated so the mean block
        // time equals the target at the configured difficulty.
        const double mean_time =
            config.target_block_time_s * (difficulty / config.difficulty);
        const double u = blocktime_stream.next_unit();
        interval_time_s += -mean_time * std::log1p(-u);
        interval_blocks += 1;

        if (config.retarget_interval_blocks > 0 &&
            interval_blocks == config.retarget_interval_blocks) {
            const double observed_mean = interval_time_s / static_cast<double>(interval_blocks);
            difficulty = retarget_difficulty(difficulty, observed_mean,
                                             config.target_block_time_s);
            interval_time_s = 0.0;
            interval_blocks = 0;
        }
    }

    RaceReport report;
    report.total_blocks = config.num_blocks;
    report.final_difficulty = difficulty;
    report.agents.reserve(n_agents);
    for (std::size_t i = 0; i < n_agents; ++i) {
        AgentStats stats;
        stats.label = config.agents[i].label;
        stats.blocks_won = wins[i];
        stats.total_energy_j =
            static_cast<double>(config.num_blocks) * config.agents[i].energy_per_block_j;
        if (wins[i] > 0) {
            stats.energy_per_won_block_j =
                stats.total_energy_j / static_cast<double>(wins[i]);
        }
        report.agents.push_back(std::move(stats));
    }
    return report;
}

}  // namespace qmine::race
