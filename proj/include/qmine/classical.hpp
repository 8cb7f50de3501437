#pragma once

#include <cstdint>
#include <optional>

#include "qmine/bigint.hpp"
#include "qmine/physics.hpp"

namespace qmine::classical {

// Classical ASIC miner characteristics. Counts per hash are real-valued:
// fractional bits-per-NAND figures are legitimate inputs.
struct AsicSpec {
    double hashrate_th_per_s = 0.0;
    double nameplate_power_w = 0.0;
    double nameplate_energy_per_block_j = 0.0;
    std::int64_t nand_per_hash = 0;
    double bits_per_nand = 0.0;
    // When set, replaces the computed hashes-per-block * bits-per-hash product.
    std::optional<double> bits_per_block_override;

    void validate() const;
};

struct NetworkSnapshot {
    double difficulty = 0.0;
    double network_hashrate_th_per_s = 0.0;
    double block_time_s = 0.0;
    double network_energy_per_block_j = 0.0;
    BigUint max_target;
    std::optional<double> annual_consumption_twh;

    void validate() const;
};

struct EfficiencyRatio {
    double actual_j;
    double landauer_j;
    double ratio;  // actual / landauer

    // Below 1 is physically impossible; flagged, not rejected.
    bool physically_realizable() const { return ratio >= 1.0; }
};

enum class AttributionMethod {
    kNetworkAttribution,  // network energy per block scaled by hash-rate share
    kNameplate,           // manufacturer-quoted joules per block
};

double hashes_per_block(const AsicSpec& spec, const NetworkSnapshot& snap);

double bits_erased_per_hash(const AsicSpec& spec);

physics::ErasureLedger landauer_per_block(const AsicSpec& spec,
                                          const NetworkSnapshot& snap,
                                          physics::TemperatureK t);

double network_share(const AsicSpec& spec, const NetworkSnapshot& snap);

// share_override lets a caller supply a rounded share (fixtures do this);
// it only applies to kNetworkAttribution.
double actual_energy_per_block(const AsicSpec& spec, const NetworkSnapshot& snap,
                               AttributionMethod method,
                               std::optional<double> share_override = std::nullopt);

EfficiencyRatio efficiency_ratio(double actual_j, double landauer_j);

}  // namespace qmine::classical
