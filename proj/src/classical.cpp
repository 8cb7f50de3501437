#include "qmine/classical.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qmine::classical {

namespace {

void require_positive(double v, const char* field) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw std::invalid_argument(std::string(field) + " must be finite and > 0");
    }
}

}  // namespace

void AsicSpec::validate() const {
    require_positive(hashrate_th_per_s, "AsicSpec.hashrate_th_per_s");
    require_positive(nameplate_power_w, "AsicSpec.nameplate_power_w");
    require_positive(nameplate_energy_per_block_j, "AsicSpec.nameplate_energy_per_block_j");
    if (nand_per_hash <= 0) {
        throw std::invalid_argument("AsicSpec.nand_per_hash must be > 0");
    }
    require_positive(bits_per_nand, "AsicSpec.bits_per_nand");
    if (bits_per_block_override &&
        (!std::isfinite(*bits_per_block_override) || *bits_per_block_override < 0.0)) {
        throw std::invalid_argument("AsicSpec.bits_per_block_override must be finite and >= 0");
    }
}

void NetworkSnapshot::validate() const {
    require_positive(difficulty, "NetworkSnapshot.difficulty");
    require_positive(network_hashrate_th_per_s, "NetworkSnapshot.network_hashrate_th_per_s");
    require_positive(block_time_s, "NetworkSnapshot.block_time_s");
    require_positive(network_energy_per_block_j, "NetworkSnapshot.network_energy_per_block_j");
    if (max_target <= 0 || max_target >= (BigUint(1) << 256)) {
        throw std::invalid_argument("NetworkSnapshot.max_target must be in (0, 2^256)");
    }
    if (annual_consumption_twh) {
        require_positive(*annual_consumption_twh, "NetworkSnapshot.annual_consumption_twh");
    }
}

double hashes_per_block(const AsicSpec& spec, const NetworkSnapshot& snap) {
    spec.validate();
    snap.validate();
    return spec.hashrate_th_per_s * 1e12 * snap.block_time_s;
}

double bits_erased_per_hash(const AsicSpec& spec) {
    spec.validate();
    return static_cast<double>(spec.nand_per_hash) * spec.bits_per_nand;
}

physics::ErasureLedger landauer_per_block(const AsicSpec& spec,
                                          const NetworkSnapshot& snap,
                                          physics::TemperatureK t) {
    const double bits = spec.bits_per_block_override
                            ? *spec.bits_per_block_override
                            : hashes_per_block(spec, snap) * bits_erased_per_hash(spec);
    return physics::erasure_energy(bits, t);
}

double network_share(const AsicSpec& spec, const NetworkSnapshot& snap) {
    spec.validate();
    snap.validate();
    return spec.hashrate_th_per_s / snap.network_hashrate_th_per_s;
}

double actual_energy_per_block(const AsicSpec& spec, const NetworkSnapshot& snap,
                               AttributionMethod method,
                               std::optional<double> share_override) {
    switch (method) {
        case AttributionMethod::kNetworkAttribution: {
            const double share = share_override ? *share_override : network_share(spec, snap);
            if (!std::isfinite(share) || share < 0.0) {
                throw std::invalid_argument("share must be finite and >= 0");
            }
            snap.validate();
            return snap.network_energy_per_block_j * share;
        }
        case AttributionMethod::kNameplate:
            spec.validate();
            return spec.nameplate_energy_per_block_j;
    }
    throw std::invalid_argument("unknown attribution method");
}

EfficiencyRatio efficiency_ratio(double actual_j, double landauer_j) {
    if (!std::isfinite(actual_j) || actual_j <= 0.0) {
        throw std::domain_error("efficiency_ratio: actual_j must be finite and > 0");
    }
    if (!std::isfinite(landauer_j) || landauer_j <= 0.0) {
        throw std::domain_error("efficiency_ratio: landauer_j must be finite and > 0");
    }
    return EfficiencyRatio{actual_j, landauer_j, actual_j / landauer_j};
}

}  // namespace qmine::classical
