#pragma once

#include <cmath>
#include <stdexcept>

namespace qmine::physics {

// 2019 SI redefinition: exact by definition.
inline constexpr double kBoltzmannJPerK = 1.380649e-23;
inline constexpr double kLn2 = 0.69314718055994530942;

// Heat-sink temperature used when a scenario does not say otherwise.
inline constexpr double kDefaultHeatSinkK = 293.0;

class TemperatureK {
public:
    explicit TemperatureK(double kelvin) : kelvin_(kelvin) {
        if (!std::isfinite(kelvin) || kelvin <= 0.0) {
            throw std::domain_error("TemperatureK: kelvin must be finite and > 0");
        }
    }
    double kelvin() const { return kelvin_; }

private:
    double kelvin_;
};

struct ErasureLedger {
    double bits_erased;
    TemperatureK temperature;
    double energy_joules;
};

/// Minimum energy dissipated per bit erased: k_B * T * ln2.
inline double landauer_bit_energy(TemperatureK t) {
    return kBoltzmannJPerK * t.kelvin() * kLn2;
}

/// Landauer minimum for erasing `bits` bits into a heat sink at temperature t.
inline ErasureLedger erasure_energy(double bits, TemperatureK t) {
    if (!std::isfinite(bits) || bits < 0.0) {
        throw std::domain_error("erasure_energy: bits must be finite and >= 0");
    }
    return ErasureLedger{bits, t, bits * landauer_bit_energy(t)};
}

}  // namespace qmine::physics
