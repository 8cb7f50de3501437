#pragma once

#include <cstdint>
#include <string>

#include "qmine/bigint.hpp"
#include "qmine/classical.hpp"
#include "qmine/physics.hpp"

namespace qmine::quantum {

// Quantum miner architecture for the erasure-counting model.
// ecc_layers == 0 is a non-ECC NISQ device: only the output register is
// ever erased.
struct QuantumArchitecture {
    std::string label;
    int ecc_layers = 0;              // n, concatenated Shor-code layers
    int measurements_per_ec_step = 12;  // c
    int gates_per_iteration = 1280;  // g
    int corrected_qubits = 512;      // d
    int output_qubits = 512;         // q

    void validate() const;
};

struct GroverPlan {
    BigUint search_space;       // N, exact
    double marked_count;        // M
    double iterations;          // t
    double success_probability; // p
};

struct EccCost {
    double gate_count;   // E = t * g
    double ec_steps;     // E * d
    double erased_bits;  // ec_steps * c^n + q  (q alone when n == 0)
};

/// M = maxTarget / difficulty, real-valued.
double pow_target_m(const BigUint& max_target, double difficulty);

/// t = sqrt(N / M). This is the iteration count the cost model uses.
double grover_iterations_paper(double search_space, double marked_count);
double grover_iterations_paper(const BigUint& search_space, double marked_count);

/// Standard optimal count floor((pi/4) * sqrt(N/M)), kept separate so the
/// cost model can use exactly the sqrt(N/M) form above.
std::uint64_t grover_iterations_optimal(double search_space, double marked_count);

/// p = sin^2((2t+1) * asin(sqrt(M/N))).
double grover_success_probability(double search_space, double marked_count,
                                  std::uint64_t iterations);

/// Smallest integer t with success probability >= p_target, capped at the
/// t that maximizes the probability.
std::uint64_t iterations_for_success(double search_space, double marked_count,
                                     double p_target);

double gate_count(double iterations, double gates_per_iteration);

double ec_steps(double gate_count, double corrected_qubits);

/// Fused form: sqrt(N / (maxTarget/difficulty)) * g * d.
double ec_steps_total(const BigUint& search_space, const BigUint& max_target,
                      double difficulty, double gates_per_iteration,
                      double corrected_qubits);

double erased_bits(const QuantumArchitecture& arch, double ec_steps);

EccCost ecc_cost(const QuantumArchitecture& arch, double iterations);

double landauer_energy(const QuantumArchitecture& arch, double ec_steps,
                       physics::TemperatureK t);

/// Landauer minimum scaled by an assumed inefficiency ratio.
double projected_actual_energy(double landauer_j, double ratio);

/// Inefficiency ratio at which the quantum miner's energy equals the
/// classical actual energy per block.
double break_even_ratio(double classical_actual_j, double quantum_landauer_j);

double advantage_factor(double classical_actual_j, double quantum_actual_j);

/// TWh/year saved by replacing the network's consumption with miners that
/// use `advantage` times less energy.
double annual_savings_twh(const classical::NetworkSnapshot& snap, double advantage);

}  // namespace qmine::quantum
