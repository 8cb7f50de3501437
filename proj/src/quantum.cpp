#include "qmine/quantum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qmine::quantum {

namespace {

void require_positive_int(int v, const char* field) {
    if (v <= 0) {
        throw std::invalid_argument(std::string(field) + " must be > 0");
    }
}

double check_search_pair(double n, double m) {
    if (!std::isfinite(n) || n <= 0.0) {
        throw std::domain_error("search space N must be finite and > 0");
    }
    if (!std::isfinite(m) || m <= 0.0) {
        throw std::domain_error("marked count M must be finite and > 0");
    }
    if (m > n) {
        throw std::domain_error("marked count M must not exceed search space N");
    }
    return n / m;
}

}  // namespace

void QuantumArchitecture::validate() const {
    if (ecc_layers < 0 || ecc_layers > 4) {
        throw std::invalid_argument("QuantumArchitecture.ecc_layers must be in [0, 4]");
    }
    require_positive_int(measurements_per_ec_step, "QuantumArchitecture.measurements_per_ec_step");
    require_positive_int(gates_per_iteration, "QuantumArchitecture.gates_per_iteration");
    require_positive_int(corrected_qubits, "QuantumArchitecture.corrected_qubits");
    require_positive_int(output_qubits, "QuantumArchitecture.output_qubits");
}

double pow_target_m(const BigUint& max_target, double difficulty) {
    if (!std::isfinite(difficulty) || difficulty <= 0.0) {
        throw std::domain_error("pow_target_m: difficulty must be finite and > 0");
    }
    if (max_target <= 0) {
        throw std::domain_error("pow_target_m: max_target must be > 0");
    }
    return static_cast<double>(max_target) / difficulty;
}

double grover_iterations_paper(double search_space, double marked_count) {
    return std::sqrt(check_search_pair(search_space, marked_count));
}

double grover_iterations_paper(const BigUint& search_space, double marked_count) {
    return grover_iterations_paper(static_cast<double>(search_space), marked_count);
}

std::uint64_t grover_iterations_optimal(double search_space, double marked_count) {
    const double ratio = check_search_pair(search_space, marked_count);
    return static_cast<std::uint64_t>(std::numbers::pi / 4.0 * std::sqrt(ratio));
}

double grover_success_probability(double search_space, double marked_count,
                                  std::uint64_t iterations) {
    check_search_pair(search_space, marked_count);
    const double theta = std::asin(std::sqrt(marked_count / search_space));
    const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
    return s * s;
}

std::uint64_t iterations_for_success(double search_space, double marked_count,
                                     double p_target) {
    check_search_pair(search_space, marked_count);
    if (!std::isfinite(p_target) || p_target <= 0.0 || p_target > 1.0) {
        throw std::domain_error("iterations_for_success: p_target must be in (0, 1]");
    }
    const double theta = std::asin(std::sqrt(marked_count / search_space));
    if (grover_success_probability(search_space, marked_count, 0) >= p_target) {
        return 0;
    }
    // First t on the rising branch with (2t+1)*theta >= asin(sqrt(p_target)).
    const double needed = std::asin(std::sqrt(p_target));
    const auto t = static_cast<std::uint64_t>(std::ceil((needed / theta - 1.0) / 2.0));
    // Cap at the iteration count maximizing the probability.
    const auto t_peak = static_cast<std::uint64_t>(
        std::llround((std::numbers::pi / (2.0 * theta) - 1.0) / 2.0));
    return t < t_peak ? t : t_peak;
}

double gate_count(double iterations, double gates_per_iteration) {
    if (iterations < 0.0 || gates_per_iteration < 0.0) {
        throw std::domain_error("gate_count: inputs must be >= 0");
    }
    return iterations * gates_per_iteration;
}

double ec_steps(double gate_count, double corrected_qubits) {
    if (gate_count < 0.0 || corrected_qubits < 0.0) {
        throw std::domain_error("ec_steps: inputs must be >= 0");
    }
    return gate_count * corrected_qubits;
}

double ec_steps_total(const BigUint& search_space, const BigUint& max_target,
                      double difficulty, double gates_per_iteration,
                      double corrected_qubits) {
    const double m = pow_target_m(max_target, difficulty);
    const double t = grover_iterations_paper(search_space, m);
    return ec_steps(gate_count(t, gates_per_iteration), corrected_qubits);
}

double erased_bits(const QuantumArchitecture& arch, double ec_steps_count) {
    arch.validate();
    if (!std::isfinite(ec_steps_count) || ec_steps_count < 0.0) {
        throw std::domain_error("erased_bits: ec_steps must be finite and >= 0");
    }
    if (arch.ecc_layers == 0) {
        // No data erased while the algorithm runs; only the output register.
        return static_cast<double>(arch.output_qubits);
    }
    double c_pow = 1.0;
    for (int i = 0; i < arch.ecc_layers; ++i) {
        c_pow *= static_cast<double>(arch.measurements_per_ec_step);
    }
    return ec_steps_count * c_pow + static_cast<double>(arch.output_qubits);
}

EccCost ecc_cost(const QuantumArchitecture& arch, double iterations) {
    const double gates = gate_count(iterations, arch.gates_per_iteration);
    const double steps = ec_steps(gates, arch.corrected_qubits);
    return EccCost{gates, steps, erased_bits(arch, steps)};
}

double landauer_energy(const QuantumArchitecture& arch, double ec_steps_count,
                       physics::TemperatureK t) {
    return physics::erasure_energy(erased_bits(arch, ec_steps_count), t).energy_joules;
}

double projected_actual_energy(double landauer_j, double ratio) {
    if (!std::isfinite(landauer_j) || landauer_j < 0.0) {
        throw std::domain_error("projected_actual_energy: landauer_j must be >= 0");
    }
    if (!std::isfinite(ratio) || ratio < 1.0) {
        throw std::domain_error("projected_actual_energy: ratio must be >= 1");
    }
    return landauer_j * ratio;
}

double break_even_ratio(double classical_actual_j, double quantum_landauer_j) {
    if (classical_actual_j <= 0.0 || quantum_landauer_j <= 0.0) {
        throw std::domain_error("break_even_ratio: inputs must be > 0");
    }
    return classical_actual_j / quantum_landauer_j;
}

double advantage_factor(double classical_actual_j, double quantum_actual_j) {
    if (classical_actual_j <= 0.0 || quantum_actual_j <= 0.0) {
        throw std::domain_error("advantage_factor: inputs must be > 0");
    }
    return classical_actual_j / quantum_actual_j;
}

double annual_savings_twh(const classical::NetworkSnapshot& snap, double advantage) {
    if (!snap.annual_consumption_twh) {
        throw std::invalid_argument(
            "annual_savings_twh: NetworkSnapshot.annual_consumption_twh is not set");
    }
    if (!std::isfinite(advantage) || advantage < 1.0) {
        throw std::domain_error("annual_savings_twh: advantage must be >= 1");
    }
    return *snap.annual_consumption_twh * (1.0 - 1.0 / advantage);
}

}  // namespace qmine::quantum
