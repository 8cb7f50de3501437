#include "qmine/grover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qmine/rng.hpp"

namespace qmine::grover {

void ToyPowInstance::validate() const {
    if (nonce_bits < 1 || nonce_bits > kMaxQubits) {
        throw std::domain_error("ToyPowInstance.nonce_bits must be in [1, 24]");
    }
    if (digest_bits < 1 || digest_bits > kMaxQubits) {
        throw std::domain_error("ToyPowInstance.digest_bits must be in [1, 24]");
    }
    if (target >= (std::uint64_t{1} << digest_bits)) {
        throw std::domain_error("ToyPowInstance.target must be < 2^digest_bits");
    }
    for (std::uint64_t m : hash_params.multipliers) {
        if ((m & 1) == 0) {
            throw std::domain_error("ToyPowInstance hash multipliers must be odd");
        }
    }
    if (hash_params.shift_a == 0 || hash_params.shift_a >= 64 ||
        hash_params.shift_b == 0 || hash_params.shift_b >= 64) {
        throw std::domain_error("ToyPowInstance hash shifts must be in [1, 63]");
    }
}

ToyPowInstance ToyPowInstance::with_difficulty_target(int nonce_bits, int digest_bits,
                                                      std::uint64_t difficulty,
                                                      unsigned shift,
                                                      HashParams params) {
    if (digest_bits < 1 || digest_bits > kMaxQubits) {
        throw std::domain_error("with_difficulty_target: digest_bits must be in [1, 24]");
    }
    const std::uint64_t space = std::uint64_t{1} << digest_bits;
    if (difficulty == 0 || shift >= 64 ||
        difficulty > (space >> std::min<unsigned>(shift, 63u))) {
        throw std::domain_error(
            "with_difficulty_target: difficulty * 2^shift outside (0, 2^digest_bits]");
    }
    const std::uint64_t subtracted = difficulty << shift;
    ToyPowInstance inst;
    inst.nonce_bits = nonce_bits;
    inst.digest_bits = digest_bits;
    inst.hash_params = params;
    inst.target = space - subtracted;
    if (inst.target >= space) {
        throw std::domain_error("with_difficulty_target: target out of digest range");
    }
    inst.validate();
    return inst;
}

std::uint64_t toy_hash(std::uint64_t nonce, const ToyPowInstance& instance) {
    instance.validate();
    if (nonce >= (std::uint64_t{1} << instance.nonce_bits)) {
        throw std::domain_error("toy_hash: nonce out of range");
    }
    const auto& p = instance.hash_params;
    std::uint64_t x = nonce;
    for (std::uint64_t m : p.multipliers) {
        x += m;  // round constant, keeps 0 off the fixed point
        x ^= x >> p.shift_a;
        x *= m;
        x ^= x >> p.shift_b;
    }
    return x & ((std::uint64_t{1} << instance.digest_bits) - 1);
}

std::uint64_t count_marked(const ToyPowInstance& instance) {
    instance.validate();
    const std::uint64_t n = std::uint64_t{1} << instance.nonce_bits;
    std::uint64_t count = 0;
    for (std::uint64_t nonce = 0; nonce < n; ++nonce) {
        if (toy_hash(nonce, instance) <= instance.target) {
            ++count;
        }
    }
    return count;
}

std::vector<std::uint32_t> marked_indices(const ToyPowInstance& instance) {
    instance.validate();
    const std::uint64_t n = std::uint64_t{1} << instance.nonce_bits;
    std::vector<std::uint32_t> marked;
    for (std::uint64_t nonce = 0; nonce < n; ++nonce) {
        if (toy_hash(nonce, instance) <= instance.target) {
            marked.push_back(static_cast<std::uint32_t>(nonce));
        }
    }
    return marked;
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto& a : amplitudes) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

StateVector init_uniform(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::length_error("init_uniform: num_qubits must be in [1, 24]");
    }
    const std::size_t n = std::size_t{1} << num_qubits;
    StateVector state;
    state.num_qubits = num_qubits;
    state.amplitudes.assign(n, {1.0 / std::sqrt(static_cast<double>(n)), 0.0});
    return state;
}

void apply_oracle(StateVector& state, const std::vector<std::uint32_t>& marked) {
    for (std::uint32_t idx : marked) {
        if (idx >= state.size()) {
            throw std::domain_error("apply_oracle: marked index out of range");
        }
        state.amplitudes[idx] = -state.amplitudes[idx];
    }
}

void apply_oracle(StateVector& state, const ToyPowInstance& instance) {
    apply_oracle(state, marked_indices(instance));
}

void apply_diffusion(StateVector& state) {
    std::complex<double> sum{0.0, 0.0};
    for (const auto& a : state.amplitudes) {
        sum += a;
    }
    const std::complex<double> two_mean =
        2.0 * sum / static_cast<double>(state.size());
    for (auto& a : state.amplitudes) {
        a = two_mean - a;
    }
}

double marked_probability(const StateVector& state,
                          const std::vector<std::uint32_t>& marked) {
    double p = 0.0;
    for (std::uint32_t idx : marked) {
        p += std::norm(state.amplitudes[idx]);
    }
    return p;
}

std::uint64_t sample_basis_state(const StateVector& state, double unit_draw) {
    double cumulative = 0.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        cumulative += std::norm(state.amplitudes[i]);
        if (unit_draw < cumulative) {
            return i;
        }
    }
    return state.size() - 1;  // rounding slack lands on the last state
}

MiningOutcome run_with_marked(int num_qubits,
                              const std::vector<std::uint32_t>& marked,
                              int iterations, std::uint64_t seed) {
    if (iterations < 0) {
        throw std::domain_error("run: iterations must be >= 0");
    }
    StateVector state = init_uniform(num_qubits);
    for (int i = 0; i < iterations; ++i) {
        apply_oracle(state, marked);
        apply_diffusion(state);
    }
    MiningOutcome outcome;
    outcome.iterations_used = iterations;
    outcome.success_probability = marked_probability(state, marked);
    rng::SplitMix64 gen(rng::mix64(seed));
    outcome.sampled_nonce = sample_basis_state(state, gen.next_unit());
    outcome.sample_satisfies_target =
        std::binary_search(marked.begin(), marked.end(),
                           static_cast<std::uint32_t>(outcome.sampled_nonce));
    return outcome;
}

MiningOutcome run(const ToyPowInstance& instance, int iterations,
                  std::uint64_t seed) {
    const auto marked = marked_indices(instance);
    MiningOutcome outcome =
        run_with_marked(instance.nonce_bits, marked, iterations, seed);
    outcome.sample_satisfies_target =
        toy_hash(outcome.sampled_nonce, instance) <= instance.target;
    return outcome;
}

}  // namespace qmine::grover
