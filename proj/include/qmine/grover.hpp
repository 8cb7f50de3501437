#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace qmine::grover {

// 2^24 amplitudes = 256 MiB would already be unpleasant; 24 doubles as both
// the statevector and toy-hash input cap.
inline constexpr int kMaxQubits = 24;

// Three rounds of add / xor-shift / multiply / xor-shift over 64-bit words.
// The defaults below are the documented constants; changing them changes
// every golden value downstream.
struct HashParams {
    std::array<std::uint64_t, 3> multipliers{
        0xff51afd7ed558ccdULL,
        0xc4ceb9fe1a85ec53ULL,
        0x9e3779b97f4a7c15ULL,
    };
    unsigned shift_a = 33;
    unsigned shift_b = 29;
};

struct ToyPowInstance {
    int nonce_bits = 0;   // search space is 2^nonce_bits
    int digest_bits = 0;  // digest truncated to this many low bits
    HashParams hash_params;
    std::uint64_t target = 0;  // nonce is marked when digest <= target

    void validate() const;

    /// Target rule of the full-scale protocol, scaled down:
    /// target = 2^digest_bits - difficulty * 2^shift. Errors when the result
    /// falls outside [0, 2^digest_bits).
    static ToyPowInstance with_difficulty_target(int nonce_bits, int digest_bits,
                                                 std::uint64_t difficulty,
                                                 unsigned shift,
                                                 HashParams params = {});
};

struct StateVector {
    int num_qubits = 0;
    std::vector<std::complex<double>> amplitudes;

    std::size_t size() const { return amplitudes.size(); }
    double norm() const;
};

struct MiningOutcome {
    double success_probability = 0.0;
    std::uint64_t sampled_nonce = 0;
    bool sample_satisfies_target = false;
    int iterations_used = 0;
};

std::uint64_t toy_hash(std::uint64_t nonce, const ToyPowInstance& instance);

/// Exact brute-force count of nonces with digest <= target.
std::uint64_t count_marked(const ToyPowInstance& instance);

/// Sorted list of marked nonces (the oracle's phase-flip set).
std::vector<std::uint32_t> marked_indices(const ToyPowInstance& instance);

StateVector init_uniform(int num_qubits);

void apply_oracle(StateVector& state, const std::vector<std::uint32_t>& marked);
void apply_oracle(StateVector& state, const ToyPowInstance& instance);

/// Inversion about the mean.
void apply_diffusion(StateVector& state);

double marked_probability(const StateVector& state,
                          const std::vector<std::uint32_t>& marked);

/// Sample a basis state from |amplitude|^2 with one uniform draw.
std::uint64_t sample_basis_state(const StateVector& state, double unit_draw);

MiningOutcome run(const ToyPowInstance& instance, int iterations,
                  std::uint64_t seed);

/// Same circuit with an explicit marked set (no hash involved); used when a
/// caller wants an exact marked count.
MiningOutcome run_with_marked(int num_qubits,
                              const std::vector<std::uint32_t>& marked,
                              int iterations, std::uint64_t seed);

}  // namespace qmine::grover
