#include <doctest.h>

#include <cmath>

#include "qmine/quantum.hpp"

using namespace qmine;

namespace {

quantum::QuantumArchitecture arch_with_layers(int n) {
    quantum::QuantumArchitecture arch;
    arch.label = "test";
    arch.ecc_layers = n;
    return arch;  // c=12, g=1280, d=512, q=512 defaults
}

constexpr double kPaperEcSteps = 1.1159814903e10;

}  // namespace

TEST_CASE("pow_target_m") {
    const BigUint max_target = BigUint(1) << 224;
    CHECK(quantum::pow_target_m(max_target, 1.0) ==
          doctest::Approx(std::pow(2.0, 224.0)).epsilon(1e-12));
    CHECK(quantum::pow_target_m(max_target, std::pow(2.0, 16.0)) ==
          doctest::Approx(std::pow(2.0, 208.0)).epsilon(1e-12));
    CHECK(quantum::pow_target_m(max_target, std::pow(2.0, 224.0)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(quantum::pow_target_m(max_target, 0.0), std::domain_error);
    CHECK_THROWS_AS(quantum::pow_target_m(max_target, -3.0), std::domain_error);
}

TEST_CASE("grover_iterations_paper is sqrt(N/M)") {
    CHECK(quantum::grover_iterations_paper(64.0, 64.0) == doctest::Approx(1.0));
    CHECK(quantum::grover_iterations_paper(std::pow(2.0, 20.0), 1.0) ==
          doctest::Approx(1024.0));
    CHECK(quantum::grover_iterations_paper(1024.0, 4.0) == doctest::Approx(16.0));
    CHECK(quantum::grover_iterations_paper(BigUint(1) << 20, 1.0) ==
          doctest::Approx(1024.0));
    CHECK_THROWS_AS(quantum::grover_iterations_paper(8.0, 9.0), std::domain_error);
}

TEST_CASE("grover_success_probability closed form") {
    CHECK(quantum::grover_success_probability(8.0, 1.0, 0) == doctest::Approx(0.125));
    CHECK(quantum::grover_success_probability(8.0, 1.0, 2) ==
          doctest::Approx(0.9453125).epsilon(1e-5));
    CHECK(quantum::grover_success_probability(4.0, 1.0, 1) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // p(0) == M/N across a sweep
    for (int n = 2; n <= 12; ++n) {
        for (int m = 1; m <= (1 << n); m *= 3) {
            CHECK(quantum::grover_success_probability(
                      static_cast<double>(1 << n), static_cast<double>(m), 0) ==
                  doctest::Approx(static_cast<double>(m) / (1 << n)).epsilon(1e-12));
        }
    }
}

TEST_CASE("iterations_for_success matches a brute-force scan") {
    CHECK(quantum::iterations_for_success(8.0, 1.0, 0.1) == 0);  // p_target <= M/N
    CHECK(quantum::iterations_for_success(8.0, 1.0, 0.9) == 2);
    CHECK(quantum::iterations_for_success(std::pow(2.0, 20.0), 1.0, 0.5) == 402);

    // independent oracle: scan t upward until the closed form crosses p_target
    auto scan = [](double n, double m, double p_target) -> std::uint64_t {
        double best = -1.0;
        for (std::uint64_t t = 0; t < 100000; ++t) {
            const double p = quantum::grover_success_probability(n, m, t);
            if (p >= p_target) return t;
            if (p < best) return t - 1;  // passed the peak
            best = p;
        }
        return 0;
    };
    for (double n : {64.0, 1024.0, 65536.0}) {
        for (double m : {1.0, 2.0, 5.0}) {
            for (double p : {0.3, 0.5, 0.9, 0.99, 1.0}) {
                CHECK(quantum::iterations_for_success(n, m, p) == scan(n, m, p));
            }
        }
    }
}

TEST_CASE("gate_count and ec_steps") {
    CHECK(quantum::gate_count(1.0, 1280.0) == 1280.0);
    CHECK(quantum::gate_count(0.0, 1280.0) == 0.0);
    CHECK(quantum::gate_count(1e6, 1280.0) == doctest::Approx(1.28e9));
    CHECK(quantum::ec_steps(1280.0, 1.0) == 1280.0);
    CHECK(quantum::ec_steps_total(BigUint(1) << 32, BigUint(1) << 32,
                                  std::pow(2.0, 16.0), 2.0, 3.0) ==
          doctest::Approx(1536.0).epsilon(1e-12));
}

TEST_CASE("erased_bits per architecture") {
    CHECK(quantum::erased_bits(arch_with_layers(1), kPaperEcSteps) ==
          doctest::Approx(1.339e11).epsilon(5e-3));
    CHECK(quantum::erased_bits(arch_with_layers(2), kPaperEcSteps) ==
          doctest::Approx(1.607e12).epsilon(5e-3));
    CHECK(quantum::erased_bits(arch_with_layers(0), kPaperEcSteps) == 512.0);
    CHECK(quantum::erased_bits(arch_with_layers(0), 0.0) == 512.0);
}

TEST_CASE("erased_bits is monotone in layers, measurements, steps, outputs") {
    auto arch = arch_with_layers(1);
    const double base = quantum::erased_bits(arch, 1e6);
    CHECK(quantum::erased_bits(arch_with_layers(2), 1e6) > base);
    arch.measurements_per_ec_step = 13;
    CHECK(quantum::erased_bits(arch, 1e6) > base);
    arch = arch_with_layers(1);
    arch.output_qubits = 1024;
    CHECK(quantum::erased_bits(arch, 1e6) > base);
    CHECK(quantum::erased_bits(arch_with_layers(1), 2e6) > base);
    // exact integer power of c
    auto a3 = arch_with_layers(3);
    CHECK(quantum::erased_bits(a3, 10.0) == doctest::Approx(10.0 * 1728.0 + 512.0));
}

TEST_CASE("landauer energies per architecture") {
    const physics::TemperatureK room(293.0);
    CHECK(quantum::landauer_energy(arch_with_layers(0), 0.0, room) ==
          doctest::Approx(1.4336e-18).epsilon(0.01));
    CHECK(quantum::landauer_energy(arch_with_layers(1), kPaperEcSteps, room) ==
          doctest::Approx(3.7497e-10).epsilon(0.01));
    CHECK(quantum::landauer_energy(arch_with_layers(2), kPaperEcSteps, room) ==
          doctest::Approx(4.4996e-9).epsilon(0.01));
}

TEST_CASE("projected_actual_energy") {
    CHECK(quantum::projected_actual_energy(3.7497e-10, 379.0) ==
          doctest::Approx(1.42e-7).epsilon(0.01));
    CHECK(quantum::projected_actual_energy(4.4996e-9, 1706.0) ==
          doctest::Approx(7.68e-6).epsilon(0.01));
    CHECK(quantum::projected_actual_energy(2.5, 1.0) == 2.5);
    CHECK_THROWS_AS(quantum::projected_actual_energy(1.0, 0.5), std::domain_error);
}

TEST_CASE("break_even_ratio") {
    CHECK(quantum::break_even_ratio(2258.69, 1.4336e-18) ==
          doctest::Approx(1.575753e21).epsilon(0.01));
    CHECK(quantum::break_even_ratio(2258.69, 4.4996e-9) ==
          doctest::Approx(5.0204e11).epsilon(0.01));
    CHECK(quantum::break_even_ratio(7.0, 7.0) == 1.0);
    // ratio * quantum landauer recovers classical actual
    const double r = quantum::break_even_ratio(2258.69, 3.7497e-10);
    CHECK(r * 3.7497e-10 == doctest::Approx(2258.69).epsilon(1e-12));
}

TEST_CASE("advantage_factor and annual savings") {
    CHECK(quantum::advantage_factor(2258.69, 7.68e-6) ==
          doctest::Approx(2.94e8).epsilon(0.01));
    CHECK(quantum::advantage_factor(9.0, 9.0) == 1.0);
    classical::NetworkSnapshot snap;
    snap.difficulty = 1.0;
    snap.network_hashrate_th_per_s = 1.0;
    snap.block_time_s = 600.0;
    snap.network_energy_per_block_j = 1.0;
    snap.max_target = BigUint(1) << 224;
    snap.annual_consumption_twh = 126.7;
    CHECK(quantum::annual_savings_twh(snap, 2.94e8) ==
          doctest::Approx(126.7).epsilon(1e-4));
    CHECK(quantum::annual_savings_twh(snap, 1.0) == 0.0);
    CHECK(quantum::annual_savings_twh(snap, 2.0) == doctest::Approx(63.35));
    snap.annual_consumption_twh.reset();
    CHECK_THROWS_AS(quantum::annual_savings_twh(snap, 2.0), std::invalid_argument);
}

TEST_CASE("architecture validation") {
    auto arch = arch_with_layers(5);
    CHECK_THROWS_AS(arch.validate(), std::invalid_argument);
    arch = arch_with_layers(2);
    arch.gates_per_iteration = 0;
    CHECK_THROWS_AS(arch.validate(), std::invalid_argument);
}
