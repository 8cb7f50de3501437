"""Smoke tests for the qmine python module."""

import json
import math

import pytest

import qmine


def rel(a, b):
    return abs(a - b) / abs(b)


def test_constants():
    assert qmine.BOLTZMANN_J_PER_K == 1.380649e-23
    assert qmine.DEFAULT_HEAT_SINK_K == 293.0


def test_landauer_energy():
    per_bit = qmine.landauer_bit_energy(293.0)
    assert rel(per_bit, 2.80398937776e-21) < 1e-9
    assert qmine.erasure_energy(2.0, 293.0) == pytest.approx(2 * per_bit)
    # published per-block figure
    assert rel(qmine.erasure_energy(4.72e20, 293.0), 1.324) < 0.01
    with pytest.raises(Exception):
        qmine.landauer_bit_energy(-1.0)


def test_bundled_scenario_chain():
    s = qmine.bundled_paper_scenario()
    assert s.name == "paper-2022"
    assert s.temperature_k == 293.0
    assert [a.ecc_layers for a in s.quantum_architectures] == [0, 1, 2]
    share = qmine.network_share(s.asic, s.network)
    assert rel(share, 6.9652e-7) < 1e-4
    # round-trips through JSON
    s2 = qmine.parse_scenario(s.to_json(), "<round-trip>")
    assert s2.to_json() == s.to_json()


def test_grover_closed_form():
    # p(t=0) == M/N, and one iteration on N=8, M=1 gives the textbook value
    assert qmine.grover_success_probability(8.0, 1.0, 0) == pytest.approx(0.125)
    assert qmine.grover_success_probability(8.0, 1.0, 1) == pytest.approx(0.78125)
    assert qmine.grover_success_probability(8.0, 1.0, 2) == pytest.approx(
        0.9453125
    )
    assert qmine.iterations_for_success(2.0**20, 1.0, 0.5) == 402


def test_grover_simulator():
    inst = qmine.ToyPowInstance()
    inst.nonce_bits = 8
    inst.digest_bits = 8
    inst.target = 31
    marked = qmine.count_marked(inst)
    assert marked > 0
    out = qmine.grover_run(inst, 4, seed=7)
    closed = qmine.grover_success_probability(256.0, float(marked), 4)
    assert out.success_probability == pytest.approx(closed, abs=1e-9)
    # determinism
    again = qmine.grover_run(inst, 4, seed=7)
    assert again.sampled_nonce == out.sampled_nonce


def test_tables_and_checks():
    s = qmine.bundled_paper_scenario()
    text = qmine.energy_table(s)
    assert "Classical" in text and "2 Layer ECC Quantum Miner" in text
    doc = json.loads(qmine.energy_table(s, format="structured"))
    assert len(doc["rows"]) == 4
    # exactly one published cell disagrees with its own per-block minimum
    bad = [c for c in qmine.check_energy_table(s) if c[4] > 0.01]
    assert len(bad) == 1
    assert bad[0][0] == "Non-ECC NISQ Miner"
    assert all(c[4] <= 0.01 for c in qmine.check_breakeven_table(s))


def test_race_determinism():
    cfg = qmine.RaceConfig()
    cfg.agents = [
        qmine.MinerAgent(qmine.MinerKind.CLASSICAL, 0.3, 2258.69, "Classical"),
        qmine.MinerAgent(qmine.MinerKind.QUANTUM, 0.3, 7.68e-6, "Quantum"),
    ]
    cfg.num_blocks = 5000
    cfg.seed = 99
    cfg.retarget_interval_blocks = 1000
    report = qmine.run_race(cfg)
    assert report.total_blocks == 5000
    wins = sum(a.blocks_won for a in report.agents)
    assert 0 < wins <= 5000
    assert qmine.race_report(cfg) == qmine.race_report(cfg)


def test_scenario_error_maps_to_python():
    with pytest.raises(qmine.ScenarioError):
        qmine.parse_scenario("{not json", "<bad>")
    with pytest.raises(qmine.ScenarioError):
        qmine.load_scenario("/nonexistent/scenario.json")
