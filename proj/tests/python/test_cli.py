"""End-to-end tests for the qmine command-line tool.

The binary path comes from QMINE_CLI and the shipped scenario files from
QMINE_SCENARIO_DIR (both set by the test harness).
"""

import json
import os
import pathlib
import subprocess

import pytest

CLI = os.environ["QMINE_CLI"]
SCENARIOS = pathlib.Path(os.environ["QMINE_SCENARIO_DIR"])


def run(*args, **kwargs):
    return subprocess.run(
        [CLI, *args], capture_output=True, text=True, **kwargs
    )


def structured(*args):
    proc = run(*args, "--format", "structured")
    assert proc.returncode == 0, proc.stderr
    return json.loads(proc.stdout)


def test_tables_check_reports_known_bad_cell():
    proc = run("tables", "--check")
    assert proc.returncode == 0
    assert proc.stdout.count("WARN") == 1
    assert "Non-ECC NISQ Miner" in proc.stdout


def test_energy_table_from_shipped_scenario():
    doc = structured("--scenario", str(SCENARIOS / "paper-2022.json"), "energy")
    assert doc["scenario"] == "paper-2022"
    rows = {r["label"]: r["values"] for r in doc["rows"]}
    assert rows["Classical"][0] == pytest.approx(1.324, rel=0.01)
    assert rows["Classical"][2] == pytest.approx(2258.69, rel=0.01)
    assert rows["2 Layer ECC Quantum Miner"][2] == pytest.approx(7.68e-6, rel=0.01)


def test_temperature_override_scales_linearly():
    base = structured("energy")
    hot = structured("--temperature", "586", "energy")
    for row_base, row_hot in zip(base["rows"], hot["rows"]):
        for v_base, v_hot in zip(row_base["values"], row_hot["values"]):
            assert v_hot == pytest.approx(2.0 * v_base, rel=1e-12)


def test_breakeven_table():
    doc = structured("breakeven")
    rows = {r["label"]: r["values"] for r in doc["rows"]}
    assert rows["Classical"][1] == pytest.approx(1706, rel=0.01)
    assert rows["1 Layer ECC Quantum Miner"][1] == pytest.approx(6.02e12, rel=0.01)


def test_race_is_deterministic_bytes():
    args = ("race", "--blocks", "4032", "--seed", "5", "--format", "structured")
    first = run(*args)
    second = run(*args)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    doc = json.loads(first.stdout)
    labels = [r["label"] for r in doc["rows"]]
    assert "Classical" in labels


def test_race_seed_changes_output():
    a = run("race", "--blocks", "4032", "--seed", "5", "--format", "structured")
    b = run("race", "--blocks", "4032", "--seed", "6", "--format", "structured")
    assert a.stdout != b.stdout


def test_grover_demo():
    doc = structured("grover", "--qubits", "8", "--iterations", "4")
    rows = {r["label"]: r["values"] for r in doc["rows"]}
    analytic = rows["Analytic success probability (fraction)"][0]
    simulated = rows["Simulated success probability (fraction)"][0]
    assert abs(analytic - simulated) < 1e-9
    assert 0.0 <= simulated <= 1.0


def test_validate_good_scenarios():
    for name in ("paper-2022.json", "self-consistent.json"):
        proc = run("validate", "--scenario", str(SCENARIOS / name))
        assert proc.returncode == 0, proc.stderr
        assert "valid" in proc.stdout


def test_validate_bad_scenario_exits_1(tmp_path):
    bad = tmp_path / "bad.json"
    text = (SCENARIOS / "paper-2022.json").read_text()
    bad.write_text(text.replace('"block_time_s": 600', '"block_time_s": 0'))
    proc = run("validate", "--scenario", str(bad))
    assert proc.returncode == 1
    assert "block_time_s" in proc.stdout + proc.stderr


def test_missing_scenario_file_exits_2():
    proc = run("energy", "--scenario", "/nonexistent/scenario.json")
    assert proc.returncode == 2


def test_usage_error_exits_2():
    proc = run("no-such-subcommand")
    assert proc.returncode == 2


def test_out_writes_file(tmp_path):
    dest = tmp_path / "energy.csv"
    proc = run("energy", "--format", "csv", "--out", str(dest))
    assert proc.returncode == 0
    body = dest.read_bytes()
    assert body.startswith(b"Infrastructure")
    assert b"\r\n" in body
