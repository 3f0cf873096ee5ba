from __future__ import annotations

import json
import math
import subprocess
import sys

import pytest

from latcas.cli import run


def _grab(capsys):
    captured = capsys.readouterr()
    return captured.out, captured.err


def test_compute_prints_worked_numbers(capsys) -> None:
    code = run(["compute", "--s", "2", "--d", "3", "--nz", "1", "--bc", "periodic"])
    out, _ = _grab(capsys)
    assert code == 0
    values = {}
    for line in out.splitlines():
        if "=" in line:
            key, _, rest = line.partition("=")
            values[key.strip()] = rest.split("(")[0].strip()
    assert float(values["e_cas"]) == pytest.approx(-1.0, abs=1e-10)
    assert float(values["e0_sum"]) == pytest.approx(2.0, abs=1e-10)
    assert float(values["e0_int"]) == pytest.approx(3.0, abs=1e-10)
    assert values["converged"] == "yes"


def test_compute_csv_output(tmp_path, capsys) -> None:
    path = tmp_path / "one.csv"
    code = run(["compute", "--s", "4", "--nz", "2", "--format", "csv", "--out", str(path)])
    _grab(capsys)
    assert code == 0
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "Nz,e0_sum,e0_int,e_cas,coeff,quad_error"
    fields = lines[1].split(",")
    assert int(fields[0]) == 2
    assert float(fields[3]) == pytest.approx(2.0, abs=1e-8)


def test_reference_even_order_prints_zero(capsys) -> None:
    code = run(["reference", "--s", "2", "--d", "3", "--L", "1", "--g", "2"])
    out, _ = _grab(capsys)
    assert code == 0
    assert out.strip() == "0"


def test_reference_linear_two_branch(capsys) -> None:
    code = run(["reference", "--s", "1", "--d", "3", "--L", "1", "--g", "2"])
    out, _ = _grab(capsys)
    assert code == 0
    assert float(out.strip()) == pytest.approx(-math.pi**2 / 45.0, abs=1e-10)


def test_classify_reports_remnant_headline(capsys) -> None:
    code = run(["classify", "--s", "6", "--d", "3", "--bc", "periodic", "--nz-max", "16"])
    out, _ = _grab(capsys)
    assert code == 0
    assert out.splitlines()[0] == "Remnant n_max=3"


def test_sweep_csv_to_stdout(capsys) -> None:
    code = run(["sweep", "--s", "2", "--d", "3", "--nz-max", "4", "--format", "csv"])
    out, _ = _grab(capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "Nz,e0_sum,e0_int,e_cas,coeff,quad_error"
    assert len(lines) == 5
    assert float(lines[1].split(",")[3]) == pytest.approx(-1.0, abs=1e-10)


def test_mass_expansion_output(capsys) -> None:
    code = run(["mass-expansion", "--am", "5", "--d", "3", "--nz", "1", "--orders", "3"])
    out, _ = _grab(capsys)
    assert code == 0
    assert "massive e_cas" in out
    assert "convergent" in out
    # three partial-sum rows
    rows = [line for line in out.splitlines() if line.strip() and line.split()[0].isdigit()]
    assert len(rows) == 3
    assert float(rows[0].split()[1]) == pytest.approx(-0.1, rel=1e-9)


def test_rectangles_json(tmp_path, capsys) -> None:
    path = tmp_path / "dec.json"
    code = run(["rectangles", "--s", "2", "--nz", "2", "--format", "json", "--out", str(path)])
    _grab(capsys)
    assert code == 0
    parsed = json.loads(path.read_text())
    assert parsed["sum_area"] == pytest.approx(4.0 * math.pi, rel=1e-12)


def test_unknown_flag_exits_one(capsys) -> None:
    code = run(["compute", "--nz", "1", "--wavelength", "7"])
    _, err = _grab(capsys)
    assert code == 1
    assert "--wavelength" in err


def test_unknown_command_exits_one(capsys) -> None:
    code = run(["frobnicate"])
    _, err = _grab(capsys)
    assert code == 1


def test_out_of_range_parameters_exit_one(capsys) -> None:
    assert run(["compute", "--s", "2", "--nz", "0"]) == 1
    assert run(["compute", "--s", "-3", "--nz", "1"]) == 1
    assert run(["compute", "--s", "2", "--am", "3", "--nz", "1"]) == 1
    assert run(["compute", "--s", "2", "--nz", "1", "--d", "9"]) == 1
    _grab(capsys)


def test_nonconvergence_exits_two(capsys) -> None:
    code = run(["compute", "--s", "1", "--d", "2", "--nz", "4", "--max-refinements", "0"])
    out, _ = _grab(capsys)
    assert code == 2
    assert "converged  = no" in out


def test_env_override_for_quadrature(monkeypatch, capsys) -> None:
    monkeypatch.setenv("LATCAS_MAX_REFINEMENTS", "0")
    code = run(["compute", "--s", "1", "--d", "2", "--nz", "4"])
    _grab(capsys)
    assert code == 2
    # explicit flag wins over the environment
    code = run(["compute", "--s", "1", "--d", "2", "--nz", "4", "--max-refinements", "2"])
    _grab(capsys)
    assert code in (0, 2)
    monkeypatch.setenv("LATCAS_MAX_REFINEMENTS", "not-a-number")
    code = run(["compute", "--s", "2", "--nz", "1"])
    _, err = _grab(capsys)
    assert code == 1
    assert "LATCAS_MAX_REFINEMENTS" in err


def test_help_exits_zero(capsys) -> None:
    assert run(["--help"]) == 0
    _grab(capsys)


def test_repeat_invocations_are_byte_identical(capsys) -> None:
    run(["sweep", "--s", "4", "--nz-max", "3", "--format", "csv"])
    first, _ = _grab(capsys)
    run(["sweep", "--s", "4", "--nz-max", "3", "--format", "csv"])
    second, _ = _grab(capsys)
    assert first == second


def test_installed_entry_point_runs() -> None:
    proc = subprocess.run(
        [sys.executable, "-m", "latcas.cli", "reference", "--s", "4", "--d", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "0"
