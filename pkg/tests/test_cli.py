import csv
import io
import json
import subprocess
import sys

import pytest

from dirac_abc.cli import SCAN_FIELDS, SOLVE_FIELDS, default_tol, main

RUNNING = ["--e", "1", "--Z", "0.1", "--n", "1", "--ml", "0.5", "--s", "1"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_solve_running_example(capsys):
    code, out, err = run(capsys, "solve", *RUNNING)
    assert code == 0 and err == ""
    assert out.splitlines()[0] == ",".join(SOLVE_FIELDS)
    table = rows(out)
    assert [r["branch"] for r in table] == ["1", "-1"]
    assert table[0]["E"] == "1.0208400253670873"
    assert float(table[1]["E"]) == -float(table[0]["E"])


def test_solve_without_coulomb_is_resonant(capsys):
    code, out, _ = run(capsys, "solve", "--e", "1", "--B", "1", "--n", "1", "--ml", "0.5", "--s", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert {d["E"] for d in data} == {1.0, -1.0}
    assert all(d["omega"] == 0.5 for d in data)


def test_output_is_deterministic(capsys):
    argv = ["solve", "--e", "1", "--Z", "0.1", "--n", "3", "--ml", "0.5"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_spectrum_at_half_cyclotron(capsys):
    code, out, _ = run(capsys, "spectrum", "--e", "1", "--Z", "0.1", "--B", "2", "--omega-equals-half-cyclotron", "--n-max", "2")
    assert code == 0
    assert {abs(float(r["E"])) for r in rows(out)} == {1.0}


def test_scan_field_slope(capsys):
    code, out, _ = run(
        capsys, "scan", "--e", "1", "--Z", "0.1", "--n", "1", "--s", "1",
        "--param", "B", "--start", "0", "--stop", "2", "--num", "5", "--jobs", "2",
    )
    assert code == 0
    table = rows(out)
    assert list(table[0]) == SCAN_FIELDS
    omegas = [float(r["omega"]) for r in table]
    # d omega / dB = |e| / (2 m0), energies unchanged
    assert [b - a for a, b in zip(omegas, omegas[1:])] == pytest.approx([0.25] * 4, rel=1e-12)
    assert len({r["E_plus"] for r in table}) == 1


@pytest.mark.parametrize(
    "argv, code, name",
    [
        (["solve", "--e", "1", "--Z", "0.6", "--n", "1", "--ml", "0.5"], 2, "SupercriticalCoupling"),
        (["solve", "--Z", "0.1", "--n", "1", "--ml", "0.5"], 2, "UsageError"),
        (["solve", "--e", "1", "--Z", "0.1", "--n", "1", "--ml", "1"], 2, "InvalidParameters"),
        (["solve", "--e", "1", "--Z", "0.499", "--n", "1", "--ml", "0.5", "--s", "1"], 3, "NoBoundState"),
        (["scan", "--e", "1", "--n", "1", "--param", "Z", "--start", "0", "--stop", "1"], 2, "UsageError"),
        (["verify", "--e", "1", "--Z", "0.1"], 2, "UsageError"),
        (["verify", *RUNNING, "--points", "2000", "--no-refine"], 4, "OracleFailure"),
    ],
)
def test_error_exit_codes(capsys, argv, code, name):
    got, _, err = run(capsys, *argv)
    assert got == code
    lines = err.splitlines()
    assert len(lines) == 1 and lines[0].startswith(f"error={name} detail=")


def test_tolerance_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("DIRAC_ABC_TOL", "1e-9")
    assert default_tol() == 1e-9
    monkeypatch.setenv("DIRAC_ABC_TOL", "tight")
    code, _, err = run(capsys, "solve", "--e", "1", "--Z", "0.1", "--n", "3", "--ml", "0.5")
    assert code == 2 and "DIRAC_ABC_TOL" in err


def test_solve_output_feeds_verify(monkeypatch, capsys):
    _, out, _ = run(capsys, "solve", "--e", "1", "--Z", "0.1", "--n", "2", "--ml", "1.5", "--s", "1", "--branch", "1")
    monkeypatch.setattr(sys, "stdin", io.StringIO(out))
    code, report, _ = run(capsys, "verify", "--e", "1", "--input", "-", "--points", "4000")
    assert code == 0
    (entry,) = json.loads(report)
    assert entry["status"] == "verified"
    assert (entry["n"], entry["ml"], entry["s"], entry["branch"]) == (2, 1.5, 1, 1)
    assert entry["extrapolated"] == pytest.approx(entry["target"], abs=1e-5)


def test_wavefunction_to_file(tmp_path, capsys):
    path = tmp_path / "phi.csv"
    code, out, _ = run(capsys, "wavefunction", *RUNNING, "--points", "11", "--out", str(path))
    assert code == 0 and out == ""
    table = rows(path.read_text())
    assert len(table) == 11 and float(table[0]["phi"]) == 0.0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dirac_abc", "solve", *RUNNING, "--branch", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert rows(proc.stdout)[0]["E"] == "1.0208400253670873"
