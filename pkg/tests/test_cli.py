import csv
import io
import json
import subprocess
import sys

import pytest

from etaheat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_spectrum_csv(capsys):
    code, out, _ = run(capsys, "spectrum", "--m", "4", "--epsilon", "0.1", "--mu-max", "40")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "p", "weight", "branch", "root"]
    assert {r[3] for r in rows[1:]} == {"+", "-"}
    assert all(float(r[4]) <= 40 for r in rows[1:])


@pytest.mark.parametrize("argv, msg", [
    (["spectrum", "--m", "5", "--mu-max", "10"], "m must be even ≥ 4"),
    (["spectrum", "--m", "4", "--epsilon", "2.0", "--mu-max", "10"], "|epsilon| < (m-1)/2 required"),
    (["heat-trace", "--t-min", "0.2", "--t-max", "0.1"], "t-min"),
])
def test_usage_errors(capsys, argv, msg):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert msg in err


def test_bad_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["spectrum", "--no-such-flag"])
    assert exc.value.code == 2


def test_spectrum_json_echoes_config(capsys):
    code, out, _ = run(capsys, "spectrum", "--format", "json", "--mu-max", "15")
    data = json.loads(out)
    assert data["config"]["mu_max"] == 15.0
    assert data["config"]["m"] == 4
    assert "heat_trace_tail_bounds" in data


def test_output_deterministic(capsys, tmp_path):
    path = tmp_path / "s.json"
    blobs = []
    for _ in range(2):
        main(["spectrum", "--format", "json", "--mu-max", "12", "--epsilon", "0.3", "--out", str(path)])
        blobs.append(path.read_bytes())
    assert blobs[0] == blobs[1]


def test_residues_csv(capsys):
    code, out, _ = run(capsys, "residues", "--m", "4", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 2
    assert rows[0]["res_eta_exact"] == "4/(3*pi)"
    assert rows[1]["res_eta_exact"] == "-1/4"


def test_theorems_json(capsys):
    code, out, _ = run(capsys, "theorems", "--m", "4")
    data = json.loads(out)
    assert code == 0
    assert data["coefficients"]["c2"]["basis"] == {"1": "0", "beta": "-1/4", "pi*beta": "0"}
    assert data["ball_predictions_per_unit_epsilon"]["a3"]["exact"] == "-1/8"


def test_heat_trace_emit(capsys):
    code, out, _ = run(capsys, "heat-trace", "--emit-trace", "--samples", "4", "--t-min", "0.02",
                       "--t-max", "0.2", "--mu-max", "60")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 4
    assert all(len(l.split()) == 2 for l in lines)


def test_heat_trace_tail_failure_exit_1(capsys):
    code, _, err = run(capsys, "heat-trace", "--mu-max", "10", "--samples", "3")
    assert code == 1
    assert "tail bound" in err


def test_verify_suite_filter(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "residues", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["passed"]
    assert {r["suite"] for r in data["results"]} == {"residues"}


def test_verify_failure_exit_1(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "spectral", "--t-min", "0.05", "--t-max", "0.5",
                       "--samples", "20", "--tol-a3", "1e-6")
    assert code == 1
    assert "failures:" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "etaheat", "residues", "--m", "6"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["a3_eta"]["exact"] == "-5/64"
