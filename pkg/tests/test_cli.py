"""CLI contract: documented invocations, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from braidrep.cli import main
from braidrep.laurent import LaurentPoly, RingMatrix
from braidrep.yang_baxter import r_matrix_from_json, r_matrix_to_json, rq_r


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_alexander_documented_invocation(capsys):
    code, out = run_cli(capsys, "alexander", "--n", "2", "s1 s1 s1")
    assert code == 0
    assert out == '{"conway": "s^-2 - 1 + s^2", "components": 1}\n'


def test_braid_documented_invocation(capsys):
    code, out = run_cli(capsys, "braid", "--n", "3", "s1 s2^-1")
    assert code == 0
    assert out == (
        '{"permutation": [3, 1, 2], "cycles": [[1, 3, 2]], "pure": false, '
        '"exponent_sum": 0, "components": 1}\n'
    )


def test_verma_dims_documented_invocation(capsys):
    code, out = run_cli(capsys, "verma", "dims", "--n", "3", "--m", "2", "--lambda", "7/3")
    assert code == 0
    assert out == '{"weight_dim": 6, "null_dim": 3}\n'


def test_burau_output_roundtrips(capsys):
    code, out = run_cli(capsys, "burau", "--n", "3", "--reduced", "s1 s2^-1")
    assert code == 0
    payload = json.loads(out)
    assert payload["reduced"] is True
    matrix = RingMatrix.from_json(payload["matrix"], ("t",))
    assert matrix.rows == matrix.cols == 2
    for row in payload["matrix"]["entries"]:
        for entry in row:
            LaurentPoly.parse(entry)  # loader accepts every emitted entry


def test_ybe_builtin_and_file(tmp_path, capsys):
    code, out = run_cli(capsys, "ybe", "--builtin", "rq")
    assert code == 0
    assert json.loads(out) == {"braid_ybe": 0.0, "qybe": 2.0, "invertible": True}

    path = tmp_path / "r.json"
    path.write_text(json.dumps(r_matrix_to_json(rq_r())))
    code, out = run_cli(capsys, "ybe", "--file", str(path))
    assert code == 0
    assert json.loads(out)["braid_ybe"] == 0.0


def test_ybe_json_loader_roundtrip():
    spec = rq_r()
    again = r_matrix_from_json(json.loads(json.dumps(r_matrix_to_json(spec))))
    assert again.matrix == spec.matrix


def test_kz_monodromy_output(capsys):
    code, out = run_cli(
        capsys,
        "kz", "monodromy", "--n", "2", "--m", "0", "--lambda", "1/2",
        "--h", "0.1", "--word", "s1 s1", "--tol", "1e-9",
    )
    assert code == 0
    payload = json.loads(out)
    [[entry]] = payload["matrix"]
    import math
    expected = math.exp(0.1 * 0.25 / 8)
    assert abs(entry[0] - expected) < 1e-8 and abs(entry[1]) < 1e-8
    assert payload["est_error"] < 1e-9


def test_kz_check_output(capsys):
    code, out = run_cli(
        capsys,
        "kz", "check", "--n", "3", "--m", "1", "--lambda", "1/2", "--h", "0.1+0.05i",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["braid_residual"] < 1e-6
    assert payload["flatness_residual"] < 1e-10
    assert payload["homotopy_residual"] < 1e-8


def test_kz_nullspace_flag(capsys):
    code, out = run_cli(
        capsys,
        "kz", "monodromy", "--n", "3", "--m", "2", "--lambda", "7/3",
        "--h", "0.1", "--word", "s1", "--nullspace",
    )
    assert code == 0
    assert len(json.loads(out)["matrix"]) == 3  # n(n-1)/2


def test_kz_tau_convention(capsys):
    code, out = run_cli(
        capsys,
        "kz", "monodromy", "--n", "2", "--m", "0", "--lambda", "1/2",
        "--tau", "2.0", "--word", "s1 s1",
    )
    assert code == 0
    [[entry]] = json.loads(out)["matrix"]
    import cmath
    expected = cmath.exp(2j * cmath.pi / 2.0 * 0.25 / 8)
    assert abs(complex(entry[0], entry[1]) - expected) < 1e-8


def test_kz_requires_exactly_one_parameter(capsys):
    code, out = run_cli(
        capsys, "kz", "monodromy", "--n", "2", "--m", "0", "--lambda", "1/2", "--word", "s1"
    )
    assert code == 1 and "error" in json.loads(out)
    code, out = run_cli(
        capsys,
        "kz", "monodromy", "--n", "2", "--m", "0", "--lambda", "1/2",
        "--h", "1", "--tau", "2", "--word", "s1",
    )
    assert code == 1 and "error" in json.loads(out)


def test_kz_check_two_strands(capsys):
    code, out = run_cli(capsys, "kz", "check", "--n", "2", "--m", "1", "--lambda", "7/3", "--h", "0.1")
    assert code == 0
    payload = json.loads(out)
    assert payload["braid_residual"] < 1e-7  # inverse-consistency residual at n=2
    assert payload["homotopy_residual"] < 1e-8


def test_computation_error_exit_code(capsys):
    code, out = run_cli(capsys, "alexander", "--n", "3", "s7")
    assert code == 1
    assert "error" in json.loads(out)


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["definitely-not-a-command"])
    assert exc.value.code == 2


def test_pretty_flag(capsys):
    code, out = run_cli(capsys, "--pretty", "braid", "--n", "2", "s1")
    assert code == 0 and out.startswith("{\n")


def test_selftest_deterministic_bytes():
    cmd = [sys.executable, "-m", "braidrep.cli", "selftest", "--seed", "11"]
    first = subprocess.run(cmd, capture_output=True, text=True)
    second = subprocess.run(cmd, capture_output=True, text=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    payload = json.loads(first.stdout)
    assert payload["all_passed"] is True
    assert {c["name"] for c in payload["checks"]} == {
        "braid_words",
        "burau_relations",
        "alexander_markov_skein",
        "yang_baxter_corpus",
        "verma_dimensions_relations",
        "kz_monodromy",
    }


def test_verma_omega_export(capsys):
    code, out = run_cli(
        capsys, "verma", "omega", "--n", "2", "--m", "0", "--i", "1", "--j", "2", "--lambda", "7/3"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["matrix"]["entries"] == [["49/72"]]
