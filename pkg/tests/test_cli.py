"""Tests for the command-line interface and the suite driver."""

import json

import pytest

from affq import cli
from affq import verify as V


def run_cli(args, payload=None, tmp_path=None, name="in.json"):
    argv = list(args)
    if payload is not None:
        src = tmp_path / name
        src.write_text(json.dumps(payload))
        argv += ["--in", str(src)]
    out = tmp_path / ("out-" + name)
    argv += ["--out", str(out)]
    code = cli.main(argv)
    data = json.loads(out.read_text()) if out.exists() else None
    return code, data, out


def test_coset_command(tmp_path):
    code, data, _ = run_cli(
        ["coset"], {"n": 2, "entries": [[1, 1, 2]]}, tmp_path
    )
    assert code == 0
    assert data == {"window": [1, 2], "r": 2, "length": 0, "length_formula": 0}
    code, data, _ = run_cli(
        ["coset"], {"n": 2, "entries": [[1, 2, 1], [2, 1, 1]]}, tmp_path, "b.json"
    )
    assert code == 0
    assert data["length"] == 1 and data["length_formula"] == 1
    code, _, out = run_cli(
        ["coset"], {"n": 2, "entries": [[1, 2, 2], [2, 1, -1]]}, tmp_path, "c.json"
    )
    assert code == 2 and not out.exists()


def test_coset_malformed_input(tmp_path):
    src = tmp_path / "bad.json"
    src.write_text("not json")
    assert cli.main(["coset", "--in", str(src)]) == 2


def test_schur_mul_command(tmp_path):
    payload = {
        "left": {"n": 2, "entries": [[1, 2, 1], [1, 1, 1]]},
        "right": {"n": 2, "entries": [[2, 1, 1], [1, 1, 1]]},
    }
    code, data, _ = run_cli(["schur-mul"], payload, tmp_path)
    assert code == 0
    assert data["terms"] == [
        {"coeff": [[0, 1], [2, 1]], "matrix": {"entries": [[1, 1, 2]], "n": 2}}
    ]
    code, data, _ = run_cli(["schur-mul", "--basis", "n"], payload, tmp_path)
    assert code == 0
    assert data["basis"] == "n"
    mismatched = {
        "left": {"n": 2, "entries": [[1, 2, 1], [1, 1, 1]]},
        "right": {"n": 2, "entries": [[1, 1, 2]]},
    }
    code, data, _ = run_cli(["schur-mul"], mismatched, tmp_path)
    assert code == 0 and data["terms"] == []
    general = {
        "left": {"n": 2, "entries": [[1, 3, 2]]},
        "right": {"n": 2, "entries": [[1, 1, 2]]},
    }
    code, _, _ = run_cli(["schur-mul"], general, tmp_path)
    assert code == 2


def test_vbln_mul_command(tmp_path):
    element = {
        "n": 2,
        "terms": [
            {
                "matrix": {"n": 2, "entries": []},
                "j": [0, 1],
                "coeff_num": [[0, 1]],
                "coeff_den": [[0, 1]],
            }
        ],
    }
    payload = {"op": "one-layer-upper", "alpha": [1, 0], "element": element}
    code, data, _ = run_cli(["vbln-mul"], payload, tmp_path)
    assert code == 0
    assert data["terms"] == [
        {
            "coeff_den": [[0, 1]],
            "coeff_num": [[1, 1]],
            "j": [0, 1],
            "matrix": {"entries": [[1, 2, 1]], "n": 2},
        }
    ]
    payload = {"op": "diag-left", "j": [1, 0], "element": element}
    code, data, _ = run_cli(["vbln-mul"], payload, tmp_path)
    assert code == 0
    assert data["terms"][0]["j"] == [1, 1]
    payload = {"op": "bogus", "element": element}
    assert run_cli(["vbln-mul"], payload, tmp_path)[0] == 2


def test_hall_command(tmp_path):
    payload = {"alpha": [1, 0], "matrix": {"n": 2, "entries": [[1, 2, 1]]}}
    code, data, _ = run_cli(["hall", "--q", "2,3"], payload, tmp_path)
    assert code == 0
    assert data["terms"] == [
        {
            "matrix": {"entries": [[1, 2, 2]], "n": 2},
            "poly_q": [[0, 1], [1, 1]],
            "checks": [[2, 3, 3], [3, 4, 4]],
        }
    ]
    assert run_cli(["hall", "--q", "5"], payload, tmp_path)[0] == 2


def test_reduce_command(tmp_path):
    payload = {"matrix": {"n": 2, "entries": []}, "j": [0, 0], "lambda": [1, 0]}
    code, data, _ = run_cli(["reduce"], payload, tmp_path)
    assert code == 0
    assert [t["j"] for t in data["terms"]] == [[-1, 0], [1, 0]]
    payload["lambda"] = [-1, 0]
    assert run_cli(["reduce"], payload, tmp_path)[0] == 2


def test_verify_command_restricted_grid(tmp_path):
    out = tmp_path / "report.json"
    code = cli.main(
        ["verify", "--suite", "schur-oracle", "--n", "2", "--r", "2", "--out", str(out)]
    )
    assert code == 0
    report = json.loads(out.read_text())
    assert report["ok"] is True
    (suite,) = report["suites"]
    assert suite["suite"] == "schur-oracle"
    assert suite["cases"] == 1
    assert suite["checks"] > 100


def test_verify_output_is_deterministic_across_jobs(tmp_path):
    outs = []
    for jobs, name in (("1", "a.json"), ("2", "b.json")):
        out = tmp_path / name
        code = cli.main(
            ["verify", "--suite", "triangular", "--jobs", jobs, "--out", str(out)]
        )
        assert code == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_verify_rejects_bad_grid():
    assert cli.main(["verify", "--suite", "laurent", "--n", "7"]) == 2
    assert cli.main(["verify", "--suite", "laurent", "--q", "5"]) == 2
    assert cli.main(["verify", "--suite", "laurent", "--r", "0"]) == 2
    with pytest.raises(SystemExit):
        cli.main(["verify", "--suite", "unknown"])


def test_run_suite_validation():
    with pytest.raises(ValueError):
        V.run_suite("unknown")
    cfg = V.Config(jobs=0)
    with pytest.raises(ValueError):
        cfg.validate()


def test_suite_names_cover_criteria():
    assert V.SUITE_NAMES == (
        "schur-oracle",
        "coset-length",
        "hecke",
        "hall",
        "commutator",
        "level-coherence",
        "triangular",
        "laurent",
    )
