"""The command-line surface: reports, exit codes, determinism."""

from __future__ import annotations

import json

import pytest

from hyperpart import VerificationError, emit_instance, make_config
from hyperpart.cli import main


@pytest.fixture
def quad_file(tmp_path, quad):
    path = tmp_path / "quad.json"
    path.write_text(emit_instance(quad))
    return str(path)


@pytest.fixture
def colored_file(tmp_path):
    cfg = make_config(1, [(0,), (1,), (2,)], colors=["r", "b", "r"])
    path = tmp_path / "rbr.json"
    path.write_text(emit_instance(cfg))
    return str(path)


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def _run_json(capsys, argv):
    code, out, err = _run(capsys, argv)
    assert code == 0, err
    return json.loads(out)


def test_enumerate(capsys, quad_file):
    doc = _run_json(capsys, ["enumerate", "--input", quad_file])
    assert doc["count"] == 7
    assert doc["formula_count"] == 7
    assert doc["general_position"] is True
    assert doc["matches_formula"] is True
    assert len(doc["members"]) == 7
    # every member carries a witness hyperplane with exact rational entries
    assert all(m["witness"] is not None for m in doc["members"])


def test_sep_and_transversals(capsys, quad_file):
    doc = _run_json(capsys, ["sep", "--input", quad_file, "--a", "0", "--b", "1"])
    assert doc["separating_count"] == 3
    assert doc["nonseparating_count"] == 4

    doc = _run_json(capsys, ["transversals", "--input", quad_file])
    assert doc["min_size"] == 3
    assert doc["max_size"] == 4


def test_flip_shrink_perturb(capsys, quad_file):
    doc = _run_json(capsys, ["flip", "--input", quad_file, "--a", "0", "--b", "1"])
    assert doc["separating_before"] + doc["separating_after"] == 7

    doc = _run_json(capsys, ["shrink", "--input", quad_file, "--a", "0", "--b", "1"])
    assert doc["separating_size"] == doc["formula_min"] == 3

    doc = _run_json(capsys, ["perturb", "--input", quad_file, "--seed", "5"])
    assert doc["count_after"] == doc["formula_count"] == 7


def test_partitionable_and_witness(capsys, colored_file):
    doc = _run_json(capsys, ["partitionable", "--input", colored_file])
    assert doc["partitionable"] is False
    assert doc["routes_agree"] is True
    assert doc["certificate"] is None

    doc = _run_json(capsys, ["witness", "--input", colored_file])
    assert doc["witness"] == [0, 1, 2]
    assert doc["size_bound"] == 4


def test_kirchberger(capsys, colored_file):
    doc = _run_json(capsys, ["kirchberger", "--input", colored_file, "--p", "2"])
    assert doc["separable"] is False
    assert doc["routes_agree"] is True
    assert 2 in doc["witness"]


def test_formulas(capsys):
    doc = _run_json(capsys, ["formulas", "--dim", "2", "--colors", "6"])
    assert doc["partition_count"] == 16
    assert doc["min_transversal_size"] == 5
    assert doc["max_transversal_size"] == 11
    assert doc["witness_size_bound"] == 39


def test_demo_pentagon(capsys):
    doc = _run_json(capsys, ["demo", "pentagon"])
    assert doc["count"] == 16
    assert doc["separating_sizes"] == {
        "center-vertex": 6,
        "adjacent-vertices": 6,
        "nonadjacent-vertices": 10,
    }
    assert doc["min_transversal_size"] == 6
    assert doc["shrink"]["separating_size"] == 5


def test_verify_suite(capsys):
    doc = _run_json(capsys, ["verify", "--suite", "phi", "--trials", "3", "--n", "6"])
    assert doc["ok"] is True
    assert doc["passed"] == 3


def test_bound_search(capsys):
    doc = _run_json(
        capsys,
        ["bound-search", "--trials", "2", "--n", "7", "--colors", "3", "--seed", "5"],
    )
    assert doc["ok"] is True
    assert doc["size_bound"] == 9
    for r in doc["results"]:
        assert r["partitionable"] or r["threshold"] <= 9


def test_output_file(tmp_path, capsys, quad_file):
    target = tmp_path / "report.json"
    code, out, _ = _run(
        capsys, ["enumerate", "--input", quad_file, "--output", str(target)]
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["count"] == 7


def test_byte_identical_reports(capsys, quad_file):
    _, first, _ = _run(capsys, ["enumerate", "--input", quad_file])
    _, second, _ = _run(capsys, ["enumerate", "--input", quad_file])
    assert first == second
    _, third, _ = _run(
        capsys, ["verify", "--suite", "duality", "--trials", "2", "--n", "5"]
    )
    _, fourth, _ = _run(
        capsys, ["verify", "--suite", "duality", "--trials", "2", "--n", "5"]
    )
    assert third == fourth


def test_usage_errors_exit_1(capsys, quad_file):
    code, _, err = _run(capsys, ["sep", "--input", quad_file, "--a", "0"])
    assert code == 1
    assert "--b" in err

    code, _, err = _run(capsys, ["enumerate", "--input", "/does/not/exist.json"])
    assert code == 1

    code, _, err = _run(capsys, ["verify", "--suite", "nope"])
    assert code == 1


def test_domain_errors_exit_1(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 1, "points": [{"id": 0, "coords": ["0.25"]}]}')
    code, _, err = _run(capsys, ["enumerate", "--input", str(bad)])
    assert code == 1
    assert "exact rational" in err

    code, _, err = _run(capsys, ["witness", "--input", str(bad)])
    assert code == 1


def test_desk_scale_caps(tmp_path, capsys):
    big = make_config(1, [(i,) for i in range(17)])
    path = tmp_path / "big.json"
    path.write_text(emit_instance(big))
    code, _, err = _run(capsys, ["enumerate", "--input", str(path)])
    assert code == 1
    assert "--unsafe-large" in err

    code, _, err = _run(capsys, ["formulas", "--dim", "9", "--colors", "4"])
    assert code == 1
    code, out, err = _run(
        capsys, ["formulas", "--dim", "9", "--colors", "4", "--unsafe-large"]
    )
    assert code == 0


def test_verification_failures_exit_2(monkeypatch, capsys, quad_file):
    from hyperpart import cli

    def boom(args):
        raise VerificationError("synthetic postcondition breach")

    monkeypatch.setattr(cli, "_cmd_enumerate", boom)
    code = cli.main(["enumerate", "--input", quad_file])
    err = capsys.readouterr().err
    assert code == 2
    assert "verification failure" in err


def test_no_color_is_a_no_op(monkeypatch, capsys, quad_file):
    _, plain, _ = _run(capsys, ["enumerate", "--input", quad_file])
    monkeypatch.setenv("NO_COLOR", "1")
    _, under_no_color, _ = _run(capsys, ["enumerate", "--input", quad_file])
    assert plain == under_no_color
