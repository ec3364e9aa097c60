import json

import pytest

from supercliff.cli import main
from supercliff.verify import run_suite, render_text, suite_checks


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expect_command(capsys):
    code, out, err = run(
        capsys, "expect", "--dim", "3", "--subspace", "1,0,0", "--input", "e1 + e3"
    )
    assert code == 0
    assert out.strip() == "e3"
    assert "subspace basis: 1,0,0" in err


def test_expect_orthonormalizes_and_echoes_basis(capsys):
    code, out, err = run(
        capsys, "expect", "--dim", "2", "--subspace", "2,0;4,0", "--input", "e1"
    )
    assert code == 0
    assert out.strip() == "0"
    assert err.strip().endswith("subspace basis: 1,0")


def test_norm_command(capsys):
    code, out, _ = run(capsys, "norm", "--dim", "2", "--input", "1 + e1")
    assert code == 0
    assert out.strip() == "2"


def test_mul_gamma_star_commands(capsys):
    code, out, _ = run(
        capsys, "mul", "--dim", "2", "--input", "1 + e1", "--input", "1 - e1"
    )
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(capsys, "gamma", "--dim", "2", "--input", "1 + 2*e1")
    assert code == 0 and out.strip() == "1 - 2*e1"
    code, out, _ = run(capsys, "star", "--dim", "2", "--input", "e1*e2")
    assert code == 0 and out.strip() == "-e1*e2"


def test_stdin_input(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("1 + e1"))
    code, out, _ = run(capsys, "norm", "--dim", "2", "--input", "-")
    assert code == 0
    assert out.strip() == "2"


def test_supercommutant_command(capsys):
    code, out, _ = run(capsys, "supercommutant", "--dim", "2", "--subspace", "1,0")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    assert {lines[0], lines[1]} == {"1", "e2"}


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "norm", "--dim", "2", "--input", "e2*e1")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "norm", "--dim", "2", "--input", "e5")
    assert code == 2
    code, _, err = run(capsys, "expect", "--dim", "2", "--subspace", "1,0,0", "--input", "e1")
    assert code == 2
    code, _, err = run(capsys, "mul", "--dim", "2", "--input", "e1")
    assert code == 2


def test_verify_duality_example(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "duality", "--dim", "5", "--trials", "50",
        "--seed", "7",
    )
    assert code == 0
    assert "50/50" in out and "overall: PASS" in out


def test_verify_json_schema(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "verify", "--suite", "cstar", "--dim", "3", "--trials", "5",
        "--seed", "1", "--json", "--out", str(out_path),
    )
    assert code == 0
    report = json.loads(out)
    assert set(report) == {"suite", "seed", "dim", "trials", "properties"}
    assert report["suite"] == "cstar" and report["trials"] == 5
    for prop in report["properties"]:
        assert set(prop) == {"name", "passes", "failures", "max_residual", "tolerance"}
        assert prop["passes"] + prop["failures"] == report["trials"]
        assert prop["max_residual"] >= 0.0
    assert json.loads(out_path.read_text()) == report


def test_reports_are_deterministic():
    a = run_suite("expectation", 4, 10, 123)
    b = run_suite("expectation", 4, 10, 123)
    assert a == b
    c = run_suite("expectation", 4, 10, 124)
    assert any(
        pa.max_residual != pc.max_residual for pa, pc in zip(a.properties, c.properties)
    )


def test_all_suite_aggregates_every_named_suite():
    names = [check.name for check in suite_checks("all")]
    assert len(names) == len(set(names))
    for suite in ("duality", "expectation", "intersection", "stabilization", "cstar"):
        for check in suite_checks(suite):
            assert check.name in names


def test_render_text_marks_failures():
    report = run_suite("stabilization", 3, 3, 5)
    text = render_text(report)
    assert "net_stabilization" in text
    assert text.endswith("overall: PASS")


def test_verify_exit_code_1_on_property_failure(capsys, monkeypatch):
    import supercliff.verify as verify_mod

    failing = verify_mod.PropertyCheck("always_fails", 0.0, lambda rng, dim: 1.0)
    monkeypatch.setitem(verify_mod._SUITE_CHECKS, "duality", [failing])
    code, out, _ = run(capsys, "verify", "--suite", "duality", "--dim", "2", "--trials", "3")
    assert code == 1
    assert "overall: FAIL" in out
