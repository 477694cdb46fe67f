import io
import json

import pytest

from arithgraph import cli
from arithgraph.verify import TheoremReport
from cli_runner import GOLDEN, load_cases, run_case

CASES = load_cases()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    code, out, err = run_case(CASES[name])
    assert out == (GOLDEN / f"{name}.out").read_text()
    assert err == (GOLDEN / f"{name}.err").read_text()
    assert code == int((GOLDEN / f"{name}.code").read_text())


def test_every_subcommand_has_a_golden():
    sub = next(a for a in cli.build_parser()._actions if a.dest == "command")
    covered = {argv[0] for argv in CASES.values()}
    assert set(sub.choices) <= covered
    theorems = {argv[1] for argv in CASES.values() if argv[0] == "check"}
    assert theorems == {"rh", "kram", "divides", "sdeg", "genus-ineq", "all"}


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_in_process_matches(fixture_path):
    code, out, _ = _run(["critical-group", "-w", str(fixture_path), "W7", "natural"])
    assert code == 0
    assert json.loads(out)["invariant_factors"] == ["8", "40"]


def test_output_is_deterministic(fixture_path):
    argv = ["find-morphisms", "-w", str(fixture_path), "W5", "C3"]
    assert _run(argv) == _run(argv)


def test_pullback_structure_values(fixture_path):
    _, out, _ = _run(["pullback-structure", "-w", str(fixture_path), "phi", "R1S1"])
    doc = json.loads(out)
    assert doc["r"] == ["2", "1", "1", "3", "3"] and doc["s"] == ["4", "6", "6", "2", "2"]


def test_check_rh_values(fixture_path):
    _, out, _ = _run(["check", "rh", "-w", str(fixture_path), "phi", "R1S1"])
    doc = json.loads(out)
    assert (doc["lhs"], doc["rhs"], doc["verdict"]) == ("12", "12", "pass")


def test_failed_check_exits_2(fixture_path, monkeypatch):
    monkeypatch.setitem(cli.CHECKS, "rh", lambda h, st: TheoremReport("riemann-hurwitz", "forced", 1, 2))
    code, out, _ = _run(["check", "rh", "-w", str(fixture_path), "phi", "R1S1"])
    assert code == cli.EXIT_THEOREM
    assert json.loads(out)["verdict"] == "fail"


def test_help_exits_zero():
    assert _run(["--help"])[0] == 0


def test_bad_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    code, _, err = _run(["natural", "-w", str(p), "C3"])
    assert code == cli.EXIT_DOMAIN
    assert json.loads(err)["error"] == "DocumentError"


def test_invalid_structure_document(tmp_path, fixture_path):
    doc = json.loads(fixture_path.read_text())
    doc["structures"]["R1S1"]["s"] = ["2", "5", "2"]
    p = tmp_path / "ws.json"
    p.write_text(json.dumps(doc))
    code, _, err = _run(["critical-group", "-w", str(p), "C3", "R1S1"])
    assert code == cli.EXIT_DOMAIN
    assert json.loads(err)["error"] == "DefiningEquationViolated"
