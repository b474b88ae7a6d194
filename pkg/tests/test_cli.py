# -*- coding: utf-8 -*-
import io
import json

import pytest

from congruencebases import cli


def run(argv, stdin=""):
    out = io.StringIO()
    code = cli.main(argv, stdin=io.StringIO(stdin), out=out)
    return code, out.getvalue()


def test_solve_text(application_text):
    code, output = run(["solve", application_text])
    assert code == cli.EXIT_OK
    lines = output.splitlines()
    assert lines[0] == "congruence: 2*x - 6*y ≡ 2 (mod 12)"
    assert "d = 2" in lines and "P1 = 24" in lines and "P2 = 12" in lines and "S = 2" in lines
    assert "homogeneous = false" in lines
    assert lines[-3:] == ["basis:", "1, 0", "4, 1"]


def test_solve_json(application_text):
    code, output = run(["solve", application_text, "--format", "json"])
    assert code == cli.EXIT_OK
    record = json.loads(output)
    assert record == {"d": "2", "solvable": True, "p1": "24", "p2": "12", "s": "2",
                      "basis": [[1, 0], [4, 1]], "solutions": None, "truncated": False}


def test_solve_json_is_byte_stable(application_text):
    assert run(["solve", application_text, "--format", "json"]) == \
        run(["solve", application_text, "--format", "json"])


def test_solve_unsolvable():
    code, output = run(["solve", "2x ≡ 1 (mod 4)"])
    assert code == cli.EXIT_UNSOLVABLE
    assert "solvable = false" in output.splitlines()
    assert "basis:" not in output


def test_solve_oracle_confirmed_instance():
    code, output = run(["solve", "4x + 6y ≡ 2 (mod 8)", "--format", "json"])
    record = json.loads(output)
    assert code == cli.EXIT_OK
    assert record["p1"] == "16" and record["s"] == "2"


def test_solve_reversed_order(application_text):
    code, output = run(["solve", application_text, "--order", "reversed", "--format", "json"])
    assert code == cli.EXIT_OK
    assert len(json.loads(output)["basis"]) == 2


def test_solve_coefficient_mode():
    code, output = run(["solve", "--coeffs", "2,-6", "--rhs", "2", "--mod", "12"])
    assert code == cli.EXIT_OK
    assert output.splitlines()[0] == "congruence: 2*x1 - 6*x2 ≡ 2 (mod 12)"
    code, output = run(["solve", "--coeffs", "[2, -6]", "--rhs", "2", "--mod", "12",
                        "--format", "json"])
    assert json.loads(output)["p1"] == "24"


def test_solve_reads_stdin(application_text):
    code, output = run(["solve", "-", "--format", "json"], stdin="\n" + application_text + "\n")
    assert code == cli.EXIT_OK
    assert json.loads(output)["s"] == "2"


@pytest.mark.parametrize("argv", [
    ["solve", "2x + = 1 (mod 5)"],
    ["solve", "3a + 3a = 1 (mod 7)"],
    ["solve", "2x = 1"],
    ["solve", "2x = 1 (mod 0)"],
    ["solve"],
    ["solve", "--coeffs", "1,2", "--rhs", "1"],
    ["solve", "--coeffs", "1,2", "--rhs", "1", "--mod", "0"],
    ["verify", "x ≡ 1 (mod 5)", "--cap", "0"],
    ["verify", "x ≡ 1 (mod 5)", "--cap", "-3"],
    ["verify", "--random", "3", "--cap", "0"],
])
def test_usage_errors(argv, capsys):
    code, _ = run(argv)
    assert code == cli.EXIT_USAGE
    assert "error:" in capsys.readouterr().err


def test_parse_error_shows_position(capsys):
    run(["solve", "2x + = 1 (mod 5)"])
    assert "column 6" in capsys.readouterr().err


def test_enumerate_application(application_text, application_cosets):
    first, second = application_cosets
    code, output = run(["enumerate", application_text])
    assert code == cli.EXIT_OK
    rows = output.splitlines()
    assert len(rows) == 24
    assert rows == ["%d, %d" % pair for pair in first + second]


def test_enumerate_limit(application_text, capsys):
    code, output = run(["enumerate", application_text, "--limit", "5", "--format", "json"])
    record = json.loads(output)
    assert code == cli.EXIT_OK
    assert len(record["solutions"]) == 5
    assert record["truncated"] is True
    code, output = run(["enumerate", application_text, "--limit", "5"])
    assert len(output.splitlines()) == 5
    assert "truncated" in capsys.readouterr().err


def test_enumerate_limit_not_reached(application_text):
    code, output = run(["enumerate", application_text, "--limit", "24", "--format", "json"])
    assert json.loads(output)["truncated"] is False


HUGE_BASIS = "x + y + z ≡ 0 (mod 100000)"


def test_enumerate_limit_with_huge_basis():
    code, output = run(["enumerate", HUGE_BASIS, "--limit", "2"])
    assert code == cli.EXIT_OK
    assert output.splitlines() == ["0, 0, 0", "0, 1, 99999"]


def test_solve_limit_with_huge_basis(capsys):
    code, output = run(["solve", HUGE_BASIS, "--limit", "2", "--format", "json"])
    record = json.loads(output)
    assert code == cli.EXIT_OK
    assert record["s"] == "10000000000"
    assert record["basis"] == [[0, 0, 0], [0, 1, 99999]]
    assert record["truncated"] is True
    code, output = run(["solve", HUGE_BASIS, "--limit", "2"])
    assert output.splitlines()[-3:] == ["basis:", "0, 0, 0", "0, 1, 99999"]
    assert "truncated" in capsys.readouterr().err


def test_solve_limit_not_reached(application_text):
    code, output = run(["solve", application_text, "--limit", "2", "--format", "json"])
    assert json.loads(output)["truncated"] is False
    assert json.loads(output)["basis"] == [[1, 0], [4, 1]]


def test_solve_negative_limit(application_text):
    code, _ = run(["solve", application_text, "--limit", "-1"])
    assert code == cli.EXIT_USAGE


def test_enumerate_single_unknown():
    code, output = run(["enumerate", "x ≡ 3 (mod 5)"])
    assert code == cli.EXIT_OK
    assert output == "3\n"


def test_enumerate_unsolvable():
    code, _ = run(["enumerate", "2x ≡ 1 (mod 4)"])
    assert code == cli.EXIT_UNSOLVABLE


def test_check_dependent(application_text):
    code, output = run(["check", application_text, "7,4", "1,0"])
    assert code == cli.EXIT_OK
    lines = output.splitlines()
    assert lines[0] == "dependent"
    assert "x: 7 - 1 = 6 (mod 12), stride 6: divisible" in lines
    assert "y: 4 - 0 = 4 (mod 12), stride 2: divisible" in lines
    assert lines[-1] == "(7, 4) = (1, 0) expanded with t = (1, 2)"


def test_check_independent(application_text):
    code, output = run(["check", application_text, "4,1", "0,1", "--format", "json"])
    assert code == cli.EXIT_OK
    assert json.loads(output) == {"verdict": "independent", "differences": [4, 0],
                                  "strides": [6, 2], "parameters": None}


def test_check_self_is_dependent(application_text):
    code, output = run(["check", application_text, "(10, 11)", "(10, 11)"])
    assert output.splitlines()[0] == "dependent"


def test_check_warns_for_non_solutions(application_text, caplog):
    code, output = run(["check", application_text, "0,0", "6,2"])
    assert code == cli.EXIT_OK
    assert any("not a solution" in r.getMessage() for r in caplog.records)


def test_check_arity_mismatch(application_text):
    code, _ = run(["check", application_text, "1", "1,0"])
    assert code == cli.EXIT_USAGE


def test_verify_application(application_text):
    code, output = run(["verify", application_text])
    assert code == cli.EXIT_OK
    assert "agrees_with_summary = true" in output
    assert "agrees_with_basis = true" in output
    assert "solution_count = 24" in output


def test_verify_unsolvable():
    code, output = run(["verify", "2x ≡ 1 (mod 4)", "--format", "json"])
    assert code == cli.EXIT_OK
    assert json.loads(output)["solution_count"] == "0"


def test_verify_cap_exceeded(capsys):
    code, _ = run(["verify", "x + y + z ≡ 0 (mod 100)", "--cap", "1000"])
    assert code == cli.EXIT_USAGE
    assert "1000000" in capsys.readouterr().err


def test_verify_random_batch():
    code, output = run(["verify", "--random", "40", "--seed", "3"])
    assert code == cli.EXIT_OK
    assert output == "40 instances, 40 agree\n"


def test_verify_reports_mismatch(application_text, monkeypatch):
    from congruencebases import congruence

    original = congruence.summarize

    def wrong_summary(c):
        return original(c)._replace(p1=original(c).p1 + 1)

    monkeypatch.setattr(congruence, "summarize", wrong_summary)
    code, _ = run(["verify", application_text])
    assert code == cli.EXIT_MISMATCH


def test_plot(tmp_path, application_text):
    target = tmp_path / "application.png"
    code, _ = run(["plot", application_text, "--output", str(target)])
    assert code == cli.EXIT_OK
    assert target.stat().st_size > 0


def test_plot_rejects_three_unknowns(tmp_path):
    code, _ = run(["plot", "x + y + z ≡ 0 (mod 3)", "--output", str(tmp_path / "p.png")])
    assert code == cli.EXIT_USAGE
