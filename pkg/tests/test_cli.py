"""Tests for the command line front end."""
import csv
import io
import json
import logging

import pytest

from pyhasse.__main__ import main
from pyhasse.exceptions import IntegralityViolation
from pyhasse.logging import LOG_VERBOSE, level_for_verbosity
from pyhasse.twistcert import ConditionTrace


def _csv_rows(text):
    """Parse CSV output without its header."""
    return list(csv.reader(io.StringIO(text)))[1:]


@pytest.mark.parametrize(
    ("argv", "code"),
    [
        (["check-curve", "--x0", "137"], 0),
        (["check-curve", "--x0", "131"], 2),
        (["check-curve", "--x0", "12"], 1),
        (["check-curve", "--x0", "abc"], 1),
        (["check-curve"], 1),
        ([], 1),
        (["check-curve", "--xd", "6"], 1),
        (["check-curve", "--x0", "137", "--xd", "6"], 1),
    ],
)
def test_check_curve_exit_codes(argv, code):
    assert main(argv) == code


def test_check_curve_table(capsys):
    assert main(["check-curve", "--x0", "137"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].split() == ["item", "holds", "detail"]
    assert "ProvenCusps" in out


def test_find_twists_hypothesis_failures(capsys):
    assert main(["find-twists", "--x0", "163", "--bound", "1000"]) == 2
    assert "h1" in capsys.readouterr().err
    assert main(["find-twists", "--xd", "6", "--q", "2", "--bound", "1000"]) == 2
    assert "h1" in capsys.readouterr().err


def test_find_twists_json_is_stable(capsys):
    argv = ["find-twists", "--x0", "167", "--variant", "inert", "--bound", "10000", "--format", "json"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main([*argv, "--workers", "2"]) == 0
    second = capsys.readouterr().out
    assert first == second
    data = json.loads(first)
    assert data["conditions"]["variant"] == "inert"
    assert data["conditions"]["weil_threshold_M"] == 781
    assert data["primes"] == []


def test_find_twists_table(capsys):
    assert main(["find-twists", "--x0", "137", "--bound", "1000"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("curve: X0(137) with w_137")
    assert "density >= 1/" in out


def test_find_twists_unsupported_variant():
    assert main(["find-twists", "--x0", "137", "--variant", "inert", "--bound", "1000"]) == 1


def test_density(capsys):
    assert main(["density", "--x0", "167", "--variant", "inert", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["density"]["num"] == 1
    assert data["class_number"] == 11


def test_scan_plus_genus(capsys):
    assert main(["scan", "plus-genus", "--limit", "1000", "--format", "csv"]) == 0
    rows = _csv_rows(capsys.readouterr().out)
    assert rows[-1][0] == "131"
    assert all(int(row[2]) <= 1 for row in rows)


def test_scan_shih(capsys):
    assert main(["scan", "shih", "--n", "17", "--pmax", "100", "--format", "csv"]) == 0
    rows = _csv_rows(capsys.readouterr().out)
    assert rows
    assert all(row[5] == "ObstructedAtN" for row in rows)
    assert "17" not in [row[1] for row in rows]


def test_scan_d0(capsys):
    assert main(["scan", "d0", "--limit", "6", "--format", "csv"]) == 0
    assert _csv_rows(capsys.readouterr().out) == [["6", "6"]]


def test_scan_needs_limit():
    assert main(["scan", "d0"]) == 1


def test_invariants(capsys):
    assert main(["invariants", "--x0", "67", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["genus"], data["wn_fixed"], data["genus_plus"]) == (5, 4, 2)

    assert main(["invariants", "--xd", "6", "--q", "2", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["genus_xd"] == 0
    assert data["al_fixed"] == {"2": 2, "3": 2, "6": 2}
    assert data["genus_klein"] == 0


def test_out_path(tmp_path, capsys):
    target = tmp_path / "report.csv"
    assert main(["scan", "d0", "--limit", "6", "--format", "csv", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert target.read_text(encoding="utf-8") == "limit,D0\n6,6\n"


def test_budget_exceeded():
    assert main(["invariants", "--x0", "1009", "--budget", "100"]) == 1


def test_verbose_logs_go_to_stderr(capsys):
    assert main(["scan", "d0", "--limit", "6", "--format", "csv", "-v"]) == 0
    captured = capsys.readouterr()
    assert captured.out == "limit,D0\n6,6\n"
    assert "Largest low-genus Klein quotient" in captured.err


def test_level_for_verbosity():
    assert level_for_verbosity(0) == logging.WARNING
    assert level_for_verbosity(1) == logging.DEBUG
    assert level_for_verbosity(3) == LOG_VERBOSE


def test_internal_consistency_exit_code(monkeypatch, capsys):
    def _broken(level):
        raise IntegralityViolation(f"Elliptic point identity fails for X0({level})")

    monkeypatch.setattr("pyhasse.__main__.x0_invariants", _broken)
    assert main(["invariants", "--x0", "11"]) == 3
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "Elliptic point identity fails for X0(11)" in captured.err


def test_find_twists_csv_witness_columns(monkeypatch, capsys):
    trace = ConditionTrace(
        prime=1153,
        residue_ok=True,
        above_threshold=True,
        not_excluded=True,
        quadratic_residues=(),
        splitting_ok=True,
        witness=(3, 2),
    )
    monkeypatch.setattr(
        "pyhasse.twistcert.certificate.enumerate_primes", lambda *args, **kwargs: [trace]
    )
    assert main(["find-twists", "--x0", "137", "--bound", "2000", "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert "\\" not in out
    assert list(csv.reader(io.StringIO(out))) == [
        ["p", "p_mod_8", "splitting", "witness_x", "witness_y"],
        ["1153", "1", "True", "3", "2"],
    ]
