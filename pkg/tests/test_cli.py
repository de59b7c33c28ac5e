import json
import subprocess
import sys

import pytest

from compenum.cli import main
from compenum.genfun import count
from compenum.partset import parse_setspec

TABLE_20 = """\
1,0,1,1
2,1,1,2
3,1,2,3
4,1,4,6
5,3,6,11
6,3,10,20
7,5,18,37
8,9,30,68
9,11,50,125
10,19,86,230
11,29,146,423
12,41,246,778
13,67,418,1431
14,99,710,2632
15,149,1202,4841
16,233,2038,8904
17,347,3458,16377
18,531,5862,30122
19,813,9938,55403
20,1225,16854,101902
"""


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    code, out, _ = run_cli(capsys, "count", "not:ap:1:3", "10")
    assert code == 0 and out == "19\n"
    code, out, _ = run_cli(capsys, "count", "set:", "5")
    assert code == 0 and out == "0\n"


def test_series_formats(capsys):
    code, out, _ = run_cli(capsys, "series", "not:mod:3:0", "--limit", "7", "--format", "csv")
    assert code == 0 and out == "1,1,2,3,6,11,20,37\n"
    code, out, _ = run_cli(capsys, "series", "mod:2:1", "--limit", "3")
    assert out == "0 1\n1 1\n2 1\n3 2\n"
    code, out, _ = run_cli(capsys, "series", "set:1,2", "--limit", "5", "--format", "json")
    assert json.loads(out) == [1, 1, 2, 3, 5, 8]


def test_table_mod3_byte_for_byte(capsys):
    code, out, _ = run_cli(capsys, "table", "--mod3", "--limit", "20")
    assert code == 0
    assert out == TABLE_20


def test_table_requires_mode_flag(capsys):
    code, out, err = run_cli(capsys, "table", "--limit", "5")
    assert code == 2


def test_recurrence_json_and_nth_round_trip(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "recurrence", "not:ap:2:3")
    assert code == 0
    data = json.loads(out)
    assert data["order"] == 3 and data["coeffs"] == [1, 0, 2]
    path = tmp_path / "rec.json"
    path.write_text(out)
    A = parse_setspec("not:ap:2:3")
    for n in (0, 1, 17, 60, 100):
        code, out, _ = run_cli(capsys, "nth", str(n), "--recurrence-file", str(path))
        assert code == 0
        assert out.strip() == str(count(A, n))


def test_recurrence_plain_format(capsys):
    code, out, _ = run_cli(capsys, "recurrence", "not:mod:3:0", "--format", "plain")
    lines = out.splitlines()
    assert lines[0] == "order: 3"
    assert lines[1] == "coeffs: 1, 1, 1"
    assert lines[2] == "corrections: 3:-1"
    assert lines[3] == "initial: 1, 1, 2, 3"


def test_nth_direct_and_modular(capsys):
    code, out, _ = run_cli(capsys, "nth", "not:mod:3:0", "20")
    assert out == "101902\n"
    code, out, _ = run_cli(
        capsys, "nth", "not:mod:3:0", "1000000000000", "--mod", "1000000007"
    )
    assert code == 0 and out == "297441196\n"


def test_eval_closed(capsys):
    code, out, _ = run_cli(capsys, "eval-closed", "not:mod:3:0", "20")
    assert code == 0 and out == "101902.0\n"
    code, out, _ = run_cli(capsys, "eval-closed", "not:mod:3:0", "0")
    assert out == "1.0\n"


def test_closed_form_report(capsys):
    code, out, _ = run_cli(capsys, "closed-form", "not:mod:3:0")
    assert code == 0
    assert "generating function: (1 - x^3) / (1 - x - x^2 - x^3)" in out
    assert "polynomial part: 1" in out
    assert out.count("pole ") == 3
    assert "growth rate: 1.83928675521" in out
    assert "nearest-integer rounding valid: yes" in out
    code, out, _ = run_cli(capsys, "closed-form", "not:ap:1:3")
    assert "nearest-integer rounding valid: no" in out


def test_bylength(capsys):
    code, out, _ = run_cli(capsys, "bylength", "mod:2:1", "5")
    assert out == "0 0\n1 1\n2 0\n3 3\n4 0\n5 1\n"


def test_verify_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify", "thm1")
    assert code == 0 and "verification passed" in out
    code, out, _ = run_cli(capsys, "verify", "thm3", "--k", "3", "--m", "1")
    assert code == 1
    assert "verification FAILED" in out
    assert "stated initial values" in out
    code, out, _ = run_cli(capsys, "verify", "all")
    assert code == 0
    assert "FAIL, documented" in out
    assert "verification passed" in out


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "all", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert len(data["reports"]) == 49
    flagged = [r for r in data["reports"] if r["expected_discrepancy"]]
    assert len(flagged) == 10


def test_usage_errors_exit_two(capsys):
    code, _, err = run_cli(capsys, "count", "not:ap:9:4", "3")
    assert code == 2 and err.startswith("error:")
    code, _, err = run_cli(capsys, "count", "mod:3:1")  # missing n
    assert code == 2
    code, _, err = run_cli(capsys, "frobnicate")
    assert code == 2


def test_deterministic_output(capsys):
    first = run_cli(capsys, "closed-form", "not:ap:2:3", "--digits", "40")
    second = run_cli(capsys, "closed-form", "not:ap:2:3", "--digits", "40")
    assert first == second


def test_console_script_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "compenum.cli", "count", "all", "12"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "2048\n"
