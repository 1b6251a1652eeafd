import json
import shutil
import subprocess
import sys

import pytest

from ncsphere.cli import main
from ncsphere.verify import VerdictRecord, emit_report, parse_oracle, run_suite


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def _strip_timing(doc):
    for suite in doc["suites"]:
        for check in suite["checks"]:
            check.pop("millis")
    return doc


def test_membership_passes(capsys):
    code, out = _run(capsys, "membership")
    assert code == 0
    assert "0 failed" in out.out


def test_json_schema(capsys):
    code, out = _run(capsys, "membership", "--report", "json")
    doc = json.loads(out.out)
    assert code == 0
    assert list(doc) == ["version", "suites"]
    assert doc["version"] == 1
    (suite,) = doc["suites"]
    assert suite["name"] == "membership"
    for check in suite["checks"]:
        assert list(check) == ["name", "status", "details", "millis"]
        assert check["status"] in ("pass", "fail", "skip")


def test_chern_report_carries_ratios(capsys):
    code, out = _run(capsys, "chern", "--report", "json")
    doc = json.loads(out.out)
    checks = {c["name"]: c for c in doc["suites"][0]["checks"]}
    assert code == 0
    assert checks["b_ch2_zero"]["details"]["raw_terms"] >= 600
    assert "ratios" in json.dumps(checks["transgression"]["details"])


def test_deterministic_modulo_timing(capsys):
    _, a = _run(capsys, "chern", "--report", "json", "--seed", "4")
    _, b = _run(capsys, "chern", "--report", "json", "--seed", "4")
    assert _strip_timing(json.loads(a.out)) == _strip_timing(json.loads(b.out))


def test_failing_suite_exits_one(capsys):
    # the literal stated phase of the twisted J identity does not hold
    code, out = _run(capsys, "deform")
    assert code == 1
    assert "FAIL  lemma2_stated_phase" in out.out


@pytest.mark.parametrize(
    "argv",
    [["nonsense"], ["chern", "--oracle", "N=5,theta=0.2"], ["chern", "--oracle", "N=x"], ["membership", "--degree", "1"], []],
)
def test_usage_errors_exit_two(capsys, argv):
    code, _ = _run(capsys, *argv)
    assert code == 2


def test_parse_oracle():
    from fractions import Fraction

    assert parse_oracle("N=5,theta=1/5") == (5, Fraction(1, 5))
    with pytest.raises(ValueError):
        parse_oracle("N=5,theta=1/7")
    with pytest.raises(ValueError):
        parse_oracle("N=5,theta=0.2")
    with pytest.raises(ValueError):
        parse_oracle("N=5,phi=1/5")


def test_empty_report():
    doc = json.loads(emit_report([], "json"))
    assert doc == {"version": 1, "suites": []}
    assert emit_report([], "text").strip() == "0 checks, 0 failed"


def test_failing_record_has_fail_block():
    rec = VerdictRecord("x", "y", "fail", {"deviation": 0.5}, 0)
    text = emit_report([rec], "text")
    assert "FAIL  y" in text
    assert '"deviation": 0.5' in text


def test_oracle_flag_adds_numeric_checks():
    names = [r.name for r in run_suite("quartic", oracle=True)]
    assert "quartic_numeric" in names
    assert "quartic_numeric" not in [r.name for r in run_suite("quartic", oracle=False)]


def test_console_script():
    exe = shutil.which("ncsphere-verify")
    cmd = [exe] if exe else [sys.executable, "-m", "ncsphere.cli"]
    proc = subprocess.run(cmd + ["membership", "--degree", "3"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "[membership]" in proc.stdout
