"""Command-line interface: output shapes and exit codes."""

import json
import subprocess
import sys

import pytest

from bzloop import cli
from bzloop.analyze import CheckResult


def test_present(capsys):
    assert cli.run(["present", "--g", "2", "--h", "1"]) == 0
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert lines[0] == "g=2 h=1: q=2 eta=3 d=14 m=20"
    assert "y x y" in lines
    assert "y x^3 y x^2 y x^2 y" in lines
    assert len(lines) == 1 + 6  # header plus one line per relator


def test_nq(capsys):
    assert cli.run(["nq", "--g", "2", "--h", "1", "--class", "8"]) == 0
    out = capsys.readouterr().out
    assert "dims:" in out
    assert "y x^4, y x^3 y" in out  # the first two-dimensional component


def test_construct(capsys):
    assert cli.run(["construct", "--g", "2", "--h", "1", "--class", "6"]) == 0
    out = capsys.readouterr().out
    assert "y x^3 y" in out
    assert "[.,x]" in out and "[.,y]" in out


def test_eval(capsys):
    assert cli.run(["eval", "--g", "2", "--h", "1", "--word", "y x y"]) == 0
    assert capsys.readouterr().out.strip().endswith("0")
    assert cli.run(["eval", "--g", "2", "--h", "1", "--word", "y x^4"]) == 0
    assert capsys.readouterr().out.strip().endswith("y x^4")
    assert cli.run(["eval", "--g", "2", "--h", "1", "--word", "y x^5"]) == 0
    assert capsys.readouterr().out.strip().endswith("0")


def test_eval_bad_word(capsys):
    assert cli.run(["eval", "--g", "2", "--h", "1", "--word", "y x^"]) == 2
    err = capsys.readouterr().err
    assert err.startswith("error:")
    assert "(at position 3)" in err


def test_analyze(capsys):
    assert cli.run(["analyze", "--g", "2", "--h", "1", "--class", "22"]) == 0
    out = capsys.readouterr().out
    assert out.rstrip().endswith("ALL CHECKS PASS")


def test_analyze_json(tmp_path, capsys):
    path1 = tmp_path / "a.json"
    path2 = tmp_path / "b.json"
    for path in (path1, path2):
        assert (
            cli.run(
                ["analyze", "--g", "2", "--h", "1", "--class", "22", "--json", str(path)]
            )
            == 0
        )
        capsys.readouterr()
    assert path1.read_bytes() == path2.read_bytes()
    decoded = json.loads(path1.read_text())
    assert decoded["ok"] is True
    assert decoded["class_bound"] == 22


def test_analyze_failure_exit_code(monkeypatch, capsys):
    real = cli.analyze

    def failing(g, h=None, class_bound=None):
        report = real(g, h, class_bound)
        return type(report)(
            params=report.params,
            class_bound=report.class_bound,
            dims=report.dims,
            centers=report.centers,
            second_center_extras=report.second_center_extras,
            quotient_dims=report.quotient_dims,
            quotient_centralizers=report.quotient_centralizers,
            quotient_constituents=report.quotient_constituents,
            checks=report.checks + (CheckResult("injected", False, "synthetic"),),
        )

    monkeypatch.setattr(cli, "analyze", failing)
    assert cli.run(["analyze", "--g", "2", "--h", "1", "--class", "22"]) == 1
    out = capsys.readouterr().out
    assert "FAILED" in out


def test_verify_appendix(capsys):
    assert cli.run(["verify-appendix", "--gh-max", "3"]) == 0
    out = capsys.readouterr().out
    assert "ALL CLAIMS PASS" in out
    assert "g=2 h=1" in out


def test_binom(capsys):
    assert cli.run(["binom", "--check-max", "64"]) == 0
    assert "ALL ENTRIES AGREE" in capsys.readouterr().out


def test_identity_i(capsys):
    assert cli.run(["identity-i", "--Q", "4", "--s-max", "2"]) == 0
    out = capsys.readouterr().out
    assert "ALL INSTANCES MATCH THE CORRECTED LAW" in out


def test_identity_i_rejects_bad_q(capsys):
    assert cli.run(["identity-i", "--Q", "3"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_usage_errors_exit_2(capsys):
    assert cli.run([]) == 2
    capsys.readouterr()
    assert cli.run(["present", "--g", "2"]) == 2  # missing --h
    capsys.readouterr()
    assert cli.run(["present", "--g", "2", "--h", "1", "--bogus"]) == 2
    capsys.readouterr()


def test_present_invalid_params(capsys):
    assert cli.run(["present", "--g", "1", "--h", "1"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bzloop", "present", "--g", "2", "--h", "1"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert "y x y" in proc.stdout
