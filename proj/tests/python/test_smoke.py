"""Smoke tests: the python module imports and the CLI round-trips."""

import json
import os
import subprocess

import pytest

import rtg

CLI = os.environ.get("RTG_CLI")


def test_relator_count():
    assert [rtg.relator_count(n) for n in (1, 2, 3, 4)] == [2, 28, 126, 344]


def test_sample_deterministic():
    a = rtg.sample_presentation(3, 0.2, seed=11)
    b = rtg.sample_presentation(3, 0.2, seed=11)
    assert a.text() == b.text()
    assert a.n == 3
    empty = rtg.sample_presentation(3, 0.0, seed=11)
    assert len(empty) == 0


def test_decide_known_group():
    pres = rtg.Presentation.from_text("n=1\ng1 g1 g1\n")
    verdict = rtg.decide(pres, max_cosets=100)
    assert verdict["outcome"] == "nontrivial"


def test_estimate_h_bracket():
    est = rtg.estimate_h(2, 0.3, trials=64, seed=5)
    assert 0.0 <= est["lower"] <= est["upper"] <= 1.0


def test_diagram_analysis():
    rows = rtg.enumerate_davkd(1, mode="raw")
    assert len(rows) == 6
    analysis = json.loads(rtg.analyze_diagram(rows[0], f="0.5"))
    assert analysis["m"] == 1
    assert analysis["C"] == [3]
    assert analysis["bound_equality"] is True
    assert rtg.fulfillability_upper_bound(rows[0], 2, 0.1) == pytest.approx(0.8)


def test_arithmetic_params():
    ap = rtg.arithmetic_params(16)
    assert ap["majorant_holds"] is True
    assert 0 < ap["p"] < 1
    with pytest.raises(ValueError):
        rtg.arithmetic_params(15)


@pytest.mark.skipif(CLI is None, reason="RTG_CLI not set")
class TestCli:
    def test_help(self):
        out = subprocess.run([CLI, "--help"], capture_output=True, text=True)
        assert out.returncode == 0
        for sub in ("sample", "decide", "sweep", "threshold", "boost",
                    "davkd-enum", "davkd-check", "zgraph", "paths",
                    "arithmetic"):
            assert sub in out.stdout

    def test_sample_then_decide(self, tmp_path):
        pres = tmp_path / "p.txt"
        out = subprocess.run(
            [CLI, "sample", "--n", "2", "--p", "0.4", "--seed", "9",
             "--epoch", "0", "--output", str(pres)],
            capture_output=True, text=True)
        assert out.returncode == 0
        text = pres.read_text()
        assert text.startswith("# rtg presentation format v1")
        assert "# manifest:" in text

        dec = subprocess.run([CLI, "decide", "--input", str(pres)],
                             capture_output=True, text=True)
        assert dec.returncode == 0
        assert dec.stdout.split()[0] in ("Trivial", "Nontrivial", "Undecided")

    def test_usage_error_is_exit_2(self):
        out = subprocess.run([CLI, "sample", "--n", "2"],
                             capture_output=True, text=True)
        assert out.returncode == 2

    def test_arithmetic_row(self):
        out = subprocess.run(
            [CLI, "arithmetic", "--n", "16", "--epoch", "0"],
            capture_output=True, text=True)
        assert out.returncode == 0
        lines = out.stdout.strip().splitlines()
        assert "manifest" in json.loads(lines[0])
        row = json.loads(lines[1])
        assert row["majorant_holds"] is True
