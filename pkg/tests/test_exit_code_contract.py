"""Exit code contract tests.

Verifies CLI exit code semantics:
    0 = success (including a divergent integral, printed as "infinity")
    1 = a verification ran and failed (report FAIL, nonzero residual)
    2 = input error (bad prime, bad dimension sequence, malformed text, budget)
"""

from __future__ import annotations

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parents[1]


def _run(
    args: list[str], *, env_extra: dict[str, str] | None = None, cwd: Path | None = None
) -> subprocess.CompletedProcess[str]:
    """Run wild-mckay CLI with given args."""
    env = {**os.environ}
    env.pop("MOTIVIC_BUDGET", None)
    env["PYTHONPATH"] = str(REPO_ROOT / "src")
    env.update(env_extra or {})
    return subprocess.run(
        [sys.executable, "-m", "wild_mckay", *args],
        capture_output=True,
        text=True,
        env=env,
        cwd=cwd,
    )


# ── success ─────────────────────────────────────────────────────────


class TestSuccess:
    def test_stringy_closed_form(self):
        result = _run(["stringy", "--p", "3", "--d", "3"])
        assert result.returncode == 0, result.stderr
        assert result.stdout.strip() == "2*L + 1"

    def test_divergent_is_not_an_error(self):
        result = _run(["stringy", "--p", "5", "--d", "3"])
        assert result.returncode == 0
        assert result.stdout.strip() == "infinity"

    def test_covars_total(self):
        result = _run(["covars", "total", "--p", "5"])
        assert result.returncode == 0
        assert result.stdout.strip() == "L^2"

    def test_divergent_weight_prints_infinity(self):
        result = _run(["covars", "weighted", "--p", "3", "--weight", "d=1"])
        assert result.returncode == 0
        assert result.stdout.strip() == "infinity"

    def test_quotient_verify(self):
        result = _run(["quotient", "verify", "--example", "ex_d3", "--p", "5"])
        assert result.returncode == 0
        assert result.stdout.strip() == "0"

    def test_rep_derive(self):
        result = _run(["rep", "derive", "--p", "3", "--d", "3", "--poly", "z"])
        assert result.returncode == 0
        assert result.stdout.strip() == "x2"

    def test_truncate(self):
        result = _run(["stringy", "--p", "3", "--d", "3", "--truncate", "20"])
        assert result.returncode == 0
        assert result.stdout.startswith("2*L + 1 + O(L^")

    def test_selftest_quick(self):
        result = _run(["selftest", "--quick"])
        assert result.returncode == 0, result.stdout
        assert "=== SELFTEST SUMMARY ===" in result.stdout
        assert "Failed: 0" in result.stdout

    def test_verbose_logs_to_stderr(self):
        result = _run(["-v", "quotient", "count", "--example", "ex_d3", "--q", "3"])
        assert result.returncode == 0
        assert result.stdout.strip() == "27"
        assert "DEBUG wild_mckay.quotients.points: counting ex_d3 over F_3" in result.stderr

    def test_moduli_stratum(self):
        result = _run(["moduli", "stratum", "--p", "3", "--j", "4"])
        assert result.returncode == 0, result.stderr
        assert result.stdout.strip() == "L^3 - L^2"

    def test_moduli_measure_g(self):
        # [tau_2(C)] = (L - 1) L^2 at level 2, p = 2
        cls = json.dumps({"infinite": False, "num": [[3, 1], [2, -1]], "den": []})
        result = _run(["moduli", "measure-g", "--p", "2", "--level", "2", "--class", cls])
        assert result.returncode == 0, result.stderr
        assert result.stdout.strip() == "L - 1"

    def test_moduli_measure_g_json(self):
        cls = json.dumps({"infinite": False, "num": [[3, 1], [2, -1]], "den": []})
        result = _run(["moduli", "measure-g", "--p", "2", "--level", "2", "--class", cls, "--json"])
        assert result.returncode == 0, result.stderr
        payload = json.loads(result.stdout)
        assert payload["value"] == {"infinite": False, "num": [[1, 1], [0, -1]], "den": []}
        assert payload["level"] == 2

    def test_divergent_truncation_prints_infinity(self):
        result = _run(["stringy", "--p", "5", "--d", "3", "--truncate", "10"])
        assert result.returncode == 0, result.stderr
        assert result.stdout.strip() == "infinity"

    def test_divergent_truncation_json(self):
        result = _run(["stringy", "--p", "5", "--d", "3", "--truncate", "10", "--json"])
        assert result.returncode == 0, result.stderr
        payload = json.loads(result.stdout)
        assert payload["value"] == {"infinite": True, "num": [], "den": []}
        assert payload["text"] == "infinity"

    def test_divergent_covars_truncation_prints_infinity(self):
        result = _run(["covars", "truncate", "--p", "3", "--weight", "d=1", "--cutoff", "5"])
        assert result.returncode == 0, result.stderr
        assert result.stdout.strip() == "infinity"


# ── verification failures ───────────────────────────────────────────


class TestVerificationFailure:
    def test_wrong_value_fails_specialization(self):
        payload = json.dumps({"infinite": False, "num": [[3, 1], [0, 1]], "den": []})
        result = _run(["quotient", "check", "--example", "ex_d3", "--q", "3", "--value", payload])
        assert result.returncode == 1
        assert "[FAIL]" in result.stdout

    def test_correct_value_passes(self):
        payload = json.dumps({"infinite": False, "num": [[3, 1]], "den": []})
        result = _run(["quotient", "check", "--example", "ex_d3", "--q", "9", "--value", payload])
        assert result.returncode == 0
        assert "[PASS]" in result.stdout


# ── input errors ────────────────────────────────────────────────────


class TestInputErrors:
    @pytest.mark.parametrize(
        "args",
        [
            ["stringy", "--p", "4", "--d", "3"],
            ["stringy", "--p", "3", "--d", "1,2"],
            ["stringy", "--p", "3", "--d", "4"],
            ["stringy", "--p", "3", "--d", "3", "--truncate", "0"],
            ["moduli", "stratum", "--p", "3", "--j", "3"],
            ["moduli", "measure-g", "--p", "2", "--level", "-1", "--class", "{\"infinite\": false, \"num\": [], \"den\": []}"],
            ["moduli", "measure-g", "--p", "2", "--level", "1", "--class", "{\"infinite\": true, \"num\": [], \"den\": []}"],
            ["moduli", "measure-g", "--p", "2", "--level", "1", "--class", "L^2"],
            ["moduli", "count", "--p", "2", "--j", "7", "--q", "4", "--budget", "5"],
            ["rep", "derive", "--p", "3", "--d", "3", "--poly", "sin(x)"],
            ["quotient", "count", "--example", "ex_d3", "--q", "6"],
            ["quotient", "check", "--example", "ex_d3", "--q", "3", "--value", "{bad"],
            ["quotient", "check", "--example", "ex_d3", "--q", "3", "--value", "[]"],
            ["covars", "measure", "--p", "3", "--stratum", "neg:d=1"],
            ["covars", "weighted", "--p", "3", "--weight", "x=1"],
            ["covars", "weighted", "--p", "3", "--weight", "e=5:c=1"],
            ["covars", "truncate", "--p", "3", "--weight", "e=0:c=1", "--cutoff", "5"],
        ],
    )
    def test_exit_2(self, args):
        result = _run(args)
        assert result.returncode == 2
        assert result.stderr.startswith("Error:")

    def test_unknown_example_rejected_by_parser(self):
        result = _run(["quotient", "verify", "--example", "ex_d9"])
        assert result.returncode == 2

    def test_invalid_budget_environment(self):
        result = _run(["covars", "total", "--p", "3"], env_extra={"MOTIVIC_BUDGET": "many"})
        assert result.returncode == 2
        assert "MOTIVIC_BUDGET" in result.stderr

    def test_budget_environment_applies(self):
        result = _run(["quotient", "count", "--example", "ex_d3", "--q", "3"], env_extra={"MOTIVIC_BUDGET": "5"})
        assert result.returncode == 2

    def test_malformed_rc_value(self, tmp_path):
        (tmp_path / ".wildmckayrc.json").write_text(json.dumps({"budget": "lots"}), encoding="utf-8")
        result = _run(["quotient", "count", "--example", "ex_d3", "--q", "3"], cwd=tmp_path)
        assert result.returncode == 2
        assert result.stderr.startswith("Error:")
        assert "budget" in result.stderr
