"""Golden value tests: deterministic regression tests for the CLI text output.

Each case in ``contracts/golden_values.json`` pins the exact text printed
for one invocation.  If a case fails after an intended change to rendering
or to a closed form, update the manifest together with the change.
"""

from __future__ import annotations

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parents[1]
MANIFEST = Path(__file__).resolve().parent / "contracts" / "golden_values.json"


def _cases() -> list[dict]:
    return json.loads(MANIFEST.read_text(encoding="utf-8"))["cases"]


def _run(args: list[str]) -> subprocess.CompletedProcess[str]:
    env = {**os.environ}
    env.pop("MOTIVIC_BUDGET", None)
    env["PYTHONPATH"] = str(REPO_ROOT / "src")
    return subprocess.run(
        [sys.executable, "-m", "wild_mckay", *args],
        capture_output=True,
        text=True,
        env=env,
    )


@pytest.mark.parametrize("case", _cases(), ids=lambda c: " ".join(c["args"]))
def test_golden_text(case):
    result = _run(case["args"])
    assert result.returncode == 0, result.stderr
    assert result.stdout.strip() == case["text"]


def test_manifest_shape():
    data = json.loads(MANIFEST.read_text(encoding="utf-8"))
    assert data["manifest_version"] == 1
    for case in data["cases"]:
        assert set(case) == {"args", "text"}
