"""Configuration loading: defaults, rc file, environment, CLI overrides."""
from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Any, Dict, Optional

from wild_mckay.errors import WildMcKayError

# ── Defaults ──────────────────────────────────────────────────────────────────

BUDGET_ENV = "MOTIVIC_BUDGET"
RC_NAME = ".wildmckayrc.json"

DEFAULT_CONFIG: Dict[str, Any] = {
    # Enumeration cap for brute-force point counts (tuples visited)
    "budget": 10**7,
    # Stratum cutoff for truncated-series oracles
    "truncate": 60,
    # Level at which G-side cylinders are recorded
    "cylinder_level": 1,
    # Degree bound for invariant kernels
    "maxdeg": 4,
}


class BudgetExceeded(WildMcKayError):
    """An exhaustive enumeration would visit more tuples than the budget allows."""


class InvalidConfig(WildMcKayError):
    """A configuration value has the wrong shape."""


# Smallest accepted value per key
_MINIMUM: Dict[str, int] = {"budget": 1, "truncate": 0, "cylinder_level": 0, "maxdeg": 0}


def _checked(key: str, val: Any, source: str) -> int:
    if isinstance(val, bool) or not isinstance(val, int) or val < _MINIMUM[key]:
        raise InvalidConfig(f"Invalid {key!r} in {source} (expected an integer >= {_MINIMUM[key]}): {val!r}")
    return val


def _budget_from_env() -> Optional[int]:
    raw = (os.environ.get(BUDGET_ENV, "") or "").strip()
    if not raw:
        return None
    try:
        value = int(raw)
    except ValueError as e:
        raise InvalidConfig(f"Invalid {BUDGET_ENV} (expected a positive integer): {raw!r}") from e
    if value < 1:
        raise InvalidConfig(f"Invalid {BUDGET_ENV} (expected a positive integer): {raw!r}")
    return value


def load_config(root: Optional[Path] = None, overrides: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Merge ``DEFAULT_CONFIG`` with ``.wildmckayrc.json`` in *root*, the
    ``MOTIVIC_BUDGET`` environment variable and *overrides* (highest priority).
    """
    config: Dict[str, Any] = dict(DEFAULT_CONFIG)

    if root is not None:
        rc = root / RC_NAME
        if rc.exists():
            try:
                user = json.loads(rc.read_text(encoding="utf-8"))
            except (json.JSONDecodeError, UnicodeDecodeError):
                user = None  # ignore unparsable rc file
            if isinstance(user, dict):
                for key, val in user.items():
                    if key in DEFAULT_CONFIG:
                        config[key] = _checked(key, val, RC_NAME)

    env_budget = _budget_from_env()
    if env_budget is not None:
        config["budget"] = env_budget

    if overrides:
        for key, val in overrides.items():
            if val is not None:
                config[key] = _checked(key, val, "overrides") if key in _MINIMUM else val

    return config


def effective_budget(budget: Optional[int] = None) -> int:
    """The enumeration budget: explicit value, else environment, else default."""
    if budget is not None:
        return budget
    env_budget = _budget_from_env()
    return env_budget if env_budget is not None else DEFAULT_CONFIG["budget"]


def check_budget(tuples: int, budget: Optional[int] = None) -> None:
    limit = effective_budget(budget)
    if tuples > limit:
        raise BudgetExceeded(f"{tuples} tuples exceed the enumeration budget {limit}")
