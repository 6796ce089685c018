"""Tests for configuration loading and the enumeration budget."""

from __future__ import annotations

import json

import pytest

from wild_mckay.config import (
    BUDGET_ENV,
    DEFAULT_CONFIG,
    RC_NAME,
    BudgetExceeded,
    InvalidConfig,
    check_budget,
    effective_budget,
    load_config,
)


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    monkeypatch.delenv(BUDGET_ENV, raising=False)


def test_defaults(tmp_path):
    assert load_config(tmp_path) == DEFAULT_CONFIG


def test_rc_file_overrides_known_keys(tmp_path):
    (tmp_path / RC_NAME).write_text(json.dumps({"truncate": 20, "unknown": 1}), encoding="utf-8")
    config = load_config(tmp_path)
    assert config["truncate"] == 20
    assert "unknown" not in config


def test_malformed_rc_file_is_ignored(tmp_path):
    (tmp_path / RC_NAME).write_text("{not json", encoding="utf-8")
    assert load_config(tmp_path) == DEFAULT_CONFIG


def test_environment_budget(tmp_path, monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "500")
    assert load_config(tmp_path)["budget"] == 500
    assert effective_budget() == 500


def test_cli_override_wins(tmp_path, monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "500")
    assert load_config(tmp_path, {"budget": 7})["budget"] == 7
    assert load_config(tmp_path, {"budget": None})["budget"] == 500


@pytest.mark.parametrize("raw", ["abc", "0", "-3"])
def test_invalid_environment_budget(monkeypatch, raw):
    monkeypatch.setenv(BUDGET_ENV, raw)
    with pytest.raises(InvalidConfig):
        effective_budget()


def test_check_budget():
    check_budget(10, 10)
    with pytest.raises(BudgetExceeded):
        check_budget(11, 10)


@pytest.mark.parametrize(
    "payload",
    [{"budget": "lots"}, {"budget": 0}, {"truncate": -1}, {"maxdeg": 2.5}, {"cylinder_level": True}, {"truncate": None}],
)
def test_rc_values_are_type_checked(tmp_path, payload):
    (tmp_path / RC_NAME).write_text(json.dumps(payload), encoding="utf-8")
    with pytest.raises(InvalidConfig, match=next(iter(payload))):
        load_config(tmp_path)


def test_rc_zero_levels_are_accepted(tmp_path):
    (tmp_path / RC_NAME).write_text(json.dumps({"truncate": 0, "cylinder_level": 0}), encoding="utf-8")
    config = load_config(tmp_path)
    assert (config["truncate"], config["cylinder_level"]) == (0, 0)


def test_override_values_are_type_checked(tmp_path):
    with pytest.raises(InvalidConfig):
        load_config(tmp_path, {"budget": -5})
