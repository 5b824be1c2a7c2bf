"""Tests for config/settings.py: environment overrides, tiers and validation."""

import pytest

from config.settings import (
    EXPORT_CONFIG,
    LOGGING_CONFIG,
    VERIFICATION_CONFIG,
    apply_env_overrides,
    tier_order,
    validate_config,
)


def test_shipped_configuration_is_valid():
    assert validate_config() == []


def test_tiers():
    assert tier_order("full") == 7
    assert tier_order("extended") == 8
    with pytest.raises(ValueError):
        tier_order("huge")


def test_env_overrides(monkeypatch):
    monkeypatch.setitem(VERIFICATION_CONFIG, "workers", VERIFICATION_CONFIG["workers"])
    monkeypatch.setitem(VERIFICATION_CONFIG, "progress", VERIFICATION_CONFIG["progress"])
    monkeypatch.setitem(EXPORT_CONFIG, "default_format", EXPORT_CONFIG["default_format"])

    applied = apply_env_overrides({
        "ABPERFECT_WORKERS": "4",
        "ABPERFECT_PROGRESS": "off",
        "ABPERFECT_FORMAT": "json",
        "ABPERFECT_TIER": "",
        "UNRELATED": "1",
    })
    assert sorted(applied) == ["default_format", "progress", "workers"]
    assert VERIFICATION_CONFIG["workers"] == 4
    assert VERIFICATION_CONFIG["progress"] is False
    assert EXPORT_CONFIG["default_format"] == "json"


def test_validation_reports_bad_values(monkeypatch):
    monkeypatch.setitem(VERIFICATION_CONFIG, "workers", 0)
    monkeypatch.setitem(LOGGING_CONFIG, "log_level", "LOUD")
    monkeypatch.setitem(VERIFICATION_CONFIG, "tiers", {"full": 7, "silly": 12})
    errors = validate_config()
    assert "Worker count must be at least 1" in errors
    assert "Unknown log level: LOUD" in errors
    assert any("silly" in e for e in errors)
