"""Tests for utils/logger.py: console formatting and the hash-chained run ledger."""

import io
import json
import logging

import pytest

from utils.logger import (
    LoggerFactory,
    configure_logging,
    get_logger,
    log_run_event,
    verify_ledger_chain,
)


@pytest.fixture
def ledger(tmp_path, monkeypatch):
    monkeypatch.setattr(LoggerFactory, "_loggers", {})
    path = tmp_path / "ledger" / "runs.log"
    logger = LoggerFactory.get_ledger_logger(str(path))
    yield path
    for handler in logger.handlers:
        handler.close()
    logger.handlers = [logging.NullHandler()]


def test_ledger_entries_form_a_chain(ledger):
    log_run_event("VERIFY", resource="T1", result="verified", details={"graph_count": 1252})
    log_run_event("MINE", resource="omega,psi", details={"found": 4})
    log_run_event("CACHE_SAVE", resource="profiles.txt")

    lines = ledger.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 3
    first = json.loads(lines[0])
    assert first["prev_hash"] == "GENESIS" and first["seq"] == 1
    assert first["action"] == "VERIFY" and first["details"] == {"graph_count": 1252}
    assert verify_ledger_chain(lines)


def test_tampering_breaks_the_chain(ledger):
    log_run_event("VERIFY", resource="T2", result="counterexamples")
    log_run_event("VERIFY", resource="T3", result="verified")

    lines = ledger.read_text(encoding="utf-8").splitlines()
    edited = json.loads(lines[0])
    edited["result"] = "verified"
    assert not verify_ledger_chain([json.dumps(edited, sort_keys=True), lines[1]])
    assert not verify_ledger_chain(lines[1:])


def test_console_format_carries_extra_data():
    stream = io.StringIO()
    configure_logging(level="INFO", file_logging=False, stream=stream)
    logging.getLogger("core.example").info("sweep finished", extra={"extra_data": {"graphs": 3}})
    line = stream.getvalue().strip()
    assert "[INFO    ]" in line
    assert line.endswith('sweep finished | {"graphs": 3}')
    configure_logging(level="WARNING", file_logging=False)


def test_system_loggers_are_namespaced():
    assert get_logger("verification").name == "abperfect.verification"
    assert get_logger("verification") is get_logger("verification")
