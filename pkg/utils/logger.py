"""
╔══════════════════════════════════════════════════════════════════════════════╗
║                         LOGGING CONFIGURATION                                ║
║                         AB-Perfect Graph Lab                                 ║
║                                                                              ║
║  Purpose: Centralized logging with a hash-chained run ledger                 ║
║  Version: 1.0.0                                                              ║
╚══════════════════════════════════════════════════════════════════════════════╝

NOTES:
- Library modules only call logging.getLogger(__name__)
- The command line front end calls configure_logging() once
- The run ledger is tamper-evident: every entry hashes its predecessor, so a
  verification verdict cannot be edited after the fact without breaking the
  chain
"""

import logging
import logging.handlers
import hashlib
import json
import os
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional, Dict, Any

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from config.settings import LOGGING_CONFIG, LOGS_DIR


# =============================================================================
# CONFIGURATION
# =============================================================================

SYSTEM_LOG_DIR = LOGS_DIR / "system"
ROOT_LOGGER_NAME = "abperfect"


# =============================================================================
# CUSTOM FORMATTERS
# =============================================================================

class RunFormatter(logging.Formatter):
    """
    Fixed-width formatter for console and file output.

    Format: [TIMESTAMP] [LEVEL] [SOURCE] MESSAGE | {extra}
    """

    LEVEL_NAMES = {
        "DEBUG": "DEBUG   ",
        "INFO": "INFO    ",
        "WARNING": "WARNING ",
        "ERROR": "ERROR   ",
        "CRITICAL": "CRITICAL",
    }

    def format(self, record: logging.LogRecord) -> str:
        """
        Format a log record.

        Args:
            record: LogRecord instance

        Returns:
            Formatted log string
        """
        timestamp = datetime.fromtimestamp(record.created).strftime(
            "%Y-%m-%dT%H:%M:%S.%f"
        )[:-3]

        level = self.LEVEL_NAMES.get(record.levelname, record.levelname.ljust(8))
        source = f"{record.module}.{record.funcName}"
        message = record.getMessage()

        extra_data = ""
        if getattr(record, "extra_data", None):
            extra_data = f" | {json.dumps(record.extra_data, default=str, sort_keys=True)}"

        line = f"[{timestamp}] [{level}] [{source}] {message}{extra_data}"
        if record.exc_info:
            line += "\n" + self.formatException(record.exc_info)
        return line


class LedgerFormatter(logging.Formatter):
    """
    Formatter for the hash-chained run ledger.

    Each entry includes:
    - Sequence number
    - Timestamp
    - Hash of previous entry (chain integrity)
    - Action, resource, result and details
    - Hash of current entry
    """

    def __init__(self):
        super().__init__()
        self.sequence_counter = 0
        self.previous_hash = "GENESIS"

    def format(self, record: logging.LogRecord) -> str:
        self.sequence_counter += 1

        entry = {
            "seq": self.sequence_counter,
            "timestamp": datetime.fromtimestamp(record.created).isoformat(),
            "prev_hash": self.previous_hash,
            "event": record.getMessage(),
            "action": getattr(record, "action", "unknown"),
            "resource": getattr(record, "resource", None),
            "result": getattr(record, "result", None),
            "details": getattr(record, "details", None),
        }

        entry_str = json.dumps(entry, sort_keys=True, default=str)
        entry["hash"] = hashlib.sha256(entry_str.encode()).hexdigest()[:16]
        self.previous_hash = entry["hash"]

        return json.dumps(entry, sort_keys=True, default=str)


def verify_ledger_chain(lines) -> bool:
    """
    Check that a sequence of ledger lines forms an unbroken hash chain.

    Args:
        lines: Iterable of JSON lines written by LedgerFormatter

    Returns:
        True if every entry's hash matches and links to its predecessor
    """
    previous = "GENESIS"
    for line in lines:
        entry = json.loads(line)
        claimed = entry.pop("hash")
        if entry["prev_hash"] != previous:
            return False
        recomputed = hashlib.sha256(
            json.dumps(entry, sort_keys=True, default=str).encode()
        ).hexdigest()[:16]
        if recomputed != claimed:
            return False
        previous = claimed
    return True


# =============================================================================
# CUSTOM HANDLERS
# =============================================================================

class OwnerOnlyRotatingFileHandler(logging.handlers.RotatingFileHandler):
    """Rotating file handler that keeps log files readable by the owner only."""

    def __init__(
        self,
        filename: str,
        max_bytes: int = 10 * 1024 * 1024,
        backup_count: int = 5,
        encoding: str = "utf-8"
    ):
        Path(filename).parent.mkdir(parents=True, exist_ok=True)

        super().__init__(
            filename,
            maxBytes=max_bytes,
            backupCount=backup_count,
            encoding=encoding
        )
        self._restrict_permissions(filename)

    def _restrict_permissions(self, filepath: str) -> None:
        try:
            if os.name != "nt":
                os.chmod(filepath, 0o600)
        except OSError:
            pass

    def doRollover(self) -> None:
        super().doRollover()
        self._restrict_permissions(self.baseFilename)


# =============================================================================
# LOGGER FACTORY
# =============================================================================

class LoggerFactory:
    """
    Factory for configured loggers.

    Logger Types:
    - system: general operations (console + optional rotating file)
    - ledger: hash-chained record of runs (verification, mining, cache saves)
    """

    _loggers: Dict[str, logging.Logger] = {}
    _configured = False

    @classmethod
    def configure(
        cls,
        level: Optional[str] = None,
        file_logging: Optional[bool] = None,
        stream=None
    ) -> logging.Logger:
        """
        Attach handlers to the project root logger.

        Library modules log under ``core.*``, ``database.*`` and ``ui.*``;
        those names are routed to the same handlers.

        Args:
            level: Logging level name (defaults to LOGGING_CONFIG)
            file_logging: Also write logs/system/abperfect.log
            stream: Console stream (defaults to stderr)

        Returns:
            The configured project logger
        """
        level_name = (level or LOGGING_CONFIG["log_level"]).upper()
        if file_logging is None:
            file_logging = LOGGING_CONFIG["file_logging"]

        handlers = []

        console_handler = logging.StreamHandler(stream or sys.stderr)
        console_handler.setFormatter(RunFormatter())
        handlers.append(console_handler)

        if file_logging:
            file_handler = OwnerOnlyRotatingFileHandler(
                str(SYSTEM_LOG_DIR / f"{ROOT_LOGGER_NAME}.log"),
                max_bytes=LOGGING_CONFIG["max_file_size_mb"] * 1024 * 1024,
                backup_count=LOGGING_CONFIG["backup_count"]
            )
            file_handler.setFormatter(RunFormatter())
            handlers.append(file_handler)

        for name in (ROOT_LOGGER_NAME, "core", "database", "ui"):
            logger = logging.getLogger(name)
            logger.setLevel(level_name)
            logger.handlers = list(handlers)
            logger.propagate = False

        cls._configured = True
        return logging.getLogger(ROOT_LOGGER_NAME)

    @classmethod
    def get_system_logger(cls, name: str = "system") -> logging.Logger:
        """
        Get a system logger for general operations.

        Args:
            name: Logger name (child of the project logger)

        Returns:
            Logger instance
        """
        full_name = f"{ROOT_LOGGER_NAME}.{name}"
        if full_name not in cls._loggers:
            cls._loggers[full_name] = logging.getLogger(full_name)
        return cls._loggers[full_name]

    @classmethod
    def get_ledger_logger(cls, ledger_file: Optional[str] = None) -> logging.Logger:
        """
        Get the run ledger logger.

        The ledger only writes to disk when file logging is enabled or an
        explicit ledger file is given; otherwise entries are dropped.

        Args:
            ledger_file: Override of LOGGING_CONFIG["ledger_file"]

        Returns:
            Ledger Logger instance
        """
        name = f"{ROOT_LOGGER_NAME}.ledger"
        if name in cls._loggers and ledger_file is None:
            return cls._loggers[name]

        logger = logging.getLogger(name)
        logger.setLevel(logging.INFO)
        logger.propagate = False
        logger.handlers = []

        target = ledger_file
        if target is None and LOGGING_CONFIG["file_logging"]:
            target = LOGGING_CONFIG["ledger_file"]

        if target is not None:
            handler = OwnerOnlyRotatingFileHandler(
                str(target),
                max_bytes=50 * 1024 * 1024,
                backup_count=LOGGING_CONFIG["backup_count"]
            )
            handler.setFormatter(LedgerFormatter())
            logger.addHandler(handler)
        else:
            logger.addHandler(logging.NullHandler())

        cls._loggers[name] = logger
        return logger


# =============================================================================
# CONVENIENCE FUNCTIONS
# =============================================================================

def configure_logging(
    level: Optional[str] = None,
    file_logging: Optional[bool] = None,
    stream=None
) -> logging.Logger:
    """Configure console/file handlers once per process (see LoggerFactory.configure)."""
    return LoggerFactory.configure(level=level, file_logging=file_logging, stream=stream)


def get_logger(name: str = "default") -> logging.Logger:
    """Get a system logger by name."""
    return LoggerFactory.get_system_logger(name)


def log_run_event(
    action: str,
    resource: Optional[str] = None,
    result: str = "success",
    details: Optional[Dict[str, Any]] = None
) -> None:
    """
    Append an entry to the run ledger.

    Args:
        action: What was run (VERIFY, MINE, CACHE_SAVE, ...)
        resource: Theorem id, parameter pair or file the action touched
        result: Outcome keyword
        details: Structured details (counts, timings, catalog hash)
    """
    logger = LoggerFactory.get_ledger_logger()
    logger.info(
        f"{action} {resource or ''}".strip(),
        extra={
            "action": action,
            "resource": resource,
            "result": result,
            "details": details,
        },
    )


def log_verification_event(report) -> None:
    """
    Record a finished theorem report in the system log and the run ledger.

    Args:
        report: TheoremReport from core.theorems
    """
    logger = get_logger("verification")
    level = logging.INFO if report.verified else logging.WARNING
    logger.log(
        level,
        f"THEOREM {report.theorem_id}: {report.verdict} "
        f"({report.graph_count} graphs, order <= {report.max_order}, "
        f"{report.counterexample_total} counterexamples)"
    )
    log_run_event(
        action="VERIFY",
        resource=report.theorem_id,
        result=report.verdict,
        details={
            "max_order": report.max_order,
            "graph_count": report.graph_count,
            "counterexamples": report.counterexample_total,
            "elapsed_seconds": round(report.elapsed_seconds, 3),
        },
    )


# =============================================================================
# EXPORT
# =============================================================================

__all__ = [
    "LoggerFactory",
    "configure_logging",
    "get_logger",
    "log_run_event",
    "log_verification_event",
    "verify_ledger_chain",
    "RunFormatter",
    "LedgerFormatter",
    "OwnerOnlyRotatingFileHandler",
]
