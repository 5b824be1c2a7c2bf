"""
═══════════════════════════════════════════════════════════════════════════════
AB-PERFECT GRAPH LAB - MAIN CONFIGURATION
═══════════════════════════════════════════════════════════════════════════════
Module: config/settings.py
Last Updated: 2026-10-17
═══════════════════════════════════════════════════════════════════════════════

PURPOSE:
    Central configuration file for the whole lab.
    All paths, search limits, verification tiers and output settings are
    defined here.

OVERRIDES:
    - A ``.env`` file in the project root is loaded with python-dotenv
    - Any ``ABPERFECT_*`` environment variable overrides the matching key
    - Command line flags override both (see ui/cli.py)

MODIFICATION:
    - Search limits are tied to the acceptance universes (orders 1..8);
      raising them makes sweeps exponentially slower
    - Run ``python config/settings.py`` after editing to validate

═══════════════════════════════════════════════════════════════════════════════
"""

import os
from pathlib import Path
from typing import Dict, List, Any

from dotenv import load_dotenv

# ═══════════════════════════════════════════════════════════════════════════════
# SECTION 1: BASE PATHS
# ═══════════════════════════════════════════════════════════════════════════════
# All paths are relative to the project root for portability

# __file__ = config/settings.py, so parent.parent = project root
BASE_DIR = Path(__file__).resolve().parent.parent

CONFIG_DIR = BASE_DIR / "config"                # Configuration and pattern catalog
DATA_DIR = BASE_DIR / "data"                    # Generated artifacts
LOGS_DIR = BASE_DIR / "logs"                    # Log files
DOCS_DIR = BASE_DIR / "docs"                    # Documentation and schemas

CACHE_DIR = DATA_DIR / "cache"                  # Persisted profile caches
REPORTS_DIR = DATA_DIR / "reports"              # Rendered theorem reports
GRAPHS_DIR = DATA_DIR / "graphs"                # graph6 files (enumerations, inputs)

PATTERN_CATALOG_FILE = CONFIG_DIR / "patterns.txt"
REPORT_SCHEMA_FILE = DOCS_DIR / "report_schema.json"

# Environment file (optional, never committed with secrets; only tuning knobs)
load_dotenv(BASE_DIR / ".env")


def ensure_directories_exist() -> None:
    """
    Create all writable directories if they don't exist.

    Called by the command line front end before any run. Library code
    never writes outside the paths it is handed.
    """
    directories = [
        DATA_DIR,
        CACHE_DIR,
        REPORTS_DIR,
        GRAPHS_DIR,
        LOGS_DIR,
    ]

    for directory in directories:
        directory.mkdir(parents=True, exist_ok=True)


# ═══════════════════════════════════════════════════════════════════════════════
# SECTION 2: SYSTEM INFORMATION
# ═══════════════════════════════════════════════════════════════════════════════

SYSTEM_INFO: Dict[str, str] = {
    "name": "abperfect",
    "title": "AB-Perfect Graph Lab",
    "version": "1.0.0",
    "description": "Exact complete-coloring parameters and finite theorem verification",
}


# ═══════════════════════════════════════════════════════════════════════════════
# SECTION 3: GRAPH CONFIGURATION
# ═══════════════════════════════════════════════════════════════════════════════
# Limits of the graph substrate (core/graph.py, core/canonical.py)

GRAPH_CONFIG: Dict[str, Any] = {
    # Hard vertex cap: adjacency rows are single integers of this width
    "max_vertices": 32,

    # Largest order accepted by the isomorph-free enumerator
    "max_enumeration_order": 8,

    # Orders up to this value are enumerated by brute force over all
    # labeled graphs and deduplicated by canonical key; larger orders
    # extend the previous order by one vertex
    "labeled_dedup_limit": 6,

    # Orders up to this value may use the all-permutations canonical key
    # (test oracle only; 8! permutations is already slow)
    "exhaustive_key_limit": 8,

    # Header written by standard generators at the top of graph6 files
    "graph6_header": ">>graph6<<",

    # Memo sizes for canonical keys of labeled graphs
    "canonical_memo_size": 1 << 18,
}


# ═══════════════════════════════════════════════════════════════════════════════
# SECTION 4: PATTERN CATALOG
# ═══════════════════════════════════════════════════════════════════════════════
# Forbidden graphs are data, not code. The diamond D is defined only in the
# catalog so that a different reading of it can be swapped in.

PATTERN_CONFIG: Dict[str, Any] = {
    # Catalog file path
    "catalog_path": str(PATTERN_CATALOG_FILE),

    # Named families used by the recognizers and the theorem registry
    "trivially_perfect_family": "trivially_perfect",
    "omega_psi_family": "omega_psi",
    "omega_alpha_family": "omega_alpha",
    "b_grundy_family": "b_grundy",
    "b_pseudo_grundy_family": "b_pseudo_grundy",

    # The eight graphs of the golden parameter table, in display order
    "golden_family": "golden",
}


# ═══════════════════════════════════════════════════════════════════════════════
# SECTION 5: SOLVER CONFIGURATION
# ═══════════════════════════════════════════════════════════════════════════════

SOLVER_CONFIG: Dict[str, Any] = {
    # Largest order accepted by the brute-force odd-hole search
    "berge_max_order": 12,

    # Largest order accepted by the first-fit-over-all-orderings oracle
    "grundy_ordering_max_order": 8,

    # Enforce the chain inequalities on every profile leaving full_profile
    "check_chains": True,
}


# ═══════════════════════════════════════════════════════════════════════════════
# SECTION 6: VERIFICATION CONFIGURATION
# ═══════════════════════════════════════════════════════════════════════════════
# Settings for theorem sweeps and obstruction mining (core/theorems.py)

VERIFICATION_CONFIG: Dict[str, Any] = {
    # Universe tiers: maximum enumeration order per tier
    "tiers": {
        "full": 7,
        "extended": 8,
    },
    "default_tier": "full",

    # Default maximum order when --max-order is not given
    "default_max_order": 7,

    # Reports keep at most this many counterexamples (the total is always kept)
    "counterexample_cap": 25,

    # Worker processes for sweeps (1 = in-process, no pool)
    "workers": 1,

    # Graphs handed to a worker per task
    "chunk_size": 64,

    # Cache entries recomputed from scratch after every sweep
    "spot_check_count": 100,

    # Seed for spot checks and random property inputs
    "random_seed": 20260102,

    # Show tqdm progress bars on stderr
    "progress": True,
}


# ═══════════════════════════════════════════════════════════════════════════════
# SECTION 7: EXPORT CONFIGURATION
# ═══════════════════════════════════════════════════════════════════════════════

EXPORT_CONFIG: Dict[str, Any] = {
    "supported_formats": ["text", "json", "csv"],
    "default_format": "text",

    # Fixed CSV column order (stable downstream diffing)
    "csv_columns": ["n", "graph6", "omega", "chi", "h", "psi", "alpha",
                    "b", "B", "Gamma", "gamma"],

    # Default cache file used when --cache is not given
    "default_cache": str(CACHE_DIR / "profiles.txt"),
}


# ═══════════════════════════════════════════════════════════════════════════════
# SECTION 8: LOGGING CONFIGURATION
# ═══════════════════════════════════════════════════════════════════════════════

LOGGING_CONFIG: Dict[str, Any] = {
    # Logging level: DEBUG, INFO, WARNING, ERROR, CRITICAL
    "log_level": "WARNING",

    # Write rotating log files under logs/ (console output is always on)
    "file_logging": False,

    # Maximum log file size in MB before rotation
    "max_file_size_mb": 10,

    # Number of backup log files to keep
    "backup_count": 5,

    # Run ledger (hash-chained JSON lines)
    "ledger_file": str(LOGS_DIR / "ledger" / "runs.log"),
}


# ═══════════════════════════════════════════════════════════════════════════════
# SECTION 9: ENVIRONMENT OVERRIDES
# ═══════════════════════════════════════════════════════════════════════════════
# ABPERFECT_<NAME> -> (section dict, key, converter)

ENV_PREFIX = "ABPERFECT_"


def _to_bool(value: str) -> bool:
    return value.strip().lower() in ("1", "true", "yes", "on")


ENV_OVERRIDES: Dict[str, Any] = {
    "WORKERS": (VERIFICATION_CONFIG, "workers", int),
    "TIER": (VERIFICATION_CONFIG, "default_tier", str),
    "MAX_ORDER": (VERIFICATION_CONFIG, "default_max_order", int),
    "PROGRESS": (VERIFICATION_CONFIG, "progress", _to_bool),
    "CACHE": (EXPORT_CONFIG, "default_cache", str),
    "FORMAT": (EXPORT_CONFIG, "default_format", str),
    "PATTERNS": (PATTERN_CONFIG, "catalog_path", str),
    "LOG_LEVEL": (LOGGING_CONFIG, "log_level", str),
    "FILE_LOGGING": (LOGGING_CONFIG, "file_logging", _to_bool),
}


def apply_env_overrides(environ: Dict[str, str] = None) -> List[str]:
    """
    Apply ABPERFECT_* environment variables to the section dicts.

    Args:
        environ: Mapping to read (defaults to os.environ)

    Returns:
        List of the keys that were overridden
    """
    environ = os.environ if environ is None else environ
    applied = []

    for name, (section, key, convert) in ENV_OVERRIDES.items():
        raw = environ.get(ENV_PREFIX + name)
        if raw is None or raw == "":
            continue
        section[key] = convert(raw)
        applied.append(key)

    return applied


apply_env_overrides()


# ═══════════════════════════════════════════════════════════════════════════════
# SECTION 10: HELPER FUNCTIONS
# ═══════════════════════════════════════════════════════════════════════════════

def tier_order(tier: str) -> int:
    """
    Maximum enumeration order of a verification tier.

    Example:
        >>> tier_order("full")
        7
    """
    tiers = VERIFICATION_CONFIG["tiers"]
    if tier not in tiers:
        raise ValueError(f"Unknown tier: {tier} (expected one of {sorted(tiers)})")
    return tiers[tier]


def validate_config() -> List[str]:
    """
    Validate all configuration settings.

    Returns:
        List[str]: List of validation errors (empty if all valid)
    """
    errors = []

    if not Path(PATTERN_CONFIG["catalog_path"]).exists():
        errors.append(f"Pattern catalog not found: {PATTERN_CONFIG['catalog_path']}")

    if VERIFICATION_CONFIG["workers"] < 1:
        errors.append("Worker count must be at least 1")

    if VERIFICATION_CONFIG["counterexample_cap"] < 1:
        errors.append("Counterexample cap must be at least 1")

    max_order = GRAPH_CONFIG["max_enumeration_order"]
    for tier, order in VERIFICATION_CONFIG["tiers"].items():
        if not 1 <= order <= max_order:
            errors.append(f"Tier {tier} order {order} outside 1..{max_order}")

    if VERIFICATION_CONFIG["default_tier"] not in VERIFICATION_CONFIG["tiers"]:
        errors.append(f"Unknown default tier: {VERIFICATION_CONFIG['default_tier']}")

    if EXPORT_CONFIG["default_format"] not in EXPORT_CONFIG["supported_formats"]:
        errors.append(f"Unknown output format: {EXPORT_CONFIG['default_format']}")

    if LOGGING_CONFIG["log_level"].upper() not in (
        "DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"
    ):
        errors.append(f"Unknown log level: {LOGGING_CONFIG['log_level']}")

    return errors


# ═══════════════════════════════════════════════════════════════════════════════
# END OF CONFIGURATION
# ═══════════════════════════════════════════════════════════════════════════════

if __name__ == "__main__":
    print("=" * 70)
    print(f"{SYSTEM_INFO['title']} - CONFIGURATION")
    print("=" * 70)
    print(f"System: {SYSTEM_INFO['name']} v{SYSTEM_INFO['version']}")
    print(f"Base Directory: {BASE_DIR}")
    print(f"Pattern Catalog: {PATTERN_CONFIG['catalog_path']}")
    print(f"Workers: {VERIFICATION_CONFIG['workers']}")
    print("=" * 70)

    errors = validate_config()
    if errors:
        print("CONFIGURATION ERRORS:")
        for error in errors:
            print(f"  - {error}")
    else:
        print("Configuration validation: PASSED")
