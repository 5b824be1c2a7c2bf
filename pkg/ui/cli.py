"""
═══════════════════════════════════════════════════════════════════════════════
AB-PERFECT GRAPH LAB - COMMAND LINE
═══════════════════════════════════════════════════════════════════════════════
Module: ui/cli.py
Last Updated: 2026-10-17
═══════════════════════════════════════════════════════════════════════════════

COMMANDS:
    params        all nine parameters of every graph6 input line
    enumerate     canonical graph6 of every isomorphism class of order n
    verify        theorem verification over the enumerated universe
    obstructions  minimal (a, b) obstructions up to --max-order
    table         parameter table of the named catalog graphs
    recognize     chordal / trivially perfect / Berge verdicts with witnesses
    check-d       consistency checks on the catalog's D and 2D

EXIT CODES:
    0   everything computed / verified
    1   a theorem counterexample or a failed catalog check
    2   input, configuration or consistency error

CONFIGURATION PRECEDENCE:
    command line flag > ABPERFECT_* environment (.env included) > settings

USAGE:
    python -m ui.cli verify --theorem T1 --max-order 7
    python -m ui.cli obstructions omega psi --max-order 6 --format csv
    ./run.sh params --input graphs.g6

═══════════════════════════════════════════════════════════════════════════════
"""

import sys
import argparse
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from config.settings import (
    EXPORT_CONFIG,
    GRAPH_CONFIG,
    LOGGING_CONFIG,
    PATTERN_CONFIG,
    SYSTEM_INFO,
    VERIFICATION_CONFIG,
    ensure_directories_exist,
    tier_order,
)
from core.graph import Graph, Graph6ParseError, GraphError, disjoint_union, emit_graph6
from core.canonical import canonical_key, enumerate_graphs, graphs_from_file, read_graph6_lines
from core.patterns import PatternCatalog, PatternCatalogError, default_catalog
from core.profile import ConsistencyError, Parameter, parse_parameter
from core.recognizers import is_berge, is_chordal, is_trivially_perfect
from core.perfection import check_obstruction, minimal_obstructions
from core.theorems import TheoremVerifier, UnknownTheoremError, resolve_theorem_ids
from database.profile_cache import CacheFormatError, ProfileCache
from ui.render import (
    CHECK_COLUMNS,
    RECOGNITION_COLUMNS,
    error_record,
    profile_columns,
    profile_record,
    render_records,
    render_reports,
)
from utils.logger import configure_logging, log_run_event

# Configure logging
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_ERROR = 2

NO_CACHE = "none"


class ConfigError(ValueError):
    """The run configuration is invalid."""


# ═══════════════════════════════════════════════════════════════════════════════
# RUN CONFIGURATION
# ═══════════════════════════════════════════════════════════════════════════════

@dataclass
class RunConfig:
    """
    Resolved settings of one invocation.

    Attributes:
        command: Subcommand name
        max_order: Universe bound (<= 8 when the universe is enumerated)
        input_path: graph6 input file (None reads stdin for params/recognize)
        patterns_path: Pattern catalog file
        cache_path: Profile cache file (None disables persistence)
        workers: Worker processes (>= 1)
        output_format: text | json | csv
        tier: full | extended
        theorem: Theorem id or "all"
        parameters: Parameter ids for obstructions
        order: Order for enumerate
    """
    command: str
    max_order: int
    input_path: Optional[str] = None
    patterns_path: str = ""
    cache_path: Optional[str] = None
    workers: int = 1
    output_format: str = "text"
    tier: str = "full"
    theorem: str = "all"
    parameters: Tuple[str, ...] = ()
    order: Optional[int] = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        tier = args.tier or VERIFICATION_CONFIG["default_tier"]
        if args.max_order is not None:
            max_order = args.max_order
        elif args.tier:
            max_order = tier_order(args.tier)
        else:
            max_order = VERIFICATION_CONFIG["default_max_order"]

        cache_path = args.cache if args.cache is not None else EXPORT_CONFIG["default_cache"]
        if cache_path == NO_CACHE:
            cache_path = None

        return cls(
            command=args.command,
            max_order=max_order,
            input_path=args.input,
            patterns_path=args.patterns or PATTERN_CONFIG["catalog_path"],
            cache_path=cache_path,
            workers=args.workers if args.workers is not None else VERIFICATION_CONFIG["workers"],
            output_format=args.format or EXPORT_CONFIG["default_format"],
            tier=tier,
            theorem=getattr(args, "theorem", None) or "all",
            parameters=tuple(getattr(args, "parameters", None) or ()),
            order=getattr(args, "order", None),
        )

    def validate(self) -> List[str]:
        """Human-readable configuration errors (empty when valid)."""
        errors = []
        if self.workers < 1:
            errors.append("Worker count must be at least 1")
        if self.output_format not in EXPORT_CONFIG["supported_formats"]:
            errors.append(f"Unknown output format: {self.output_format}")
        if self.tier not in VERIFICATION_CONFIG["tiers"]:
            errors.append(f"Unknown tier: {self.tier}")
        if not Path(self.patterns_path).exists():
            errors.append(f"Pattern catalog not found: {self.patterns_path}")
        if self.input_path is not None and not Path(self.input_path).exists():
            errors.append(f"Input file not found: {self.input_path}")

        enumerated = self.command in ("verify", "obstructions") and self.input_path is None
        limit = GRAPH_CONFIG["max_enumeration_order"] if enumerated else GRAPH_CONFIG["max_vertices"]
        if not 1 <= self.max_order <= limit:
            errors.append(f"--max-order {self.max_order} outside 1..{limit}")
        return errors

    def apply(self) -> None:
        """Push flag values into the shared settings read by library code."""
        PATTERN_CONFIG["catalog_path"] = self.patterns_path
        VERIFICATION_CONFIG["workers"] = self.workers


@dataclass
class CommandResult:
    output: str
    exit_code: int = EXIT_OK
    diagnostics: List[str] = field(default_factory=list)


# ═══════════════════════════════════════════════════════════════════════════════
# HELPERS
# ═══════════════════════════════════════════════════════════════════════════════

def _catalog(config: RunConfig) -> PatternCatalog:
    return default_catalog(config.patterns_path)


def _load_cache(config: RunConfig) -> ProfileCache:
    if config.cache_path is None:
        return ProfileCache()
    return ProfileCache.load(config.cache_path)


def _save_cache(config: RunConfig, cache: ProfileCache) -> None:
    if config.cache_path is not None:
        cache.save(config.cache_path)


def _input_lines(config: RunConfig, stdin) -> Iterator[Tuple[int, Union[Graph, Graph6ParseError]]]:
    if config.input_path is not None:
        with open(config.input_path, "r", encoding="ascii", errors="replace") as handle:
            yield from read_graph6_lines(handle)
    else:
        yield from read_graph6_lines(stdin)


def _pattern_names(catalog: PatternCatalog) -> Dict[str, str]:
    """Canonical key -> catalog pattern name (first name wins)."""
    names: Dict[str, str] = {}
    for pattern in catalog.patterns.values():
        names.setdefault(canonical_key(pattern.graph), pattern.name)
    return names


def _parameters(config: RunConfig) -> Tuple[Parameter, Parameter]:
    if len(config.parameters) != 2:
        raise ConfigError("obstructions needs exactly two parameter ids")
    a, b = (parse_parameter(p) for p in config.parameters)
    if a == b:
        raise ConfigError(f"Parameters must differ, got {a.value} twice")
    return a, b


# ═══════════════════════════════════════════════════════════════════════════════
# COMMANDS
# ═══════════════════════════════════════════════════════════════════════════════

def cmd_params(config: RunConfig, stdin=None) -> CommandResult:
    """One profile record per input graph, input order kept; bad lines become error records."""
    cache = _load_cache(config)
    records, errors = [], []
    for line_number, item in _input_lines(config, stdin or sys.stdin):
        if isinstance(item, Graph6ParseError):
            errors.append(error_record(line_number, item.line, item))
            continue
        records.append(profile_record(item, cache.get_or_compute(item), line=line_number))
    _save_cache(config, cache)

    exit_code = EXIT_ERROR if errors else EXIT_OK
    if not records and not errors:
        return CommandResult("", exit_code)
    output = render_records("params", records, config.output_format, profile_columns(),
                            _catalog(config).sha256, errors, title="GRAPH PARAMETERS")
    return CommandResult(output, exit_code)


def cmd_enumerate(config: RunConfig) -> CommandResult:
    n = config.order if config.order is not None else config.max_order
    limit = GRAPH_CONFIG["max_enumeration_order"]
    if not 1 <= n <= limit:
        raise ConfigError(f"Enumeration order {n} outside 1..{limit}")

    graphs = list(enumerate_graphs(n))
    diagnostics = [f"{len(graphs)} isomorphism classes of order {n}"]
    if config.output_format == "text":
        return CommandResult("".join(emit_graph6(g) + "\n" for g in graphs), EXIT_OK, diagnostics)
    records = [{"n": g.n, "graph6": emit_graph6(g)} for g in graphs]
    output = render_records("enumerate", records, config.output_format, ["n", "graph6"])
    return CommandResult(output, EXIT_OK, diagnostics)


def cmd_verify(config: RunConfig) -> CommandResult:
    """
    Verify one theorem or all of them; exit 1 if any report has counterexamples.
    """
    theorem_ids = resolve_theorem_ids(config.theorem)
    catalog = _catalog(config)
    cache = _load_cache(config)
    source = None
    if config.input_path is not None:
        source = list(graphs_from_file(config.input_path, config.max_order))

    verifier = TheoremVerifier(cache=cache, catalog=catalog, workers=config.workers)
    reports = [verifier.verify(tid, config.max_order, source) for tid in theorem_ids]
    verifier.spot_check()
    _save_cache(config, cache)

    exit_code = EXIT_OK if all(r.verified for r in reports) else EXIT_COUNTEREXAMPLE
    diagnostics = [f"{r.theorem_id}: {r.verdict} in {r.elapsed_seconds:.2f}s" for r in reports]
    return CommandResult(render_reports(reports, config.output_format, catalog.sha256),
                         exit_code, diagnostics)


def cmd_obstructions(config: RunConfig) -> CommandResult:
    a, b = _parameters(config)
    catalog = _catalog(config)
    cache = _load_cache(config)
    source = None
    if config.input_path is not None:
        source = graphs_from_file(config.input_path, config.max_order)

    found = minimal_obstructions(a, b, config.max_order, cache, source)
    names = _pattern_names(catalog)
    records = [
        profile_record(g, cache.get_or_compute(g), name=names.get(canonical_key(g), ""))
        for g in found
    ]
    _save_cache(config, cache)

    log_run_event("MINE", resource=f"{a.value},{b.value}",
                  details={"max_order": config.max_order, "found": len(records),
                           "catalog_sha256": catalog.sha256})
    title = f"MINIMAL ({a.symbol}, {b.symbol}) OBSTRUCTIONS UP TO ORDER {config.max_order}"
    output = render_records("obstructions", records, config.output_format,
                            profile_columns(["name"]), catalog.sha256, title=title)
    return CommandResult(output, EXIT_OK, [f"{len(records)} minimal obstructions"])


def cmd_table(config: RunConfig) -> CommandResult:
    catalog = _catalog(config)
    cache = _load_cache(config)
    records = [
        profile_record(p.graph, cache.get_or_compute(p.graph), name=p.name)
        for p in catalog.family(PATTERN_CONFIG["golden_family"])
    ]
    _save_cache(config, cache)
    output = render_records("table", records, config.output_format, profile_columns(["name"]),
                            catalog.sha256, title="PARAMETER TABLE")
    return CommandResult(output)


def cmd_recognize(config: RunConfig, stdin=None) -> CommandResult:
    catalog = _catalog(config)
    records, errors = [], []
    for line_number, item in _input_lines(config, stdin or sys.stdin):
        if isinstance(item, Graph6ParseError):
            errors.append(error_record(line_number, item.line, item))
            continue
        record = {"line": line_number, "n": item.n, "graph6": emit_graph6(item)}
        verdicts = (
            ("chordal", is_chordal(item)),
            ("trivially_perfect", is_trivially_perfect(item, catalog)),
            ("berge", is_berge(item)),
        )
        for name, verdict in verdicts:
            record[name] = verdict.member
            record[f"{name}_witness"] = "" if verdict.member else verdict.describe()
        records.append(record)

    exit_code = EXIT_ERROR if errors else EXIT_OK
    if not records and not errors:
        return CommandResult("", exit_code)
    output = render_records("recognize", records, config.output_format, RECOGNITION_COLUMNS,
                            catalog.sha256, errors, title="CLASS RECOGNITION")
    return CommandResult(output, exit_code)


def cmd_check_d(config: RunConfig) -> CommandResult:
    """
    Catalog checks on D: 2D is D + D, b(2D) = 4, Γ(2D) = 3 and every proper
    induced subgraph of 2D has b = Γ. Exit 1 flags the catalog.
    """
    catalog = _catalog(config)
    cache = _load_cache(config)
    d, two_d = catalog.graph("D"), catalog.graph("2D")
    profile = cache.get_or_compute(two_d)
    minimality = check_obstruction(two_d, Parameter.B_CHROMATIC, Parameter.GRUNDY, cache, name="2D")
    _save_cache(config, cache)

    g6 = emit_graph6(two_d)
    records = [
        {"check": "2D = D + D", "graph6": g6, "expected": True,
         "observed": canonical_key(two_d) == canonical_key(disjoint_union(d, d))},
        {"check": "b(2D) = 4", "graph6": g6, "expected": 4, "observed": profile.b_chromatic},
        {"check": "Γ(2D) = 3", "graph6": g6, "expected": 3, "observed": profile.grundy},
        {"check": "proper induced subgraphs have b = Γ", "graph6": g6, "expected": True,
         "observed": minimality.minimal},
    ]
    for record in records:
        record["passed"] = record["observed"] == record["expected"]

    exit_code = EXIT_OK if all(r["passed"] for r in records) else EXIT_COUNTEREXAMPLE
    if exit_code != EXIT_OK:
        logger.warning(f"Catalog D failed its checks: {catalog.source}")
    output = render_records("check-d", records, config.output_format, CHECK_COLUMNS,
                            catalog.sha256, title="D RESOLUTION")
    return CommandResult(output, exit_code)


COMMANDS: Dict[str, Callable[[RunConfig], CommandResult]] = {
    "params": cmd_params,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "obstructions": cmd_obstructions,
    "table": cmd_table,
    "recognize": cmd_recognize,
    "check-d": cmd_check_d,
}


# ═══════════════════════════════════════════════════════════════════════════════
# ARGUMENT PARSING
# ═══════════════════════════════════════════════════════════════════════════════

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-order", type=int, default=None,
                        help="Universe bound (default: tier order or settings)")
    common.add_argument("--input", default=None, help="graph6 input file")
    common.add_argument("--patterns", default=None, help="Pattern catalog file")
    common.add_argument("--cache", default=None,
                        help=f"Profile cache file ('{NO_CACHE}' disables persistence)")
    common.add_argument("--workers", type=int, default=None, help="Worker processes")
    common.add_argument("--format", choices=EXPORT_CONFIG["supported_formats"], default=None)
    common.add_argument("--tier", choices=sorted(VERIFICATION_CONFIG["tiers"]), default=None)
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR")

    parser = argparse.ArgumentParser(
        prog=SYSTEM_INFO["name"],
        description=SYSTEM_INFO["description"],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("params", parents=[common], help="Nine parameters per graph6 line")
    enum = sub.add_parser("enumerate", parents=[common], help="Isomorphism classes of order n")
    enum.add_argument("order", type=int, nargs="?", default=None)
    verify = sub.add_parser("verify", parents=[common], help="Verify theorems")
    verify.add_argument("--theorem", default="all", help="Theorem id or 'all'")
    mine = sub.add_parser("obstructions", parents=[common], help="Mine minimal obstructions")
    mine.add_argument("parameters", nargs=2, metavar="PARAM")
    sub.add_parser("table", parents=[common], help="Parameter table of the named graphs")
    sub.add_parser("recognize", parents=[common], help="Class verdicts per graph6 line")
    sub.add_parser("check-d", parents=[common], help="Check the catalog's D and 2D")
    return parser


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    configure_logging(level=args.log_level or LOGGING_CONFIG["log_level"], stream=stderr)

    try:
        config = RunConfig.from_args(args)
        problems = config.validate()
        if problems:
            raise ConfigError("; ".join(problems))
        config.apply()
        ensure_directories_exist()
        result = COMMANDS[config.command](config)
    except UnknownTheoremError as error:
        logger.error(error.args[0])
        print(f"error: {error.args[0]}", file=stderr)
        return EXIT_ERROR
    except KeyError as error:
        # catalog lookups: a family or pattern the loaded catalog does not define
        message = error.args[0] if error.args else repr(error)
        logger.error(f"{args.command} failed: {message}")
        print(f"configuration error: {message}", file=stderr)
        return EXIT_ERROR
    except (ConfigError, GraphError, Graph6ParseError, PatternCatalogError,
            CacheFormatError, ValueError, OSError) as error:
        logger.error(f"{args.command} failed: {error}")
        print(f"error: {error}", file=stderr)
        return EXIT_ERROR
    except ConsistencyError as error:
        logger.critical(f"Consistency failure: {error}")
        print(f"consistency error: {error}", file=stderr)
        return EXIT_ERROR

    stdout.write(result.output)
    for line in result.diagnostics:
        print(line, file=stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
