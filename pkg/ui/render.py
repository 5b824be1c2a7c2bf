"""
═══════════════════════════════════════════════════════════════════════════════
AB-PERFECT GRAPH LAB - OUTPUT RENDERING
═══════════════════════════════════════════════════════════════════════════════
Module: ui/render.py
Last Updated: 2026-10-17
═══════════════════════════════════════════════════════════════════════════════

PURPOSE:
    Turns command records into text, JSON or CSV. Everything written to
    stdout passes through here, in input order, so output depends only on
    the run configuration.

FORMATS:
    text   banner + aligned table (pandas to_string), errors as footer
    json   one envelope validated by docs/report_schema.json
    csv    pandas DataFrame.to_csv with a fixed column order; error
           records go to the diagnostics stream instead

═══════════════════════════════════════════════════════════════════════════════
"""

import sys
import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence

import pandas as pd

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from config.settings import EXPORT_CONFIG, SYSTEM_INFO
from core.graph import Graph, emit_graph6
from core.profile import Parameter, ParameterProfile

# Configure logging
logger = logging.getLogger(__name__)

BANNER_WIDTH = 78
SCHEMA_VERSION = 1

# Profile column of each parameter (EXPORT_CONFIG["csv_columns"] order)
PARAMETER_COLUMNS: Dict[Parameter, str] = {
    Parameter.OMEGA: "omega",
    Parameter.CHI: "chi",
    Parameter.HADWIGER: "h",
    Parameter.PSI: "psi",
    Parameter.ALPHA: "alpha",
    Parameter.B_CHROMATIC: "b",
    Parameter.PSEUDO_B: "B",
    Parameter.GRUNDY: "Gamma",
    Parameter.PSEUDO_GRUNDY: "gamma",
}

REPORT_COLUMNS = ["theorem", "verdict", "max_order", "graph_count",
                  "counterexample_total", "statement"]
RECOGNITION_COLUMNS = ["n", "graph6", "chordal", "chordal_witness",
                       "trivially_perfect", "trivially_perfect_witness",
                       "berge", "berge_witness"]
CHECK_COLUMNS = ["check", "graph6", "expected", "observed", "passed"]


# ═══════════════════════════════════════════════════════════════════════════════
# RECORD BUILDERS
# ═══════════════════════════════════════════════════════════════════════════════

def profile_record(g: Graph, profile: ParameterProfile, **extra: Any) -> Dict[str, Any]:
    """
    Flat record for one graph: n, graph6, then the nine values.

    Example:
        >>> profile_record(Graph.cycle(4), full_profile(Graph.cycle(4)))["h"]
        3
    """
    record: Dict[str, Any] = dict(extra)
    record["n"] = g.n
    record["graph6"] = emit_graph6(g)
    for parameter, column in PARAMETER_COLUMNS.items():
        record[column] = profile.value(parameter)
    return record


def error_record(line: int, text: str, error: Exception) -> Dict[str, Any]:
    record = {"line": line, "input": text, "error": str(error)}
    offset = getattr(error, "offset", None)
    if offset is not None:
        record["offset"] = offset
    return record


def profile_columns(leading: Sequence[str] = ()) -> List[str]:
    return list(leading) + list(EXPORT_CONFIG["csv_columns"])


# ═══════════════════════════════════════════════════════════════════════════════
# FORMATTERS
# ═══════════════════════════════════════════════════════════════════════════════

def _banner(title: str, subtitle: str = "") -> List[str]:
    lines = ["═" * BANNER_WIDTH, f"{SYSTEM_INFO['title'].upper()} - {title}"]
    if subtitle:
        lines.append(subtitle)
    lines.append("═" * BANNER_WIDTH)
    return lines


def _text_table(records: Sequence[Dict[str, Any]], columns: Sequence[str]) -> str:
    if not records:
        return "(no records)"
    frame = pd.DataFrame([{c: _cell(r.get(c)) for c in columns} for r in records], columns=list(columns))
    return frame.to_string(index=False)


def _cell(value: Any) -> Any:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return ""
    return value


def to_json(command: str, records: Sequence[Dict[str, Any]], catalog_sha256: str = "",
            errors: Sequence[Dict[str, Any]] = ()) -> str:
    """JSON envelope shared by every command."""
    envelope = {
        "schema_version": SCHEMA_VERSION,
        "tool": SYSTEM_INFO["name"],
        "command": command,
        "catalog_sha256": catalog_sha256,
        "records": list(records),
        "errors": list(errors),
    }
    return json.dumps(envelope, indent=2, ensure_ascii=False) + "\n"


def to_csv(records: Sequence[Dict[str, Any]], columns: Sequence[str]) -> str:
    frame = pd.DataFrame(list(records), columns=list(columns))
    return frame.to_csv(index=False, lineterminator="\n")


def render_records(
    command: str,
    records: Sequence[Dict[str, Any]],
    fmt: str,
    columns: Sequence[str],
    catalog_sha256: str = "",
    errors: Sequence[Dict[str, Any]] = (),
    title: Optional[str] = None,
) -> str:
    """
    Render flat records.

    Raises:
        ValueError: If fmt is not a supported format
    """
    if fmt == "json":
        return to_json(command, records, catalog_sha256, errors)
    if fmt == "csv":
        for error in errors:
            logger.error(f"line {error['line']}: {error['error']}")
        return to_csv(records, columns)
    if fmt == "text":
        subtitle = f"catalog sha256 {catalog_sha256}" if catalog_sha256 else ""
        lines = _banner(title or command.upper(), subtitle)
        lines.append(_text_table(records, columns))
        if errors:
            lines.append("")
            lines.append(f"ERRORS ({len(errors)})")
            for error in errors:
                lines.append(f"  line {error['line']}: {error['error']}  [{error['input']}]")
        return "\n".join(lines) + "\n"
    raise ValueError(f"Unknown output format: {fmt}")


# ═══════════════════════════════════════════════════════════════════════════════
# THEOREM REPORTS
# ═══════════════════════════════════════════════════════════════════════════════

def _report_text(report) -> List[str]:
    mark = "VERIFIED" if report.verified else "COUNTEREXAMPLES"
    lines = [
        f"[{report.theorem_id}] {mark}",
        f"  {report.title}",
        f"  claim:     {report.statement}",
        f"  universe:  {report.graph_count} graphs, order <= {report.max_order}",
    ]
    for check in report.targeted:
        lines.append(f"  targeted:  {'ok  ' if check.passed else 'FAIL'} {check.label} ({check.graph6})")
    if not report.verified:
        shown = len(report.counterexamples)
        lines.append(f"  counterexamples: {report.counterexample_total} (showing {shown})")
        for cx in report.counterexamples:
            sides = ", ".join(f"{k}={'yes' if v else 'no'}" for k, v in cx.sides.items())
            lines.append(f"    {cx.graph6:<12} n={cx.order}  {sides}")
            if cx.detail:
                lines.append(f"      {cx.detail}")
            if cx.subgraph:
                lines.append(f"      offending subgraph {cx.subgraph} on {cx.subgraph_vertices}: {cx.values}")
    return lines


def render_reports(reports: Iterable, fmt: str, catalog_sha256: str = "") -> str:
    """
    Render TheoremReports.

    Raises:
        ValueError: If fmt is not a supported format
    """
    reports = list(reports)
    if fmt == "json":
        return to_json("verify", [r.to_dict() for r in reports], catalog_sha256)
    if fmt == "csv":
        rows = [{
            "theorem": r.theorem_id,
            "verdict": r.verdict,
            "max_order": r.max_order,
            "graph_count": r.graph_count,
            "counterexample_total": r.counterexample_total,
            "statement": r.statement,
        } for r in reports]
        return to_csv(rows, REPORT_COLUMNS)
    if fmt == "text":
        verified = sum(1 for r in reports if r.verified)
        lines = _banner("THEOREM VERIFICATION", f"catalog sha256 {catalog_sha256}")
        for report in reports:
            lines.extend(_report_text(report))
            lines.append("─" * BANNER_WIDTH)
        lines.append(f"SUMMARY: {verified}/{len(reports)} verified")
        return "\n".join(lines) + "\n"
    raise ValueError(f"Unknown output format: {fmt}")


__all__ = [
    "PARAMETER_COLUMNS",
    "REPORT_COLUMNS",
    "RECOGNITION_COLUMNS",
    "CHECK_COLUMNS",
    "profile_record",
    "error_record",
    "profile_columns",
    "to_json",
    "to_csv",
    "render_records",
    "render_reports",
]
