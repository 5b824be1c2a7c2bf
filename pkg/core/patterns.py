"""
═══════════════════════════════════════════════════════════════════════════════
AB-PERFECT GRAPH LAB - PATTERN CATALOG AND INDUCED MATCHING
═══════════════════════════════════════════════════════════════════════════════
Module: core/patterns.py
Last Updated: 2026-10-17
═══════════════════════════════════════════════════════════════════════════════

PURPOSE:
    Named forbidden graphs are loaded from config/patterns.txt rather than
    built in code. This module parses that catalog, hashes it for reports,
    and finds induced copies of a pattern inside a host graph.

CATALOG FORMAT:
    order=4 C4: 0-1, 1-2, 2-3, 3-0
    union=2D: D, D
    family=trivially_perfect: C4, P4

    A union line builds the disjoint union of earlier patterns, relabeled
    in the listed order, so 2D follows whatever D the catalog defines.

MATCHING:
    Backtracking over pattern vertices in index order. Host candidates are
    tried in increasing order, so the first embedding found is the
    lexicographically least image sequence.

═══════════════════════════════════════════════════════════════════════════════
"""

import sys
import re
import hashlib
import logging
from functools import lru_cache
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union, Any

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from config.settings import PATTERN_CONFIG
from core.graph import Graph, iter_bits, popcount

# Configure logging
logger = logging.getLogger(__name__)

Embedding = Tuple[int, ...]

_PATTERN_LINE = re.compile(r"^order=(\d+)\s+([^:\s]+)\s*:\s*(.*)$")
_FAMILY_LINE = re.compile(r"^family=([^:\s]+)\s*:\s*(.*)$")
_UNION_LINE = re.compile(r"^union=([^:\s]+)\s*:\s*(.*)$")
_EDGE = re.compile(r"^(\d+)-(\d+)$")


class PatternCatalogError(ValueError):
    """Malformed pattern catalog (line number included when known)."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


# ═══════════════════════════════════════════════════════════════════════════════
# DATA CLASSES
# ═══════════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class Pattern:
    """
    A named small graph used in forbidden-family recognition.

    Attributes:
        name: Catalog identifier (C4, P3+K2, 2D, ...)
        order: Vertex count
        edges: Sorted (u, v) pairs with u < v
    """
    name: str
    order: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if self.order < 1:
            raise PatternCatalogError(f"Pattern {self.name}: order must be positive")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise PatternCatalogError(f"Pattern {self.name}: loop at {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise PatternCatalogError(
                    f"Pattern {self.name}: edge {u}-{v} outside 0..{self.order - 1}")
            pair = (min(u, v), max(u, v))
            if pair in seen:
                raise PatternCatalogError(f"Pattern {self.name}: duplicate edge {u}-{v}")
            seen.add(pair)

    @property
    def graph(self) -> Graph:
        return Graph.from_edges(self.order, self.edges)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "order": self.order,
            "edges": [list(e) for e in self.edges],
        }


@dataclass
class PatternCatalog:
    """
    Patterns and named families loaded from one catalog file.

    Attributes:
        patterns: Name -> Pattern, in file order
        families: Family name -> list of pattern names
        sha256: Hex digest of the catalog bytes
        source: Path the catalog was read from ("" for in-memory text)
    """
    patterns: Dict[str, Pattern] = field(default_factory=dict)
    families: Dict[str, List[str]] = field(default_factory=dict)
    sha256: str = ""
    source: str = ""

    def get(self, name: str) -> Pattern:
        """
        Pattern by name.

        Raises:
            KeyError: If the catalog has no such pattern
        """
        if name not in self.patterns:
            raise KeyError(f"Unknown pattern: {name}")
        return self.patterns[name]

    def graph(self, name: str) -> Graph:
        return self.get(name).graph

    def family(self, name: str) -> List[Pattern]:
        """
        Patterns of a named family, in the order the family lists them.

        Raises:
            KeyError: If the family is not defined
        """
        if name not in self.families:
            raise KeyError(f"Unknown pattern family: {name}")
        return [self.patterns[p] for p in self.families[name]]

    def get_statistics(self) -> Dict[str, Any]:
        return {
            "patterns": len(self.patterns),
            "families": len(self.families),
            "largest_order": max((p.order for p in self.patterns.values()), default=0),
            "sha256": self.sha256,
        }


# ═══════════════════════════════════════════════════════════════════════════════
# CATALOG LOADING
# ═══════════════════════════════════════════════════════════════════════════════

def _parse_edges(text: str, line_number: int) -> List[Tuple[int, int]]:
    edges = []
    for token in (t.strip() for t in text.split(",")):
        if not token:
            continue
        match = _EDGE.match(token)
        if not match:
            raise PatternCatalogError(f"Bad edge token '{token}'", line_number)
        edges.append((int(match.group(1)), int(match.group(2))))
    return edges


def _union_pattern(name: str, parts: List[Pattern]) -> Pattern:
    edges = []
    offset = 0
    for part in parts:
        edges.extend((u + offset, v + offset) for u, v in part.edges)
        offset += part.order
    return Pattern(name, offset, tuple(sorted(edges)))


def _member_names(body: str, kind: str, name: str,
                  catalog: PatternCatalog, line_number: int) -> List[str]:
    members = [m.strip() for m in body.split(",") if m.strip()]
    if not members:
        raise PatternCatalogError(f"{kind} {name} lists no patterns", line_number)
    for member in members:
        if member not in catalog.patterns:
            raise PatternCatalogError(
                f"{kind} {name} names undefined pattern {member}", line_number)
    return members


def parse_catalog(text: str, source: str = "") -> PatternCatalog:
    """
    Parse catalog text.

    Raises:
        PatternCatalogError: On any malformed line, duplicate name, or a
            union or family naming an undefined pattern
    """
    catalog = PatternCatalog(
        sha256=hashlib.sha256(text.encode("utf-8")).hexdigest(),
        source=source,
    )

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        pattern_match = _PATTERN_LINE.match(line)
        if pattern_match:
            order, name, body = pattern_match.groups()
            if name in catalog.patterns:
                raise PatternCatalogError(f"Duplicate pattern {name}", line_number)
            try:
                edges = _parse_edges(body, line_number)
                normalized = tuple(sorted((min(u, v), max(u, v)) for u, v in edges))
                catalog.patterns[name] = Pattern(name, int(order), normalized)
            except PatternCatalogError as error:
                if error.line_number is None:
                    raise PatternCatalogError(str(error), line_number) from error
                raise
            continue

        union_match = _UNION_LINE.match(line)
        if union_match:
            name, body = union_match.groups()
            if name in catalog.patterns:
                raise PatternCatalogError(f"Duplicate pattern {name}", line_number)
            members = _member_names(body, "Union", name, catalog, line_number)
            catalog.patterns[name] = _union_pattern(
                name, [catalog.patterns[m] for m in members])
            continue

        family_match = _FAMILY_LINE.match(line)
        if family_match:
            family, body = family_match.groups()
            catalog.families[family] = _member_names(body, "Family", family, catalog, line_number)
            continue

        raise PatternCatalogError(f"Unrecognized line '{line}'", line_number)

    logger.debug(
        "Loaded pattern catalog",
        extra={"extra_data": catalog.get_statistics()},
    )
    return catalog


def load_catalog(path: Optional[Union[str, Path]] = None) -> PatternCatalog:
    """
    Load the pattern catalog file.

    Args:
        path: Catalog path (defaults to PATTERN_CONFIG["catalog_path"])

    Raises:
        PatternCatalogError: If the file is missing or malformed
    """
    path = Path(path or PATTERN_CONFIG["catalog_path"])
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise PatternCatalogError(f"Cannot read pattern catalog {path}: {error}") from error
    return parse_catalog(text, source=str(path))


def catalog_hash(path: Optional[Union[str, Path]] = None) -> str:
    """SHA-256 of the catalog bytes, as embedded in reports."""
    return load_catalog(path).sha256


@lru_cache(maxsize=8)
def _cached_catalog(path: str) -> PatternCatalog:
    return load_catalog(path)


def default_catalog(path: Optional[Union[str, Path]] = None) -> PatternCatalog:
    """
    Catalog shared by recognizers and the theorem registry (loaded once per path).
    """
    return _cached_catalog(str(Path(path or PATTERN_CONFIG["catalog_path"]).resolve()))


# ═══════════════════════════════════════════════════════════════════════════════
# INDUCED SUBGRAPH MATCHING
# ═══════════════════════════════════════════════════════════════════════════════

def find_induced_graph(g: Graph, p: Graph) -> Optional[Embedding]:
    """
    Lexicographically least induced embedding of p into g.

    Returns:
        Tuple whose i-th entry is the host vertex of pattern vertex i,
        or None if g has no induced copy of p
    """
    k = p.n
    if k > g.n:
        return None

    p_degrees = [popcount(row) for row in p.adj]
    g_degrees = [popcount(row) for row in g.adj]
    image = [0] * k
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == k:
            return True
        back = p.adj[i] & ((1 << i) - 1)
        for v in iter_bits(g.vertex_mask & ~used):
            if g_degrees[v] < p_degrees[i]:
                continue
            row = g.adj[v]
            ok = True
            for j in range(i):
                if (row >> image[j] & 1) != (back >> j & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[i] = v
            used |= 1 << v
            if extend(i + 1):
                return True
            used &= ~(1 << v)
        return False

    if extend(0):
        return tuple(image)
    return None


def find_induced(g: Graph, p: Union[Pattern, Graph]) -> Optional[Embedding]:
    """
    Find an induced copy of a pattern.

    Example:
        >>> find_induced(Graph.cycle(4), Pattern("P3", 3, ((0, 1), (1, 2))))
        (0, 1, 2)
    """
    target = p.graph if isinstance(p, Pattern) else p
    return find_induced_graph(g, target)


def verify_embedding(g: Graph, p: Union[Pattern, Graph], embedding: Embedding) -> bool:
    """True iff embedding is injective and maps p onto an induced subgraph of g."""
    target = p.graph if isinstance(p, Pattern) else p
    if len(embedding) != target.n or len(set(embedding)) != target.n:
        return False
    if any(not 0 <= v < g.n for v in embedding):
        return False
    for i in range(target.n):
        for j in range(i + 1, target.n):
            if target.has_edge(i, j) != g.has_edge(embedding[i], embedding[j]):
                return False
    return True


__all__ = [
    "Pattern",
    "PatternCatalog",
    "PatternCatalogError",
    "Embedding",
    "parse_catalog",
    "load_catalog",
    "catalog_hash",
    "default_catalog",
    "find_induced",
    "find_induced_graph",
    "verify_embedding",
]
