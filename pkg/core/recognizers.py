"""
═══════════════════════════════════════════════════════════════════════════════
AB-PERFECT GRAPH LAB - GRAPH CLASS RECOGNIZERS
═══════════════════════════════════════════════════════════════════════════════
Module: core/recognizers.py
Last Updated: 2026-10-17
═══════════════════════════════════════════════════════════════════════════════

PURPOSE:
    Membership tests with a checkable witness on every rejection:

    - chordal            LexBFS order + perfect elimination check;
                         witness is an induced cycle of length >= 4
    - F-free             induced matching against a catalog family;
                         witness is the first pattern found + embedding
    - trivially perfect  (C4, P4)-free via the catalog family
    - Berge              brute-force odd hole search in G and its
                         complement (n <= berge_max_order)

LEXBFS:
    Labels are lists of visit stamps; the unvisited vertex with the
    lexicographically largest label is visited next, lowest index first
    on ties. The reverse visit order is a perfect elimination ordering
    exactly when the graph is chordal.

═══════════════════════════════════════════════════════════════════════════════
"""

import sys
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from config.settings import PATTERN_CONFIG, SOLVER_CONFIG
from core.graph import (
    Graph,
    GraphError,
    VertexSet,
    complement,
    is_connected_subset,
    iter_bits,
    lowest_bit,
    popcount,
)
from core.patterns import Pattern, PatternCatalog, default_catalog, find_induced, verify_embedding

# Configure logging
logger = logging.getLogger(__name__)


# ═══════════════════════════════════════════════════════════════════════════════
# DATA CLASSES
# ═══════════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class ClassVerdict:
    """
    Result of a class membership test.

    Attributes:
        member: True if the graph belongs to the class
        kind: Witness kind on rejection: "pattern", "cycle", "odd_hole"
              or "odd_antihole"
        pattern: Name of the pattern found (kind == "pattern")
        vertices: Embedding (pattern) or cycle vertices in cycle order
    """
    member: bool
    kind: Optional[str] = None
    pattern: Optional[str] = None
    vertices: Tuple[int, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"member": self.member}
        if not self.member:
            out["witness"] = {
                "kind": self.kind,
                "pattern": self.pattern,
                "vertices": list(self.vertices),
            }
        return out

    def describe(self) -> str:
        if self.member:
            return "member"
        if self.kind == "pattern":
            return f"contains {self.pattern} at {list(self.vertices)}"
        return f"{self.kind.replace('_', ' ')} {list(self.vertices)}"


def is_induced_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    """True iff the listed vertices, in order, form an induced cycle of length >= 3."""
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    members = 0
    for v in cycle:
        members |= 1 << v
    for i, v in enumerate(cycle):
        expected = (1 << cycle[i - 1]) | (1 << cycle[(i + 1) % k])
        if g.adj[v] & members != expected:
            return False
    return True


def _cycle_order(g: Graph, members: VertexSet) -> Tuple[int, ...]:
    """Walk a 2-regular connected vertex set starting from its least vertex."""
    start = lowest_bit(members)
    order = [start]
    previous, current = -1, start
    while True:
        nxt = [u for u in iter_bits(g.adj[current] & members) if u != previous]
        if nxt[0] == start or len(order) == popcount(members):
            break
        previous, current = current, nxt[0]
        order.append(current)
    return tuple(order)


def _is_cycle_set(g: Graph, members: VertexSet) -> bool:
    return all(popcount(g.adj[v] & members) == 2 for v in iter_bits(members)) and \
        is_connected_subset(g, members)


def find_induced_cycle(g: Graph, min_length: int = 4, odd_only: bool = False) -> Optional[Tuple[int, ...]]:
    """
    Shortest induced cycle of length >= min_length (least vertex mask on ties).

    Subset enumeration by size; exponential in n.
    """
    n = g.n
    for size in range(min_length, n + 1):
        if odd_only and size % 2 == 0:
            continue
        for members in _subsets_of_size(n, size):
            if _is_cycle_set(g, members):
                return _cycle_order(g, members)
    return None


def _subsets_of_size(n: int, size: int):
    """Masks with `size` bits over n vertices, in increasing numeric order (Gosper's hack)."""
    if size == 0 or size > n:
        return
    mask = (1 << size) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


# ═══════════════════════════════════════════════════════════════════════════════
# CHORDAL GRAPHS
# ═══════════════════════════════════════════════════════════════════════════════

def lex_bfs(g: Graph) -> List[int]:
    """
    Lexicographic breadth-first search visit order.

    Example:
        >>> lex_bfs(Graph.path(4))
        [0, 1, 2, 3]
    """
    n = g.n
    labels: List[List[int]] = [[] for _ in range(n)]
    visited = 0
    order: List[int] = []
    for step in range(n):
        best = None
        for v in range(n):
            if visited >> v & 1:
                continue
            if best is None or labels[v] > labels[best]:
                best = v
        order.append(best)
        visited |= 1 << best
        stamp = n - step
        for u in iter_bits(g.adj[best] & ~visited):
            labels[u].append(stamp)
    return order


def _shortest_path(g: Graph, source: int, target: int, allowed: VertexSet) -> Optional[List[int]]:
    parent = {source: -1}
    frontier = [source]
    while frontier:
        nxt = []
        for v in frontier:
            for u in iter_bits(g.adj[v] & allowed):
                if u in parent:
                    continue
                parent[u] = v
                if u == target:
                    path = [u]
                    while parent[path[-1]] != -1:
                        path.append(parent[path[-1]])
                    return path[::-1]
                nxt.append(u)
        frontier = nxt
    return None


def _elimination_failure(g: Graph, order: List[int]) -> Optional[Tuple[int, int, int]]:
    """
    First (v, u, w) breaking the perfect elimination property of the
    reverse visit order: u, w are later neighbors of v and not adjacent.
    """
    position = {v: i for i, v in enumerate(order)}
    for v in reversed(order):
        later = [u for u in iter_bits(g.adj[v]) if position[u] < position[v]]
        if not later:
            continue
        parent = max(later, key=lambda u: position[u])
        for w in sorted(later, key=lambda u: position[u]):
            if w != parent and not g.has_edge(parent, w):
                return v, parent, w
    return None


def is_chordal(g: Graph) -> ClassVerdict:
    """
    Chordality via LexBFS with an induced-cycle witness on rejection.

    Example:
        >>> is_chordal(Graph.cycle(4)).member
        False
    """
    order = lex_bfs(g)
    failure = _elimination_failure(g, order)
    if failure is None:
        return ClassVerdict(member=True)

    v, u, w = failure
    blocked = (g.adj[v] | (1 << v)) & ~((1 << u) | (1 << w))
    path = _shortest_path(g, u, w, g.vertex_mask & ~blocked)
    if path is not None:
        cycle = tuple([v] + path)
        if is_induced_cycle(g, cycle):
            return ClassVerdict(member=False, kind="cycle", vertices=cycle)

    cycle = find_induced_cycle(g, min_length=4)
    logger.debug(f"Chordless cycle recovered by subset search on {g}")
    return ClassVerdict(member=False, kind="cycle", vertices=cycle)


def chordal_chromatic_number(g: Graph) -> int:
    """
    χ of a chordal graph by first-fit along the LexBFS order.

    Cross-check only; the exact solver in core.cliques is authoritative.

    Raises:
        GraphError: If g is not chordal
    """
    order = lex_bfs(g)
    if _elimination_failure(g, order) is not None:
        raise GraphError(f"Graph {g} is not chordal")
    colors: Dict[int, int] = {}
    for v in order:
        used = {colors[u] for u in iter_bits(g.adj[v]) if u in colors}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return max(colors.values()) + 1


# ═══════════════════════════════════════════════════════════════════════════════
# FORBIDDEN FAMILIES
# ═══════════════════════════════════════════════════════════════════════════════

def is_free(g: Graph, family: Sequence[Pattern]) -> ClassVerdict:
    """
    F-freeness: no pattern of the family occurs as an induced subgraph.

    The witness names the first pattern (in family order) that occurs.
    """
    for pattern in family:
        embedding = find_induced(g, pattern)
        if embedding is not None:
            return ClassVerdict(member=False, kind="pattern", pattern=pattern.name,
                                vertices=embedding)
    return ClassVerdict(member=True)


def is_free_of(g: Graph, family_name: str, catalog: Optional[PatternCatalog] = None) -> ClassVerdict:
    """is_free against a named catalog family."""
    catalog = catalog or default_catalog()
    return is_free(g, catalog.family(family_name))


def is_trivially_perfect(g: Graph, catalog: Optional[PatternCatalog] = None) -> ClassVerdict:
    """
    (C4, P4)-freeness.

    Example:
        >>> is_trivially_perfect(Graph.complete_bipartite(1, 3)).member
        True
    """
    return is_free_of(g, PATTERN_CONFIG["trivially_perfect_family"], catalog)


def verify_verdict(g: Graph, verdict: ClassVerdict, catalog: Optional[PatternCatalog] = None) -> bool:
    """Re-check a rejection witness from scratch (members always pass)."""
    if verdict.member:
        return True
    if verdict.kind == "pattern":
        catalog = catalog or default_catalog()
        return verify_embedding(g, catalog.get(verdict.pattern), verdict.vertices)
    if verdict.kind == "cycle":
        return len(verdict.vertices) >= 4 and is_induced_cycle(g, verdict.vertices)
    if verdict.kind == "odd_hole":
        return len(verdict.vertices) >= 5 and len(verdict.vertices) % 2 == 1 and \
            is_induced_cycle(g, verdict.vertices)
    if verdict.kind == "odd_antihole":
        return len(verdict.vertices) >= 5 and len(verdict.vertices) % 2 == 1 and \
            is_induced_cycle(complement(g), verdict.vertices)
    return False


# ═══════════════════════════════════════════════════════════════════════════════
# BERGE GRAPHS
# ═══════════════════════════════════════════════════════════════════════════════

def is_berge(g: Graph) -> ClassVerdict:
    """
    No induced odd cycle of length >= 5 in g or its complement.

    Raises:
        GraphError: If n exceeds berge_max_order

    Example:
        >>> is_berge(Graph.cycle(5)).member
        False
    """
    limit = SOLVER_CONFIG["berge_max_order"]
    if g.n > limit:
        raise GraphError(f"Odd hole search limited to n <= {limit}, got {g.n}")

    hole = find_induced_cycle(g, min_length=5, odd_only=True)
    if hole is not None:
        return ClassVerdict(member=False, kind="odd_hole", vertices=hole)
    antihole = find_induced_cycle(complement(g), min_length=5, odd_only=True)
    if antihole is not None:
        return ClassVerdict(member=False, kind="odd_antihole", vertices=antihole)
    return ClassVerdict(member=True)


__all__ = [
    "ClassVerdict",
    "lex_bfs",
    "is_chordal",
    "chordal_chromatic_number",
    "is_free",
    "is_free_of",
    "is_trivially_perfect",
    "is_berge",
    "is_induced_cycle",
    "find_induced_cycle",
    "verify_verdict",
]
