"""
═══════════════════════════════════════════════════════════════════════════════
AB-PERFECT GRAPH LAB - HEREDITARY PARAMETER EQUALITY
═══════════════════════════════════════════════════════════════════════════════
Module: core/perfection.py
Last Updated: 2026-10-17
═══════════════════════════════════════════════════════════════════════════════

PURPOSE:
    A graph is ab-perfect when a(H) = b(H) for every nonempty induced
    subgraph H. This module decides that predicate, names the smallest
    failing subgraph, mines minimal obstructions over an enumerated
    universe, and runs targeted minimality checks on single graphs.

METHOD:
    - Decision: a(G) = b(G) and every one-vertex-deleted subgraph is
      ab-perfect, memoized per (a, b, canonical key)
    - Witness: nonempty vertex subsets by size, then lexicographically;
      the first one with a != b
    - Obstruction: a(G) != b(G) while every one-vertex-deleted subgraph
      is ab-perfect

    Parameter values come from the ProfileCache, so isomorphic subgraphs
    are solved once per run.

═══════════════════════════════════════════════════════════════════════════════
"""

import sys
import itertools
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.graph import (
    Graph,
    GraphError,
    VertexSet,
    delete_vertex,
    emit_graph6,
    induced_subgraph,
    mask_of,
    parse_graph6,
    vertices_of,
)
from core.canonical import CanonicalKey, canonical_key, enumerate_up_to
from core.profile import Parameter, ParameterProfile
from database.profile_cache import ProfileCache

# Configure logging
logger = logging.getLogger(__name__)


# ═══════════════════════════════════════════════════════════════════════════════
# DATA CLASSES
# ═══════════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class PerfectionResult:
    """
    Outcome of an ab-perfection test.

    Attributes:
        perfect: True iff a(H) = b(H) for every induced subgraph H
        witness: Least failing vertex subset (by size, then lexicographic)
        a_value / b_value: Parameter values on the witness subgraph
    """
    perfect: bool
    witness: Optional[VertexSet] = None
    a_value: Optional[int] = None
    b_value: Optional[int] = None

    def __bool__(self) -> bool:
        return self.perfect

    def witness_vertices(self) -> List[int]:
        return vertices_of(self.witness) if self.witness else []

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"perfect": self.perfect}
        if not self.perfect:
            out.update({
                "witness": self.witness_vertices(),
                "a": self.a_value,
                "b": self.b_value,
            })
        return out


@dataclass
class ObstructionCheck:
    """
    Targeted check that a single graph is a minimal (a, b) obstruction.

    Attributes:
        name: Catalog name of the graph checked
        graph6: Its graph6 text
        differs: a(G) != b(G)
        minimal: Every proper induced subgraph has a = b
        failing_subgraph: graph6 of a one-vertex-deleted subgraph that is
            not ab-perfect (when minimal is False)
    """
    name: str
    graph6: str
    a: Parameter
    b: Parameter
    a_value: int
    b_value: int
    differs: bool
    minimal: bool
    failing_subgraph: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.differs and self.minimal

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "graph6": self.graph6,
            "pair": [self.a.value, self.b.value],
            "a": self.a_value,
            "b": self.b_value,
            "differs": self.differs,
            "minimal": self.minimal,
            "failing_subgraph": self.failing_subgraph,
        }


# ═══════════════════════════════════════════════════════════════════════════════
# PERFECTION CHECKER
# ═══════════════════════════════════════════════════════════════════════════════

class PerfectionChecker:
    """
    Memoized ab-perfection over one ProfileCache.

    Example:
        >>> checker = PerfectionChecker(ProfileCache())
        >>> checker.is_perfect(Graph.cycle(4), Parameter.OMEGA, Parameter.HADWIGER)
        False
    """

    def __init__(self, cache: Optional[ProfileCache] = None):
        self.cache = cache if cache is not None else ProfileCache()
        self._memo: Dict[Tuple[Parameter, Parameter, CanonicalKey], bool] = {}

    def profile(self, g: Graph) -> ParameterProfile:
        return self.cache.get_or_compute(g)

    def values(self, g: Graph, a: Parameter, b: Parameter) -> Tuple[int, int]:
        profile = self.profile(g)
        return profile.value(a), profile.value(b)

    def is_perfect(self, g: Graph, a: Parameter, b: Parameter) -> bool:
        """Hereditary a = b, by recursion on one-vertex deletions."""
        return self._is_perfect(g, a, b, canonical_key(g))

    def _is_perfect(self, g: Graph, a: Parameter, b: Parameter, key: CanonicalKey) -> bool:
        memo_key = (a, b, key)
        if memo_key in self._memo:
            return self._memo[memo_key]

        profile = self.cache.get_or_compute(g, key)
        result = profile.value(a) == profile.value(b)
        if result and g.n > 1:
            seen = set()
            for v in range(g.n):
                sub = delete_vertex(g, v)
                sub_key = canonical_key(sub)
                if sub_key in seen:
                    continue
                seen.add(sub_key)
                if not self._is_perfect(sub, a, b, sub_key):
                    result = False
                    break
        self._memo[memo_key] = result
        return result

    def least_failing_subset(self, g: Graph, a: Parameter, b: Parameter) -> Optional[Tuple[VertexSet, int, int]]:
        """Smallest subset (then lexicographically least) with a != b."""
        for size in range(1, g.n + 1):
            for combo in itertools.combinations(range(g.n), size):
                s = mask_of(combo)
                a_value, b_value = self.values(induced_subgraph(g, s), a, b)
                if a_value != b_value:
                    return s, a_value, b_value
        return None

    def check(self, g: Graph, a: Parameter, b: Parameter) -> PerfectionResult:
        if a == b:
            raise ValueError("ab-perfection needs two distinct parameters")
        if self.is_perfect(g, a, b):
            return PerfectionResult(perfect=True)
        found = self.least_failing_subset(g, a, b)
        if found is None:
            raise GraphError(f"Inconsistent perfection memo for {g}")
        s, a_value, b_value = found
        return PerfectionResult(perfect=False, witness=s, a_value=a_value, b_value=b_value)

    def is_minimal_obstruction(self, g: Graph, a: Parameter, b: Parameter) -> Tuple[bool, bool, Optional[Graph]]:
        """
        Returns:
            (differs, minimal, first one-vertex-deleted subgraph that fails)
        """
        a_value, b_value = self.values(g, a, b)
        differs = a_value != b_value
        if g.n == 1:
            return differs, True, None
        for v in range(g.n):
            sub = delete_vertex(g, v)
            if not self.is_perfect(sub, a, b):
                return differs, False, sub
        return differs, True, None


# ═══════════════════════════════════════════════════════════════════════════════
# MODULE-LEVEL OPERATIONS
# ═══════════════════════════════════════════════════════════════════════════════

def is_ab_perfect(
    g: Graph,
    a: Parameter,
    b: Parameter,
    cache: Optional[ProfileCache] = None,
) -> PerfectionResult:
    """
    ab-perfection with the least failing subset as witness.

    Raises:
        ValueError: If a == b

    Example:
        >>> is_ab_perfect(Graph.complete(5), Parameter.OMEGA, Parameter.PSI).perfect
        True
    """
    return PerfectionChecker(cache).check(g, a, b)


def minimal_obstructions(
    a: Parameter,
    b: Parameter,
    max_order: int,
    cache: Optional[ProfileCache] = None,
    source: Optional[Iterable[Graph]] = None,
) -> List[Graph]:
    """
    Every minimal non-ab-perfect graph of order <= max_order.

    Args:
        source: Graphs to scan (default: full enumeration up to max_order)

    Returns:
        Canonical forms sorted by order, then canonical key

    Raises:
        ValueError: If a == b
    """
    if a == b:
        raise ValueError("Obstruction mining needs two distinct parameters")
    checker = PerfectionChecker(cache)
    graphs = source if source is not None else enumerate_up_to(max_order)

    found: Dict[CanonicalKey, Graph] = {}
    for g in graphs:
        if g.n > max_order:
            continue
        key = canonical_key(g)
        if key in found:
            continue
        a_value, b_value = checker.values(g, a, b)
        if a_value == b_value:
            continue
        _, minimal, _ = checker.is_minimal_obstruction(g, a, b)
        if minimal:
            found[key] = g

    obstructions = sorted(found, key=lambda k: (parse_graph6(k).n, k))
    logger.info(
        f"Mined {len(obstructions)} minimal ({a.value}, {b.value}) obstructions up to order {max_order}"
    )
    return [parse_graph6(k) for k in obstructions]


def check_obstruction(
    g: Graph,
    a: Parameter,
    b: Parameter,
    cache: Optional[ProfileCache] = None,
    name: str = "",
) -> ObstructionCheck:
    """
    Targeted minimality check of one graph at its native order.

    Example:
        >>> check_obstruction(Graph.cycle(4), Parameter.OMEGA, Parameter.PSI).passed
        True
    """
    checker = PerfectionChecker(cache)
    a_value, b_value = checker.values(g, a, b)
    differs, minimal, failing = checker.is_minimal_obstruction(g, a, b)
    return ObstructionCheck(
        name=name or emit_graph6(g),
        graph6=emit_graph6(g),
        a=a,
        b=b,
        a_value=a_value,
        b_value=b_value,
        differs=differs,
        minimal=minimal,
        failing_subgraph=emit_graph6(failing) if failing is not None else None,
    )


__all__ = [
    "PerfectionResult",
    "ObstructionCheck",
    "PerfectionChecker",
    "is_ab_perfect",
    "minimal_obstructions",
    "check_obstruction",
]
