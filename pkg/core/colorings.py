"""
═══════════════════════════════════════════════════════════════════════════════
AB-PERFECT GRAPH LAB - COMPLETE, DOMINATING AND GRUNDY COLORINGS
═══════════════════════════════════════════════════════════════════════════════
Module: core/colorings.py
Last Updated: 2026-10-17
═══════════════════════════════════════════════════════════════════════════════

PURPOSE:
    Exact values and witnesses for the coloring parameters

        ψ   pseudoachromatic   complete k-colorings
        α   achromatic         proper and complete
        b   b-chromatic        proper and dominating
        B   pseudo-b           dominating
        Γ   Grundy             proper, each vertex sees every smaller color
        γ   pseudo-Grundy      each vertex sees every smaller color

FIXED-k PARTITION SEARCH (ψ, α, b, B and connected colorings in minors.py):
    Vertices are assigned in index order; vertex v may open class c+1 only
    if classes 0..c are open, so each partition is visited once and the
    first hit is the lexicographically least color vector. Pruning:
    - surjectivity : open classes + unassigned vertices >= k
    - complete     : adjacent class pairs + undecided edges >= k(k-1)/2
    - dominating   : every open class still has a vertex that can meet
                     k-1 other classes (colors already seen + unassigned
                     neighbors >= k-1)
    - connected    : every open class lies inside one component of
                     G[class + unassigned]

SEARCH DIRECTION:
    ψ and B are closed under merging two classes, so k rises until the
    first failure. α rises from χ (complete proper colorings exist for every
    k between χ and α). b has no such interpolation and is searched
    downward from the m-degree bound.

GRUNDY BY CLASS PEELING:
    In a Grundy coloring the first class is a maximal independent set of
    the graph and the rest is a Grundy coloring of what remains. In a
    pseudo-Grundy coloring the first class is any nonempty set dominating
    the rest. Both maxima are memoized over vertex subsets.

═══════════════════════════════════════════════════════════════════════════════
"""

import sys
import itertools
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple, Any

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from config.settings import SOLVER_CONFIG
from core.graph import (
    Graph,
    GraphError,
    VertexSet,
    is_connected_subset,
    iter_bits,
    popcount,
    vertices_of,
)
from core.cliques import chromatic_number, coloring_classes

# Configure logging
logger = logging.getLogger(__name__)


# ═══════════════════════════════════════════════════════════════════════════════
# COLORING PARTITION
# ═══════════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class ColoringPartition:
    """
    Surjective assignment of vertices to k color classes.

    Attributes:
        classes: Disjoint nonempty vertex masks covering V, class i = color i+1
    """
    classes: Tuple[VertexSet, ...]

    @property
    def k(self) -> int:
        return len(self.classes)

    @classmethod
    def from_colors(cls, colors: List[int]) -> "ColoringPartition":
        return cls(coloring_classes(colors))

    def colors(self, n: int) -> List[int]:
        out = [-1] * n
        for c, members in enumerate(self.classes):
            for v in iter_bits(members):
                out[v] = c
        return out

    def is_partition_of(self, g: Graph) -> bool:
        covered = 0
        for members in self.classes:
            if members == 0 or members & covered:
                return False
            covered |= members
        return covered == g.vertex_mask

    def is_proper(self, g: Graph) -> bool:
        return all(g.neighborhood(members) & members == 0 for members in self.classes)

    def is_complete(self, g: Graph) -> bool:
        reach = [g.neighborhood(members) for members in self.classes]
        return all(
            reach[i] & self.classes[j]
            for i in range(self.k) for j in range(i + 1, self.k)
        )

    def b_vertices(self, g: Graph, c: int) -> List[int]:
        """Vertices of class c with a neighbor in every other class."""
        others = [m for i, m in enumerate(self.classes) if i != c]
        return [v for v in iter_bits(self.classes[c])
                if all(g.adj[v] & m for m in others)]

    def is_dominating(self, g: Graph) -> bool:
        return all(self.b_vertices(g, c) for c in range(self.k))

    def is_connected(self, g: Graph) -> bool:
        return all(is_connected_subset(g, members) for members in self.classes)

    def is_pseudo_grundy(self, g: Graph) -> bool:
        """Every vertex of class i has a neighbor in each class j < i."""
        for i, members in enumerate(self.classes):
            for v in iter_bits(members):
                if any(g.adj[v] & self.classes[j] == 0 for j in range(i)):
                    return False
        return True

    def is_grundy(self, g: Graph) -> bool:
        return self.is_proper(g) and self.is_pseudo_grundy(g)

    def to_dict(self) -> Dict[str, Any]:
        return {"k": self.k, "classes": [vertices_of(m) for m in self.classes]}


# ═══════════════════════════════════════════════════════════════════════════════
# FIXED-k PARTITION SEARCH
# ═══════════════════════════════════════════════════════════════════════════════

class PartitionSearch:
    """
    Backtracking search for a k-partition with the requested properties.

    Example:
        >>> PartitionSearch(Graph.cycle(4), 3, complete=True).run() is not None
        True
    """

    def __init__(
        self,
        g: Graph,
        k: int,
        proper: bool = False,
        complete: bool = False,
        dominating: bool = False,
        connected: bool = False,
    ):
        if k < 1:
            raise GraphError(f"Partition size must be positive, got {k}")
        self.g = g
        self.k = k
        self.proper = proper
        self.complete = complete
        self.dominating = dominating
        self.connected = connected

        self.colors = [-1] * g.n
        self.classes = [0] * k
        self.class_adj = [0] * k
        self.pairs = 0
        self.edges_left = g.edge_count
        self.target_pairs = k * (k - 1) // 2
        self.nodes = 0

    # ─────────────────────────────────────────────────────────────────────────
    # PRUNING
    # ─────────────────────────────────────────────────────────────────────────

    def _seen_colors(self, v: int) -> int:
        seen = 0
        for u in iter_bits(self.g.adj[v]):
            if self.colors[u] >= 0:
                seen |= 1 << self.colors[u]
        return seen

    def _can_dominate(self, c: int, unassigned: VertexSet) -> bool:
        g = self.g
        need = self.k - 1
        for v in iter_bits(self.classes[c] | unassigned):
            if g.degree(v) < need:
                continue
            if unassigned >> v & 1 and self.proper and g.adj[v] & self.classes[c]:
                continue
            seen = self._seen_colors(v) & ~(1 << c)
            if popcount(seen) + popcount(g.adj[v] & unassigned) >= need:
                return True
        return False

    def _can_connect(self, c: int, unassigned: VertexSet) -> bool:
        members = self.classes[c]
        if members == 0:
            return True
        within = members | unassigned
        start = members & -members
        seen = start
        frontier = start
        while frontier:
            grown = 0
            for v in iter_bits(frontier):
                grown |= self.g.adj[v]
            frontier = grown & within & ~seen
            seen |= frontier
        return members & ~seen == 0

    def _feasible(self, v: int, opened: int) -> bool:
        unassigned = self.g.vertex_mask & ~((1 << v) - 1)
        if opened + (self.g.n - v) < self.k:
            return False
        if self.complete and self.pairs + self.edges_left < self.target_pairs:
            return False
        if self.dominating:
            for c in range(opened):
                if not self._can_dominate(c, unassigned):
                    return False
        if self.connected:
            for c in range(opened):
                if not self._can_connect(c, unassigned):
                    return False
        return True

    # ─────────────────────────────────────────────────────────────────────────
    # SEARCH
    # ─────────────────────────────────────────────────────────────────────────

    def _assign(self, v: int, opened: int) -> bool:
        self.nodes += 1
        if not self._feasible(v, opened):
            return False
        if v == self.g.n:
            return True

        row = self.g.adj[v]
        earlier = row & ((1 << v) - 1)
        for c in range(min(opened + 1, self.k)):
            if self.proper and self.classes[c] & row:
                continue

            self.colors[v] = c
            self.classes[c] |= 1 << v
            added = []
            for u in iter_bits(earlier):
                cu = self.colors[u]
                if cu != c and not self.class_adj[c] >> cu & 1:
                    self.class_adj[c] |= 1 << cu
                    self.class_adj[cu] |= 1 << c
                    self.pairs += 1
                    added.append(cu)
            decided = popcount(earlier)
            self.edges_left -= decided

            if self._assign(v + 1, max(opened, c + 1)):
                return True

            self.edges_left += decided
            for cu in added:
                self.class_adj[c] &= ~(1 << cu)
                self.class_adj[cu] &= ~(1 << c)
                self.pairs -= 1
            self.classes[c] &= ~(1 << v)
            self.colors[v] = -1
        return False

    def run(self) -> Optional[ColoringPartition]:
        """The lexicographically least qualifying partition, or None."""
        if self.k > self.g.n:
            return None
        if self._assign(0, 0):
            return ColoringPartition(tuple(self.classes))
        return None


def find_partition(g: Graph, k: int, **properties) -> Optional[ColoringPartition]:
    """Convenience wrapper around PartitionSearch(...).run()."""
    return PartitionSearch(g, k, **properties).run()


# ═══════════════════════════════════════════════════════════════════════════════
# BOUNDS
# ═══════════════════════════════════════════════════════════════════════════════

def edge_bound(g: Graph) -> int:
    """Largest k with k(k-1)/2 <= |E| and k <= n (bound for complete colorings)."""
    m = g.edge_count
    k = 1
    while k < g.n and (k + 1) * k // 2 <= m:
        k += 1
    return k


def m_degree(g: Graph) -> int:
    """Largest k such that at least k vertices have degree >= k - 1."""
    degrees = sorted((g.degree(v) for v in range(g.n)), reverse=True)
    k = 0
    for i, d in enumerate(degrees, start=1):
        if d >= i - 1:
            k = i
    return k


def _largest_upward(g: Graph, start: int, stop: int, **properties) -> ColoringPartition:
    """Raise k from start while a qualifying partition exists; start must succeed."""
    best = find_partition(g, start, **properties)
    if best is None:
        raise GraphError(f"No {properties} partition with {start} classes")
    for k in range(start + 1, stop + 1):
        found = find_partition(g, k, **properties)
        if found is None:
            break
        best = found
    return best


# ═══════════════════════════════════════════════════════════════════════════════
# COMPLETE COLORINGS
# ═══════════════════════════════════════════════════════════════════════════════

def pseudoachromatic_coloring(g: Graph) -> ColoringPartition:
    """Complete coloring with ψ(G) classes."""
    return _largest_upward(g, 1, edge_bound(g), complete=True)


def pseudoachromatic_number(g: Graph) -> int:
    """
    ψ(G): largest k with a complete k-coloring.

    Example:
        >>> pseudoachromatic_number(Graph.cycle(4))
        3
    """
    return pseudoachromatic_coloring(g).k


def achromatic_coloring(g: Graph) -> ColoringPartition:
    """Proper complete coloring with α(G) classes."""
    return _largest_upward(g, chromatic_number(g), edge_bound(g), proper=True, complete=True)


def achromatic_number(g: Graph) -> int:
    """
    α(G): largest k with a proper and complete k-coloring.

    Example:
        >>> achromatic_number(Graph.path(4))
        3
    """
    return achromatic_coloring(g).k


# ═══════════════════════════════════════════════════════════════════════════════
# DOMINATING COLORINGS
# ═══════════════════════════════════════════════════════════════════════════════

def b_chromatic_coloring(g: Graph) -> ColoringPartition:
    """Proper dominating coloring with b(G) classes."""
    chi = chromatic_number(g)
    for k in range(m_degree(g), chi, -1):
        found = find_partition(g, k, proper=True, dominating=True)
        if found is not None:
            return found
    # Every χ-coloring is dominating: a class without a b-vertex could be recolored away
    return find_partition(g, chi, proper=True, dominating=True)


def b_chromatic_number(g: Graph) -> int:
    """
    b(G): largest k with a proper dominating k-coloring.

    Example:
        >>> b_chromatic_number(Graph.complete(4))
        4
    """
    return b_chromatic_coloring(g).k


def pseudo_b_coloring(g: Graph) -> ColoringPartition:
    """Dominating coloring with B(G) classes."""
    return _largest_upward(g, 1, m_degree(g), dominating=True)


def pseudo_b_chromatic_number(g: Graph) -> int:
    """
    B(G): largest k with a (not necessarily proper) dominating k-coloring.

    Example:
        >>> pseudo_b_chromatic_number(Graph.cycle(4))
        2
    """
    return pseudo_b_coloring(g).k


# ═══════════════════════════════════════════════════════════════════════════════
# GRUNDY COLORINGS
# ═══════════════════════════════════════════════════════════════════════════════

def _submasks(s: VertexSet):
    sub = s
    while sub:
        yield sub
        sub = (sub - 1) & s


def _maximal_independent_sets(g: Graph, s: VertexSet) -> List[VertexSet]:
    """Maximal independent sets of G[s] (Bron-Kerbosch on the complement)."""
    found: List[VertexSet] = []

    def extend(chosen: VertexSet, candidates: VertexSet, excluded: VertexSet) -> None:
        if candidates == 0 and excluded == 0:
            found.append(chosen)
            return
        for v in iter_bits(candidates):
            blocked = g.adj[v] | (1 << v)
            extend(chosen | (1 << v), candidates & ~blocked, excluded & ~blocked)
            candidates &= ~(1 << v)
            excluded |= 1 << v

    extend(0, s, 0)
    return found


def _dominates(g: Graph, d: VertexSet, rest: VertexSet) -> bool:
    return all(g.adj[v] & d for v in iter_bits(rest))


def _peel(g: Graph, first_classes: Callable[[VertexSet], List[VertexSet]]) -> List[VertexSet]:
    """
    Longest class sequence where each class is an allowed first class of
    the vertices left after the earlier ones.
    """
    memo: Dict[VertexSet, Tuple[int, VertexSet]] = {0: (0, 0)}

    def best(s: VertexSet) -> int:
        if s in memo:
            return memo[s][0]
        top = (0, 0)
        for first in first_classes(s):
            value = 1 + best(s & ~first)
            if value > top[0]:
                top = (value, first)
        memo[s] = top
        return top[0]

    best(g.vertex_mask)
    classes = []
    s = g.vertex_mask
    while s:
        first = memo[s][1]
        classes.append(first)
        s &= ~first
    return classes


def grundy_coloring(g: Graph) -> ColoringPartition:
    """Grundy coloring with Γ(G) classes (class i first-fits to color i+1)."""
    classes = _peel(g, lambda s: _maximal_independent_sets(g, s))
    return ColoringPartition(tuple(classes))


def grundy_number(g: Graph) -> int:
    """
    Γ(G): largest k admitting a proper coloring in which every vertex of
    color i has a neighbor of each color j < i.

    Example:
        >>> grundy_number(Graph.path(4))
        3
    """
    return grundy_coloring(g).k


def grundy_number_by_orderings(g: Graph) -> int:
    """
    Γ(G) as the most colors first-fit uses over all n! vertex orderings.

    Raises:
        GraphError: If n exceeds grundy_ordering_max_order
    """
    limit = SOLVER_CONFIG["grundy_ordering_max_order"]
    if g.n > limit:
        raise GraphError(f"Ordering enumeration limited to n <= {limit}, got {g.n}")

    best = 0
    for order in itertools.permutations(range(g.n)):
        colors: Dict[int, int] = {}
        for v in order:
            used = {colors[u] for u in iter_bits(g.adj[v]) if u in colors}
            c = 0
            while c in used:
                c += 1
            colors[v] = c
        best = max(best, max(colors.values()) + 1)
    return best


def _dominating_first_classes(g: Graph, s: VertexSet) -> List[VertexSet]:
    return [d for d in _submasks(s) if _dominates(g, d, s & ~d)]


def pseudo_grundy_coloring(g: Graph) -> ColoringPartition:
    """Pseudo-Grundy coloring with γ(G) classes."""
    classes = _peel(g, lambda s: _dominating_first_classes(g, s))
    return ColoringPartition(tuple(classes))


def pseudo_grundy_number(g: Graph) -> int:
    """
    γ(G): largest k admitting a surjective coloring in which every vertex of
    color i has a neighbor of each color j < i (properness not required).

    Example:
        >>> pseudo_grundy_number(Graph.cycle(4))
        3
    """
    return pseudo_grundy_coloring(g).k


__all__ = [
    "ColoringPartition",
    "PartitionSearch",
    "find_partition",
    "edge_bound",
    "m_degree",
    "pseudoachromatic_coloring",
    "pseudoachromatic_number",
    "achromatic_coloring",
    "achromatic_number",
    "b_chromatic_coloring",
    "b_chromatic_number",
    "pseudo_b_coloring",
    "pseudo_b_chromatic_number",
    "grundy_coloring",
    "grundy_number",
    "grundy_number_by_orderings",
    "pseudo_grundy_coloring",
    "pseudo_grundy_number",
]
