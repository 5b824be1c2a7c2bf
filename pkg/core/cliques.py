"""
═══════════════════════════════════════════════════════════════════════════════
AB-PERFECT GRAPH LAB - CLIQUE NUMBER AND CHROMATIC NUMBER
═══════════════════════════════════════════════════════════════════════════════
Module: core/cliques.py
Last Updated: 2026-10-17
═══════════════════════════════════════════════════════════════════════════════

PURPOSE:
    Exact ω (maximum clique order) and χ (least proper coloring), each with
    a deterministic witness.

SEARCH STRATEGY:
    ω   Branch and bound over candidate sets in vertex order. A greedy
        coloring of the candidates bounds the clique that can still be
        added. Only strictly better cliques replace the incumbent, so the
        first maximum clique reached is the lexicographically least one.

    χ   Iterative deepening from the clique lower bound up to the greedy
        upper bound. Each k is decided by backtracking in vertex order with
        canonical color introduction (vertex v may open color c+1 only when
        colors 0..c are in use).

═══════════════════════════════════════════════════════════════════════════════
"""

import sys
import logging
from pathlib import Path
from typing import List, Optional, Tuple

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.graph import Graph, VertexSet, iter_bits, lowest_bit, popcount, vertices_of

# Configure logging
logger = logging.getLogger(__name__)


# ═══════════════════════════════════════════════════════════════════════════════
# CLIQUES
# ═══════════════════════════════════════════════════════════════════════════════

def _greedy_color_bound(g: Graph, candidates: VertexSet) -> int:
    """Colors used by a greedy sequential coloring of G[candidates]."""
    colors = 0
    remaining = candidates
    while remaining:
        colors += 1
        independent = remaining
        chosen = 0
        while independent:
            v = lowest_bit(independent)
            chosen |= 1 << v
            independent &= ~g.adj[v] & ~(1 << v)
        remaining &= ~chosen
    return colors


def max_clique(g: Graph) -> List[int]:
    """
    Lexicographically least maximum clique, as a sorted vertex list.

    Example:
        >>> max_clique(Graph.cycle(4))
        [0, 1]
    """
    best: List[VertexSet] = [0]
    best_size = [0]

    def expand(clique: VertexSet, size: int, candidates: VertexSet) -> None:
        if size > best_size[0]:
            best[0] = clique
            best_size[0] = size
        if not candidates:
            return
        if size + _greedy_color_bound(g, candidates) <= best_size[0]:
            return
        remaining = candidates
        while remaining:
            if size + popcount(remaining) <= best_size[0]:
                return
            v = lowest_bit(remaining)
            remaining &= ~(1 << v)
            expand(clique | (1 << v), size + 1, remaining & g.adj[v])

    expand(0, 0, g.vertex_mask)
    return vertices_of(best[0])


def clique_number(g: Graph) -> int:
    """
    ω(G): order of a largest complete vertex subset.

    Example:
        >>> clique_number(Graph.complete(5))
        5
    """
    return len(max_clique(g))


def is_clique(g: Graph, s: VertexSet) -> bool:
    return all((g.adj[v] | (1 << v)) & s == s for v in iter_bits(s))


# ═══════════════════════════════════════════════════════════════════════════════
# PROPER COLORINGS
# ═══════════════════════════════════════════════════════════════════════════════

def greedy_coloring(g: Graph) -> List[int]:
    """First-fit coloring in vertex order (an upper bound for χ)."""
    colors = [-1] * g.n
    for v in range(g.n):
        used = {colors[u] for u in iter_bits(g.adj[v]) if colors[u] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


def _k_coloring(g: Graph, k: int) -> Optional[List[int]]:
    """Lexicographically least proper k-coloring with canonical color introduction."""
    n = g.n
    colors = [-1] * n
    class_masks = [0] * k

    def assign(v: int, opened: int) -> bool:
        if v == n:
            return True
        if opened + (n - v) < k:
            return False
        row = g.adj[v]
        for c in range(min(opened + 1, k)):
            if class_masks[c] & row:
                continue
            colors[v] = c
            class_masks[c] |= 1 << v
            if assign(v + 1, max(opened, c + 1)):
                return True
            class_masks[c] &= ~(1 << v)
        colors[v] = -1
        return False

    if assign(0, 0):
        return colors
    return None


def proper_coloring(g: Graph) -> List[int]:
    """
    A proper coloring with χ(G) colors (colors 0..χ-1, first use in vertex order).

    Returns:
        colors[v] for every vertex
    """
    upper = greedy_coloring(g)
    upper_k = max(upper) + 1
    for k in range(max(clique_number(g), 1), upper_k):
        coloring = _k_coloring(g, k)
        if coloring is not None:
            return coloring
    # The greedy coloring is optimal; recompute canonically for a stable witness
    return _k_coloring(g, upper_k)


def chromatic_number(g: Graph) -> int:
    """
    χ(G): least k admitting a proper k-coloring.

    Example:
        >>> chromatic_number(Graph.cycle(5))
        3
    """
    return max(proper_coloring(g)) + 1


def coloring_classes(colors: List[int]) -> Tuple[VertexSet, ...]:
    """Color vector -> tuple of class masks indexed by color."""
    k = max(colors) + 1 if colors else 0
    classes = [0] * k
    for v, c in enumerate(colors):
        classes[c] |= 1 << v
    return tuple(classes)


__all__ = [
    "max_clique",
    "clique_number",
    "is_clique",
    "greedy_coloring",
    "proper_coloring",
    "chromatic_number",
    "coloring_classes",
]
