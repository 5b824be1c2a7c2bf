"""
═══════════════════════════════════════════════════════════════════════════════
AB-PERFECT GRAPH LAB - HADWIGER NUMBER
═══════════════════════════════════════════════════════════════════════════════
Module: core/minors.py
Last Updated: 2026-10-17
═══════════════════════════════════════════════════════════════════════════════

PURPOSE:
    h(G), the order of the largest complete minor, computed two independent
    ways so that each checks the other:

    1. Minor models: k disjoint connected branch sets, pairwise joined by
       an edge. Branch sets are chosen in increasing order of their least
       vertex (the anchor) and deepened on k from ω.
    2. Connected complete colorings: per component, the largest partition
       into connected classes that are pairwise adjacent; the result is the
       maximum over components.

NOTES:
    - A complete minor with k >= 2 lives inside one component, so the minor
      search runs on the whole graph
    - Connected complete colorings are closed under merging two adjacent
      classes, so k only has to rise until the first failure

═══════════════════════════════════════════════════════════════════════════════
"""

import sys
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.graph import (
    Graph,
    VertexSet,
    components,
    induced_subgraph,
    is_connected_subset,
    iter_bits,
    popcount,
    sets_adjacent,
    vertices_of,
)
from core.cliques import max_clique
from core.colorings import ColoringPartition, edge_bound, find_partition

# Configure logging
logger = logging.getLogger(__name__)


# ═══════════════════════════════════════════════════════════════════════════════
# DATA CLASSES
# ═══════════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class MinorModel:
    """
    Witness of a K_k minor.

    Attributes:
        branch_sets: k disjoint nonempty vertex masks (need not cover V)
    """
    branch_sets: Tuple[VertexSet, ...]

    @property
    def k(self) -> int:
        return len(self.branch_sets)

    def is_valid(self, g: Graph) -> bool:
        """Disjoint, connected, and pairwise adjacent branch sets."""
        used = 0
        for s in self.branch_sets:
            if s == 0 or s & used or s & ~g.vertex_mask:
                return False
            if not is_connected_subset(g, s):
                return False
            used |= s
        return all(
            sets_adjacent(g, self.branch_sets[i], self.branch_sets[j])
            for i in range(self.k) for j in range(i + 1, self.k)
        )

    def to_dict(self) -> Dict[str, Any]:
        return {"k": self.k, "branch_sets": [vertices_of(s) for s in self.branch_sets]}


# ═══════════════════════════════════════════════════════════════════════════════
# MINOR MODEL SEARCH
# ═══════════════════════════════════════════════════════════════════════════════

def _anchored_connected_sets(g: Graph) -> List[List[Tuple[VertexSet, VertexSet]]]:
    """
    For every anchor a, the connected sets whose least vertex is a, each
    paired with its neighborhood; smaller sets first.
    """
    by_anchor: List[List[Tuple[VertexSet, VertexSet]]] = []
    for a in range(g.n):
        above = g.vertex_mask & ~((1 << (a + 1)) - 1)
        found = []
        sub = above
        while True:
            s = sub | (1 << a)
            if is_connected_subset(g, s):
                found.append((s, g.neighborhood(s) & ~s))
            if sub == 0:
                break
            sub = (sub - 1) & above
        found.sort(key=lambda item: (popcount(item[0]), item[0]))
        by_anchor.append(found)
    return by_anchor


def _find_model(g: Graph, k: int, sets_by_anchor) -> Optional[MinorModel]:
    n = g.n
    chosen: List[Tuple[VertexSet, VertexSet]] = []

    def place(used: VertexSet, first_anchor: int) -> bool:
        if len(chosen) == k:
            return True
        need = k - len(chosen)
        for a in range(first_anchor, n):
            free_above = g.vertex_mask & ~used & ~((1 << a) - 1)
            if popcount(free_above) < need:
                return False
            if used >> a & 1:
                continue
            for s, reach in sets_by_anchor[a]:
                if s & used:
                    continue
                if any(reach & other == 0 for other, _ in chosen):
                    continue
                chosen.append((s, reach))
                if place(used | s, a + 1):
                    return True
                chosen.pop()
        return False

    if place(0, 0):
        return MinorModel(tuple(s for s, _ in chosen))
    return None


def hadwiger_minor(g: Graph) -> MinorModel:
    """
    A minor model of the largest complete minor.

    Example:
        >>> hadwiger_minor(Graph.cycle(4)).k
        3
    """
    clique = max_clique(g)
    best = MinorModel(tuple(1 << v for v in clique))
    bound = edge_bound(g)
    if best.k >= bound:
        return best

    sets_by_anchor = _anchored_connected_sets(g)
    for k in range(best.k + 1, bound + 1):
        model = _find_model(g, k, sets_by_anchor)
        if model is None:
            break
        best = model
    logger.debug(f"Hadwiger search on n={g.n}: h={best.k}")
    return best


def hadwiger_number(g: Graph) -> int:
    """
    h(G): largest k such that K_k is a minor of G.

    Example:
        >>> hadwiger_number(Graph.complete_bipartite(3, 3))
        4
    """
    return hadwiger_minor(g).k


# ═══════════════════════════════════════════════════════════════════════════════
# CONNECTED COMPLETE COLORINGS
# ═══════════════════════════════════════════════════════════════════════════════

def _relabel_partition(partition: ColoringPartition, members: VertexSet) -> ColoringPartition:
    """Lift a partition of G[members] back to the vertex labels of G."""
    order = vertices_of(members)
    classes = []
    for local in partition.classes:
        lifted = 0
        for i in iter_bits(local):
            lifted |= 1 << order[i]
        classes.append(lifted)
    return ColoringPartition(tuple(classes))


def connected_complete_coloring(g: Graph) -> Tuple[VertexSet, ColoringPartition]:
    """
    The best connected complete coloring over the components of g.

    Returns:
        (component mask, partition of that component in g's labels)
    """
    best: Optional[Tuple[VertexSet, ColoringPartition]] = None
    for component in components(g):
        sub = induced_subgraph(g, component)
        partition = find_partition(sub, 1, connected=True, complete=True)
        for k in range(2, edge_bound(sub) + 1):
            found = find_partition(sub, k, connected=True, complete=True)
            if found is None:
                break
            partition = found
        if best is None or partition.k > best[1].k:
            best = (component, _relabel_partition(partition, component))
    return best


def hadwiger_via_coloring(g: Graph) -> int:
    """
    h(G) as the largest connected and complete coloring of a component.

    Example:
        >>> hadwiger_via_coloring(Graph.cycle(4))
        3
    """
    return connected_complete_coloring(g)[1].k


__all__ = [
    "MinorModel",
    "hadwiger_minor",
    "hadwiger_number",
    "connected_complete_coloring",
    "hadwiger_via_coloring",
]
