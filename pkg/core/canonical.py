"""
═══════════════════════════════════════════════════════════════════════════════
AB-PERFECT GRAPH LAB - CANONICAL FORMS AND ENUMERATION
═══════════════════════════════════════════════════════════════════════════════
Module: core/canonical.py
Last Updated: 2026-10-17
═══════════════════════════════════════════════════════════════════════════════

PURPOSE:
    Isomorphism-invariant keys for graphs, the isomorph-free enumerator that
    feeds every theorem sweep, and line-numbered graph6 file sources.

CANONICAL KEY:
    The key is the least graph6 string over the vertex orders produced by an
    individualization-refinement search:

    1. Refine an ordered vertex partition until every vertex in a cell has
       the same number of neighbors in every cell (degree, then
       neighborhood-degree multisets, and so on).
    2. If a cell still has several vertices, branch: individualize each of
       its vertices in turn and refine again. Twins (vertices with the same
       neighborhood apart from each other) are interchangeable, so only one
       vertex per twin class is tried.
    3. Every discrete partition is a vertex order; encode the relabeled
       graph and keep the least string.

    Refinement and branching commute with relabeling, so isomorphic graphs
    produce the same set of leaf strings and hence the same key.

ENUMERATION:
    - n <= labeled_dedup_limit: all 2^(n(n-1)/2) labeled graphs, deduplicated
    - larger n: every representative of order n-1 extended by one vertex in
      all 2^(n-1) ways, deduplicated
    Output is sorted by key; each yielded graph is the canonical relabeling,
    so emit_graph6(graph) == key.

═══════════════════════════════════════════════════════════════════════════════
"""

import sys
import itertools
import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from config.settings import GRAPH_CONFIG
from core.graph import (
    Graph,
    GraphError,
    Graph6ParseError,
    encode_graph6,
    emit_graph6,
    parse_graph6,
    iter_bits,
    popcount,
)

# Configure logging
logger = logging.getLogger(__name__)

# Canonical keys are graph6 text of the canonical relabeling
CanonicalKey = str


# ═══════════════════════════════════════════════════════════════════════════════
# PARTITION REFINEMENT
# ═══════════════════════════════════════════════════════════════════════════════

def _refine(g: Graph, cells: List[int]) -> List[int]:
    """
    Equitable refinement of an ordered partition.

    Each round splits every cell by the vector of neighbor counts into the
    cells of the previous round; split parts are ordered by that vector.
    """
    adj = g.adj
    while True:
        new_cells = []
        changed = False
        for cell in cells:
            if cell & (cell - 1) == 0:
                new_cells.append(cell)
                continue
            groups: Dict[Tuple[int, ...], int] = {}
            for v in iter_bits(cell):
                row = adj[v]
                signature = tuple(popcount(row & c) for c in cells)
                groups[signature] = groups.get(signature, 0) | (1 << v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                changed = True
                new_cells.extend(groups[sig] for sig in sorted(groups))
        cells = new_cells
        if not changed:
            return cells


def _are_twins(g: Graph, u: int, v: int) -> bool:
    return (g.adj[u] & ~(1 << v)) == (g.adj[v] & ~(1 << u))


def _encode_order(g: Graph, order: Sequence[int]) -> str:
    adj = g.adj
    return encode_graph6(g.n, lambda i, j: adj[order[j]] >> order[i] & 1)


def _search(g: Graph, cells: List[int], best: List[Optional[Tuple[str, Tuple[int, ...]]]]) -> None:
    cells = _refine(g, cells)

    target = next((i for i, cell in enumerate(cells) if cell & (cell - 1)), None)
    if target is None:
        order = tuple(cell.bit_length() - 1 for cell in cells)
        code = _encode_order(g, order)
        if best[0] is None or code < best[0][0]:
            best[0] = (code, order)
        return

    cell = cells[target]
    tried: List[int] = []
    for v in iter_bits(cell):
        if any(_are_twins(g, v, w) for w in tried):
            continue
        tried.append(v)
        branch = cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1:]
        _search(g, branch, best)


@lru_cache(maxsize=GRAPH_CONFIG["canonical_memo_size"])
def canonical_labeling(g: Graph) -> Tuple[CanonicalKey, Tuple[int, ...]]:
    """
    Canonical key and the vertex order that realizes it.

    Returns:
        (key, order) where order[i] is the original vertex placed at i
    """
    best: List[Optional[Tuple[str, Tuple[int, ...]]]] = [None]
    _search(g, [g.vertex_mask], best)
    return best[0]


def canonical_key(g: Graph) -> CanonicalKey:
    """
    Isomorphism-invariant key: equal exactly for isomorphic graphs.

    Example:
        >>> canonical_key(Graph.cycle(4)) == canonical_key(
        ...     Graph.from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)]))
        True
    """
    return canonical_labeling(g)[0]


def canonical_form(g: Graph) -> Graph:
    """The canonical relabeling of g (emit_graph6 of it equals its key)."""
    return parse_graph6(canonical_key(g))


def exhaustive_key(g: Graph) -> CanonicalKey:
    """
    Least graph6 string over all n! vertex orders.

    Brute-force oracle for the canonical key (n <= exhaustive_key_limit).
    """
    limit = GRAPH_CONFIG["exhaustive_key_limit"]
    if g.n > limit:
        raise GraphError(f"Exhaustive key limited to n <= {limit}, got {g.n}")
    return min(_encode_order(g, order) for order in itertools.permutations(range(g.n)))


# ═══════════════════════════════════════════════════════════════════════════════
# ENUMERATION
# ═══════════════════════════════════════════════════════════════════════════════

def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled graphs on n vertices."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for bits in range(1 << len(pairs)):
        rows = [0] * n
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield Graph(n, tuple(rows))


def brute_force_classes(n: int) -> List[CanonicalKey]:
    """Sorted keys of all labeled graphs on n vertices (the dedup oracle)."""
    return sorted({canonical_key(g) for g in labeled_graphs(n)})


@lru_cache(maxsize=None)
def _keys_of_order(n: int) -> Tuple[CanonicalKey, ...]:
    if n <= GRAPH_CONFIG["labeled_dedup_limit"]:
        keys = brute_force_classes(n)
    else:
        found = set()
        for key in _keys_of_order(n - 1):
            parent = parse_graph6(key)
            for row in range(1 << (n - 1)):
                rows = list(parent.adj)
                for u in iter_bits(row):
                    rows[u] |= 1 << (n - 1)
                rows.append(row)
                found.add(canonical_key(Graph(n, tuple(rows))))
        keys = sorted(found)
    logger.debug(f"Enumerated {len(keys)} isomorphism classes of order {n}")
    return tuple(keys)


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """
    One canonical representative per isomorphism class of order n.

    Args:
        n: Order (1 <= n <= max_enumeration_order)

    Yields:
        Graphs sorted by canonical key

    Raises:
        GraphError: If n is out of range

    Example:
        >>> sum(1 for _ in enumerate_graphs(4))
        11
    """
    limit = GRAPH_CONFIG["max_enumeration_order"]
    if not 1 <= n <= limit:
        raise GraphError(f"Enumeration order must be in 1..{limit}, got {n}")
    for key in _keys_of_order(n):
        yield parse_graph6(key)


def enumerate_up_to(max_order: int) -> Iterator[Graph]:
    """Representatives of every order 1..max_order, by order then key."""
    for n in range(1, max_order + 1):
        yield from enumerate_graphs(n)


# ═══════════════════════════════════════════════════════════════════════════════
# GRAPH6 FILES
# ═══════════════════════════════════════════════════════════════════════════════

def read_graph6_lines(lines: Iterable[str]) -> Iterator[Tuple[int, Union[Graph, Graph6ParseError]]]:
    """
    Parse graph6 text line by line.

    The ">>graph6<<" header is tolerated (alone or as a line prefix); blank
    lines are skipped. Parse errors are yielded, not raised, so a caller can
    report them with line numbers and keep going.

    Yields:
        (line_number, Graph or Graph6ParseError), line numbers from 1
    """
    header = GRAPH_CONFIG["graph6_header"]
    for line_number, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if line.startswith(header):
            line = line[len(header):]
        if not line.strip():
            continue
        try:
            yield line_number, parse_graph6(line)
        except Graph6ParseError as error:
            error.line = line
            yield line_number, error


def read_graph6_file(path: Union[str, Path]) -> Iterator[Tuple[int, Union[Graph, Graph6ParseError]]]:
    """Line-numbered graph6 records of a file (see read_graph6_lines)."""
    with open(path, "r", encoding="ascii", errors="replace") as handle:
        yield from read_graph6_lines(handle)


def graphs_from_file(path: Union[str, Path], max_order: Optional[int] = None) -> Iterator[Graph]:
    """
    Graphs of a graph6 file as an enumeration source.

    Raises:
        Graph6ParseError: On the first malformed line (with line number)
        GraphError: If a graph exceeds max_order
    """
    for line_number, item in read_graph6_file(path):
        if isinstance(item, Graph6ParseError):
            raise Graph6ParseError(f"{item.reason} (line {line_number})", item.offset, item.line)
        if max_order is not None and item.n > max_order:
            raise GraphError(f"Line {line_number}: order {item.n} exceeds {max_order}")
        yield item


def write_graph6_file(path: Union[str, Path], graphs, header: bool = False) -> int:
    """
    Write graphs one per line.

    Returns:
        Number of graphs written
    """
    count = 0
    with open(path, "w", encoding="ascii") as handle:
        if header:
            handle.write(GRAPH_CONFIG["graph6_header"])
        for g in graphs:
            handle.write(emit_graph6(g) + "\n")
            count += 1
    return count


__all__ = [
    "CanonicalKey",
    "canonical_key",
    "canonical_labeling",
    "canonical_form",
    "exhaustive_key",
    "labeled_graphs",
    "brute_force_classes",
    "enumerate_graphs",
    "enumerate_up_to",
    "read_graph6_lines",
    "read_graph6_file",
    "graphs_from_file",
    "write_graph6_file",
]
