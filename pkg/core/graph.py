"""
═══════════════════════════════════════════════════════════════════════════════
AB-PERFECT GRAPH LAB - GRAPH SUBSTRATE
═══════════════════════════════════════════════════════════════════════════════
Module: core/graph.py
Last Updated: 2026-10-17
═══════════════════════════════════════════════════════════════════════════════

PURPOSE:
    Immutable simple undirected graphs on 1..32 vertices with bit-packed
    adjacency rows, the graph6 text codec, and the structural primitives
    every solver builds on (induced subgraphs, complement, components,
    connectivity and adjacency of vertex sets).

REPRESENTATION:
    - Vertices are 0..n-1
    - adj[v] is an int whose bit u is set iff uv is an edge
    - A VertexSet is a plain int bit mask over the same range

GRAPH6 LAYOUT:
    byte 0       : n + 63                       (n <= 62)
    bytes 1..    : upper triangle, column by column
                   (0,1) (0,2) (1,2) (0,3) (1,3) (2,3) ...
                   packed 6 bits per byte, most significant first,
                   zero padded, each chunk + 63

═══════════════════════════════════════════════════════════════════════════════
"""

import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from config.settings import GRAPH_CONFIG

MAX_VERTICES = GRAPH_CONFIG["max_vertices"]

# A VertexSet is a bit mask over the vertices of some ambient graph
VertexSet = int


# ═══════════════════════════════════════════════════════════════════════════════
# EXCEPTIONS
# ═══════════════════════════════════════════════════════════════════════════════

class GraphError(ValueError):
    """Invalid graph construction or invalid vertex-set argument."""


class Graph6ParseError(ValueError):
    """
    A graph6 line could not be decoded.

    Attributes:
        offset: Byte offset of the offending character
        reason: Short machine-friendly reason
    """

    def __init__(self, reason: str, offset: int, line: str = ""):
        self.reason = reason
        self.offset = offset
        self.line = line
        super().__init__(f"graph6 parse error at byte {offset}: {reason}")


# ═══════════════════════════════════════════════════════════════════════════════
# BIT HELPERS
# ═══════════════════════════════════════════════════════════════════════════════

def popcount(mask: int) -> int:
    """Number of set bits."""
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    """Index of the least set bit (mask must be nonzero)."""
    return (mask & -mask).bit_length() - 1


def mask_of(vertices: Iterable[int]) -> VertexSet:
    """Bit mask of an iterable of vertex indices."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_of(mask: VertexSet) -> List[int]:
    """Sorted vertex list of a bit mask."""
    return list(iter_bits(mask))


# ═══════════════════════════════════════════════════════════════════════════════
# GRAPH
# ═══════════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class Graph:
    """
    Immutable simple undirected graph.

    Attributes:
        n: Vertex count (1 <= n <= 32)
        adj: Neighbor masks, adj[v] has bit u set iff uv is an edge

    Example:
        >>> c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        >>> c4.edge_count
        4
    """
    n: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"Vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError(f"Expected {self.n} adjacency rows, got {len(self.adj)}")

        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"Vertex {v} has neighbors outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"Self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"Asymmetric adjacency between {v} and {u}")

    # ─────────────────────────────────────────────────────────────────────────
    # CONSTRUCTORS
    # ─────────────────────────────────────────────────────────────────────────

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """
        Build a graph from an edge list.

        Raises:
            GraphError: On loops or endpoints outside 0..n-1
        """
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"Vertex count must be in 1..{MAX_VERTICES}, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"Edge {u}-{v} outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"Self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        """Build a graph from a symmetric 0/1 adjacency matrix."""
        array = np.asarray(matrix)
        n = array.shape[0]
        return cls.from_edges(
            n, [(int(u), int(v)) for u, v in zip(*np.nonzero(np.triu(array, 1)))]
        )

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphError(f"Cycles need at least 3 vertices, got {n}")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])

    # ─────────────────────────────────────────────────────────────────────────
    # QUERIES
    # ─────────────────────────────────────────────────────────────────────────

    @property
    def vertex_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    @property
    def max_degree(self) -> int:
        return max(popcount(row) for row in self.adj)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, in graph6 column order."""
        return [(u, v) for v in range(self.n) for u in range(v) if self.adj[v] >> u & 1]

    def neighborhood(self, s: VertexSet) -> VertexSet:
        """Union of the neighborhoods of the vertices in s."""
        out = 0
        for v in iter_bits(s):
            out |= self.adj[v]
        return out

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix (uint8)."""
        matrix = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = 1
        return matrix

    def __str__(self) -> str:
        return emit_graph6(self)


# ═══════════════════════════════════════════════════════════════════════════════
# GRAPH6 CODEC
# ═══════════════════════════════════════════════════════════════════════════════

def _graph6_length(n: int) -> int:
    return 1 + (n * (n - 1) // 2 + 5) // 6


def parse_graph6(line: str) -> Graph:
    """
    Decode one graph6 line.

    Args:
        line: graph6 text; a trailing newline is ignored

    Returns:
        Graph with exactly the encoded edges

    Raises:
        Graph6ParseError: malformed length, out-of-range byte, trailing
            garbage, zero vertices, too many vertices, nonzero padding

    Example:
        >>> parse_graph6("Cl").edges()
        [(0, 1), (1, 2), (0, 3), (2, 3)]
    """
    text = line.rstrip("\r\n")
    if not text:
        raise Graph6ParseError("malformed length", 0, line)

    for offset, char in enumerate(text):
        if not 63 <= ord(char) <= 126:
            raise Graph6ParseError("out-of-range byte", offset, line)

    first = ord(text[0])
    if first == 126:
        # 126 introduces the long-form size (n >= 63)
        raise Graph6ParseError("too many vertices", 0, line)
    n = first - 63
    if n == 0:
        raise Graph6ParseError("zero vertices", 0, line)
    if n > MAX_VERTICES:
        raise Graph6ParseError("too many vertices", 0, line)

    expected = _graph6_length(n)
    if len(text) < expected:
        raise Graph6ParseError("malformed length", len(text), line)
    if len(text) > expected:
        raise Graph6ParseError("trailing garbage", expected, line)

    bit_count = n * (n - 1) // 2
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            chunk = ord(text[1 + k // 6]) - 63
            if chunk >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1

    if bit_count % 6:
        last = ord(text[-1]) - 63
        padding = 6 - bit_count % 6
        if last & ((1 << padding) - 1):
            raise Graph6ParseError("nonzero padding", len(text) - 1, line)

    return Graph(n, tuple(rows))


def encode_graph6(n: int, has_edge) -> str:
    """
    Encode a graph given by an adjacency predicate.

    Args:
        n: Vertex count
        has_edge: Callable (i, j) -> bool for i < j

    Returns:
        graph6 text
    """
    chars = [chr(n + 63)]
    value = 0
    width = 0
    for j in range(1, n):
        for i in range(j):
            value = value << 1 | (1 if has_edge(i, j) else 0)
            width += 1
            if width == 6:
                chars.append(chr(value + 63))
                value = 0
                width = 0
    if width:
        chars.append(chr((value << (6 - width)) + 63))
    return "".join(chars)


def emit_graph6(g: Graph) -> str:
    """
    Encode a graph as graph6 text.

    Example:
        >>> emit_graph6(Graph.empty(2))
        'A?'
    """
    adj = g.adj
    return encode_graph6(g.n, lambda i, j: adj[j] >> i & 1)


# ═══════════════════════════════════════════════════════════════════════════════
# STRUCTURAL PRIMITIVES
# ═══════════════════════════════════════════════════════════════════════════════

def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    """
    Subgraph induced by s, relabeled by increasing original index.

    Raises:
        GraphError: If s is empty or leaves the vertex range
    """
    if s == 0:
        raise GraphError("Induced subgraph of an empty vertex set")
    if s & ~g.vertex_mask:
        raise GraphError("Vertex set outside the graph")

    order = vertices_of(s)
    position = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for u in iter_bits(g.adj[v] & s):
            row |= 1 << position[u]
        rows.append(row)
    return Graph(len(order), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    """Induced subgraph on all vertices except v."""
    return induced_subgraph(g, g.vertex_mask & ~(1 << v))


def complement(g: Graph) -> Graph:
    """Complement graph: uv is an edge iff u != v and uv is not an edge of g."""
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union, vertices of later graphs shifted after earlier ones."""
    rows: List[int] = []
    offset = 0
    for h in graphs:
        rows.extend(row << offset for row in h.adj)
        offset += h.n
    return Graph(offset, tuple(rows))


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """
    Relabel g so that vertex v becomes perm[v].

    Args:
        perm: A permutation of 0..n-1
    """
    if sorted(perm) != list(range(g.n)):
        raise GraphError("Not a permutation of the vertex range")
    rows = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in iter_bits(g.adj[v]):
            row |= 1 << perm[u]
        rows[perm[v]] = row
    return Graph(g.n, tuple(rows))


def _reach(g: Graph, start: int, within: VertexSet) -> VertexSet:
    seen = 1 << start
    frontier = seen
    while frontier:
        grown = 0
        for v in iter_bits(frontier):
            grown |= g.adj[v]
        frontier = grown & within & ~seen
        seen |= frontier
    return seen


def components(g: Graph) -> List[VertexSet]:
    """Connected components as masks, ordered by least vertex."""
    remaining = g.vertex_mask
    parts = []
    while remaining:
        part = _reach(g, lowest_bit(remaining), remaining)
        parts.append(part)
        remaining &= ~part
    return parts


def is_connected_subset(g: Graph, s: VertexSet) -> bool:
    """
    True iff the subgraph induced by s is connected.

    Raises:
        GraphError: If s is empty
    """
    if s == 0:
        raise GraphError("Connectivity of an empty vertex set")
    return _reach(g, lowest_bit(s), s) == s


def is_connected(g: Graph) -> bool:
    return is_connected_subset(g, g.vertex_mask)


def sets_adjacent(g: Graph, s: VertexSet, t: VertexSet) -> bool:
    """
    True iff some edge has one end in s and the other in t.

    Raises:
        GraphError: If either set is empty or the sets overlap
    """
    if s == 0 or t == 0:
        raise GraphError("Adjacency test on an empty vertex set")
    if s & t:
        raise GraphError("Adjacency test on overlapping vertex sets")
    for v in iter_bits(s):
        if g.adj[v] & t:
            return True
    return False


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """G(n, p) sample drawn from a numpy Generator."""
    upper = np.triu(rng.random((n, n)) < p, 1)
    return Graph.from_matrix(upper | upper.T)


# ═══════════════════════════════════════════════════════════════════════════════
# EXPORT
# ═══════════════════════════════════════════════════════════════════════════════

__all__ = [
    "Graph",
    "VertexSet",
    "GraphError",
    "Graph6ParseError",
    "parse_graph6",
    "emit_graph6",
    "encode_graph6",
    "induced_subgraph",
    "delete_vertex",
    "complement",
    "disjoint_union",
    "permute",
    "components",
    "is_connected",
    "is_connected_subset",
    "sets_adjacent",
    "random_graph",
    "popcount",
    "iter_bits",
    "lowest_bit",
    "mask_of",
    "vertices_of",
]
