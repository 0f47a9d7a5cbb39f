"""Canonical graph representation with bit-packed adjacency rows.

Vertices are dense 0-based indices and every adjacency row fits in one
machine word (n is capped at 64), which keeps the exponential solvers fast.
Graphs are immutable; every mutation helper returns a new instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Yield set bit indices of *mask* in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighbor bitmask of vertex v.  Invariants (no loops,
    symmetry, rows confined to n bits) are enforced at construction.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [1, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} references vertices >= n")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    # -- queries ---------------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbor_mask(self, v: int) -> int:
        return self.adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            row = self.adj[v] >> (v + 1) << (v + 1)
            for u in bits(row):
                out.append((v, u))
        return out

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def min_degree(self) -> int:
        return min(self.degree(v) for v in range(self.n))

    def is_complete(self) -> bool:
        return all(self.degree(v) == self.n - 1 for v in range(self.n))

    # -- derived graphs --------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("cannot add a self-loop")
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) already present")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def delete_vertex(self, v: int) -> tuple["Graph", tuple[int, ...]]:
        """Remove one vertex; returns the compacted graph and old labels."""
        return self.induced([u for u in range(self.n) if u != v])

    def induced(self, keep: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on *keep*; returns (graph, old labels by new index)."""
        labels = tuple(sorted(set(keep)))
        if not labels:
            raise ValueError("induced subgraph needs at least one vertex")
        if labels[0] < 0 or labels[-1] >= self.n:
            raise ValueError("vertex outside graph")
        index = {old: new for new, old in enumerate(labels)}
        rows = []
        for old in labels:
            row = 0
            for u in bits(self.adj[old]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph(len(labels), tuple(rows)), labels


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError("self-loop in edge list")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, [(u, a + w) for u in range(a) for w in range(b)])


def petersen() -> Graph:
    edges = [(v, (v + 1) % 5) for v in range(5)]
    edges += [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    edges += [(v, v + 5) for v in range(5)]
    return from_edges(10, edges)


@dataclass(frozen=True)
class DegreeSequence:
    """Non-decreasing degree sequence with a vertex labeling realizing it.

    ``degrees[i]`` is the degree of vertex ``labeling[i]`` in the source
    graph.  Checker code indexes this 1-based (d_1 <= ... <= d_n), matching
    the usual statement of degree conditions.
    """

    degrees: tuple[int, ...]
    labeling: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def min_degree(self) -> int:
        return self.degrees[0]

    @property
    def max_degree(self) -> int:
        return self.degrees[-1]

    def at(self, i: int) -> int:
        """1-based access: d_i."""
        if not 1 <= i <= len(self.degrees):
            raise IndexError(f"degree index {i} outside [1, {len(self.degrees)}]")
        return self.degrees[i - 1]


def degree_sequence(g: Graph) -> DegreeSequence:
    order = sorted(g.vertices(), key=lambda v: (g.degree(v), v))
    return DegreeSequence(
        degrees=tuple(g.degree(v) for v in order),
        labeling=tuple(order),
    )
