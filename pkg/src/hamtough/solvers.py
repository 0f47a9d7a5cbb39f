"""Exact exponential-time oracles: Hamilton cycles and paths, pancyclicity,
and exact toughness.

Every search is deterministic (lowest-index branching) so certificates are
reproducible across runs.  Ratios are exact fractions throughout.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional

from .graph import Graph, bits
from .rational import INFINITY, ToughnessValue


@dataclass(frozen=True)
class CycleCertificate:
    """Hamilton cycle given as a clockwise vertex order.

    Helper queries expose the successor/predecessor structure and the two
    arcs between any pair of cycle vertices.
    """

    order: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.order)

    @functools.cached_property
    def _pos(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def __contains__(self, v: int) -> bool:
        return v in self._pos

    def position(self, v: int) -> int:
        return self._pos[v]

    def successor(self, v: int) -> int:
        return self.order[(self._pos[v] + 1) % len(self.order)]

    def predecessor(self, v: int) -> int:
        return self.order[(self._pos[v] - 1) % len(self.order)]

    def arc(self, a: int, b: int) -> tuple[int, ...]:
        """Vertices from a clockwise to b, inclusive."""
        m = len(self.order)
        i = self._pos[a]
        out = []
        while True:
            out.append(self.order[i])
            if self.order[i] == b:
                return tuple(out)
            i = (i + 1) % m

    def arc_ccw(self, a: int, b: int) -> tuple[int, ...]:
        """Vertices from a counterclockwise to b, inclusive."""
        m = len(self.order)
        i = self._pos[a]
        out = []
        while True:
            out.append(self.order[i])
            if self.order[i] == b:
                return tuple(out)
            i = (i - 1) % m

    def successors(self, vs: Iterable[int]) -> frozenset[int]:
        return frozenset(self.successor(v) for v in vs)

    def predecessors(self, vs: Iterable[int]) -> frozenset[int]:
        return frozenset(self.predecessor(v) for v in vs)


@dataclass(frozen=True)
class CutsetWitness:
    """Separating set together with the exact component ratio it achieves."""

    cutset: tuple[int, ...]
    components: int
    ratio: Fraction


@dataclass(frozen=True)
class PancyclicityReport:
    pancyclic: bool
    first_missing: Optional[int]


def cycle_is_valid(g: Graph, order: Iterable[int]) -> bool:
    """True iff *order* is a Hamilton cycle of g (every vertex once, edges real)."""
    seq = tuple(order)
    if len(seq) != g.n or len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    if not all(0 <= v < g.n for v in seq):
        return False
    return all(g.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))


def path_is_valid(g: Graph, order: Iterable[int], x: int, y: int) -> bool:
    seq = tuple(order)
    if len(seq) != g.n or len(set(seq)) != len(seq):
        return False
    if seq[0] != x or seq[-1] != y:
        return False
    return all(g.has_edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1))


# -- connectivity helpers -------------------------------------------------


def _flood(adj: tuple[int, ...], region: int, seed: int) -> int:
    """Region bits reachable from the seed bit inside *region*."""
    seen = seed
    frontier = seed
    while frontier:
        reach = 0
        for v in bits(frontier):
            reach |= adj[v]
        frontier = reach & region & ~seen
        seen |= frontier
    return seen


def _component_count(adj: tuple[int, ...], region: int) -> int:
    count = 0
    rest = region
    while rest:
        seed = rest & -rest
        rest &= ~_flood(adj, region, seed)
        count += 1
    return count


def is_connected(g: Graph) -> bool:
    full = (1 << g.n) - 1
    return _flood(g.adj, full, 1) == full


def components_after_removal(g: Graph, removed: Iterable[int]) -> int:
    """Exact component count of g minus the given vertex set."""
    mask = 0
    for v in removed:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside graph")
        mask |= 1 << v
    region = (1 << g.n) - 1 & ~mask
    return _component_count(g.adj, region)


# -- Hamilton cycle / path ------------------------------------------------


def _route_feasible(adj: tuple[int, ...], rem: int, cur: int, goal: int) -> bool:
    """Necessary checks for extending a partial route to a Hamilton path
    from cur to goal through the unvisited set: connectivity, two live ends
    per interior vertex, and class balance when the region is bipartite."""
    region = rem | 1 << cur | 1 << goal
    # BFS by levels: connectivity, and 2-coloring unless an odd cycle shows up
    level = 1 << cur
    seen = level
    even_mask = level
    odd_mask = 0
    parity = 0
    bipartite = True
    while level:
        reach = 0
        if bipartite:
            for v in bits(level):
                if adj[v] & level:
                    bipartite = False
                    reach |= adj[v]
                else:
                    reach |= adj[v]
        else:
            for v in bits(level):
                reach |= adj[v]
        level = reach & region & ~seen
        seen |= level
        parity ^= 1
        if parity:
            odd_mask |= level
        else:
            even_mask |= level
    if seen != region:
        return False
    if bipartite:
        n_even = even_mask.bit_count()
        n_odd = odd_mask.bit_count()
        if n_even == n_odd:
            if not odd_mask >> goal & 1:
                return False
        elif n_even == n_odd + 1:
            if not even_mask >> goal & 1:
                return False
        else:
            return False
    for v in bits(rem):
        live = adj[v] & region
        need = 1 if v == goal else 2
        if live.bit_count() < need:
            return False
    return True


def hamilton_cycle(g: Graph) -> Optional[CycleCertificate]:
    """Deterministic Hamilton cycle search (absent for n < 3 or none exists)."""
    n = g.n
    if n < 3:
        return None
    adj = g.adj
    if any(row.bit_count() < 2 for row in adj):
        return None
    full = (1 << n) - 1
    path = [0]

    def dfs(cur: int, visited: int) -> bool:
        if visited == full:
            return bool(adj[cur] & 1)
        cand = adj[cur] & ~visited
        for v in bits(cand):
            nv = visited | 1 << v
            path.append(v)
            if (nv == full or _route_feasible(adj, full & ~nv, v, 0)) and dfs(v, nv):
                return True
            path.pop()
        return False

    if dfs(0, 1):
        return CycleCertificate(tuple(path))
    return None


def hamilton_path_between(g: Graph, x: int, y: int) -> Optional[tuple[int, ...]]:
    """Hamilton path with endpoints x and y, or None.

    Raises ValueError when x == y.  Present iff g + xy has a Hamilton cycle
    through the edge xy (for non-adjacent endpoints).
    """
    if x == y:
        raise ValueError("path endpoints must differ")
    n = g.n
    if n == 1:
        raise ValueError("path endpoints must differ")
    adj = g.adj
    full = (1 << n) - 1
    if n == 2:
        return (x, y) if g.has_edge(x, y) else None
    path = [x]

    def dfs(cur: int, visited: int) -> bool:
        if visited == full:
            return cur == y
        cand = adj[cur] & ~visited
        for v in bits(cand):
            nv = visited | 1 << v
            if v == y and nv != full:
                continue
            path.append(v)
            if (nv == full or _route_feasible(adj, full & ~nv, v, y)) and dfs(v, nv):
                return True
            path.pop()
        return False

    if dfs(x, 1 << x):
        return tuple(path)
    return None


def _has_cycle_of_length(g: Graph, k: int) -> bool:
    """Cycle of exactly k vertices; symmetry cut by fixing the lowest vertex."""
    n = g.n
    adj = g.adj

    def dfs(start: int, cur: int, depth: int, visited: int, allowed: int) -> bool:
        if depth == k:
            return bool(adj[cur] >> start & 1)
        cand = adj[cur] & allowed & ~visited
        for v in bits(cand):
            if dfs(start, v, depth + 1, visited | 1 << v, allowed):
                return True
        return False

    for start in range(n - k + 1):
        allowed = ((1 << n) - 1) >> start << start  # vertices >= start
        if dfs(start, start, 1, 1 << start, allowed):
            return True
    return False


def pancyclic(g: Graph) -> PancyclicityReport:
    """Check for cycles of every length 3..n; reports the first missing length."""
    if g.n < 3:
        raise ValueError("pancyclicity needs at least 3 vertices")
    for k in range(3, g.n + 1):
        if not _has_cycle_of_length(g, k):
            return PancyclicityReport(False, k)
    return PancyclicityReport(True, None)


# -- toughness ------------------------------------------------------------


def _max_independent_set(adj: tuple[int, ...], region: int) -> int:
    """Exact independence number of the subgraph induced on *region*."""
    best = 0

    def grow(region: int, size: int) -> None:
        nonlocal best
        if size + region.bit_count() <= best:
            return
        if not region:
            best = max(best, size)
            return
        # branch on a max-degree vertex: either exclude it or take it
        pick = -1
        pick_deg = -1
        for v in bits(region):
            d = (adj[v] & region).bit_count()
            if d > pick_deg:
                pick, pick_deg = v, d
        if pick_deg == 0:
            best = max(best, size + region.bit_count())
            return
        grow(region & ~(1 << pick), size)
        grow(region & ~(adj[pick] | 1 << pick), size + 1)

    grow(region, 0)
    return best


def _greedy_independent_set(adj: tuple[int, ...], n: int) -> int:
    region = (1 << n) - 1
    size = 0
    while region:
        pick = min(bits(region), key=lambda v: (adj[v] & region).bit_count())
        size += 1
        region &= ~(adj[pick] | 1 << pick)
    return size


def toughness_exact(g: Graph) -> tuple[ToughnessValue, Optional[CutsetWitness]]:
    """Exact toughness with one minimizing cutset.

    INFINITY (and no witness) for complete graphs; otherwise the minimum of
    |S| / c(G - S) over all S with c(G - S) >= 2, as a reduced fraction.
    """
    if g.is_complete():
        return INFINITY, None
    n = g.n
    adj = g.adj
    full = (1 << n) - 1
    if not is_connected(g):
        c = _component_count(adj, full)
        return Fraction(0), CutsetWitness((), c, Fraction(0))
    alpha = _max_independent_set(adj, full)
    best: Optional[Fraction] = None
    witness: Optional[CutsetWitness] = None
    for size in range(1, n - 1):
        cap = min(n - size, alpha)
        if best is not None and Fraction(size, cap) >= best:
            break
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            c = _component_count(adj, full & ~mask)
            if c < 2:
                continue
            ratio = Fraction(size, c)
            if best is None or ratio < best:
                best = ratio
                witness = CutsetWitness(combo, c, ratio)
    assert best is not None and witness is not None  # non-complete graphs disconnect
    return best, witness


def is_t_tough(g: Graph, t) -> bool:
    """Exact decision |S| >= t * c(G - S) for all separating S.

    Accepts int or Fraction t >= 0.  Uses cheap rejections (minimum degree,
    greedy independent set) before the exhaustive sweep.
    """
    t = Fraction(t)
    if t < 0:
        raise ValueError("toughness threshold must be nonnegative")
    if t == 0 or g.is_complete():
        return True
    n = g.n
    adj = g.adj
    if not is_connected(g):
        return False
    # removing N(v) isolates a non-universal v, so toughness <= deg(v)/2
    if Fraction(g.min_degree(), 2) < t:
        return False
    m = _greedy_independent_set(adj, n)
    if m >= 2 and Fraction(n - m, m) < t:
        return False
    alpha = _max_independent_set(adj, (1 << n) - 1)
    if alpha >= 2 and Fraction(n - alpha, alpha) < t:
        return False
    full = (1 << n) - 1
    for size in range(1, n - 1):
        cap = min(n - size, alpha)
        if Fraction(size, cap) >= t:
            continue
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            c = _component_count(adj, full & ~mask)
            if c >= 2 and Fraction(size, c) < t:
                return False
    return True
