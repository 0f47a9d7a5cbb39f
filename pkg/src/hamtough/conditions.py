"""Checkable Hamiltonicity hypotheses and the toughness closure engine.

Covers the classical degree-sequence condition, its t-tough generalization
(with an explicit overflow policy for indices past the sequence), the
minimum-degree threshold test, degree-threshold cliques, and the t-closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from heapq import heappop, heappush
from typing import Optional

from .graph import DegreeSequence, Graph


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of a degree-sequence implication check.

    ``witness_index`` is the 1-based sorted-sequence index i with d_i <= i
    whose consequent failed; absent exactly when the condition holds.
    """

    holds: bool
    witness_index: Optional[int] = None


def minimal_defect_index(seq: DegreeSequence) -> Optional[int]:
    """Smallest 1-based k < n/2 with d_k <= k, or None."""
    n = seq.n
    for k in range(1, (n + 1) // 2):
        if 2 * k < n and seq.at(k) <= k:
            return k
    return None


def chvatal_condition(seq: DegreeSequence) -> ConditionReport:
    """For all i < n/2: d_i <= i implies d_{n-i} >= n-i."""
    n = seq.n
    if n < 3:
        raise ValueError("degree condition needs at least 3 vertices")
    for i in range(1, n):
        if 2 * i >= n:
            break
        if seq.at(i) <= i and seq.at(n - i) < n - i:
            return ConditionReport(False, i)
    return ConditionReport(True)


def hoang_condition(seq: DegreeSequence, t: int) -> ConditionReport:
    """For all i < n/2: d_i <= i implies d_{n-i+t} >= n-i.

    When the shifted index n-i+t runs past the sequence (i < t) and the
    antecedent fires, the condition counts as failed: the checker must not
    certify a hypothesis the shifted inequality cannot state.
    """
    if not isinstance(t, int) or t < 1:
        raise ValueError("the shift t must be an integer >= 1")
    n = seq.n
    if n < 3:
        raise ValueError("degree condition needs at least 3 vertices")
    for i in range(1, n):
        if 2 * i >= n:
            break
        if seq.at(i) <= i:
            if n - i + t > n or seq.at(n - i + t) < n - i:
                return ConditionReport(False, i)
    return ConditionReport(True)


def bauer_check(g: Graph, t) -> bool:
    """Minimum-degree threshold delta(G) > n/(t+1) - 1, compared exactly."""
    t = Fraction(t)
    if t < 0:
        raise ValueError("t must be nonnegative")
    if g.n < 3:
        raise ValueError("threshold test needs at least 3 vertices")
    return Fraction(g.min_degree()) > Fraction(g.n) / (t + 1) - 1


@dataclass(frozen=True)
class ClosureResult:
    graph: Graph
    additions: tuple[tuple[int, int, int], ...]  # (u, v, degree sum at insertion)


def t_closure(g: Graph, t) -> ClosureResult:
    """Repeatedly join non-adjacent pairs with degree sum >= n - t.

    The final edge set is independent of processing order; this
    implementation processes candidates lexicographically so the addition
    log is reproducible.  Accepts rational t.
    """
    t = Fraction(t)
    n = g.n
    threshold = n - t
    rows = list(g.adj)
    deg = [row.bit_count() for row in rows]

    def qualifies(u: int, v: int) -> bool:
        return not rows[u] >> v & 1 and Fraction(deg[u] + deg[v]) >= threshold

    heap: list[tuple[int, int]] = []
    queued: set[tuple[int, int]] = set()
    for u in range(n):
        for v in range(u + 1, n):
            if qualifies(u, v):
                heappush(heap, (u, v))
                queued.add((u, v))

    log: list[tuple[int, int, int]] = []
    while heap:
        u, v = heappop(heap)
        queued.discard((u, v))
        if rows[u] >> v & 1:
            continue  # became adjacent through an earlier pop
        log.append((u, v, deg[u] + deg[v]))
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        deg[u] += 1
        deg[v] += 1
        for w in (u, v):
            for other in range(n):
                if other == w:
                    continue
                pair = (min(w, other), max(w, other))
                if pair not in queued and qualifies(*pair):
                    heappush(heap, pair)
                    queued.add(pair)
    return ClosureResult(Graph(n, tuple(rows)), tuple(log))


@dataclass(frozen=True)
class CliqueAnalysis:
    """Degree-threshold clique structure of a graph.

    ``threshold_set`` collects the vertices of degree >= n - alpha and
    ``universal_clique`` the vertices adjacent to everything else (the
    unique maximal universal clique).  When a shift t is supplied, the
    completeness of ``threshold_set`` toward {v : deg(v) >= alpha - t} is
    evaluated and a violating pair reported.
    """

    alpha: int
    threshold_set: frozenset[int]
    universal_clique: frozenset[int]
    complete_to_low: Optional[bool] = None
    violating_pair: Optional[tuple[int, int]] = None


def universal_cliques(g: Graph, alpha: int, t=None) -> CliqueAnalysis:
    n = g.n
    if not (1 <= alpha and 2 * alpha < n):
        raise ValueError(f"alpha {alpha} outside [1, n/2)")
    threshold_set = frozenset(v for v in g.vertices() if g.degree(v) >= n - alpha)
    omega = frozenset(v for v in g.vertices() if g.degree(v) == n - 1)
    if t is None:
        return CliqueAnalysis(alpha, threshold_set, omega)
    t = Fraction(t)
    low = [v for v in g.vertices() if Fraction(g.degree(v)) >= Fraction(alpha) - t]
    for u in sorted(threshold_set):
        for v in low:
            if u != v and not g.has_edge(u, v):
                return CliqueAnalysis(alpha, threshold_set, omega, False, (u, v))
    return CliqueAnalysis(alpha, threshold_set, omega, True, None)
