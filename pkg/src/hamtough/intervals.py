"""Neighbor-interval decomposition of a Hamilton path between two
non-adjacent endpoints, and the cutset assembled from it.

Positions are 0-based along the path; position 0 is x and position n-1 is
y.  Intervals are maximal runs of endpoint neighbors over positions
[1, n-2]; gaps are maximal runs adjacent to neither endpoint and always lie
in [2, n-3] because the path edges put position 1 in N(x) and position n-2
in N(y).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graph import Graph
from .solvers import path_is_valid


@dataclass(frozen=True)
class PathInterval:
    kind: str  # "x", "y", or "joint"
    start: int  # first position, inclusive
    end: int  # last position, inclusive
    shared: Optional[int] = None  # joint: position common to both runs
    y_end: Optional[int] = None  # joint: last position of the y-run

    @property
    def size(self) -> int:
        return self.end - self.start + 1


@dataclass(frozen=True)
class PathGap:
    kind: str  # "parallel" or "crossing"
    start: int
    end: int

    @property
    def size(self) -> int:
        return self.end - self.start + 1


@dataclass(frozen=True)
class IntervalDecomposition:
    path: tuple[int, ...]
    x_intervals: tuple[PathInterval, ...]  # not part of any joint
    y_intervals: tuple[PathInterval, ...]
    joint_intervals: tuple[PathInterval, ...]
    parallel_gaps: tuple[PathGap, ...]
    crossing_gaps: tuple[PathGap, ...]
    abutments: int  # interval pairs adjacent with no gap between them
    budget_bound: Fraction  # t - sum(p_i - 1) - sum(q_i - 2)
    budget_ok: bool  # p + q <= budget_bound
    shape_violations: tuple[str, ...]

    @property
    def p(self) -> int:
        return len(self.x_intervals) + len(self.y_intervals)

    @property
    def q(self) -> int:
        return len(self.joint_intervals)

    @property
    def p_star(self) -> int:
        return len(self.parallel_gaps)

    @property
    def q_star(self) -> int:
        return len(self.crossing_gaps)

    @property
    def parallel_sizes(self) -> tuple[int, ...]:
        return tuple(gap.size for gap in self.parallel_gaps)

    @property
    def crossing_sizes(self) -> tuple[int, ...]:
        return tuple(gap.size for gap in self.crossing_gaps)

    def gap_count_identity(self) -> bool:
        """p + q - 1 == p* + q* + abutments whenever any interval exists."""
        if self.p + self.q == 0:
            return self.p_star + self.q_star == 0
        return self.p + self.q - 1 == self.p_star + self.q_star + self.abutments


def _runs(flags: list[bool], lo: int, hi: int) -> list[tuple[int, int]]:
    runs = []
    pos = lo
    while pos <= hi:
        if flags[pos]:
            start = pos
            while pos + 1 <= hi and flags[pos + 1]:
                pos += 1
            runs.append((start, pos))
        pos += 1
    return runs


def decompose_intervals(g: Graph, path, t) -> IntervalDecomposition:
    """Decompose a Hamilton path x -> y into endpoint-neighbor intervals and
    gaps, and evaluate the interval-count budget p + q against
    t - sum(p_i - 1) - sum(q_i - 2) (reported, never assumed)."""
    seq = tuple(path)
    n = g.n
    x, y = seq[0], seq[-1]
    if not path_is_valid(g, seq, x, y):
        raise ValueError("not a Hamilton path of the graph")
    if g.has_edge(x, y):
        raise ValueError("path endpoints are adjacent")
    t = Fraction(t)

    in_x = [False] * n
    in_y = [False] * n
    for pos in range(1, n - 1):
        in_x[pos] = g.has_edge(x, seq[pos])
        in_y[pos] = g.has_edge(y, seq[pos])

    x_runs = _runs(in_x, 1, n - 2)
    y_runs = _runs(in_y, 1, n - 2)

    shape_violations: list[str] = []
    joints: list[PathInterval] = []
    joined_x: set[tuple[int, int]] = set()
    joined_y: set[tuple[int, int]] = set()
    for xr in x_runs:
        for yr in y_runs:
            lo = max(xr[0], yr[0])
            hi = min(xr[1], yr[1])
            if lo > hi:
                continue
            if not (lo == hi and xr[1] == lo and yr[0] == lo):
                shape_violations.append(
                    f"interval overlap at positions {lo}..{hi} is not a single"
                    f" shared vertex ending the x-run and starting the y-run"
                )
            joints.append(
                PathInterval("joint", min(xr[0], yr[0]), max(xr[1], yr[1]),
                             shared=xr[1], y_end=yr[1])
            )
            joined_x.add(xr)
            joined_y.add(yr)
    x_only = tuple(PathInterval("x", a, b) for a, b in x_runs if (a, b) not in joined_x)
    y_only = tuple(PathInterval("y", a, b) for a, b in y_runs if (a, b) not in joined_y)

    covered = [in_x[pos] or in_y[pos] for pos in range(n)]
    gap_runs = _runs([not covered[pos] for pos in range(n)], 1, n - 2)
    parallel: list[PathGap] = []
    crossing: list[PathGap] = []
    for a, b in gap_runs:
        if in_y[a - 1] and in_x[b + 1]:
            crossing.append(PathGap("crossing", a, b))
        else:
            parallel.append(PathGap("parallel", a, b))

    covered_runs = _runs(covered, 1, n - 2)
    total_intervals = len(x_only) + len(y_only) + len(joints)
    abutments = total_intervals - len(covered_runs)

    bound = t
    bound -= sum(gap.size - 1 for gap in parallel)
    bound -= sum(gap.size - 2 for gap in crossing)
    return IntervalDecomposition(
        path=seq,
        x_intervals=x_only,
        y_intervals=y_only,
        joint_intervals=tuple(joints),
        parallel_gaps=tuple(parallel),
        crossing_gaps=tuple(crossing),
        abutments=abutments,
        budget_bound=bound,
        budget_ok=Fraction(total_intervals) <= bound,
        shape_violations=tuple(shape_violations),
    )


@dataclass(frozen=True)
class ClosureCutsetParts:
    """Pieces of the path-derived cutset.

    All fields hold vertices (not positions).  ``cutset`` is the assembled
    union, with the near-end vertex dropped unless the final y-run is a
    singleton; ``crossing_keep_counts`` records, per crossing gap, how many
    of its vertices enter the cutset (0 for size 2, size-1 for size 3,
    size for length >= 4).
    """

    from_x_ends: frozenset[int]
    from_y_ends: frozenset[int]
    from_joints: frozenset[int]
    from_wide_parallel: frozenset[int]
    from_size3_crossing: frozenset[int]
    from_wide_crossing: frozenset[int]
    cutset: tuple[int, ...]
    crossing_keep_counts: tuple[int, ...]
    dropped_near_end: bool
    size_ok: bool  # |S| <= 2t - 1


def assemble_cutset(decomp: IntervalDecomposition, t) -> ClosureCutsetParts:
    t = Fraction(t)
    seq = decomp.path
    n = len(seq)

    sx: set[int] = set()
    for iv in decomp.x_intervals:
        sx.add(seq[iv.end])
        sx.add(seq[iv.end + 1])
    sy: set[int] = set()
    for iv in decomp.y_intervals:
        sy.add(seq[iv.start])
        sy.add(seq[iv.end])
    sxy: set[int] = set()
    for iv in decomp.joint_intervals:
        sxy.add(seq[iv.shared])
        sxy.add(seq[iv.y_end])
    t1: set[int] = set()
    for gap in decomp.parallel_gaps:
        if gap.size >= 2:
            t1.update(seq[pos] for pos in range(gap.start, gap.end + 1))
    t2: set[int] = set()
    t3: set[int] = set()
    keep_counts = []
    for gap in decomp.crossing_gaps:
        if gap.size == 3:
            t2.update(seq[pos] for pos in range(gap.start, gap.end))
            keep_counts.append(gap.size - 1)
        elif gap.size >= 4:
            t3.update(seq[pos] for pos in range(gap.start, gap.end + 1))
            keep_counts.append(gap.size)
        else:
            keep_counts.append(0)

    union = sx | sy | sxy | t1 | t2 | t3
    near_end = seq[n - 2]
    # keep S intact only when the y-run at position n-2 is the singleton {n-2}
    near_end_is_singleton_y_run = any(
        iv.start == n - 2 and iv.end == n - 2 for iv in decomp.y_intervals
    ) or any(
        iv.shared == n - 2 and iv.y_end == n - 2 for iv in decomp.joint_intervals
    )
    dropped = False
    if not near_end_is_singleton_y_run and near_end in union:
        union.discard(near_end)
        dropped = True

    cutset = tuple(sorted(union))
    return ClosureCutsetParts(
        from_x_ends=frozenset(sx),
        from_y_ends=frozenset(sy),
        from_joints=frozenset(sxy),
        from_wide_parallel=frozenset(t1),
        from_size3_crossing=frozenset(t2),
        from_wide_crossing=frozenset(t3),
        cutset=cutset,
        crossing_keep_counts=tuple(keep_counts),
        dropped_near_end=dropped,
        size_ok=Fraction(len(cutset)) <= 2 * t - 1,
    )
