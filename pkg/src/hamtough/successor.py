"""Apex-cycle configuration: the set system around a vertex z whose removal
leaves a Hamilton cycle, built from two chosen neighbors x, y of z.

The sets drive the certificate extractor: structural violations (adjacent
pairs in the shifted apex neighborhood, overlap between the two reach sets,
edges inside the kernel, crossing chords) each come with an explicit cycle
surgery producing a Hamilton cycle of the whole graph.  Every surgery
output is validated before use; an unresolvable violation is recorded and
left for the caller's fallback.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import Graph
from .solvers import CycleCertificate, cycle_is_valid


@dataclass(frozen=True)
class ClaimViolation:
    """Structural violation found while building a configuration.

    ``resolved`` tells whether a validated repair cycle was produced; the
    unresolved ones are kept so callers can fall back loudly instead of
    guessing a surgery the construction tables do not cover.
    """

    kind: str
    vertices: tuple[int, ...]
    resolved: bool


@dataclass(frozen=True)
class SuccessorConfig:
    """Set system around an apex vertex and a Hamilton cycle of g - apex."""

    apex: int
    cycle: CycleCertificate
    x: int
    y: int
    x_next: int
    y_next: int
    next_x_neighbors: frozenset[int]  # neighbors of x_next (may include apex)
    y_marks_forward: frozenset[int]  # predecessors of y_next-neighbors on arc [y_next..x]
    y_marks_backward: frozenset[int]  # successors of y_next-neighbors on arc [x..y_next]
    y_marks: frozenset[int]
    apex_marks: frozenset[int]  # cycle successors of the apex neighborhood
    residue: frozenset[int]
    kernel_forward: frozenset[int]
    kernel_backward: frozenset[int]
    kernel: frozenset[int]
    kernel_marks: frozenset[int]
    kernel_neighborhood: frozenset[int]  # true graph neighborhood of the kernel
    violations: tuple[ClaimViolation, ...]

    @property
    def marks_intersection(self) -> frozenset[int]:
        return self.y_marks_forward & self.y_marks_backward

    @property
    def residue_spill_size(self) -> int:
        """|R union (Z minus Y)|: bounded by t + 1 under the degree-sum hypothesis."""
        return len(self.residue | (self.apex_marks - self.y_marks))

    @property
    def marks_overlap_size(self) -> int:
        """|Y intersect Z|."""
        return len(self.y_marks & self.apex_marks)

    @property
    def kernel_size(self) -> int:
        return len(self.kernel)


class ConfigError(ValueError):
    """Invalid apex-cycle input; ``code`` names the violated precondition."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def _check_inputs(g: Graph, z: int, cycle: CycleCertificate, x: int, y: int) -> None:
    order = cycle.order
    if len(order) != g.n - 1 or set(order) != set(g.vertices()) - {z}:
        raise ConfigError("invalid-cycle", "cycle must cover every vertex except the apex")
    if len(order) < 3:
        raise ConfigError("invalid-cycle", "cycle needs at least 3 vertices")
    for i, v in enumerate(order):
        if not g.has_edge(v, order[(i + 1) % len(order)]):
            raise ConfigError("invalid-cycle", f"cycle step {v} -> {order[(i + 1) % len(order)]} is not an edge")
    if x == y:
        raise ConfigError("not-a-neighbor", "x and y must be distinct")
    for v in (x, y):
        if not g.has_edge(z, v):
            raise ConfigError("not-a-neighbor", f"vertex {v} is not adjacent to the apex")


def _validated(g: Graph, order: Iterable[int]) -> Optional[CycleCertificate]:
    seq = tuple(order)
    if cycle_is_valid(g, seq):
        return CycleCertificate(seq)
    return None


# -- cycle surgeries -------------------------------------------------------
# Each builder returns a candidate vertex list; callers validate.  C is the
# apex-free cycle, z the apex; all arcs are inclusive.


def _surgery_apex_marks_pair(cycle: CycleCertificate, z: int, u: int, v: int) -> list[tuple[int, ...]]:
    """Adjacent pair u, v in the shifted apex neighborhood."""
    out = []
    if v == cycle.successor(u):
        # consecutive apex neighbors pred(u), u: splice z between them
        out.append(tuple(cycle.arc(u, cycle.predecessor(u))) + (z,))
    elif u == cycle.successor(v):
        out.append(tuple(cycle.arc(v, cycle.predecessor(v))) + (z,))
    else:
        out.append(
            (u,)
            + cycle.arc(v, cycle.predecessor(u))
            + (z,)
            + cycle.arc_ccw(cycle.predecessor(v), cycle.successor(u))
        )
        out.append(
            (v,)
            + cycle.arc(u, cycle.predecessor(v))
            + (z,)
            + cycle.arc_ccw(cycle.predecessor(u), cycle.successor(v))
        )
    return out


def _surgery_shared_mark(cycle: CycleCertificate, z: int, x: int, y: int, a: int) -> list[tuple[int, ...]]:
    """Vertex a in both reach sets (neighbors of x_next and the y marks)."""
    xp = cycle.successor(x)
    yp = cycle.successor(y)
    if a in (xp, yp, x, y):
        return []
    return [
        cycle.arc(yp, a) + cycle.arc(xp, y) + (z,) + cycle.arc_ccw(x, cycle.successor(a))
    ]


def _surgery_kernel_ff(cycle: CycleCertificate, z: int, x: int, y: int, u: int, v: int) -> tuple[int, ...]:
    """u, v both in the forward kernel, u between y and v along the cycle."""
    yp = cycle.successor(y)
    xp = cycle.successor(x)
    return (
        cycle.arc_ccw(x, v)
        + cycle.arc_ccw(u, yp)
        + cycle.arc(cycle.successor(u), cycle.predecessor(v))
        + cycle.arc(xp, y)
        + (z,)
    )


def _surgery_kernel_bb(cycle: CycleCertificate, z: int, x: int, y: int, u: int, v: int) -> tuple[int, ...]:
    """u, v both in the backward kernel, u between x and v along the cycle."""
    yp = cycle.successor(y)
    xp = cycle.successor(x)
    return (
        cycle.arc_ccw(x, yp)
        + cycle.arc_ccw(cycle.predecessor(v), cycle.successor(u))
        + cycle.arc(xp, u)
        + cycle.arc(v, y)
        + (z,)
    )


def _surgery_kernel_fb(cycle: CycleCertificate, z: int, x: int, y: int, u: int, v: int) -> tuple[int, ...]:
    """u in the forward kernel, v in the backward kernel, u adjacent to v."""
    yp = cycle.successor(y)
    xp = cycle.successor(x)
    return (
        cycle.arc_ccw(x, cycle.successor(u))
        + cycle.arc(yp, u)
        + cycle.arc_ccw(v, xp)
        + cycle.arc(cycle.successor(v), y)
        + (z,)
    )


def build_config(g: Graph, z: int, cycle: CycleCertificate, x: int, y: int):
    """Construct the configuration, or return a repair Hamilton cycle.

    Returns a CycleCertificate of g when a structural violation with a
    validated surgery is found; otherwise a SuccessorConfig whose
    ``violations`` tuple records anything the surgery tables could not
    resolve.
    """
    _check_inputs(g, z, cycle, x, y)
    xp = cycle.successor(x)
    yp = cycle.successor(y)
    on_cycle = set(cycle.order)

    apex_marks = cycle.successors(v for v in g.neighbors(z))
    unresolved: list[ClaimViolation] = []

    # adjacent pair inside the shifted apex neighborhood
    for u in sorted(apex_marks):
        for v in sorted(w for w in g.neighbors(u) if w in apex_marks and w > u):
            for cand in _surgery_apex_marks_pair(cycle, z, u, v):
                repaired = _validated(g, cand)
                if repaired:
                    return repaired
            unresolved.append(ClaimViolation("apex-marks-adjacent", (u, v), False))

    next_x_neighbors = frozenset(g.neighbors(xp))
    arc_fwd = set(cycle.arc(yp, x))
    arc_bwd = set(cycle.arc(x, yp))
    y_marks_forward = frozenset(
        cycle.predecessor(w) for w in g.neighbors(yp) if w in arc_fwd
    )
    y_marks_backward = frozenset(
        cycle.successor(w) for w in g.neighbors(yp) if w in arc_bwd
    )
    y_marks = y_marks_forward | y_marks_backward

    # overlap between the two reach sets
    for a in sorted(next_x_neighbors & y_marks):
        for cand in _surgery_shared_mark(cycle, z, x, y, a):
            repaired = _validated(g, cand)
            if repaired:
                return repaired
        unresolved.append(ClaimViolation("reach-sets-overlap", (a,), False))

    x_shift_fwd = frozenset(cycle.successor(w) for w in next_x_neighbors if w in on_cycle)
    x_shift_bwd = frozenset(cycle.predecessor(w) for w in next_x_neighbors if w in on_cycle)
    zone_fwd = set(cycle.arc(y, x))
    zone_bwd = set(cycle.arc(x, y))
    kernel_forward = y_marks & x_shift_fwd & frozenset(zone_fwd)
    kernel_backward = y_marks & x_shift_bwd & frozenset(zone_bwd)
    kernel = kernel_forward | kernel_backward

    # kernel must be independent and non-adjacent to the apex
    ordered_kernel = sorted(kernel, key=cycle.position)
    for i, u in enumerate(ordered_kernel):
        if g.has_edge(z, u):
            unresolved.append(ClaimViolation("kernel-touches-apex", (u,), False))
        for v in ordered_kernel[i + 1:]:
            if not g.has_edge(u, v):
                continue
            cands = []
            if u in kernel_forward and v in kernel_forward:
                for first, second in ((u, v), (v, u)):
                    cands.append(_surgery_kernel_ff(cycle, z, x, y, first, second))
            if u in kernel_backward and v in kernel_backward:
                for first, second in ((u, v), (v, u)):
                    cands.append(_surgery_kernel_bb(cycle, z, x, y, first, second))
            for first, second in ((u, v), (v, u)):
                if first in kernel_forward and second in kernel_backward:
                    cands.append(_surgery_kernel_fb(cycle, z, x, y, first, second))
            repaired = None
            for cand in cands:
                repaired = _validated(g, cand)
                if repaired:
                    return repaired
            unresolved.append(ClaimViolation("kernel-pair-adjacent", (u, v), False))

    kernel_marks: set[int] = set()
    for u in kernel_forward:
        toward = set(cycle.arc(u, x))
        away = set(cycle.arc(x, u))
        for w in g.neighbors(u):
            if w in toward:
                kernel_marks.add(cycle.predecessor(w))
            if w in away:
                kernel_marks.add(cycle.successor(w))
    for u in kernel_backward:
        toward = set(cycle.arc(u, y))
        away = set(cycle.arc(y, u))
        for w in g.neighbors(u):
            if w in toward:
                kernel_marks.add(cycle.predecessor(w))
            if w in away:
                kernel_marks.add(cycle.successor(w))

    kernel_neighborhood = frozenset(
        w for u in kernel for w in g.neighbors(u)
    )
    everything = frozenset(g.vertices())
    residue = everything - next_x_neighbors - y_marks - apex_marks

    config = SuccessorConfig(
        apex=z,
        cycle=cycle,
        x=x,
        y=y,
        x_next=xp,
        y_next=yp,
        next_x_neighbors=next_x_neighbors,
        y_marks_forward=y_marks_forward,
        y_marks_backward=y_marks_backward,
        y_marks=y_marks,
        apex_marks=apex_marks,
        residue=residue,
        kernel_forward=kernel_forward,
        kernel_backward=kernel_backward,
        kernel=kernel,
        kernel_marks=frozenset(kernel_marks),
        kernel_neighborhood=kernel_neighborhood,
        violations=tuple(unresolved),
    )
    return config


# -- crossing-chord scan ---------------------------------------------------


def _crossing_geometry(cycle: CycleCertificate, u: int, a: int, v: int, b: int) -> bool:
    """True when chords u-a and v-b interleave around the cycle."""
    if len({u, a, v, b}) < 4:
        return False
    between = set(cycle.arc(u, a)) - {u, a}
    return (v in between) != (b in between)


def _crossing_surgeries(config: SuccessorConfig, u: int, v: int, a: int, b: int) -> list[tuple[int, ...]]:
    """Candidate repair cycles for a crossing between a kernel chord u-a and
    a chord from v in {x_next, y_next} to a cycle-neighbor b of a."""
    cyc = config.cycle
    z, x, y = config.apex, config.x, config.y
    xp, yp = config.x_next, config.y_next
    succ, pred = cyc.successor, cyc.predecessor
    cands: list[tuple[int, ...]] = []

    fwd = u in config.kernel_forward
    bwd = u in config.kernel_backward

    if fwd and v == xp:
        if b == succ(a):
            cands.append(
                (u,) + cyc.arc_ccw(a, yp) + cyc.arc(succ(u), x) + (z,)
                + cyc.arc_ccw(y, xp) + cyc.arc(b, pred(u))
            )
        if b == pred(a):
            cands.append(
                (u,) + cyc.arc(a, x) + (z,) + cyc.arc_ccw(y, xp)
                + cyc.arc_ccw(pred(a), succ(u)) + cyc.arc(yp, pred(u))
            )
        if b == succ(a):
            cands.append(
                (u,) + cyc.arc_ccw(a, xp) + cyc.arc(b, y) + (z,)
                + cyc.arc_ccw(x, succ(u)) + cyc.arc(yp, pred(u))
            )
    if fwd and v == yp:
        if b == succ(a):
            cands.append(
                (u,) + cyc.arc_ccw(a, yp) + cyc.arc(succ(a), pred(u))
                + cyc.arc(xp, y) + (z,) + cyc.arc_ccw(x, succ(u))
            )
        if b == pred(a):
            cands.append(
                (u,) + cyc.arc(a, x) + (z,) + cyc.arc_ccw(y, xp)
                + cyc.arc_ccw(pred(u), yp) + cyc.arc_ccw(pred(a), succ(u))
            )
            # generator-mediated repairs for marks past x_next
            for c in sorted(config.kernel, key=cyc.position):
                if c in (u, a, b):
                    continue
                if c in set(cyc.arc(yp, u)):
                    cands.append(
                        (u,) + cyc.arc(a, y) + (z,) + cyc.arc_ccw(x, succ(u))
                        + cyc.arc(yp, pred(c)) + cyc.arc(xp, pred(a))
                        + cyc.arc(c, pred(u))
                    )
                if c in set(cyc.arc(succ(u), x)):
                    cands.append(
                        (u,) + cyc.arc(a, y) + (z,) + cyc.arc_ccw(x, c)
                        + cyc.arc_ccw(pred(a), xp) + cyc.arc_ccw(pred(c), succ(u))
                        + cyc.arc(yp, pred(u))
                    )
    if bwd and v == yp:
        if b == succ(a):
            cands.append(
                (u,) + cyc.arc_ccw(a, yp) + cyc.arc(succ(a), x) + (z,)
                + cyc.arc_ccw(y, succ(u)) + cyc.arc(xp, pred(u))
            )
            cands.append(
                (u,) + cyc.arc_ccw(a, xp) + cyc.arc(succ(u), y) + (z,)
                + cyc.arc_ccw(x, yp) + cyc.arc(succ(a), pred(u))
            )
        if b == pred(a):
            cands.append(
                (u,) + cyc.arc(a, y) + (z,) + cyc.arc_ccw(x, yp)
                + cyc.arc_ccw(pred(a), succ(u)) + cyc.arc(xp, pred(u))
            )
    if bwd and v == xp:
        # mirrored attempts; every candidate is validated before use
        if b == succ(a):
            cands.append(
                (u,) + cyc.arc_ccw(a, xp) + cyc.arc(succ(u), y) + (z,)
                + cyc.arc_ccw(x, yp) + cyc.arc(b, pred(u))
            )
        if b == pred(a):
            cands.append(
                (u,) + cyc.arc(a, y) + (z,) + cyc.arc_ccw(x, yp)
                + cyc.arc_ccw(pred(a), succ(u)) + cyc.arc(xp, pred(u))
            )
    return cands


def find_crossing_repair(g: Graph, config: SuccessorConfig):
    """Scan for crossings between kernel chords and chords at the shifted
    endpoints; returns (repair cycle or None, unresolved violations)."""
    cyc = config.cycle
    unresolved: list[ClaimViolation] = []
    marks = config.kernel_marks
    for u in sorted(config.kernel, key=cyc.position):
        for v in (config.x_next, config.y_next):
            for a in sorted(w for w in g.neighbors(u) if w in marks and w in cyc):
                for b in (cyc.successor(a), cyc.predecessor(a)):
                    if not g.has_edge(v, b):
                        continue
                    if not _crossing_geometry(cyc, u, a, v, b):
                        continue
                    for cand in _crossing_surgeries(config, u, v, a, b):
                        repaired = _validated(g, cand)
                        if repaired:
                            return repaired, tuple(unresolved)
                    unresolved.append(
                        ClaimViolation("mark-crossing", (u, a, v, b), False)
                    )
    return None, tuple(unresolved)
