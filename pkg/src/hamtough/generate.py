"""Instance generation: random graphs, oracle-confirmed tough graphs, and
structured extractor inputs.

Tough-graph generation is rejection sampling against the exact toughness
oracle, so every returned graph is confirmed, and everything is
deterministic per seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .graph import Graph, complete, from_edges
from .rational import Infinite
from .solvers import CycleCertificate, hamilton_cycle, is_t_tough, path_is_valid


class GenerationError(RuntimeError):
    """Rejection sampling exhausted its attempt budget."""


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return from_edges(n, edges)


def random_tough_graph(n: int, t, seed: int, max_attempts: int = 400) -> Graph:
    """Graph confirmed t-tough by the exact oracle; deterministic per seed.

    An Infinite t (the "complete" request) returns K_n directly.  Dense
    bases are drawn with an edge probability that rises with t, then
    rejected until the oracle agrees; raises GenerationError after
    ``max_attempts`` rejections (t-tough graphs need minimum degree 2t, so
    tight n and t combinations can be infeasible).
    """
    if isinstance(t, Infinite):
        return complete(n)
    t = Fraction(t)
    if t < 0:
        raise ValueError("t must be nonnegative")
    if n > 20:
        raise ValueError("exact confirmation is capped at 20 vertices")
    if 2 * t > n - 1:
        raise GenerationError(f"no {t}-tough graph on {n} vertices: needs degree >= {2 * t}")
    rng = random.Random(seed)
    base = min(0.96, float(2 * t + 2) / max(n - 1, 1))
    for attempt in range(max_attempts):
        p = min(0.99, max(0.15, base + rng.uniform(-0.08, 0.12)))
        g = random_graph(n, p, rng)
        if Fraction(g.min_degree(), 2) < t:
            continue
        if is_t_tough(g, t):
            return g
    raise GenerationError(
        f"no {t}-tough graph on {n} vertices after {max_attempts} attempts"
    )


# -- extractor instances -----------------------------------------------------


@dataclass(frozen=True)
class ClosureInstance:
    graph: Graph
    x: int
    y: int
    hamiltonian: bool
    family: str
    path: tuple[int, ...]  # known Hamilton path from x to y


@dataclass(frozen=True)
class SuccessorInstance:
    graph: Graph
    z: int
    cycle: CycleCertificate
    x: int
    y: int
    hamiltonian: bool
    family: str


def _planted_path_instance(rng: random.Random, t: Fraction) -> ClosureInstance:
    """Random graph holding a Hamilton path between non-adjacent endpoints
    whose degree sum meets the n - t threshold."""
    n = rng.randint(8, 12)
    perm = list(range(n))
    rng.shuffle(perm)
    x, y = perm[0], perm[-1]
    edges = {tuple(sorted(e)) for e in zip(perm, perm[1:])}
    extra = rng.uniform(0.10, 0.35)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) != tuple(sorted((x, y))) and rng.random() < extra:
                edges.add((u, v))
    edges.discard(tuple(sorted((x, y))))
    g = from_edges(n, sorted(edges))
    need = g.n - t
    while Fraction(g.degree(x) + g.degree(y)) < need:
        side = x if g.degree(x) <= g.degree(y) else y
        options = [
            v for v in range(n)
            if v != side and v != (y if side == x else x) and not g.has_edge(side, v)
        ]
        if not options:
            side = y if side == x else x
            options = [
                v for v in range(n)
                if v != side and v != (y if side == x else x) and not g.has_edge(side, v)
            ]
        g = g.add_edge(side, rng.choice(options))
    return ClosureInstance(g, x, y, hamilton_cycle(g) is not None, "planted-path", tuple(perm))


def _two_clique_instance(rng: random.Random) -> ClosureInstance:
    """Two cliques joined by one bridge: never Hamiltonian, minimum degree
    at least 8, and the endpoint degree sum is n - 2."""
    a = rng.randint(9, 11)
    b = rng.randint(9, 11)
    n = a + b
    edges = [(u, v) for u in range(a) for v in range(u + 1, a)]
    edges += [(a + u, a + v) for u in range(b) for v in range(u + 1, b)]
    bridge_left = rng.randrange(1, a)  # keep vertex 0 free for x
    bridge_right = a + rng.randrange(1, b)  # keep vertex a free for y
    edges.append((bridge_left, bridge_right))
    g = from_edges(n, edges)
    path = (
        (0,)
        + tuple(v for v in range(1, a) if v != bridge_left)
        + (bridge_left, bridge_right)
        + tuple(v for v in range(a + 1, n) if v != bridge_right)
        + (a,)
    )
    return ClosureInstance(g, 0, a, False, "two-clique", path)


def _gap_clique_instance(rng: random.Random) -> ClosureInstance:
    """Two cliques with a rich two-vertex corridor between them: still never
    Hamiltonian, and the corridor becomes a size-2 gap of the planted path."""
    a = rng.randint(9, 10)
    b = rng.randint(9, 10)
    m1, m2 = a + b, a + b + 1
    n = a + b + 2
    edges = [(u, v) for u in range(a) for v in range(u + 1, a)]
    edges += [(a + u, a + v) for u in range(b) for v in range(u + 1, b)]
    edges.append((m1, m2))
    edges.append((a - 1, m1))
    edges.append((m2, a))
    for w in rng.sample(range(1, a - 1), 7):
        edges.append((w, m1))
    for w in rng.sample(range(a + 1, a + b - 1), 7):
        edges.append((w, m2))
    g = from_edges(n, sorted(set(tuple(sorted(e)) for e in edges)))
    path = (
        tuple(range(a - 1))
        + (a - 1, m1, m2, a)
        + tuple(range(a + 1, a + b))
    )
    return ClosureInstance(g, 0, a + b - 1, False, "gap-clique", path)


def _bipartite_instance(rng: random.Random) -> ClosureInstance:
    """Unbalanced complete bipartite graph plus noise inside the small side.

    The big side stays independent and outnumbers the small side, so no
    Hamilton cycle exists regardless of the noise; minimum degree is a - 1.
    """
    a = rng.randint(9, 10)
    n = 2 * a - 1
    edges = [(u, a + w) for u in range(a) for w in range(a - 1)]
    small = list(range(a, n))
    for _ in range(rng.randint(0, 6)):
        u, v = rng.sample(small, 2)
        edges.append((min(u, v), max(u, v)))
    g = from_edges(n, sorted(set(tuple(sorted(e)) for e in edges)))
    x, y = rng.sample(range(a), 2)
    middles = [v for v in range(a) if v not in (x, y)]
    path = [x]
    for k, w in enumerate(small):
        path.append(w)
        if k < len(middles):
            path.append(middles[k])
    path.append(y)
    return ClosureInstance(g, x, y, False, "odd-bipartite", tuple(path))


def closure_instances(seed: int, t=4) -> Iterator[ClosureInstance]:
    """Endless stream of inputs meeting the closure extractor preconditions."""
    rng = random.Random(seed)
    t = Fraction(t)
    while True:
        roll = rng.random()
        if roll < 0.60:
            inst = _planted_path_instance(rng, t)
        elif roll < 0.75:
            inst = _two_clique_instance(rng)
        elif roll < 0.85:
            inst = _gap_clique_instance(rng)
        else:
            inst = _bipartite_instance(rng)
        g = inst.graph
        if g.has_edge(inst.x, inst.y):
            continue
        if Fraction(g.degree(inst.x) + g.degree(inst.y)) < g.n - t:
            continue
        if not path_is_valid(g, inst.path, inst.x, inst.y):
            continue
        yield inst


def _spoke_wheel_instance(rng: random.Random, t: Fraction) -> Optional[SuccessorInstance]:
    """Outer cycle plus an apex on an independent spoke set, with chords at
    the two shifted endpoints to meet the degree-sum threshold."""
    m = rng.choice([16, 17, 18])
    n = m + 1
    z = m
    ring = list(range(m))
    rng.shuffle(ring)
    spokes = sorted(rng.sample(range(0, 2 * (m // 2), 2), 8))  # even slots, cyclically independent
    edges = {tuple(sorted((ring[i], ring[(i + 1) % m]))) for i in range(m)}
    for slot in spokes:
        edges.add(tuple(sorted((z, ring[slot]))))
    xs, ys = rng.sample(spokes, 2)
    x, y = ring[xs], ring[ys]
    xp, yp = ring[(xs + 1) % m], ring[(ys + 1) % m]
    g = from_edges(n, sorted(edges))
    cyc = CycleCertificate(tuple(ring))
    apex_marks = {ring[(slot + 1) % m] for slot in spokes}
    need = g.n - t
    guard = 0
    while Fraction(g.degree(xp) + g.degree(yp)) < need:
        side = xp if g.degree(xp) <= g.degree(yp) else yp
        options = [
            v for v in range(m)
            if v != side and v not in apex_marks and not g.has_edge(side, v)
        ]
        if not options:
            return None
        g = g.add_edge(side, rng.choice(options))
        guard += 1
        if guard > 3 * n:
            return None
    return SuccessorInstance(g, z, cyc, x, y, hamilton_cycle(g) is not None, "spoke-wheel")


def _bipartite_apex_instance(rng: random.Random) -> SuccessorInstance:
    """Unbalanced complete bipartite graph; the apex is a big-side vertex,
    the remainder is balanced and carries an alternating Hamilton cycle."""
    a = rng.randint(9, 10)
    n = 2 * a - 1
    big = list(range(a))
    small = list(range(a, n))
    edges = [(u, w) for u in big for w in small]
    for _ in range(rng.randint(0, 5)):
        u, v = rng.sample(small, 2)
        edges.append((min(u, v), max(u, v)))
    g = from_edges(n, sorted(set(tuple(sorted(e)) for e in edges)))
    z = rng.choice(big)
    rest_big = [v for v in big if v != z]
    rng.shuffle(rest_big)
    small_order = small[:]
    rng.shuffle(small_order)
    ring: list[int] = []
    for u, w in zip(rest_big, small_order):
        ring.extend((u, w))
    cyc = CycleCertificate(tuple(ring))
    x, y = rng.sample(small, 2)
    return SuccessorInstance(g, z, cyc, x, y, False, "bipartite-apex")


def successor_instances(seed: int, t=4) -> Iterator[SuccessorInstance]:
    """Endless stream of inputs meeting the apex extractor preconditions,
    with the apex degree at least 2t so the kernel inequalities bind."""
    rng = random.Random(seed)
    t = Fraction(t)
    while True:
        if rng.random() < 0.7:
            inst = _spoke_wheel_instance(rng, t)
            if inst is None:
                continue
        else:
            inst = _bipartite_apex_instance(rng)
        g = inst.graph
        xp = inst.cycle.successor(inst.x)
        yp = inst.cycle.successor(inst.y)
        if Fraction(g.degree(xp) + g.degree(yp)) < g.n - t:
            continue
        if g.degree(inst.z) < 2 * t:
            continue
        yield inst
