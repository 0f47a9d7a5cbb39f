"""Certificate extractors: every run ends in a validated Hamilton cycle or
a validated toughness-violating cutset.

The two extractors mirror the two non-Hamiltonian configurations the
package analyzes: a Hamilton path between non-adjacent endpoints with a
large degree sum, and an apex vertex whose removal leaves a Hamilton
cycle.  Pipelines resolve Hamiltonicity first, then fall through a
deterministic ladder of cutset constructions, ending in an exact-toughness
fallback so the extractor is total on every legal input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .graph import Graph
from .intervals import ClosureCutsetParts, IntervalDecomposition, assemble_cutset, decompose_intervals
from .solvers import (
    CutsetWitness,
    CycleCertificate,
    components_after_removal,
    cycle_is_valid,
    hamilton_cycle,
    path_is_valid,
    toughness_exact,
)
from .successor import ConfigError, SuccessorConfig, _check_inputs, build_config, find_crossing_repair


@dataclass(frozen=True)
class HamiltonCycle:
    cycle: CycleCertificate


@dataclass(frozen=True)
class ToughnessViolation:
    witness: CutsetWitness


Certificate = Union[HamiltonCycle, ToughnessViolation]


class CertificateError(ValueError):
    """Precondition violation; ``code`` names the failed requirement."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Extraction:
    """Extractor outcome: the certificate plus the stage that produced it
    and the intermediate structures, for diagnostics and property tests."""

    certificate: Certificate
    stage: str
    decomposition: Optional[IntervalDecomposition] = None
    cutset_parts: Optional[ClosureCutsetParts] = None
    config: Optional[SuccessorConfig] = None
    notes: tuple[str, ...] = field(default_factory=tuple)


def validate_certificate(g: Graph, t, cert: Certificate) -> ValidationResult:
    """Re-derive everything a certificate asserts; trusts no stored field."""
    t = Fraction(t)
    if isinstance(cert, HamiltonCycle):
        if not cycle_is_valid(g, cert.cycle.order):
            return ValidationResult(False, "cycle-invalid")
        return ValidationResult(True)
    if isinstance(cert, ToughnessViolation):
        w = cert.witness
        if len(set(w.cutset)) != len(w.cutset):
            return ValidationResult(False, "cutset-repeats")
        if not all(0 <= v < g.n for v in w.cutset):
            return ValidationResult(False, "cutset-not-subset")
        c = components_after_removal(g, w.cutset)
        if c < 2:
            return ValidationResult(False, "cutset-leaves-connected")
        if c != w.components:
            return ValidationResult(False, "component-count-mismatch")
        ratio = Fraction(len(w.cutset), c)
        if ratio != w.ratio:
            return ValidationResult(False, "ratio-mismatch")
        if not ratio < t:
            return ValidationResult(False, "ratio-not-below-threshold")
        return ValidationResult(True)
    return ValidationResult(False, "unknown-certificate")


def serialize_certificate(cert: Certificate) -> str:
    if isinstance(cert, HamiltonCycle):
        return "CYCLE " + " ".join(str(v) for v in cert.cycle.order)
    w = cert.witness
    inside = ",".join(str(v) for v in sorted(w.cutset))
    return f"CUTSET t={w.ratio.numerator}/{w.ratio.denominator} S={{{inside}}} c={w.components}"


def parse_certificate(line: str) -> Certificate:
    text = line.strip()
    if text.startswith("CYCLE "):
        return HamiltonCycle(CycleCertificate(tuple(int(v) for v in text[6:].split())))
    if text.startswith("CUTSET "):
        fields = dict(part.split("=", 1) for part in text[7:].split())
        ratio = Fraction(fields["t"])
        inner = fields["S"].strip("{}")
        cutset = tuple(int(v) for v in inner.split(",")) if inner else ()
        return ToughnessViolation(CutsetWitness(cutset, int(fields["c"]), ratio))
    raise ValueError(f"unrecognized certificate line: {line!r}")


# -- shared pipeline pieces -------------------------------------------------


def _cutset_certificate(g: Graph, vertices, t: Fraction) -> Optional[ToughnessViolation]:
    """Package a vertex set as a toughness violation if it truly is one."""
    cutset = tuple(sorted(set(vertices)))
    if not cutset or len(cutset) >= g.n:
        return None
    c = components_after_removal(g, cutset)
    if c < 2:
        return None
    ratio = Fraction(len(cutset), c)
    if not ratio < t:
        return None
    return ToughnessViolation(CutsetWitness(cutset, c, ratio))


def _low_degree_shortcut(g: Graph, t: Fraction) -> Optional[ToughnessViolation]:
    """Minimum degree below 2t: the neighborhood of a minimum-degree vertex
    is a valid witness whenever it disconnects (always, for non-complete g)."""
    delta = g.min_degree()
    if not Fraction(delta) < 2 * t:
        return None
    v = min(g.vertices(), key=lambda w: (g.degree(w), w))
    return _cutset_certificate(g, g.neighbors(v), t)


def _exact_fallback(g: Graph, t: Fraction) -> ToughnessViolation:
    value, witness = toughness_exact(g)
    if witness is None or not witness.ratio < t:
        raise AssertionError(
            "exact-toughness fallback reached on a graph that is not "
            f"below the threshold (toughness {value})"
        )
    return ToughnessViolation(witness)


# -- rotation scan along a Hamilton path ------------------------------------


def _rotation_cycle(g: Graph, path: tuple[int, ...]) -> Optional[CycleCertificate]:
    """Scan the classic path rotations; any hit is a Hamilton cycle.

    Patterns covered, for a path P[0..n-1] with x = P[0], y = P[n-1]:
    consecutive y/x neighbors, linked flanks on either side of neighbor
    pairs, and the two skip-one patterns that reuse a neighbor two steps
    further along.
    """
    n = len(path)
    adj = g.has_edge
    x, y = path[0], path[-1]
    x_pos = [i for i in range(1, n - 1) if adj(x, path[i])]
    y_pos = [i for i in range(1, n - 1) if adj(y, path[i])]

    def attempt(order) -> Optional[CycleCertificate]:
        seq = tuple(order)
        if cycle_is_valid(g, seq):
            return CycleCertificate(seq)
        return None

    for i in x_pos:  # y adjacent to the vertex before an x-neighbor
        if i >= 2 and adj(y, path[i - 1]):
            got = attempt(path[:i] + path[i:][::-1])
            if got:
                return got
    for i in x_pos:
        for j in y_pos:
            if i < j and i >= 1 and j + 1 <= n - 1 and adj(path[i - 1], path[j + 1]):
                got = attempt(path[:i] + path[j + 1:] + path[i:j + 1][::-1])
                if got:
                    return got
            if i > j and i + 1 <= n - 1 and adj(path[i + 1], path[j + 1]):
                got = attempt(path[:j + 1] + path[i + 1:][::-1] + path[j + 1:i + 1])
                if got:
                    return got
            if i > j and j >= 1 and adj(path[i - 1], path[j - 1]):
                got = attempt(path[:j] + path[j:i][::-1] + path[i:][::-1])
                if got:
                    return got
    for i in x_pos:  # x also adjacent two steps on
        if i + 2 <= n - 2 and adj(x, path[i + 2]):
            for k in y_pos:
                if k >= i + 2 and k + 1 <= n - 1 and adj(path[i + 1], path[k + 1]):
                    got = attempt(
                        path[:i + 2] + path[k + 1:] + path[i + 2:k + 1][::-1]
                    )
                    if got:
                        return got
    for j in y_pos:  # y also adjacent two steps on
        if j + 2 <= n - 2 and adj(y, path[j + 2]):
            for k in x_pos:
                if k >= j + 3 and adj(path[j + 1], path[k - 1]):
                    got = attempt(
                        path[:j + 2] + path[j + 2:k][::-1] + path[k:][::-1]
                    )
                    if got:
                        return got
    return None


# -- the closure-side extractor ---------------------------------------------


def closure_certificate(
    g: Graph,
    x: int,
    y: int,
    t,
    known_non_hamiltonian: Optional[bool] = None,
    path=None,
) -> Extraction:
    """Certificate for the edge-addition configuration.

    Preconditions: x and y non-adjacent with deg(x) + deg(y) >= n - t,
    g + xy Hamiltonian, and t >= 4.  Returns a validated Hamilton cycle of
    g, or a validated cutset proving the toughness is below t.

    ``known_non_hamiltonian`` skips the decisive solver call when the
    caller has already classified g; a wrong hint cannot produce an invalid
    certificate (everything is re-validated) but may change which kind is
    returned.  ``path`` supplies a known Hamilton path from x to y, which
    both witnesses the g + xy precondition and skips the solver search.
    """
    t = Fraction(t)
    if t < 4:
        raise CertificateError("t-below-4", f"threshold t={t} is below 4")
    if x == y:
        raise CertificateError("endpoints-equal", "x and y must differ")
    if g.has_edge(x, y):
        raise CertificateError("endpoints-adjacent", f"vertices {x} and {y} are adjacent")
    degsum = g.degree(x) + g.degree(y)
    if Fraction(degsum) < g.n - t:
        raise CertificateError(
            "degree-sum-below-threshold",
            f"deg({x}) + deg({y}) = {degsum} < n - t = {Fraction(g.n) - t}",
        )

    notes: list[str] = []
    if path is not None:
        path = tuple(path)
        if not path_is_valid(g, path, x, y):
            raise CertificateError("invalid-path", "supplied vertex order is not a Hamilton path from x to y")
    else:
        augmented = g.add_edge(x, y)
        aug_cycle = hamilton_cycle(augmented)
        if aug_cycle is None:
            raise CertificateError(
                "augmented-not-hamiltonian", "adding xy does not create a Hamilton cycle"
            )
        order = aug_cycle.order
        i = order.index(x)
        rotated = order[i:] + order[:i]
        if rotated[1] == y:
            path = (rotated[0],) + rotated[1:][::-1]
        elif rotated[-1] == y:
            path = rotated
        else:
            # the cycle avoids the added edge, so it lives in g itself
            return Extraction(HamiltonCycle(aug_cycle), "already-hamiltonian")

    spun = _rotation_cycle(g, path)
    if spun is not None:
        return Extraction(HamiltonCycle(spun), "rotation")

    if known_non_hamiltonian is None:
        own = hamilton_cycle(g)
        if own is not None:
            return Extraction(HamiltonCycle(own), "solver-cycle")
    elif known_non_hamiltonian is False:
        own = hamilton_cycle(g)
        if own is not None:
            return Extraction(HamiltonCycle(own), "solver-cycle")
        notes.append("caller claimed hamiltonian but no cycle exists")

    low = _low_degree_shortcut(g, t)
    if low is not None:
        return Extraction(low, "low-degree", notes=tuple(notes))

    decomp = decompose_intervals(g, path, t)

    for gap in decomp.crossing_gaps:
        if gap.size != 1:
            continue
        pos = gap.start
        # cycle of g - path[pos]: x closes to the right flank, y to the left
        ring = (path[pos + 1],) + path[:pos] + path[pos + 2:][::-1]
        inner = CycleCertificate(ring)
        sub = successor_certificate(
            g,
            path[pos],
            inner,
            path[pos + 1],
            path[pos - 1],
            t,
            known_non_hamiltonian=True,
        )
        return Extraction(
            sub.certificate,
            "crossing-gap-recurse",
            decomposition=decomp,
            config=sub.config,
            notes=tuple(notes) + sub.notes,
        )

    follower = _double_gap_conflict(g, path, decomp)
    if follower is not None:
        witness = _cutset_certificate(g, g.neighbors(follower), t)
        if witness is not None:
            return Extraction(witness, "gap-conflict-witness", decomposition=decomp, notes=tuple(notes))
        notes.append("gap-conflict witness failed validation")

    parts = assemble_cutset(decomp, t)
    if parts.size_ok:
        witness = _cutset_certificate(g, parts.cutset, t)
        if witness is not None:
            return Extraction(
                witness, "interval-cutset", decomposition=decomp, cutset_parts=parts, notes=tuple(notes)
            )
        notes.append("interval cutset failed validation")
    else:
        notes.append("interval cutset exceeded the 2t-1 size bound")

    fallback = _exact_fallback(g, t)
    return Extraction(
        fallback, "exact-toughness-fallback", decomposition=decomp, cutset_parts=parts, notes=tuple(notes)
    )


def _double_gap_conflict(g: Graph, path: tuple[int, ...], decomp: IntervalDecomposition) -> Optional[int]:
    """Size-2 crossing gap whose left vertex reaches a y-straddled vertex.

    When present, the right gap vertex provably has degree below 2t, so its
    neighborhood is the cheap witness; returns that vertex or None.
    """
    n = len(path)
    y = path[-1]
    for gap in decomp.crossing_gaps:
        if gap.size != 2:
            continue
        left = path[gap.start]
        for j in range(2, n - 2):
            if g.has_edge(y, path[j - 1]) and g.has_edge(y, path[j + 1]) and g.has_edge(left, path[j]):
                return path[gap.start + 1]
    return None


# -- the apex-side extractor -------------------------------------------------


def successor_certificate(
    g: Graph,
    z: int,
    cycle: CycleCertificate,
    x: int,
    y: int,
    t,
    known_non_hamiltonian: Optional[bool] = None,
) -> Extraction:
    """Certificate for the apex configuration.

    Preconditions: cycle is a Hamilton cycle of g - z, x and y are distinct
    neighbors of z, deg(x^+) + deg(y^+) >= n - t with successors taken on
    the cycle, and t >= 4.
    """
    t = Fraction(t)
    if t < 4:
        raise CertificateError("t-below-4", f"threshold t={t} is below 4")
    try:
        _check_inputs(g, z, cycle, x, y)
    except ConfigError as exc:
        raise CertificateError(exc.code, str(exc)) from exc
    xp = cycle.successor(x)
    yp = cycle.successor(y)
    degsum = g.degree(xp) + g.degree(yp)
    if Fraction(degsum) < g.n - t:
        raise CertificateError(
            "degree-sum-below-threshold",
            f"deg({xp}) + deg({yp}) = {degsum} < n - t = {Fraction(g.n) - t}",
        )
    result = build_config(g, z, cycle, x, y)

    notes: list[str] = []
    if isinstance(result, CycleCertificate):
        return Extraction(HamiltonCycle(result), "claim-violation")
    config = result
    for violation in config.violations:
        notes.append(f"unresolved violation {violation.kind} at {violation.vertices}")

    repair, crossing_notes = find_crossing_repair(g, config)
    for violation in crossing_notes:
        notes.append(f"unresolved violation {violation.kind} at {violation.vertices}")
    if repair is not None:
        return Extraction(HamiltonCycle(repair), "claim-violation", config=config)

    if known_non_hamiltonian is None or known_non_hamiltonian is False:
        own = hamilton_cycle(g)
        if own is not None:
            return Extraction(HamiltonCycle(own), "solver-cycle", config=config, notes=tuple(notes))

    low = _low_degree_shortcut(g, t)
    if low is not None:
        return Extraction(low, "low-degree", config=config, notes=tuple(notes))

    witness = _cutset_certificate(g, config.kernel_neighborhood, t)
    if witness is not None:
        return Extraction(witness, "kernel-cutset", config=config, notes=tuple(notes))
    notes.append("kernel cutset failed validation")

    fallback = _exact_fallback(g, t)
    return Extraction(fallback, "exact-toughness-fallback", config=config, notes=tuple(notes))
