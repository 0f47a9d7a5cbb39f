"""Verification campaigns: stream graphs through a theorem's hypothesis and
conclusion checks and aggregate a deterministic report.

A record is emitted per graph (JSONL-friendly), violations collect graphs
whose hypothesis held while the conclusion failed, and the merge is always
by input line number so worker counts never change the result.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .conditions import bauer_check, chvatal_condition, hoang_condition, t_closure
from .graph import Graph, degree_sequence
from .graph6 import Graph6Error, parse_graph6
from .solvers import hamilton_cycle, is_t_tough, pancyclic

THEOREMS = (
    "chvatal",
    "hoang",
    "closure-lemma",
    "successor",
    "bauer",
    "pancyclic-corollary",
)

_NEEDS_T = {"hoang", "closure-lemma", "successor", "bauer", "pancyclic-corollary"}


class CampaignError(ValueError):
    pass


@dataclass(frozen=True)
class GraphRecord:
    lineno: int
    g6: str
    hypothesis: bool
    conclusion: Optional[bool]
    certificate: Optional[str]
    detail: str
    micros: int

    def to_json(self, include_timing: bool = True) -> str:
        payload = {
            "g6": self.g6,
            "hypothesis": self.hypothesis,
            "conclusion": self.conclusion,
            "certificate": self.certificate,
        }
        if include_timing:
            payload["micros"] = self.micros
        if self.detail:
            payload["detail"] = self.detail
        return json.dumps(payload, sort_keys=True)


@dataclass
class CampaignReport:
    theorem: str
    t: Optional[str]
    seed: Optional[int]
    graphs_examined: int = 0
    hypothesis_hits: int = 0
    conclusion_verified: int = 0
    violations: list[dict] = field(default_factory=list)
    bad_lines: list[tuple[int, str]] = field(default_factory=list)
    wall_seconds: float = 0.0

    @property
    def clean(self) -> bool:
        return not self.violations

    def summary_json(self, include_timing: bool = True) -> str:
        payload = {
            "theorem": self.theorem,
            "t": self.t,
            "seed": self.seed,
            "graphs_examined": self.graphs_examined,
            "hypothesis_hits": self.hypothesis_hits,
            "conclusion_verified": self.conclusion_verified,
            "violations": self.violations,
            "bad_lines": [list(item) for item in self.bad_lines],
        }
        if include_timing:
            payload["wall_seconds"] = round(self.wall_seconds, 3)
        return json.dumps(payload, sort_keys=True)


def _cycle_text(cycle) -> Optional[str]:
    if cycle is None:
        return None
    return "CYCLE " + " ".join(map(str, cycle.order))


def _require_integer(t: Fraction) -> int:
    if t.denominator != 1 or t < 1:
        raise CampaignError("the degree-sequence shift t must be an integer >= 1")
    return int(t)


def _check_chvatal(g: Graph, t: Optional[Fraction]):
    if g.n < 3 or not chvatal_condition(degree_sequence(g)).holds:
        return False, None, "", None
    cycle = hamilton_cycle(g)
    detail = "" if cycle else "condition holds but no Hamilton cycle"
    return True, cycle is not None, detail, _cycle_text(cycle)


def _check_hoang(g: Graph, t: Fraction):
    shift = _require_integer(t)
    if g.n < 3 or not hoang_condition(degree_sequence(g), shift).holds:
        return False, None, "", None
    if not is_t_tough(g, t):
        return False, None, "", None
    cycle = hamilton_cycle(g)
    detail = "" if cycle else "tough graph meets the condition but has no Hamilton cycle"
    return True, cycle is not None, detail, _cycle_text(cycle)


def _check_bauer(g: Graph, t: Fraction):
    if g.n < 3 or not bauer_check(g, t):
        return False, None, "", None
    if not is_t_tough(g, t):
        return False, None, "", None
    cycle = hamilton_cycle(g)
    detail = "" if cycle else "degree threshold met but no Hamilton cycle"
    return True, cycle is not None, detail, _cycle_text(cycle)


def _check_closure_lemma(g: Graph, t: Fraction):
    if g.n < 3 or t < 4 or not is_t_tough(g, t):
        return False, None, "", None
    before = hamilton_cycle(g) is not None
    closed = t_closure(g, t).graph
    after = hamilton_cycle(closed) is not None
    ok = before == after
    detail = "" if ok else f"hamiltonicity changed: graph {before}, closure {after}"
    return True, ok, detail, None


def _check_successor(g: Graph, t: Fraction):
    if g.n < 4 or t < 4 or not is_t_tough(g, t):
        return False, None, "", None
    if hamilton_cycle(g) is not None:
        return False, None, "", None
    any_apex = False
    for z in g.vertices():
        sub, labels = g.delete_vertex(z)
        cycle = hamilton_cycle(sub)
        if cycle is None:
            continue
        any_apex = True
        order = tuple(labels[v] for v in cycle.order)
        pos = {v: i for i, v in enumerate(order)}
        nbrs = sorted(g.neighbors(z))
        for i, x in enumerate(nbrs):
            for y in nbrs[i + 1:]:
                xp = order[(pos[x] + 1) % len(order)]
                yp = order[(pos[y] + 1) % len(order)]
                if Fraction(g.degree(xp) + g.degree(yp)) >= g.n - t:
                    return True, False, f"degree-sum bound violated at (z, x, y) = ({z}, {x}, {y})", None
    if not any_apex:
        return False, None, "", None
    return True, True, "", None


def _check_pancyclic(g: Graph, t: Fraction):
    shift = _require_integer(t)
    if g.n < 3 or not hoang_condition(degree_sequence(g), shift).holds:
        return False, None, "", None
    if not is_t_tough(g, t):
        return False, None, "", None
    report = pancyclic(g)
    detail = "" if report.pancyclic else f"missing cycle length {report.first_missing}"
    return True, report.pancyclic, detail, None


_CHECKS = {
    "chvatal": _check_chvatal,
    "hoang": _check_hoang,
    "closure-lemma": _check_closure_lemma,
    "successor": _check_successor,
    "bauer": _check_bauer,
    "pancyclic-corollary": _check_pancyclic,
}


def _evaluate(payload: tuple[str, Optional[str], int, str]) -> GraphRecord:
    theorem, t_text, lineno, line = payload
    t = Fraction(t_text) if t_text is not None else None
    started = time.perf_counter()
    g = parse_graph6(line)
    hypothesis, conclusion, detail, certificate = _CHECKS[theorem](g, t)
    micros = int((time.perf_counter() - started) * 1e6)
    return GraphRecord(lineno, line, hypothesis, conclusion, certificate, detail, micros)


def run_campaign(
    theorem: str,
    lines: Iterable[tuple[int, str]],
    t=None,
    jobs: int = 1,
    seed: Optional[int] = None,
    skip_bad: bool = False,
) -> tuple[CampaignReport, list[GraphRecord]]:
    """Run one theorem over a (lineno, graph6) stream.

    Deterministic for a fixed stream and parameters; the seed is recorded
    in the report for provenance but the checks themselves never sample.
    """
    if theorem not in THEOREMS:
        raise CampaignError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    if theorem in _NEEDS_T and t is None:
        raise CampaignError(f"theorem {theorem!r} needs a threshold --t")
    t_frac = Fraction(t) if t is not None else None
    t_text = str(t_frac) if t_frac is not None else None
    report = CampaignReport(theorem, t_text, seed)
    started = time.perf_counter()

    good: list[tuple[int, str]] = []
    for lineno, line in lines:
        try:
            parse_graph6(line)
        except Graph6Error as exc:
            if skip_bad:
                report.bad_lines.append((lineno, str(exc)))
                continue
            raise CampaignError(f"line {lineno}: {exc}") from exc
        good.append((lineno, line))

    payloads = [(theorem, t_text, lineno, line) for lineno, line in good]
    if jobs <= 1:
        records = [_evaluate(p) for p in payloads]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_evaluate, payloads, chunksize=32))
    records.sort(key=lambda r: r.lineno)

    for record in records:
        report.graphs_examined += 1
        if record.hypothesis:
            report.hypothesis_hits += 1
            if record.conclusion:
                report.conclusion_verified += 1
            else:
                report.violations.append(
                    {"g6": record.g6, "lineno": record.lineno, "detail": record.detail}
                )
    report.wall_seconds = time.perf_counter() - started
    return report, records
