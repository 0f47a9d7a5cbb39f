"""Command-line surface: graph6 ingestion, solvers, condition checks, the
closure engine, certificate extraction, and verification campaigns.

Every subcommand reads graph6 from stdin or a file and writes JSONL to
stdout.  Exit codes: 0 clean, 1 violations found, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Optional, TextIO

from . import __version__
from .campaign import THEOREMS, CampaignError, run_campaign
from .certificates import (
    CertificateError,
    closure_certificate,
    serialize_certificate,
    successor_certificate,
    validate_certificate,
)
from .conditions import bauer_check, chvatal_condition, hoang_condition, t_closure
from .generate import GenerationError, random_graph, random_tough_graph
from .graph import degree_sequence, from_edges
from .graph6 import Graph6Error, emit_graph6, iter_graph6_lines, parse_graph6
from .rational import INFINITY, format_value, parse_rational
from .solvers import CycleCertificate, hamilton_cycle, pancyclic, toughness_exact

EXIT_CLEAN = 0
EXIT_VIOLATIONS = 1
EXIT_INPUT_ERROR = 2


def _open_source(path: Optional[str]) -> TextIO:
    if path is None or path == "-":
        return sys.stdin
    return open(path, "r", encoding="ascii")


def _each_graph(stream: TextIO, skip_bad: bool) -> Iterable[tuple[int, str, object]]:
    for lineno, line in iter_graph6_lines(stream):
        try:
            yield lineno, line, parse_graph6(line)
        except Graph6Error as exc:
            if skip_bad:
                print(f"line {lineno}: {exc}", file=sys.stderr)
                continue
            raise CampaignError(f"line {lineno}: {exc}") from exc


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _cmd_g6(args) -> int:
    if args.action == "parse":
        with _open_source(args.input) as stream:
            for lineno, line, g in _each_graph(stream, args.skip_bad):
                _emit({
                    "g6": line,
                    "n": g.n,
                    "edges": [[u, v] for u, v in g.edges()],
                    "degrees": [g.degree(v) for v in g.vertices()],
                })
        return EXIT_CLEAN
    with _open_source(args.input) as stream:
        for raw in stream:
            raw = raw.strip()
            if not raw:
                continue
            payload = json.loads(raw)
            g = from_edges(payload["n"], [tuple(e) for e in payload["edges"]])
            print(emit_graph6(g))
    return EXIT_CLEAN


def _cmd_solve(args) -> int:
    with _open_source(args.input) as stream:
        for lineno, line, g in _each_graph(stream, args.skip_bad):
            if args.problem == "hamilton":
                cycle = hamilton_cycle(g)
                _emit({
                    "g6": line,
                    "hamiltonian": cycle is not None,
                    "cycle": list(cycle.order) if cycle else None,
                })
            elif args.problem == "pancyclic":
                report = pancyclic(g)
                _emit({
                    "g6": line,
                    "pancyclic": report.pancyclic,
                    "first_missing": report.first_missing,
                })
            else:
                value, witness = toughness_exact(g)
                _emit({
                    "g6": line,
                    "toughness": format_value(value),
                    "cutset": list(witness.cutset) if witness else None,
                    "components": witness.components if witness else None,
                })
    return EXIT_CLEAN


def _cmd_check(args) -> int:
    t = parse_rational(args.t) if args.t is not None else None
    with _open_source(args.input) as stream:
        for lineno, line, g in _each_graph(stream, args.skip_bad):
            if args.condition == "chvatal":
                report = chvatal_condition(degree_sequence(g))
                _emit({"g6": line, "holds": report.holds, "witness_index": report.witness_index})
            elif args.condition == "hoang":
                if t is None or t.denominator != 1:
                    raise CampaignError("hoang needs an integer --t")
                report = hoang_condition(degree_sequence(g), int(t))
                _emit({"g6": line, "holds": report.holds, "witness_index": report.witness_index})
            else:
                if t is None:
                    raise CampaignError("bauer needs --t")
                _emit({"g6": line, "holds": bauer_check(g, t)})
    return EXIT_CLEAN


def _cmd_closure(args) -> int:
    t = parse_rational(args.t)
    with _open_source(args.input) as stream:
        for lineno, line, g in _each_graph(stream, args.skip_bad):
            result = t_closure(g, t)
            _emit({
                "g6": line,
                "closure_g6": emit_graph6(result.graph),
                "added": [[u, v, s] for u, v, s in result.additions],
            })
    return EXIT_CLEAN


def _cmd_certify(args) -> int:
    t = parse_rational(args.t)
    status = EXIT_CLEAN
    with _open_source(args.input) as stream:
        for lineno, line, g in _each_graph(stream, args.skip_bad):
            try:
                if args.kind == "closure":
                    extraction = closure_certificate(g, args.x, args.y, t)
                else:
                    sub, labels = g.delete_vertex(args.z)
                    cycle = hamilton_cycle(sub)
                    if cycle is None:
                        raise CertificateError(
                            "no-apex-cycle", f"graph minus vertex {args.z} has no Hamilton cycle"
                        )
                    lifted = CycleCertificate(tuple(labels[v] for v in cycle.order))
                    extraction = successor_certificate(g, args.z, lifted, args.x, args.y, t)
            except CertificateError as exc:
                _emit({"g6": line, "error": exc.code, "message": str(exc)})
                status = EXIT_VIOLATIONS
                continue
            check = validate_certificate(g, t, extraction.certificate)
            _emit({
                "g6": line,
                "certificate": serialize_certificate(extraction.certificate),
                "stage": extraction.stage,
                "valid": check.ok,
            })
            if not check.ok:
                status = EXIT_VIOLATIONS
    return status


def _cmd_campaign(args) -> int:
    with _open_source(args.input) as stream:
        lines = list(iter_graph6_lines(stream))
    report, records = run_campaign(
        args.theorem,
        lines,
        t=parse_rational(args.t) if args.t is not None else None,
        jobs=args.jobs,
        seed=args.seed,
        skip_bad=args.skip_bad,
    )
    for record in records:
        print(record.to_json())
    print(report.summary_json(), file=sys.stderr)
    return EXIT_CLEAN if report.clean else EXIT_VIOLATIONS


def _cmd_gen(args) -> int:
    import random as _random

    rng = _random.Random(args.seed)
    for index in range(args.count):
        if args.kind == "random":
            g = random_graph(args.n, args.p, rng)
        else:
            t = INFINITY if args.complete else parse_rational(args.t)
            g = random_tough_graph(args.n, t, seed=rng.randrange(2**32))
        print(emit_graph6(g))
    return EXIT_CLEAN


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamtough",
        description="Hamiltonicity in tough graphs: solvers, conditions, closures, certificates.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p):
        p.add_argument("input", nargs="?", default=None, help="graph6 file (default stdin)")
        p.add_argument("--skip-bad", action="store_true", help="skip malformed lines instead of aborting")

    p = sub.add_parser("g6", help="parse or emit graph6")
    p.add_argument("action", choices=["parse", "emit"])
    add_io(p)
    p.set_defaults(func=_cmd_g6)

    p = sub.add_parser("solve", help="exact solvers")
    p.add_argument("problem", choices=["hamilton", "pancyclic", "toughness"])
    add_io(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("check", help="degree and threshold conditions")
    p.add_argument("condition", choices=["chvatal", "hoang", "bauer"])
    p.add_argument("--t", default=None, help="threshold (integer or p/q)")
    add_io(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("closure", help="t-closure with addition log")
    p.add_argument("--t", required=True, help="threshold (integer or p/q)")
    add_io(p)
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("certify", help="certificate extraction")
    p.add_argument("kind", choices=["closure", "successor"])
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--z", type=int, default=None, help="apex vertex (successor only)")
    p.add_argument("--t", required=True, help="threshold (>= 4)")
    add_io(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("campaign", help="theorem verification campaign")
    p.add_argument("theorem", choices=list(THEOREMS))
    p.add_argument("--t", default=None, help="threshold where the theorem needs one")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    add_io(p)
    p.set_defaults(func=_cmd_campaign)

    p = sub.add_parser("gen", help="emit random or oracle-confirmed tough graphs")
    p.add_argument("kind", choices=["random", "tough"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5, help="edge probability (random)")
    p.add_argument("--t", default="1", help="toughness threshold (tough)")
    p.add_argument("--complete", action="store_true", help="request infinite toughness (tough)")
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args, extras = parser.parse_known_args(argv)
    # argparse drops a trailing file positional that follows an option
    # (e.g. "campaign chvatal --t 4 corpus.g6"); recover it here
    if extras:
        if (
            len(extras) == 1
            and not extras[0].startswith("-")
            and hasattr(args, "input")
            and args.input is None
        ):
            args.input = extras[0]
        else:
            parser.error(f"unrecognized arguments: {' '.join(extras)}")
    if getattr(args, "command", None) == "certify" and args.kind == "successor" and args.z is None:
        parser.error("certify successor needs --z")
    try:
        return args.func(args)
    except (CampaignError, Graph6Error, GenerationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
