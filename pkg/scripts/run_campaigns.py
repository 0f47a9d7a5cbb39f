#!/usr/bin/env python3
"""Run the full verification campaign slate and print one summary per line.

Reproduces the acceptance-scale runs: the strict degree condition over the
frozen corpora, the shifted condition at t = 1 and 2 over connected graphs
plus a seeded random stream, the closure lemma and pancyclicity over an
oracle-confirmed 4-tough sample, and extractor totality over the generated
instance pools.  Exits nonzero if any campaign reports a violation.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hamtough.campaign import run_campaign
from hamtough.certificates import (
    ToughnessViolation,
    closure_certificate,
    successor_certificate,
    validate_certificate,
)
from hamtough.corpus import CORPUS_CONNECTED_8, CORPUS_SMALL, iter_corpus
from hamtough.generate import (
    closure_instances,
    random_graph,
    random_tough_graph,
    successor_instances,
)
from hamtough.graph6 import emit_graph6, parse_graph6
from hamtough.solvers import is_connected


def fmt(report, elapsed):
    return (
        f"{report.theorem:<20} t={report.t or '-':<5} graphs={report.graphs_examined:<6} "
        f"hits={report.hypothesis_hits:<6} violations={len(report.violations):<3} {elapsed:.1f}s"
    )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--jobs", type=int, default=4)
    parser.add_argument("--tough-count", type=int, default=1000)
    parser.add_argument("--random-count", type=int, default=10_000)
    parser.add_argument("--instances", type=int, default=5000)
    parser.add_argument("--seed", type=int, default=777)
    args = parser.parse_args()

    failures = 0
    corpus_all = [line for _, line in iter_corpus(CORPUS_SMALL)]
    corpus_all += [line for _, line in iter_corpus(CORPUS_CONNECTED_8)]
    stream_all = list(enumerate(corpus_all, start=1))

    t0 = time.perf_counter()
    report, _ = run_campaign("chvatal", stream_all, jobs=args.jobs)
    print(fmt(report, time.perf_counter() - t0))
    failures += len(report.violations)

    connected = [line for line in corpus_all if is_connected(parse_graph6(line))]
    rng = random.Random(args.seed)
    randoms = [
        emit_graph6(random_graph(rng.randint(9, 14), rng.uniform(0.2, 0.9), rng))
        for _ in range(args.random_count)
    ]
    stream = list(enumerate(connected + randoms, start=1))
    for t in (1, 2):
        t0 = time.perf_counter()
        report, _ = run_campaign("hoang", stream, t=t, jobs=args.jobs, seed=args.seed)
        print(fmt(report, time.perf_counter() - t0))
        failures += len(report.violations)

    t0 = time.perf_counter()
    tough = [
        emit_graph6(random_tough_graph(10 + i % 7, 4, seed=900_000 + i))
        for i in range(args.tough_count)
    ]
    gen_time = time.perf_counter() - t0
    print(f"{'(generation)':<20} t=4     graphs={len(tough):<6} oracle-confirmed 4-tough {gen_time:.1f}s")
    tough_stream = list(enumerate(tough, start=1))
    for theorem, t in (("closure-lemma", "4"), ("closure-lemma", "9/2"),
                       ("successor", "4"), ("bauer", "4"), ("pancyclic-corollary", "4")):
        t0 = time.perf_counter()
        report, _ = run_campaign(theorem, tough_stream, t=Fraction(t), jobs=args.jobs)
        print(fmt(report, time.perf_counter() - t0))
        failures += len(report.violations)

    t0 = time.perf_counter()
    bad = 0
    done = 0
    for inst in closure_instances(seed=501):
        if inst.hamiltonian:
            continue
        ext = closure_certificate(inst.graph, inst.x, inst.y, 4,
                                  known_non_hamiltonian=True, path=inst.path)
        ok = isinstance(ext.certificate, ToughnessViolation) and validate_certificate(
            inst.graph, 4, ext.certificate
        ).ok
        bad += not ok
        done += 1
        if done == args.instances:
            break
    print(f"{'closure-extractor':<20} t=4     graphs={done:<6} hits={done:<6} violations={bad:<3} "
          f"{time.perf_counter() - t0:.1f}s")
    failures += bad

    t0 = time.perf_counter()
    bad = 0
    done = 0
    for inst in successor_instances(seed=502):
        if inst.hamiltonian:
            continue
        ext = successor_certificate(inst.graph, inst.z, inst.cycle, inst.x, inst.y, 4,
                                    known_non_hamiltonian=True)
        ok = isinstance(ext.certificate, ToughnessViolation) and validate_certificate(
            inst.graph, 4, ext.certificate
        ).ok
        bad += not ok
        done += 1
        if done == args.instances:
            break
    print(f"{'successor-extractor':<20} t=4     graphs={done:<6} hits={done:<6} violations={bad:<3} "
          f"{time.perf_counter() - t0:.1f}s")
    failures += bad

    print("clean" if failures == 0 else f"VIOLATIONS: {failures}")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
