#!/usr/bin/env python3
"""Regenerate the frozen graph6 corpora under src/hamtough/data/.

graphs_n3_7.g6   every graph on 3..7 vertices up to isomorphism (atlas order)
connected_n8.g6  every connected graph on 8 vertices up to isomorphism,
                 built by one-vertex augmentation of the connected 7-vertex
                 graphs and deduplicated with an exact canonical labeling

The per-order counts are asserted against the published values, so a bug in
the generator or the canonical form cannot slip through silently.
"""

from __future__ import annotations

import hashlib
import sys
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hamtough.graph import Graph, bits  # noqa: E402
from hamtough.graph6 import emit_graph6  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "src" / "hamtough" / "data"

KNOWN_COUNTS = {3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
KNOWN_CONNECTED_7 = 853
KNOWN_CONNECTED_8 = 11117


def adj_masks(g: nx.Graph, n: int) -> tuple[int, ...]:
    rows = [0] * n
    for u, v in g.edges():
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return tuple(rows)


def refine(adj: tuple[int, ...], n: int, colors: list[int]) -> list[int]:
    """1-dimensional color refinement to a stable partition."""
    while True:
        sig = []
        for v in range(n):
            neigh = sorted(colors[u] for u in bits(adj[v]))
            sig.append((colors[v], tuple(neigh)))
        ranking = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranking[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def canonical_key(adj: tuple[int, ...], n: int) -> int:
    """Exact canonical form: minimum adjacency bitstring over the leaves of
    an individualization-refinement search."""
    best: list[int | None] = [None]

    def key_for(order: list[int]) -> int:
        pos = {v: i for i, v in enumerate(order)}
        bits_out = 0
        for j in range(1, n):
            for i in range(j):
                bits_out = bits_out << 1 | (adj[order[i]] >> order[j] & 1)
        return bits_out

    def search(colors: list[int]) -> None:
        colors = refine(adj, n, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = c
                break
        if target is None:
            order = sorted(range(n), key=lambda v: colors[v])
            value = key_for(order)
            if best[0] is None or value < best[0]:
                best[0] = value
            return
        for v in cells[target]:
            child = [c * n for c in colors]
            child[v] -= 1  # individualize v inside its cell
            search(child)

    search([0] * n)
    assert best[0] is not None
    return best[0]


def graph_from_key(key: int, n: int) -> Graph:
    rows = [0] * n
    nbits = n * (n - 1) // 2
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if key >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))


def build_small() -> list[str]:
    lines = []
    per_n = {k: 0 for k in KNOWN_COUNTS}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if 3 <= n <= 7:
            per_n[n] += 1
            lines.append(emit_graph6(Graph(n, adj_masks(g, n))))
    assert per_n == KNOWN_COUNTS, per_n
    return lines


def build_connected_8() -> list[str]:
    seven = []
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == 7 and nx.is_connected(g):
            seven.append(adj_masks(g, 7))
    assert len(seven) == KNOWN_CONNECTED_7, len(seven)

    seen: set[int] = set()
    for adj7 in seven:
        for neighborhood in range(1, 1 << 7):
            rows = list(adj7) + [neighborhood]
            for v in bits(neighborhood):
                rows[v] |= 1 << 7
            key = canonical_key(tuple(rows), 8)
            seen.add(key)
    assert len(seen) == KNOWN_CONNECTED_8, len(seen)
    return sorted(emit_graph6(graph_from_key(key, 8)) for key in seen)


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    small = build_small()
    big = build_connected_8()
    files = {
        "graphs_n3_7.g6": "\n".join(small) + "\n",
        "connected_n8.g6": "\n".join(big) + "\n",
    }
    sums = []
    for name, text in files.items():
        (DATA / name).write_text(text)
        digest = hashlib.sha256(text.encode()).hexdigest()
        sums.append(f"{digest}  {name}")
        print(f"wrote {name}: {text.count(chr(10))} graphs, sha256 {digest[:16]}...")
    (DATA / "SHA256SUMS").write_text("\n".join(sums) + "\n")


if __name__ == "__main__":
    main()
