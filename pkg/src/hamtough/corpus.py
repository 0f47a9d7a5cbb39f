"""Frozen graph6 corpora shipped with the package, with checksums.

``graphs_n3_7.g6`` holds every graph on 3..7 vertices (up to isomorphism)
and ``connected_n8.g6`` every connected graph on 8 vertices.  The files
are regenerated by scripts/build_corpus.py and pinned by SHA256SUMS.
"""

from __future__ import annotations

import hashlib
from importlib import resources
from typing import Iterator

CORPUS_SMALL = "graphs_n3_7.g6"
CORPUS_CONNECTED_8 = "connected_n8.g6"

# counts of non-isomorphic graphs: all graphs on 3..7 vertices, connected on 8
EXPECTED_COUNTS = {
    CORPUS_SMALL: 4 + 11 + 34 + 156 + 1044,
    CORPUS_CONNECTED_8: 11117,
}


def _data_root():
    return resources.files("hamtough") / "data"


def corpus_text(name: str) -> str:
    return (_data_root() / name).read_text()


def iter_corpus(name: str) -> Iterator[tuple[int, str]]:
    """Yield (1-based line number, graph6 line) from a shipped corpus."""
    for lineno, line in enumerate(corpus_text(name).splitlines(), start=1):
        line = line.strip()
        if line:
            yield lineno, line


def checksums() -> dict[str, str]:
    """Recorded SHA-256 digests from the shipped SHA256SUMS file."""
    out = {}
    for row in corpus_text("SHA256SUMS").splitlines():
        row = row.strip()
        if row:
            digest, name = row.split()
            out[name] = digest
    return out


def verify_checksums() -> dict[str, bool]:
    """Recompute each corpus digest and compare with the recorded one."""
    recorded = checksums()
    result = {}
    for name, digest in recorded.items():
        actual = hashlib.sha256(corpus_text(name).encode()).hexdigest()
        result[name] = actual == digest
    return result
