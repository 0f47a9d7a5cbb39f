"""Bit-exact graph6 encoding and decoding (nauty's format).

Supports the canonical short encoding: N(n) is one byte chr(n+63) for
n <= 62 and '~' plus three 6-bit bytes for 63 <= n <= 64 (the package-wide
vertex cap).  The upper triangle is packed column by column, (0,1), (0,2),
(1,2), (0,3), ..., six bits per byte, zero padded.
"""

from __future__ import annotations

from typing import IO, Iterator

from .graph import Graph

HEADER = ">>graph6<<"
_LO = 63
_HI = 126


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position in the line."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _iter_pairs(n: int) -> Iterator[tuple[int, int]]:
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph.

    Accepts an optional ">>graph6<<" header and trailing newline.  Errors
    report the byte offset of the offending character in the original line.
    """
    line = text.rstrip("\r\n")
    base = 0
    if line.startswith(HEADER):
        base = len(HEADER)
        line = line[base:]
    if not line:
        raise Graph6Error("empty graph6 line", base)

    data = [ord(ch) for ch in line]
    for k, byte in enumerate(data):
        if not _LO <= byte <= _HI:
            raise Graph6Error(f"character {line[k]!r} outside graph6 range [63, 126]", base + k)

    if data[0] == _HI:  # long-form vertex count
        if len(data) < 4:
            raise Graph6Error("truncated long-form vertex count", base)
        if data[1] == _HI:
            raise Graph6Error("8-byte vertex counts are not supported", base + 1)
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
        body_base = base + 4
    else:
        n = data[0] - 63
        body = data[1:]
        body_base = base + 1

    if n < 1:
        raise Graph6Error(f"vertex count {n} below 1", base)
    if n > 64:
        raise Graph6Error(f"vertex count {n} exceeds the 64-vertex cap", base)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) < nbytes:
        raise Graph6Error(f"body holds {len(body)} bytes, need {nbytes}", base + len(line))
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after adjacency data", body_base + nbytes)

    rows = [0] * n
    bit = 0
    for i, j in _iter_pairs(n):
        byte = body[bit // 6] - 63
        if byte >> (5 - bit % 6) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        bit += 1
    # padding bits of the final byte must be zero
    if nbits % 6:
        pad = body[-1] - 63 & (1 << (6 - nbits % 6)) - 1
        if pad:
            raise Graph6Error("nonzero padding bits", body_base + nbytes - 1)
    return Graph(n, tuple(rows))


def emit_graph6(g: Graph) -> str:
    """Encode a Graph as canonical graph6 (no header, zero padding bits)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + chr((n >> 12 & 63) + 63) + chr((n >> 6 & 63) + 63) + chr((n & 63) + 63)
    out = []
    acc = 0
    filled = 0
    for i, j in _iter_pairs(n):
        acc = acc << 1 | (g.adj[i] >> j & 1)
        filled += 1
        if filled == 6:
            out.append(chr(acc + 63))
            acc = 0
            filled = 0
    if filled:
        out.append(chr((acc << (6 - filled)) + 63))
    return head + "".join(out)


def iter_graph6_lines(stream: IO[str]) -> Iterator[tuple[int, str]]:
    """Yield (1-based line number, stripped graph6 text), skipping blanks."""
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if line:
            yield lineno, line
