"""Shared hypothesis strategies for the suite."""

from hypothesis import strategies as st

from hamtough.graph import from_edges


@st.composite
def _graph(draw, max_n):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return from_edges(n, sorted(chosen))


def graphs(max_n=10):
    """Random simple graph on up to max_n vertices."""
    return _graph(max_n)
