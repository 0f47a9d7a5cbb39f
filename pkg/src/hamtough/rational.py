"""Exact rational values, plus the distinguished infinity used for complete graphs.

All toughness arithmetic in this package is exact: comparisons against a
threshold t must never flip on floating point rounding, so floats are kept
out of every ratio computation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union


class Infinite:
    """Value that compares strictly greater than every finite rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __eq__(self, other) -> bool:
        return isinstance(other, Infinite)

    def __hash__(self) -> int:
        return hash("hamtough.INFINITY")

    def __gt__(self, other) -> bool:
        return not isinstance(other, Infinite)

    def __ge__(self, other) -> bool:
        return True

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return isinstance(other, Infinite)


INFINITY = Infinite()

#: Toughness of a graph: a reduced fraction, or INFINITY for complete graphs.
ToughnessValue = Union[Fraction, Infinite]


def parse_rational(text: str) -> Fraction:
    """Parse "4", "9/2" or "4.5" into an exact fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_value(value: ToughnessValue) -> str:
    """Render a toughness value as "p/q" or "Inf" (stable across platforms)."""
    if isinstance(value, Infinite):
        return "Inf"
    return f"{value.numerator}/{value.denominator}"
