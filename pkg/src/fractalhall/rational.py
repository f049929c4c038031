"""Exact reduced fractions.

The stdlib :class:`fractions.Fraction` already stores values reduced, with a
positive denominator and arbitrary-precision integers, so it is used as the
value type directly. This module adds the few operations the rest of the
package needs on top of it: checked construction, mediants and a strict
``p/q`` text form.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError, ZeroDenominator

__all__ = ["Fraction", "reduce", "mediant", "parse", "format_fraction", "as_fraction"]

_FRACTION_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?")


def reduce(p: int, q: int) -> Fraction:
    """Return ``p/q`` in lowest terms with a positive denominator.

    >>> reduce(-3, -9)
    Fraction(1, 3)
    """
    if q == 0:
        raise ZeroDenominator(f"zero denominator in {p}/{q}")
    return Fraction(p, q)


def mediant(a: Fraction, b: Fraction) -> Fraction:
    """Reduced form of ``(a.p + b.p) / (a.q + b.q)``."""
    return Fraction(a.numerator + b.numerator, a.denominator + b.denominator)


def parse(text: str) -> Fraction:
    """Parse ``"p/q"``, ``"-p/q"`` or an integer ``"n"``.

    No whitespace, decimals or exponents are accepted.
    """
    m = _FRACTION_RE.fullmatch(text)
    if m is None:
        raise ParseError(f"not a fraction: {text!r}")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    if q == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(p, q)


def format_fraction(f: Fraction, table: bool = True) -> str:
    """Canonical text form.

    With ``table=True`` integers keep their denominator (``"3/1"``), which is
    the layout used in CSV/JSON output; otherwise they print bare (``"3"``).
    """
    if not table and f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def as_fraction(value: Fraction | int | str) -> Fraction:
    """Coerce ints and ``p/q`` strings; floats are rejected to stay exact."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")
