"""Farey series generation and checks of their neighbour properties."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidOrder, NotAdjacent
from .rational import mediant

__all__ = [
    "FareySequence",
    "Verification",
    "generate",
    "verify_p1",
    "verify_p2",
    "verify_p3",
]


@dataclass(frozen=True)
class FareySequence:
    order: int
    elements: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def interior(self) -> tuple[Fraction, ...]:
        """Elements strictly between 0 and 1."""
        return self.elements[1:-1]


@dataclass(frozen=True)
class Verification:
    """Outcome of a property check.

    ``index`` and ``values`` describe the first violation and are ``None``
    when the check passed. Truthy iff the check passed.
    """

    ok: bool
    index: int | None = None
    values: tuple[Fraction, ...] | None = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.ok


def generate(n: int) -> FareySequence:
    """Return F_n using the next-term recurrence.

    Starting from the neighbours 0/1, 1/n, each following term is
    ``(k*p2 - p1) / (k*q2 - q1)`` with ``k = (n + q1) // q2``.

    >>> [str(x) for x in generate(3)]
    ['0', '1/3', '1/2', '2/3', '1']
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidOrder(f"Farey order must be a positive integer, got {n!r}")
    p1, q1, p2, q2 = 0, 1, 1, n
    out = [Fraction(0, 1), Fraction(1, n)]
    while p2 != q2:
        k = (n + q1) // q2
        p1, q1, p2, q2 = p2, q2, k * p2 - p1, k * q2 - q1
        # terms come out reduced already; Fraction's gcd is cheap on them
        out.append(Fraction(p2, q2))
    return FareySequence(n, tuple(out))


def verify_p1(seq: Sequence[Fraction]) -> Verification:
    """Check ``|p2*q1 - q2*p1| == 1`` for every adjacent pair."""
    elems = list(seq)
    for i in range(len(elems) - 1):
        a, b = elems[i], elems[i + 1]
        det = b.numerator * a.denominator - b.denominator * a.numerator
        if abs(det) != 1:
            return Verification(False, i, (a, b), i + 1)
    return Verification(True, checked=max(len(elems) - 1, 0))


def verify_p2(seq: Sequence[Fraction]) -> Verification:
    """Check that each middle term of a consecutive triple is the mediant of its neighbours."""
    elems = list(seq)
    for i in range(len(elems) - 2):
        a, b, c = elems[i], elems[i + 1], elems[i + 2]
        if mediant(a, c) != b:
            return Verification(False, i, (a, b, c), i + 1)
    return Verification(True, checked=max(len(elems) - 2, 0))


def verify_p3(seq: Sequence[Fraction], a: Fraction, b: Fraction) -> Fraction:
    """Return the mediant of the neighbours ``a`` and ``b`` after certifying it.

    The certificate is a scan over every denominator below the mediant's:
    none of them admits a fraction strictly between ``a`` and ``b``.
    """
    elems = list(seq)
    lo, hi = (a, b) if a < b else (b, a)
    try:
        i = elems.index(lo)
    except ValueError:
        raise NotAdjacent(f"{lo} is not in the sequence") from None
    if i + 1 >= len(elems) or elems[i + 1] != hi:
        raise NotAdjacent(f"{a} and {b} are not consecutive")

    m = mediant(lo, hi)
    if not lo < m < hi:
        raise AssertionError(f"mediant {m} not strictly between {lo} and {hi}")
    for q in range(1, m.denominator):
        # smallest p with p/q > lo
        p = lo.numerator * q // lo.denominator + 1
        if Fraction(p, q) < hi:
            raise AssertionError(f"{p}/{q} lies between {lo} and {hi} with smaller denominator than {m}")
    return m
