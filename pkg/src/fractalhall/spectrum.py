"""Fractal spectrum: filling factors, Hausdorff labels and their classes.

A filling factor ``nu >= 0`` is assigned the label ``h = 1 + |nu - o|`` where
``o`` is the odd integer nearest to ``nu``; even integers get ``h = 2`` and odd
integers ``h = 1``. Labels come in dual pairs ``h <-> 3 - h`` and each label
collects the class ``{2k + 1 +/- (h - 1)}`` of filling factors.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .errors import InvalidLabel, InvalidParameter, NegativeFilling
from .farey import generate
from .rational import as_fraction

__all__ = [
    "FractalClass",
    "TheoremEntry",
    "TheoremReport",
    "Table",
    "classify_h",
    "dual_h",
    "dual_nu",
    "iter_class",
    "class_members",
    "verify_theorem",
    "paper_table",
    "filling_factor",
    "nu_from_spin",
]

ONE = Fraction(1)
TWO = Fraction(2)


def _filling(nu) -> Fraction:
    nu = as_fraction(nu)
    if nu < 0:
        raise NegativeFilling(f"filling factor must be >= 0, got {nu}")
    return nu


def _label(h) -> Fraction:
    h = as_fraction(h)
    if not ONE <= h <= TWO:
        raise InvalidLabel(f"Hausdorff label must lie in [1, 2], got {h}")
    return h


def classify_h(nu) -> Fraction:
    """Hausdorff label of a filling factor.

    >>> classify_h(Fraction(1, 3))
    Fraction(5, 3)
    >>> classify_h(Fraction(53, 6))
    Fraction(11, 6)
    """
    nu = _filling(nu)
    m = math.floor(nu)
    if m % 2 == 0:
        return m + 2 - nu
    return nu - m + 1


def dual_h(h) -> Fraction:
    return 3 - _label(h)


def dual_nu(nu) -> Fraction:
    """Reflect ``nu`` about the midpoint of its unit interval.

    Non-integers map to ``2*floor(nu) + 1 - nu``. Integers pair up as
    0 <-> 1, 2 <-> 3, ..., i.e. an odd integer is treated as the upper end
    of the interval below it, which keeps the map an involution.
    """
    nu = _filling(nu)
    if nu.denominator == 1:
        return nu + 1 if nu.numerator % 2 == 0 else nu - 1
    return 2 * math.floor(nu) + 1 - nu


def iter_class(h) -> Iterator[Fraction]:
    """Ascending, duplicate-free stream of every ``nu >= 0`` labelled ``h``."""
    h = _label(h)
    d = h - 1
    last = None
    for k in itertools.count():
        centre = 2 * k + 1
        for x in (centre - d, centre + d):
            if x >= 0 and x != last:
                yield x
                last = x


@dataclass(frozen=True)
class FractalClass:
    label: Fraction

    def __post_init__(self):
        object.__setattr__(self, "label", _label(self.label))

    @property
    def dual(self) -> FractalClass:
        return FractalClass(3 - self.label)

    def members(self) -> Iterator[Fraction]:
        return iter_class(self.label)

    def take(self, count: int) -> list[Fraction]:
        return list(itertools.islice(self.members(), count))

    def __contains__(self, nu) -> bool:
        return classify_h(nu) == self.label


def class_members(h, count: int) -> list[Fraction]:
    """First ``count`` members of the class labelled ``h``.

    >>> [str(x) for x in class_members(Fraction(3, 2), 3)]
    ['1/2', '3/2', '5/2']
    """
    if count < 1:
        raise InvalidParameter(f"count must be >= 1, got {count}")
    return FractalClass(h).take(count)


@dataclass(frozen=True)
class TheoremEntry:
    f: Fraction
    h: Fraction
    second: Fraction

    @property
    def passed(self) -> bool:
        return self.second == self.h


@dataclass(frozen=True)
class TheoremReport:
    order: int
    entries: tuple[TheoremEntry, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def failures(self) -> list[TheoremEntry]:
        return [e for e in self.entries if not e.passed]


def verify_theorem(n: int) -> TheoremReport:
    """For each interior element of F_n, compare its class's second member with its label."""
    if n < 2:
        raise InvalidParameter(f"theorem check needs order >= 2, got {n}")
    entries = []
    for f in generate(n).interior():
        h = classify_h(f)
        second = class_members(h, 2)[1]
        entries.append(TheoremEntry(f, h, second))
    return TheoremReport(n, tuple(entries))


def _row_member(h: Fraction, r: int) -> Fraction:
    # unique class member in [r, r+1]; integer columns follow the table layout
    if h == 2:
        return Fraction(r if r % 2 == 0 else r + 1)
    if h == 1:
        return Fraction(r + 1 if r % 2 == 0 else r)
    return r + 2 - h if r % 2 == 0 else r + h - 1


@dataclass(frozen=True)
class Table:
    columns: tuple[Fraction, ...]
    rows: tuple[tuple[str, tuple[Fraction, ...]], ...]

    def cell(self, row: int, h) -> Fraction:
        return self.rows[row][1][self.columns.index(as_fraction(h))]


def paper_table(order: int, max_row: int) -> Table:
    """Lay the classes of F_order out by unit interval.

    Columns are the labels of the interior Farey fractions plus 1 and 2, in
    descending order; row ``r`` holds each class's member in ``[r, r + 1]``.
    """
    if max_row < 1:
        raise InvalidParameter(f"max_row must be >= 1, got {max_row}")
    labels = {classify_h(f) for f in generate(order).interior()} | {ONE, TWO}
    columns = tuple(sorted(labels, reverse=True))
    rows = tuple(
        (f"{r}<nu<{r + 1}", tuple(_row_member(h, r) for h in columns))
        for r in range(max_row)
    )
    return Table(columns, rows)


def filling_factor(N: int, phi0, phi):
    """``N * phi0 / phi``; exact when all inputs are rational."""
    if N <= 0 or phi0 <= 0 or phi <= 0:
        raise InvalidParameter("electron number and fluxes must be positive")
    if all(isinstance(x, (int, Fraction)) for x in (N, phi0, phi)):
        return Fraction(N) * phi0 / phi
    return N * phi0 / phi


def nu_from_spin(s) -> Fraction:
    s = as_fraction(s)
    if s < 0:
        raise InvalidParameter(f"spin must be >= 0, got {s}")
    return 2 * s
