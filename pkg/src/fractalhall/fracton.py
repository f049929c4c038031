"""Fractal distribution function for fractons.

For a label ``h`` in [1, 2] and Boltzmann factor ``xi = exp((eps - mu)/KT)``
the occupation is ``n = 1 / (Y - h)`` where ``Y >= 2`` solves

    xi = (Y - 1)**(h - 1) * (Y - 2)**(2 - h).

h = 1 gives Fermi-Dirac, h = 2 Bose-Einstein.

The equation is solved for ``v = ln(Y - 2)``:

    F(v) = (h - 1) * softplus(v) + (2 - h) * v - ln(xi) = 0,

with ``softplus(v) = ln(1 + e**v)``. F is increasing and convex on the whole
real line, so there is no boundary at Y = 2 to approach and gaps far below
machine epsilon (h near 2, xi < 1) are still resolved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import CondensationRegion, InvalidLabel, InvalidParameter, NoClosedForm, Unbounded

__all__ = [
    "FractonPoint",
    "ThermoInput",
    "xi_from_energy",
    "solve_log_gap",
    "solve_Y",
    "occupation",
    "solve_point",
    "log_residual",
    "closed_form_Y",
    "closed_form_occupation",
    "max_occupation",
]

REL_TOL = 1e-14
MAX_ITER = 200


@dataclass(frozen=True)
class ThermoInput:
    epsilon: float
    mu: float
    T: float
    K: float = 1.0


def xi_from_energy(t: ThermoInput) -> float:
    if t.T <= 0 or t.K <= 0:
        raise InvalidParameter("temperature and Boltzmann constant must be positive")
    return math.exp((t.epsilon - t.mu) / (t.K * t.T))


def _check(h, xi) -> tuple[float, float]:
    h = float(h)
    xi = float(xi)
    if not 1.0 <= h <= 2.0 or math.isnan(h):
        raise InvalidLabel(f"h must lie in [1, 2], got {h}")
    if not xi >= 0.0:
        raise InvalidParameter(f"xi must be >= 0, got {xi}")
    if h == 2.0 and xi <= 1.0:
        raise CondensationRegion(f"h = 2 requires xi > 1, got {xi}")
    return h, xi


def _softplus(v: float) -> float:
    if v > 0:
        return v + math.log1p(math.exp(-v))
    return math.log1p(math.exp(v))


def _sigmoid(v: float) -> float:
    if v >= 0:
        return 1.0 / (1.0 + math.exp(-v))
    e = math.exp(v)
    return e / (1.0 + e)


def log_residual(h: float, xi: float, log_gap: float) -> float:
    """``ln`` of the right-hand side minus ``ln xi``, given ``log_gap = ln(Y - 2)``."""
    return (h - 1.0) * _softplus(log_gap) + (2.0 - h) * log_gap - math.log(xi)


def solve_log_gap(h, xi) -> float:
    """Return ``ln(Y - 2)``; ``-inf`` when ``xi == 0``.

    Newton's method safeguarded by a bisection bracket. Convexity of F means
    plain Newton would already converge from the right; the bracket guards
    the left side and the flat region near h = 2.
    """
    h, xi = _check(h, xi)
    if xi == 0.0:
        return -math.inf
    target = math.log(xi)
    a, b = h - 1.0, 2.0 - h

    def F(v):
        return a * _softplus(v) + b * v - target

    # F(v) > v - target for v >= 0 and F(0) > 0 when target < 0
    hi = max(target, 0.0)
    step = 1.0
    lo = hi - step
    while F(lo) >= 0.0:
        step *= 2.0
        lo = hi - step

    v = hi
    for _ in range(MAX_ITER):
        fv = F(v)
        if fv == 0.0:
            return v
        if fv > 0.0:
            hi = v
        else:
            lo = v
        dv = fv / (a * _sigmoid(v) + b)
        nxt = v - dv
        if not lo < nxt < hi:
            nxt = 0.5 * (lo + hi)
        if abs(nxt - v) <= REL_TOL * max(1.0, abs(nxt)) or hi - lo <= REL_TOL * max(1.0, abs(lo)):
            return nxt
        v = nxt
    return v


def _gap(h: float, xi: float, v: float) -> float:
    """``Y - 2`` from its logarithm, polished when the gap is large.

    For large gaps exp(v) inherits the absolute rounding of ln(xi), so the
    gap is refined with u = xi * (1 + 1/u)**(1 - h), a contraction with
    factor about (h - 1)/(1 + u) that involves no logarithm of xi.
    """
    u = math.exp(v)
    if v > 1.0:
        for _ in range(8):
            nxt = xi * math.exp((1.0 - h) * math.log1p(1.0 / u))
            if nxt == u:
                break
            u = nxt
    return u


def solve_Y(h, xi) -> float:
    """Unique root ``Y >= 2`` of ``xi = (Y-1)**(h-1) * (Y-2)**(2-h)``."""
    return solve_point(h, xi).Y


def occupation(h, xi) -> float:
    return solve_point(h, xi).n


@dataclass(frozen=True)
class FractonPoint:
    h: float
    xi: float
    Y: float
    n: float
    log_gap: float
    residual: float


def solve_point(h, xi) -> FractonPoint:
    h_f, xi_f = _check(h, xi)
    v = solve_log_gap(h_f, xi_f)
    gap = _gap(h_f, xi_f, v)
    res = 0.0 if xi_f == 0.0 else log_residual(h_f, xi_f, v)
    # Y - h taken as gap + (2 - h) to keep precision when Y is close to 2
    return FractonPoint(h_f, xi_f, 2.0 + gap, 1.0 / (gap + (2.0 - h_f)), v, res)


_ANALYTIC = (Fraction(1), Fraction(3, 2), Fraction(2))


def _analytic_label(h) -> Fraction:
    label = Fraction(h)  # exact for floats too, so 1.5 -> 3/2
    if label not in _ANALYTIC:
        raise NoClosedForm(f"no closed form implemented for h = {h}")
    return label


def closed_form_Y(h, xi):
    """Analytic roots for h in {1, 3/2, 2}.

    Exact (``Fraction``) for h = 1 and h = 2 when ``xi`` is rational.
    """
    label = _analytic_label(h)
    if xi < 0:
        raise InvalidParameter(f"xi must be >= 0, got {xi}")
    if label == 1:
        return xi + 2
    if label == 2:
        if xi <= 1:
            raise CondensationRegion(f"h = 2 requires xi > 1, got {xi}")
        return xi + 1
    xi = float(xi)
    return (3.0 + math.sqrt(1.0 + 4.0 * xi * xi)) / 2.0


def closed_form_occupation(h, xi):
    """Fermi-Dirac (h=1), Bose-Einstein (h=2) and the quadratic h=3/2 case."""
    Y = closed_form_Y(h, xi)
    label = _analytic_label(h)
    if label == 1:
        return 1 / (xi + 1)
    if label == 2:
        return 1 / (xi - 1)
    return 1.0 / (Y - 1.5)


def max_occupation(h) -> float:
    """Occupation at Y = 2, i.e. at xi = 0."""
    h = float(h)
    if not 1.0 <= h <= 2.0:
        raise InvalidLabel(f"h must lie in [1, 2], got {h}")
    if h == 2.0:
        raise Unbounded("Bose occupation has no upper bound")
    return 1.0 / (2.0 - h)
