"""Fractal von Neumann entropy per state.

    S[h, n] = K * ( A ln(A/n) - B ln(B/n) ),  A = 1 + (h-1) n,  B = 1 + (h-2) n

At h = 1 this is the Fermi-Dirac entropy, at h = 2 the Bose-Einstein one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ExclusionViolation, InvalidLabel, InvalidOccupation, InvalidParameter
from .fracton import solve_point

__all__ = [
    "EntropyPoint",
    "entropy_per_state",
    "entropy_point",
    "entropy_from_xi",
    "entropy_slope",
    "equilibrium_consistency",
    "fermi_entropy",
    "bose_entropy",
]

FD_STEP = 1e-6


def _xlog_ratio(x: float, n: float) -> float:
    # x * ln(x / n), with the x -> 0 limit taken explicitly
    if x == 0.0:
        return 0.0
    return x * math.log(x / n)


def _check(h: float, n: float, K: float) -> None:
    if not 1.0 <= h <= 2.0:
        raise InvalidLabel(f"h must lie in [1, 2], got {h}")
    if K <= 0:
        raise InvalidParameter(f"K must be positive, got {K}")
    if not n > 0:
        raise InvalidOccupation(f"occupation must be positive, got {n}")
    if h < 2.0 and n > 1.0 / (2.0 - h):
        raise ExclusionViolation(f"n = {n} exceeds 1/(2-h) = {1.0 / (2.0 - h)} for h = {h}")


def entropy_per_state(h, n, K=1.0) -> float:
    h, n, K = float(h), float(n), float(K)
    _check(h, n, K)
    a = 1.0 + (h - 1.0) * n
    b = 1.0 + (h - 2.0) * n
    if b < 0.0:
        # only reachable through rounding at n == 1/(2-h)
        b = 0.0
    return K * (_xlog_ratio(a, n) - _xlog_ratio(b, n))


@dataclass(frozen=True)
class EntropyPoint:
    h: float
    n: float
    S: float
    K: float = 1.0


def entropy_point(h, n, K=1.0) -> EntropyPoint:
    return EntropyPoint(float(h), float(n), entropy_per_state(h, n, K), float(K))


def entropy_from_xi(h, xi, K=1.0) -> EntropyPoint:
    """Entropy at the equilibrium occupation for Boltzmann factor ``xi``."""
    return entropy_point(h, solve_point(h, xi).n, K)


def fermi_entropy(n: float) -> float:
    return -_xlog_ratio(n, 1.0) - _xlog_ratio(1.0 - n, 1.0)


def bose_entropy(n: float) -> float:
    return _xlog_ratio(1.0 + n, 1.0) - _xlog_ratio(n, 1.0)


def entropy_slope(h, n, K=1.0, step=FD_STEP) -> float:
    """Central finite difference of S with respect to n."""
    return (entropy_per_state(h, n + step, K) - entropy_per_state(h, n - step, K)) / (2.0 * step)


def equilibrium_consistency(h, xi, K=1.0, step=FD_STEP) -> float:
    """``|dS/dn - K ln xi|`` at the occupation solved for ``(h, xi)``.

    Vanishes when the distribution function maximises S at fixed Boltzmann
    weight. The stencil must fit inside the physical range of n.
    """
    xi = float(xi)
    if not xi > 0:
        raise InvalidParameter(f"xi must be positive, got {xi}")
    n = solve_point(h, xi).n
    return abs(entropy_slope(h, n, K, step) - float(K) * math.log(xi))
