"""Independent reference computations used only by the tests."""

from fractions import Fraction
from math import gcd

import mpmath


def brute_farey(n):
    """All reduced p/q in [0, 1] with q <= n, sorted."""
    return sorted({Fraction(p, q) for q in range(1, n + 1) for p in range(q + 1) if gcd(p, q) == 1})


def totient(k):
    return sum(1 for j in range(1, k + 1) if gcd(j, k) == 1)


def farey_length(n):
    return 1 + sum(totient(k) for k in range(1, n + 1))


def brute_h(nu):
    """1 + distance to the nearest odd integer, by scanning odd integers."""
    best = min(abs(nu - o) for o in range(1, 2 * (int(nu) + 2), 2))
    return 1 + best


def brute_class(h, bound):
    """Every nu in [0, bound] with denominator dividing h's, whose label is h."""
    q = h.denominator
    return [Fraction(p, q) for p in range(0, bound * q + 1) if brute_h(Fraction(p, q)) == h]


def mp_solve_Y(h, xi, dps=50):
    """Root of the unlogged equation by bisection in high precision."""
    with mpmath.workdps(dps):
        h, xi = mpmath.mpf(h), mpmath.mpf(xi)

        def f(Y):
            return (Y - 1) ** (h - 1) * (Y - 2) ** (2 - h) - xi

        lo, hi = mpmath.mpf(2), mpmath.mpf(3) + xi
        for _ in range(400):
            mid = (lo + hi) / 2
            if f(mid) > 0:
                hi = mid
            else:
                lo = mid
        return (lo + hi) / 2


def fermi_entropy(n):
    return -n * mpmath.log(n) - (1 - n) * mpmath.log(1 - n) if 0 < n < 1 else mpmath.mpf(0)


def bose_entropy(n):
    return (1 + n) * mpmath.log(1 + n) - n * mpmath.log(n)
