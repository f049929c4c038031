"""Divider (caliper) estimates of the dimension of planar curves.

A curve walked with calipers of opening R measures a length L(R) that scales
as R**(1 - h); ``h`` is read off the slope of ln L against ln R. Generalised
Koch curves of prescribed dimension are provided as test inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DegenerateResolutions, InvalidParameter, ResolutionTooCoarse, TooManyPoints

__all__ = [
    "CurvePolyline",
    "DimensionEstimate",
    "KOCH_DIMENSION",
    "koch_ratio",
    "generate_koch",
    "straight_line",
    "caliper_length",
    "estimate_dimension",
    "default_resolutions",
]

KOCH_DIMENSION = math.log(4) / math.log(3)
MAX_LEVEL = 12
# vertices within this relative distance of the caliper circle count as on it
REACH_RTOL = 1e-9


@dataclass(frozen=True)
class CurvePolyline:
    points: np.ndarray
    generator: str = "custom"
    level: int | None = None
    ratio: float | None = None

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 2:
            raise InvalidParameter("a curve needs at least two planar points")
        if np.any(np.all(np.diff(pts, axis=0) == 0.0, axis=1)):
            raise InvalidParameter("consecutive points must be distinct")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def extent(self) -> float:
        """Largest distance from the start point, i.e. the widest usable caliper."""
        return float(np.max(np.hypot(*(self.points - self.points[0]).T)))

    def scaled(self, factor: float) -> CurvePolyline:
        return CurvePolyline(self.points * factor, self.generator, self.level, self.ratio)


@dataclass(frozen=True)
class DimensionEstimate:
    h: float
    stderr: float
    samples: list[tuple[float, float]] = field(default_factory=list)


def koch_ratio(dimension: float) -> float:
    """Scale ratio r of a four-piece generator with similarity dimension d: 4 r**d = 1."""
    return 4.0 ** (-1.0 / dimension)


def straight_line(length: float = 1.0, points: int = 2) -> CurvePolyline:
    x = np.linspace(0.0, length, points)
    return CurvePolyline(np.column_stack([x, np.zeros_like(x)]), "line", 0)


def generate_koch(level: int, dimension: float = KOCH_DIMENSION) -> CurvePolyline:
    """Koch-type curve on the unit segment.

    Each segment is replaced by four copies scaled by ``koch_ratio(dimension)``;
    the middle two are tilted by +/- theta with cos(theta) = (1 - 2r) / 2r so
    the pieces still span the original segment.
    """
    if level < 0:
        raise InvalidParameter(f"level must be >= 0, got {level}")
    if level > MAX_LEVEL:
        raise TooManyPoints(f"level {level} would need {4 ** level + 1} points (max level {MAX_LEVEL})")
    if not 1.0 < dimension < 2.0:
        raise InvalidParameter(f"dimension must lie in (1, 2), got {dimension}")
    r = koch_ratio(dimension)
    theta = math.acos((1.0 - 2.0 * r) / (2.0 * r))
    # generator vertices as complex numbers on [0, 1]
    g = np.array([0.0, r, r + r * np.exp(1j * theta), 1.0 - r, 1.0], dtype=complex)

    z = np.array([0.0, 1.0], dtype=complex)
    for _ in range(level):
        a, d = z[:-1, None], (z[1:] - z[:-1])[:, None]
        z = np.append((a + d * g[None, :-1]).ravel(), z[-1])
    return CurvePolyline(np.column_stack([z.real, z.imag]), "koch", level, r)


def caliper_length(curve: CurvePolyline, R: float) -> tuple[float, int]:
    """Walk the curve with calipers of opening ``R``.

    From the current position, the next position is the first point further
    along the polyline at distance exactly ``R``. Returns ``steps * R`` plus
    the straight remainder to the end point, and the number of steps.
    """
    if not R > 0:
        raise InvalidParameter(f"resolution must be positive, got {R}")
    if R > curve.extent():
        raise ResolutionTooCoarse(f"R = {R} exceeds curve extent {curve.extent()}")
    pts = curve.points.tolist()
    npts = len(pts)
    R2 = R * R
    reach2 = R2 * (1.0 - REACH_RTOL) ** 2
    px, py = pts[0]
    i = 0  # position lies on segment pts[i] -> pts[i+1]
    steps = 0
    while True:
        j = i + 1
        while j < npts and (pts[j][0] - px) ** 2 + (pts[j][1] - py) ** 2 < reach2:
            j += 1
        if j == npts:
            break
        ax, ay = (px, py) if j - 1 == i else pts[j - 1]
        bx, by = pts[j]
        dx, dy = bx - ax, by - ay
        ex, ey = ax - px, ay - py
        A = dx * dx + dy * dy
        B = 2.0 * (ex * dx + ey * dy)
        C = ex * ex + ey * ey - R2
        t = (-B + math.sqrt(max(B * B - 4.0 * A * C, 0.0))) / (2.0 * A)
        t = min(max(t, 0.0), 1.0)
        px, py = ax + t * dx, ay + t * dy
        i = j - 1
        steps += 1
    ex, ey = pts[-1]
    return steps * R + math.hypot(ex - px, ey - py), steps


def default_resolutions(curve: CurvePolyline, count: int = 6) -> list[float]:
    """Geometric grid matched to the generator ratio.

    Kept two generations above the finest segment where possible, but always
    long enough to span one decade.
    """
    ratio = curve.ratio if curve.ratio is not None else 1.0 / 3.0
    decade = math.ceil(math.log(10.0) / -math.log(ratio)) + 1
    if curve.level is not None and curve.level > 0:
        count = min(count, curve.level - 2)
    count = max(count, decade, 3)
    return [ratio**k for k in range(1, count + 1)]


def estimate_dimension(curve: CurvePolyline, resolutions: Sequence[float] | None = None) -> DimensionEstimate:
    """Least-squares fit of ln L against ln R; ``h = 1 - slope``."""
    if resolutions is None:
        resolutions = default_resolutions(curve)
    Rs = sorted(float(R) for R in resolutions)
    if len(Rs) < 3 or len(set(Rs)) < 3:
        raise DegenerateResolutions("need at least three distinct resolutions")
    if Rs[-1] < 10.0 * Rs[0]:
        raise DegenerateResolutions("resolutions must span at least one decade")

    samples = [(R, caliper_length(curve, R)[0]) for R in reversed(Rs)]
    x = np.log([R for R, _ in samples])
    y = np.log([L for _, L in samples])
    xm, ym = x.mean(), y.mean()
    sxx = float(np.sum((x - xm) ** 2))
    slope = float(np.sum((x - xm) * (y - ym))) / sxx
    resid = y - (ym + slope * (x - xm))
    dof = len(x) - 2
    stderr = math.sqrt(float(np.sum(resid**2)) / dof / sxx) if dof > 0 else 0.0
    return DimensionEstimate(1.0 - slope, stderr, samples)
