"""Desk-scale model of the complexified Bohr-Sommerfeld locus.

A point (b, s) sits on the level-u locus when k*b + u*s is an integer m (the
branch).  At u = 0 the locus collapses to the k real fiber points b = j/k;
for u != 0 the tracer samples the one-dimensional slice with s real in a
window, scanning b over a grid and refining s by bisection on the residual
|k*b + u*s - m|.  The order-k deck translation b -> b + 1/k (mod 1),
m -> m + 1 (adjusted on wraparound) permutes every level set.

b coordinates are kept as exact fractions wherever the model produces them,
so translation orbits close exactly; the residual functions accept any real b.
"""

from __future__ import annotations

import math
import sys
import warnings
from dataclasses import dataclass
from fractions import Fraction

_MAX_BISECTIONS = 200


class NoConvergence(UserWarning):
    """Bisection budget exhausted with the bracket still open; candidate skipped."""


@dataclass(frozen=True)
class SupercyclePoint:
    """One sample of the locus: position b, complex parameter s, level u, branch m."""

    b: Fraction | float
    s: complex
    u: complex
    m: int

    def __post_init__(self):
        object.__setattr__(self, "s", complex(self.s))
        object.__setattr__(self, "u", complex(self.u))
        if not 0 <= self.b < 1:
            raise ValueError(f"b must lie in [0, 1), got {self.b}")
        if not isinstance(self.m, int):
            raise ValueError(f"branch m must be an integer, got {self.m!r}")


@dataclass(frozen=True)
class UCurveSlice:
    u: complex
    points: tuple[SupercyclePoint, ...]

    def __post_init__(self):
        object.__setattr__(self, "u", complex(self.u))
        object.__setattr__(self, "points", tuple(self.points))
        if any(p.u != self.u for p in self.points):
            raise ValueError("all points of a slice must share its u")


def _check_level(k):
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"level must be an integer >= 1, got {k!r}")


def complex_bs_residual(k: int, b, s: complex, u: complex) -> float:
    """Distance from k*b + u*s to the nearest integer branch."""
    _check_level(k)
    zeta = k * float(b) + complex(u) * complex(s)
    return math.hypot(zeta.real - round(zeta.real), zeta.imag)


def branch_residual(point: SupercyclePoint, k: int) -> float:
    """Distance from k*b + u*s to the point's own branch m."""
    _check_level(k)
    zeta = k * float(point.b) + point.u * point.s - point.m
    return abs(zeta)


def zero_level_fiber(k: int) -> UCurveSlice:
    """The u = 0 locus: exactly the k points b = j/k with s = 0, branch j."""
    _check_level(k)
    points = tuple(
        SupercyclePoint(b=Fraction(j, k), s=0j, u=0j, m=j) for j in range(k)
    )
    return UCurveSlice(u=0j, points=points)


def _minimize_residual(c: float, u: complex, lo: float, hi: float, tol: float):
    """Minimize |c + u*s| over real s in [lo, hi] by bisection.

    |c + u*s|^2 is a convex quadratic, so bisection runs on the sign of its
    derivative.  Returns (s, residual, on_locus, stalled).
    """
    def resid(s):
        return math.hypot(c + u.real * s, u.imag * s)

    def deriv(s):
        return (u.real * u.real + u.imag * u.imag) * s + c * u.real

    if deriv(lo) >= 0.0:
        r = resid(lo)
        return lo, r, r < tol, False
    if deriv(hi) <= 0.0:
        r = resid(hi)
        return hi, r, r < tol, False
    a, b = lo, hi
    exhausted = True
    for _ in range(_MAX_BISECTIONS):
        mid = 0.5 * (a + b)
        if resid(mid) < tol:
            return mid, resid(mid), True, False
        d = deriv(mid)
        if d > 0.0:
            b = mid
        elif d < 0.0:
            a = mid
        else:
            exhausted = False
            break
        if b - a <= 4.0 * sys.float_info.epsilon * max(1.0, abs(a), abs(b)):
            # bracket at machine resolution, nothing left to split
            exhausted = False
            break
    mid = 0.5 * (a + b)
    r = resid(mid)
    return mid, r, r < tol, exhausted and r >= tol


def trace_slice(k: int, u: complex, s_window: tuple[float, float], grid: int, tol: float) -> UCurveSlice:
    """Sample the level-u locus over b in [0,1) with s real in s_window.

    For every integer branch m reachable in the window, each of the `grid`
    values b = i/grid is refined in s until |k*b + u*s - m| < tol; candidates
    whose best residual stays at or above tol are off the locus and dropped.
    A NoConvergence warning (not an error) flags any candidate whose
    refinement stalls.  Points closer than 10*tol in both coordinates are
    deduplicated, keeping smaller b, then smaller |s|; output is sorted by
    (m, b).
    """
    _check_level(k)
    u = complex(u)
    if u == 0:
        raise ValueError("u must be nonzero; the u = 0 fiber is zero_level_fiber(k)")
    lo, hi = float(s_window[0]), float(s_window[1])
    if not lo < hi:
        raise ValueError(f"s_window must be an increasing interval, got ({lo}, {hi})")
    if not isinstance(grid, int) or grid < 2:
        raise ValueError(f"grid must be an integer >= 2, got {grid!r}")
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")

    corners = [k * bb + u.real * s for bb in (0.0, 1.0) for s in (lo, hi)]
    candidates = []
    for m in range(math.ceil(min(corners)), math.floor(max(corners)) + 1):
        for i in range(grid):
            b = Fraction(i, grid)
            c = k * float(b) - m
            s, r, on_locus, stalled = _minimize_residual(c, u, lo, hi, tol)
            if on_locus:
                candidates.append(SupercyclePoint(b=b, s=complex(s, 0.0), u=u, m=m))
            elif stalled:
                warnings.warn(
                    NoConvergence(f"refinement stalled at b={b}, m={m}, residual {r}")
                )

    # dedup at 10*tol in both coordinates, preferring smaller b then smaller |s|
    candidates.sort(key=lambda p: (float(p.b), abs(p.s), p.m))
    kept: list[SupercyclePoint] = []
    for p in candidates:
        duplicate = False
        for q in reversed(kept):
            if float(p.b) - float(q.b) >= 10.0 * tol:
                break
            if abs(p.s - q.s) < 10.0 * tol:
                duplicate = True
                break
        if not duplicate:
            kept.append(p)
    kept.sort(key=lambda p: (p.m, float(p.b), abs(p.s)))
    return UCurveSlice(u=u, points=tuple(kept))


def deck_translate(point: SupercyclePoint, k: int) -> SupercyclePoint:
    """Order-k symmetry b -> b + 1/k (mod 1), m -> m + 1, minus k on wraparound."""
    _check_level(k)
    if isinstance(point.b, Fraction):
        b = point.b + Fraction(1, k)
        if b >= 1:
            return SupercyclePoint(b=b - 1, s=point.s, u=point.u, m=point.m + 1 - k)
    else:
        b = point.b + 1.0 / k
        if b >= 1.0:
            return SupercyclePoint(b=b - 1.0, s=point.s, u=point.u, m=point.m + 1 - k)
    return SupercyclePoint(b=b, s=point.s, u=point.u, m=point.m + 1)
