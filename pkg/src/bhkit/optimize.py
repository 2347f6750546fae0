"""Deterministic one-dimensional maximization and scalar root finding."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0

DEFAULT_GRID = 1024
DEFAULT_TOL = 1e-10


class EvaluationError(ValueError):
    """An objective returned a non-finite value."""


class BracketError(ValueError):
    """A root bracket has no sign change."""


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"bracket needs lo < hi, got [{self.lo}, {self.hi}]")
        if not self.tol > 0:
            raise ValueError(f"tolerance must be positive, got {self.tol}")


@dataclass(frozen=True)
class CertifiedMax:
    """Result of a maximization.

    ``radius`` is the half-width of the final bracket around ``arg``;
    ``method`` is one of ``sturm-newton``, ``grid-refine``, ``closed-form``.
    """

    arg: object
    value: float
    radius: float
    method: str


def _finite(f, x):
    y = f(x)
    if not math.isfinite(y):
        raise EvaluationError(f"objective is not finite at {x!r}: {y!r}")
    return y


def golden_section_max(f: Callable[[float], float], lo: float, hi: float, tol: float):
    """Golden-section search for a maximum of a unimodal f on [lo, hi].

    Returns (x, f(x), radius) where the maximizer is bracketed to
    [x - radius, x + radius].
    """
    a, b = lo, hi
    c = a + INV_PHI2 * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = _finite(f, c), _finite(f, d)
    while (b - a) > 2.0 * tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = a + INV_PHI2 * (b - a)
            fc = _finite(f, c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = _finite(f, d)
        if b - a <= 4.0 * math.ulp(max(abs(a), abs(b), 1.0)):
            break
    x, fx = (c, fc) if fc >= fd else (d, fd)
    for cand in (a, b):
        fv = _finite(f, cand)
        if fv > fx:
            x, fx = cand, fv
    return x, fx, max(x - a, b - x)


def maximize_1d(f: Callable[[float], float], bracket: Bracket, grid: int = DEFAULT_GRID) -> CertifiedMax:
    """Grid scan to localize the global maximum, then golden-section refinement.

    The grid has ``grid + 1`` equally spaced nodes including both ends, so the
    result is bit-reproducible for a given objective and configuration.
    """
    if grid < 2:
        raise ValueError("grid needs at least two cells")
    lo, hi = bracket.lo, bracket.hi
    h = (hi - lo) / grid
    xs = [lo + i * h for i in range(grid)] + [hi]
    ys = [_finite(f, x) for x in xs]
    i = max(range(len(ys)), key=ys.__getitem__)
    a = xs[max(i - 1, 0)]
    b = xs[min(i + 1, grid)]
    x, fx, radius = golden_section_max(f, a, b, bracket.tol)
    if ys[i] > fx:
        x, fx = xs[i], ys[i]
        radius = max(x - a, b - x)
    return CertifiedMax(arg=x, value=fx, radius=radius, method="grid-refine")


def find_root_scalar(g: Callable[[float], float], bracket: Bracket) -> float:
    """Bisection to ``bracket.tol`` followed by a guarded secant-Newton polish."""
    a, b = bracket.lo, bracket.hi
    ga, gb = _finite(g, a), _finite(g, b)
    if ga == 0.0:
        return a
    if gb == 0.0:
        return b
    if (ga > 0) == (gb > 0):
        raise BracketError(f"no sign change on [{a}, {b}]: g={ga!r}, {gb!r}")
    while b - a > bracket.tol:
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            break
        gm = _finite(g, mid)
        if gm == 0.0:
            return mid
        if (gm > 0) == (ga > 0):
            a, ga = mid, gm
        else:
            b, gb = mid, gm
    x = 0.5 * (a + b)
    gx = _finite(g, x)
    step = max(bracket.tol, 1e-7 * max(1.0, abs(x)))
    # one Newton step with a central-difference slope, kept only if it stays
    # inside the final bracket and reduces |g|
    lo_s, hi_s = x - step, x + step
    slope = (g(hi_s) - g(lo_s)) / (hi_s - lo_s)
    if slope != 0.0 and math.isfinite(slope):
        xn = x - gx / slope
        if a <= xn <= b:
            gn = g(xn)
            if math.isfinite(gn) and abs(gn) < abs(gx):
                return xn
    return x


def sign_changes(g: Callable[[float], float], lo: float, hi: float, samples: int):
    """Return the sub-intervals of an equispaced scan where g changes sign."""
    h = (hi - lo) / samples
    xs = [lo + i * h for i in range(samples)] + [hi]
    vals = [_finite(g, x) for x in xs]
    out = []
    for i in range(samples):
        if vals[i] == 0.0:
            out.append((xs[i], xs[i]))
        elif (vals[i] > 0) != (vals[i + 1] > 0) and vals[i + 1] != 0.0:
            out.append((xs[i], xs[i + 1]))
    if vals[-1] == 0.0:
        out.append((xs[-1], xs[-1]))
    return out
