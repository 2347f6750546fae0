"""Grid certification of the scalar inequalities behind the complex-to-real reduction.

For complex (a, b, c), the reduction picks a real triple (a', b', c') with the
same l_{4/3} norm and no larger bidisk sup norm.  Which triple works depends
on the ordering of a, c, |b|; each case reduces to ``max(f_1, ..., f_r) >= 1``
on a triangle of the unit square, which is what :func:`certify_min_ge_one`
checks on a grid.

The functions below accept scalars or numpy arrays.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .norms import sup_norm_disk_real
from .optimize import Bracket, maximize_1d

SQRT2 = math.sqrt(2.0)
K_DEFAULT = 2.0 * SQRT2
ORIGIN_EXCLUSION = 1e-9
PASS_SLACK = 1e-9
TIGHT_TOL = 1e-6


def _arr(x, y):
    return np.asarray(x, dtype=float), np.asarray(y, dtype=float)


def _out(v):
    return float(v) if np.ndim(v) == 0 else v


def _check(x, y, order: str, allow_origin: bool):
    x, y = _arr(x, y)
    lo, hi = (y, x) if order == "lower" else (x, y)
    if np.any(lo < 0) or np.any(lo > hi) or np.any(hi > 1):
        region = "0 <= y <= x <= 1" if order == "lower" else "0 <= x <= y <= 1"
        raise ValueError(f"outside {region}")
    if not allow_origin and np.any(np.hypot(x, y) < ORIGIN_EXCLUSION):
        raise ValueError("the origin is excluded")
    return x, y


def _two_term_den(x, y):
    return SQRT2 * (x ** (4.0 / 3.0) + y ** (4.0 / 3.0)) ** 1.5


def _three_term_factor(x, y, k):
    return (2.0 + k ** (4.0 / 3.0)) ** 1.5 / ((4.0 + k * k) * (x ** (4.0 / 3.0) + y ** (4.0 / 3.0) + 1.0) ** 1.5)


def case1_fn(x, y):
    """(x^2 + y^2 + 2x) / (sqrt2 (x^{4/3} + y^{4/3})^{3/2}) on 0 <= y <= x <= 1."""
    x, y = _check(x, y, "lower", False)
    return _out((x * x + y * y + 2.0 * x) / _two_term_den(x, y))


def phi1_fn(x, y):
    x, y = _check(x, y, "upper", False)
    return _out((x * x + y * y + SQRT2 * (1.0 - x) * y) / _two_term_den(x, y))


def psi1_fn(x, y, k: float = K_DEFAULT):
    x, y = _check(x, y, "upper", True)
    return _out((1.0 + x * x + y * y + 2.0 * y * x) * _three_term_factor(x, y, k))


def phi2_fn(x, y, k: float = K_DEFAULT):
    x, y = _check(x, y, "upper", True)
    return _out((1.0 + x * x + y * y + 2.0 * x * y) * _three_term_factor(x, y, k))


def psi2_fn(x, y, k: float = K_DEFAULT):
    # the closing parenthesis of the numerator is taken after sqrt2 (y - x)
    x, y = _check(x, y, "upper", True)
    return _out((1.0 + x * x + y * y + SQRT2 * (y - x)) * _three_term_factor(x, y, k))


def omega1_fn(x, y):
    x, y = _check(x, y, "upper", False)
    d = y - x
    return _out((x * x + y * y + 2.0 * x * y * (1.0 - 2.0 * d * d) + SQRT2 * d * d) / _two_term_den(x, y))


def omega2_fn(x, y):
    x, y = _check(x, y, "upper", False)
    d = y - x
    num = x * x + y * y + 2.0 * x * y * (1.0 - 2.0 * d * d) + SQRT2 * (y + x) * np.sqrt(1.0 - d * d)
    return _out(num / _two_term_den(x, y))


# functions with a vanishing denominator at the origin
_SINGULAR_AT_ORIGIN = {case1_fn, phi1_fn, omega1_fn, omega2_fn}
_USES_K = {psi1_fn, phi2_fn, psi2_fn}


def surrogate_factor(k: float) -> float:
    """(4 + k^2) / (2 + k^{4/3})^{3/2}: squared sup norm of (a', k a', -a') per unit l_{4/3} mass."""
    return (4.0 + k * k) / (2.0 + k ** (4.0 / 3.0)) ** 1.5


def solve_k(override: Optional[float] = None) -> float:
    """The k of the three-coefficient surrogate; 2 sqrt2 unless overridden.

    2 sqrt2 is where :func:`surrogate_factor` is smallest, see
    :func:`k_minimizer`.
    """
    if override is not None:
        if not override > 0:
            raise ValueError(f"k must be positive, got {override}")
        return float(override)
    return K_DEFAULT


def k_minimizer(tol: float = 1e-10) -> float:
    """Numerical argmin of surrogate_factor on [1, 5]."""
    return maximize_1d(lambda k: -surrogate_factor(k), Bracket(1.0, 5.0, tol)).arg


@dataclass(frozen=True)
class InequalityReport:
    suite: str
    region: str
    grid_n: int
    min_value: float
    argmin: tuple
    margin: float
    passed: bool
    tight: bool
    failure: Optional[str] = None


def _bind(fn, k):
    if fn in _USES_K:
        return lambda x, y: fn(x, y, k)
    return fn


def _suite_max(fns, k, X, Y, region):
    """max over fns at nodes; -inf where a node is excluded for every function."""
    X, Y = np.asarray(X, float), np.asarray(Y, float)
    inside = (Y <= X) if region == "lower-triangle" else (X <= Y)
    near_origin = np.hypot(X, Y) < ORIGIN_EXCLUSION
    out = np.full(X.shape, -np.inf)
    for fn in fns:
        ok = inside & ~(near_origin & (fn in _SINGULAR_AT_ORIGIN))
        if not ok.any():
            continue
        vals = np.full(X.shape, -np.inf)
        with np.errstate(all="ignore"):
            vals[ok] = _bind(fn, k)(X[ok], Y[ok])
        out = np.maximum(out, vals)
    return out


def certify_min_ge_one(
    fns: Sequence[Callable],
    region: str,
    grid_n: int = 1024,
    k: float = K_DEFAULT,
    suite: str = "",
) -> InequalityReport:
    """Check min over the triangle of max(fns) >= 1 on a (grid_n+1)^2 grid.

    An in-cell margin is estimated by 4x subsampling of the two cells around
    the minimizing node; the suite passes when min - margin >= 1 - 1e-9.
    """
    if grid_n < 64:
        raise ValueError("grid_n must be at least 64")
    if region not in ("lower-triangle", "upper-triangle"):
        raise ValueError(f"unknown region {region!r}")
    u = np.linspace(0.0, 1.0, grid_n + 1)
    X, Y = np.meshgrid(u, u, indexing="ij")
    H = _suite_max(fns, k, X, Y, region)
    inside = (Y <= X) if region == "lower-triangle" else (X <= Y)
    inside &= np.hypot(X, Y) >= ORIGIN_EXCLUSION
    bad = inside & ~np.isfinite(H)
    if bad.any():
        i, j = np.argwhere(bad)[0]
        where = f"non-finite value at ({X[i, j]:.6g}, {Y[i, j]:.6g})"
        return InequalityReport(suite, region, grid_n, math.nan, (X[i, j], Y[i, j]), math.nan, False, False, where)
    masked = np.where(inside, H, np.inf)
    i, j = np.unravel_index(int(np.argmin(masked)), masked.shape)
    x0, y0, hmin = float(X[i, j]), float(Y[i, j]), float(masked[i, j])

    h = 1.0 / grid_n
    sub = np.linspace(-h, h, 9)
    SX, SY = np.meshgrid(np.clip(x0 + sub, 0.0, 1.0), np.clip(y0 + sub, 0.0, 1.0), indexing="ij")
    Hs = _suite_max(fns, k, SX, SY, region)
    sub_inside = ((SY <= SX) if region == "lower-triangle" else (SX <= SY)) & (np.hypot(SX, SY) >= ORIGIN_EXCLUSION)
    sub_vals = Hs[sub_inside & np.isfinite(Hs)]
    margin = max(0.0, hmin - float(sub_vals.min())) if sub_vals.size else 0.0
    passed = hmin - margin >= 1.0 - PASS_SLACK
    tight = abs(hmin - 1.0) <= TIGHT_TOL
    return InequalityReport(suite, region, grid_n, hmin, (x0, y0), margin, passed, tight)


SUITES = {
    "case1": ((case1_fn,), "lower-triangle"),
    "case2": ((phi1_fn, psi1_fn), "upper-triangle"),
    "case3-im": ((phi2_fn, psi2_fn, omega1_fn), "upper-triangle"),
    "case3-re": ((phi2_fn, psi2_fn, omega2_fn), "upper-triangle"),
}


def run_lemma_battery(grid_n: int = 1024, k: float = K_DEFAULT) -> list[InequalityReport]:
    return [certify_min_ge_one(fns, region, grid_n, k, name) for name, (fns, region) in SUITES.items()]


def canonical_triple(a: complex, b: complex, c: complex):
    """Rotate and swap so that the triple becomes (a, b, c) with a >= c >= 0 real."""
    a, b, c = complex(a), complex(b), complex(c)
    b = b * cmath.exp(-0.5j * (cmath.phase(a) + cmath.phase(c)))
    a, c = abs(a), abs(c)
    if a < c:
        a, c = c, a
    return a, b, c


def surrogate_candidates(a: complex, b: complex, c: complex, k: float = K_DEFAULT) -> list[tuple]:
    """The real triples the reduction tries for the case (a, b, c) falls in."""
    a, b, c = canonical_triple(a, b, c)
    nb = abs(b)
    two = lambda u, v: (u ** (4.0 / 3.0) + v ** (4.0 / 3.0)) ** 0.75 / 2.0**0.75
    three = (a ** (4.0 / 3.0) + c ** (4.0 / 3.0) + nb ** (4.0 / 3.0)) ** 0.75 / (2.0 + k ** (4.0 / 3.0)) ** 0.75
    with_k = (three, k * three, -three)
    if c >= nb:
        return [(two(c, nb), a, -two(c, nb))]
    if a >= nb:
        return [(two(c, nb), a, -two(c, nb)), with_k]
    return [with_k, (two(a, c), nb, -two(a, c))]


def lemma_surrogate(a: complex, b: complex, c: complex, k: float = K_DEFAULT, tol: float = 1e-8) -> tuple:
    """The candidate real triple with the smallest bidisk sup norm."""
    cands = surrogate_candidates(a, b, c, k)
    return min(cands, key=lambda t: sup_norm_disk_real(*t, tol=tol).value)
