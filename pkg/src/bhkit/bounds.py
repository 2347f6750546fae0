"""Bohnenblust-Hille quotients and power-trick lower bounds.

For a degree-m polynomial P and n >= 1,

    D_{R, mn}(2) >= |coeffs(P^n)|_{2mn/(mn+1)} / ||P||^n,

and the per-degree root of that bound is what the asymptotic constant is
compared against.  Everything past n = 1 is accumulated in log space: the
coefficients of P^n and ||P||^n leave double range long before n = 300.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .catalog import IDS, catalog
from .norms import sup_norm_square
from .poly import HomPoly2, log_lp_norm, lp_norm, multiply, power

BASE_NORM_TOL = 1e-12


def critical_exponent(m: int) -> Fraction:
    if m < 1:
        raise ValueError(f"degree must be >= 1, got {m}")
    return Fraction(2 * m, m + 1)


@dataclass(frozen=True)
class QuotientReport:
    poly_id: Optional[str]
    degree: int
    p: Fraction
    coeff_norm: float
    sup_norm: float
    quotient: float
    mode: str


def bh_quotient(P: HomPoly2, poly_id: Optional[str] = None, tol: float = BASE_NORM_TOL) -> QuotientReport:
    if P.is_zero():
        raise ValueError("the zero polynomial has no BH quotient")
    p = critical_exponent(P.degree)
    num = lp_norm(P, p)
    den = sup_norm_square(P, tol).value
    return QuotientReport(poly_id, P.degree, p, num, den, num / den, P.mode)


def _log_sup(P: HomPoly2, log_sup: Optional[float]) -> float:
    if log_sup is None:
        return math.log(sup_norm_square(P, BASE_NORM_TOL).value)
    return log_sup


def log_bound_of_power(Pn: HomPoly2, n: int, m: int, log_sup: float) -> float:
    return log_lp_norm(Pn, critical_exponent(m * n)) - n * log_sup


def power_lower_bound(P: HomPoly2, n: int, log_sup: Optional[float] = None) -> tuple[float, float]:
    """(log of the lower bound on D_{R, mn}(2), its mn-th root)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if P.is_zero():
        raise ValueError("the zero polynomial has no power bound")
    m = P.degree
    log_bound = log_bound_of_power(power(P, n), n, m, _log_sup(P, log_sup))
    return log_bound, math.exp(log_bound / (m * n))


@dataclass(frozen=True)
class PowerRecord:
    n: int
    degree: int
    log_bound: float
    root: float


@dataclass
class PowerBoundSeries:
    base_id: Optional[str]
    base_degree: int
    log_sup_norm: float
    records: list = field(default_factory=list)

    @property
    def final(self) -> PowerRecord:
        return self.records[-1]

    def csv_rows(self):
        for r in self.records:
            yield (self.base_id or "", r.n, r.degree, r.root)


def hyper_series(
    P: HomPoly2,
    n_max: int,
    stride: int = 1,
    base_id: Optional[str] = None,
    log_sup: Optional[float] = None,
) -> PowerBoundSeries:
    """Power bounds at n = 1, 1 + stride, ... <= n_max, multiplying incrementally."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if stride < 1:
        raise ValueError(f"stride must be >= 1, got {stride}")
    m = P.degree
    ls = _log_sup(P, log_sup)
    series = PowerBoundSeries(base_id, m, ls)
    step = P if stride == 1 else power(P, stride)
    current, n = P, 1
    while n <= n_max:
        lb = log_bound_of_power(current, n, m, ls)
        series.records.append(PowerRecord(n, m * n, lb, math.exp(lb / (m * n))))
        n += stride
        if n <= n_max:
            current = multiply(current, step)
    return series


def threads() -> int:
    """Worker cap from BHKIT_THREADS (default 1)."""
    try:
        return max(1, int(os.environ.get("BHKIT_THREADS", "1")))
    except ValueError:
        return 1


@lru_cache(maxsize=None)
def catalog_log_sup(poly_id: str, mode: str = "exact") -> float:
    """log ||base||, memoized per catalog id and arithmetic mode."""
    P = catalog(poly_id).as_mode(mode).poly
    return math.log(sup_norm_square(P, BASE_NORM_TOL).value)


def catalog_series(ids=IDS, n_max: Optional[dict] = None, stride: int = 1, mode: str = "exact") -> list:
    """Series for several catalog bases; base norms are computed before fan-out."""
    ids = list(ids)
    for i in ids:
        catalog_log_sup(i, mode)

    def run(poly_id):
        e = catalog(poly_id).as_mode(mode)
        top = (n_max or {}).get(poly_id, e.power_n)
        return hyper_series(e.poly, top, stride, poly_id, catalog_log_sup(poly_id, mode))

    with ThreadPoolExecutor(max_workers=threads()) as pool:
        return list(pool.map(run, ids))


def best_known_bound(degree: int, ids=IDS, mode: str = "float") -> Optional[float]:
    """Largest per-degree root over catalog bases whose degree divides ``degree``.

    Returns None when no base reaches the degree.
    """
    best = None
    for poly_id in ids:
        e = catalog(poly_id).as_mode(mode)
        if degree % e.degree:
            continue
        _, root = power_lower_bound(e.poly, degree // e.degree, catalog_log_sup(poly_id, mode))
        if best is None or root > best:
            best = root
    return best
