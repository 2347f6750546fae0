"""Fixed catalog of extremal candidates and the values reported for them.

Decimal coefficients are kept exact; bases built from algebraic constants
(t0, b1, lam0) are float.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Optional

from .extremals import choi_kim_extreme
from .norms import B1
from .poly import HomPoly2, make_hom_poly
from .sharp import T0_RADICAL, lambda_roots

IDS = ("P2", "P3", "P5", "P6", "P7", "P8", "P10")


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    degree: int
    poly: HomPoly2
    reported_norm: Optional[float] = None
    reported_quotient: Optional[float] = None
    power_n: Optional[int] = None
    reported_root: Optional[float] = None

    def as_mode(self, mode: str) -> "CatalogEntry":
        """Same entry with coefficients in the requested arithmetic, where possible."""
        if mode == "float":
            return replace(self, poly=self.poly.to_float())
        return self


def _p5() -> HomPoly2:
    a, b, c = "0.19462", "0.66008", "0.97833"
    return make_hom_poly(5, [a, "-" + b, "-" + c, c, b, "-" + a])


def _p7() -> HomPoly2:
    a, b, c, d = "0.05126", "0.22070", "0.50537", "0.71044"
    return make_hom_poly(7, ["-" + a, b, c, "-" + d, "-" + d, c, b, "-" + a])


def _p8() -> HomPoly2:
    a, b = "0.15258", "0.64697"
    return make_hom_poly(8, [0, "-" + a, 0, b, 0, "-" + b, 0, a, 0])


def _p10() -> HomPoly2:
    a, b = "0.0938", "-0.5938"
    return make_hom_poly(10, [0, a, 0, b, 0, 1, 0, b, 0, a, 0])


@lru_cache(maxsize=None)
def catalog(poly_id: str) -> CatalogEntry:
    if poly_id == "P2":
        return CatalogEntry("P2", 2, choi_kim_extreme(T0_RADICAL, 1), 1.0, 1.837373, 300, 1.36117)
    if poly_id == "P3":
        return CatalogEntry("P3", 3, HomPoly2((1.0, B1, B1, 1.0)), 1.33848, 2.5525, 200, 1.42234)
    if poly_id == "P5":
        return CatalogEntry("P5", 5, _p5(), 0.28617, 6.83591, 120, 1.54987)
    if poly_id == "P6":
        lam0 = lambda_roots()[0]
        return CatalogEntry("P6", 6, HomPoly2((0.0, 1.0, 0.0, lam0, 0.0, 1.0, 0.0)), None, 10.7809, 100, 1.58432)
    if poly_id == "P7":
        return CatalogEntry("P7", 7, _p7(), 0.07138, 19.96308, 86, 1.61725)
    if poly_id == "P8":
        return CatalogEntry("P8", 8, _p8(), 0.02985, 33.36323, 75, 1.64042)
    if poly_id == "P10":
        return CatalogEntry("P10", 10, _p10(), 0.01530, 90.35556, 60, 1.65171)
    raise KeyError(f"unknown catalog id {poly_id!r}; expected one of {', '.join(IDS)}")


def all_entries() -> list[CatalogEntry]:
    return [catalog(i) for i in IDS]


def manifest() -> list[dict]:
    """Machine-readable view of the catalog."""
    out = []
    for e in all_entries():
        out.append(
            {
                "id": e.id,
                "degree": e.degree,
                "mode": e.poly.mode,
                "coeffs": [str(c) if e.poly.exact else repr(c) for c in e.poly.coeffs],
                "reported_norm": e.reported_norm,
                "reported_quotient": e.reported_quotient,
                "power_n": e.power_n,
                "reported_root": e.reported_root,
            }
        )
    return out
