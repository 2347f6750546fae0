"""Extreme points of two polynomial unit balls and the quotients built on them.

Real 2-homogeneous polynomials on the square: the non-monomial extreme points
are ``±(t x^2 - t y^2 ± 2 sqrt(t(1-t)) xy)`` with t in [1/2, 1].

Real-coefficient quadratics ``a z^2 + b zw + c w^2`` on the bidisk: the extreme
points are ``(s, sqrt(4|s||t|(1/(|s|+|t|)^2 - 1)), t)`` for (s, t) in G, where
G is the set {|s|+|t| < 1, |s+t| <= (s+t)^2} plus the four points ±(1,0),
±(0,1).  Inside the unit diamond the second condition forces s + t = 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .norms import closed_norm_Pab, closed_norm_Qlambda
from .poly import HomPoly2

ISOLATED_POINTS = ((1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0))


@dataclass(frozen=True)
class ComplexQuad:
    a: complex
    b: complex
    c: complex

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def __call__(self, z, w):
        return self.a * z * z + self.b * w * z + self.c * w * w


@dataclass(frozen=True)
class ExtremePoint:
    family: str
    params: tuple
    realized: object

    @classmethod
    def choi_kim(cls, t: float, sign: int = 1) -> "ExtremePoint":
        return cls("choi-kim", (t, sign), choi_kim_extreme(t, sign))

    @classmethod
    def aron_klimek(cls, s: float, t: float) -> "ExtremePoint":
        return cls("aron-klimek", (s, t), aron_klimek_extreme(s, t))


def choi_kim_extreme(t: float, sign: int = 1) -> HomPoly2:
    """t x^2 + sign 2 sqrt(t(1-t)) xy - t y^2, t in [1/2, 1]."""
    if not 0.5 <= t <= 1.0:
        raise ValueError(f"t must lie in [1/2, 1], got {t}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    t = float(t)
    return HomPoly2((t, sign * 2.0 * math.sqrt(t * (1.0 - t)), -t), exact=False)


def f_of_t(t: float) -> float:
    """l_{4/3} norm of the Choi-Kim coefficients as a function of t."""
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"t must lie in [0, 1], got {t}")
    mid = 2.0 * math.sqrt(t * (1.0 - t))
    return (2.0 * t ** (4.0 / 3.0) + mid ** (4.0 / 3.0)) ** 0.75


def in_G(s: float, t: float) -> bool:
    if (s, t) in ISOLATED_POINTS:
        return True
    return abs(s) + abs(t) < 1.0 and abs(s + t) <= (s + t) ** 2


def _radicand(s: float, t: float) -> float:
    if (s, t) in ISOLATED_POINTS:
        return 0.0
    total = abs(s) + abs(t)
    if total == 0.0:
        # limit along the segment t = -s, where the radicand is 1 - 4 s^2
        return 1.0
    prod = 4.0 * abs(s) * abs(t)
    return prod / (total * total) - prod


def aron_klimek_extreme(s: float, t: float) -> ComplexQuad:
    if not in_G(s, t):
        raise ValueError(f"({s}, {t}) is not in G")
    r = _radicand(s, t)
    if r < 0.0:
        raise ValueError(f"negative radicand at ({s}, {t})")
    return ComplexQuad(complex(s), complex(math.sqrt(r)), complex(t))


def phi(s: float, t: float) -> float:
    """l_{4/3} norm of the Aron-Klimek extreme point at (s, t)."""
    if not in_G(s, t):
        raise ValueError(f"({s}, {t}) is not in G")
    r = _radicand(s, t)
    return (abs(s) ** (4.0 / 3.0) + abs(t) ** (4.0 / 3.0) + r ** (2.0 / 3.0)) ** 0.75


def phi_on_segment(s: float) -> float:
    """Phi(s, -s) = (2|s|^{4/3} + (1 - 4s^2)^{2/3})^{3/4} for |s| < 1/2."""
    return (2.0 * abs(s) ** (4.0 / 3.0) + max(1.0 - 4.0 * s * s, 0.0) ** (2.0 / 3.0)) ** 0.75


def quotient_E(lam: float) -> float:
    """|(1, lam, lam, 1)|_{3/2} / ||P_{1,lam}||."""
    den = closed_norm_Pab(1.0, lam)
    if den == 0.0:
        raise ValueError(f"P_(1,{lam}) has zero norm")
    return (2.0 + 2.0 * abs(lam) ** 1.5) ** (2.0 / 3.0) / den


def quotient_F(lam: float) -> float:
    """|(0, 1, 0, lam, 0, 1, 0)|_{12/7} / ||Q_{1,lam}||."""
    den = closed_norm_Qlambda(lam)
    if den == 0.0:
        raise ValueError(f"Q_(1,{lam}) has zero norm")
    return (2.0 + abs(lam) ** (12.0 / 7.0)) ** (7.0 / 12.0) / den


def p_ab(a, b) -> HomPoly2:
    """a x^3 + b x^2 y + b x y^2 + a y^3."""
    return HomPoly2((float(a), float(b), float(b), float(a)))


def q_ab(a, b) -> HomPoly2:
    """a x^5 y + b x^3 y^3 + a x y^5."""
    return HomPoly2((0.0, float(a), 0.0, float(b), 0.0, float(a), 0.0))
