"""Solvers for the sharp constants in degrees 2, 3 and 6.

Every "by calculus" step is discharged numerically: grid localization plus
golden-section refinement, with stationarity residuals where a closed form is
available to compare against.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .extremals import ISOLATED_POINTS, f_of_t, phi, phi_on_segment, quotient_E, quotient_F
from .norms import B1, LAMBDA_CRIT, closed_norm_Qlambda, q_lambda_at_x0
from .optimize import Bracket, CertifiedMax, find_root_scalar, maximize_1d, sign_changes

SQRT129 = math.sqrt(129.0)
_CUBE_A = (107.0 + 9.0 * SQRT129) ** (1.0 / 3.0)
_CUBE_B = (107.0 - 9.0 * SQRT129) ** (1.0 / 3.0)
_CUBE_C = (856.0 - 72.0 * SQRT129) ** (1.0 / 3.0)

T0_RADICAL = (2.0 * _CUBE_A + _CUBE_C + 16.0) / 36.0


def f_t0_radical() -> float:
    """The nested radical closed form of max f, evaluated as printed."""
    inner = -2.0 * _CUBE_A + _CUBE_A**2 - 2.0 * _CUBE_B + _CUBE_B**2 - 60.0
    first = (2.0 * _CUBE_A + _CUBE_C + 16.0) ** (4.0 / 3.0) / (18.0 * 6.0 ** (2.0 / 3.0))
    second = 1.0 / (9.0 * (-3.0 / inner) ** (2.0 / 3.0))
    return (first + second) ** 0.75


def maximize_f(tol: float = 1e-10, grid: int = 1024) -> CertifiedMax:
    return maximize_1d(f_of_t, Bracket(0.5, 1.0, tol), grid)


@dataclass
class IdentityCheck:
    name: str
    computed: float
    reference: float
    tol: float

    @property
    def diff(self) -> float:
        return abs(self.computed - self.reference)

    @property
    def passed(self) -> bool:
        return self.diff <= self.tol


@dataclass
class T0Report:
    t0_numeric: float
    f_max: float
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def check_exact_t0(tol: float = 1e-10, grid: int = 1024) -> T0Report:
    """Compare the printed radical forms of t0 and f(t0) with the optimizer."""
    best = maximize_f(tol, grid)
    h = 1e-5
    slope = (f_of_t(T0_RADICAL + h) - f_of_t(T0_RADICAL - h)) / (2.0 * h)
    report = T0Report(t0_numeric=best.arg, f_max=best.value)
    report.checks = [
        IdentityCheck("t0 radical vs argmax f", T0_RADICAL, best.arg, 1e-6),
        IdentityCheck("f'(t0 radical)", slope, 0.0, 1e-6),
        IdentityCheck("f(t0) radical vs max f", f_t0_radical(), best.value, 1e-10),
        IdentityCheck("f(t0 radical) vs f(t0) radical", f_of_t(T0_RADICAL), f_t0_radical(), 1e-12),
    ]
    return report


def maximize_quotient_E(tol: float = 1e-10, grid: int = 1024) -> CertifiedMax:
    return maximize_1d(quotient_E, Bracket(-3.0, 0.0, tol), grid)


def d_r3_closed_form() -> float:
    return (2.0 + 2.0 * abs(B1) ** 1.5) ** (2.0 / 3.0) / (2.0 * abs(1.0 + B1))


def lambda_gap(lam: float) -> float:
    """|2 + lam| - |q(x0)|; its zeros are where the edge value meets the interior one."""
    return abs(2.0 + lam) - abs(q_lambda_at_x0(lam))


class ConsistencyError(RuntimeError):
    pass


def solve_lambda_roots(lo: float = -6.0, hi: float = LAMBDA_CRIT, samples: int = 10_000, tol: float = 1e-12):
    """The two roots lam0 < lam1 of lambda_gap on [lo, -2 sqrt(5)/3]."""
    cells = sign_changes(lambda_gap, lo, hi, samples)
    if len(cells) != 2:
        raise ConsistencyError(f"expected two sign changes of the gap, found {len(cells)}")
    roots = []
    for a, b in cells:
        roots.append(a if a == b else find_root_scalar(lambda_gap, Bracket(a, b, tol)))
    return roots[0], roots[1]


@lru_cache(maxsize=None)
def lambda_roots() -> tuple:
    return solve_lambda_roots()


def maximize_quotient_F(tol: float = 1e-10, grid: int = 1024) -> CertifiedMax:
    return maximize_1d(quotient_F, Bracket(-4.0, 0.0, tol), grid)


def d_r6_closed_form() -> float:
    lam0 = lambda_roots()[0]
    return (2.0 + abs(lam0) ** (12.0 / 7.0)) ** (7.0 / 12.0) / abs(2.0 + lam0)


def maximize_phi_on_G(tol: float = 1e-12, grid: int = 1024) -> CertifiedMax:
    """Max of Phi over G: the segment t = -s, 0 < s < 1/2, plus the isolated points."""
    seg = maximize_1d(phi_on_segment, Bracket(0.0, 0.5, tol), grid)
    best = CertifiedMax(arg=(seg.arg, -seg.arg), value=seg.value, radius=seg.radius, method=seg.method)
    for s, t in ISOLATED_POINTS:
        v = phi(s, t)
        if v > best.value:
            best = CertifiedMax(arg=(s, t), value=v, radius=0.0, method="closed-form")
    return best


def check_lambda_roots(roots=None) -> list:
    """closed_norm_Qlambda(lam_i) must equal |2 + lam_i| at both roots."""
    roots = roots or lambda_roots()
    return [IdentityCheck(f"||Q|| at lambda={r:.6f}", closed_norm_Qlambda(r), abs(2.0 + r), 1e-9) for r in roots]
