"""Sup norms: interval, unit square, complex disk, and two closed-form families."""
from __future__ import annotations

import cmath
import math

import numpy as np

from .optimize import CertifiedMax, golden_section_max
from .poly import HomPoly2, UniPoly, dehomogenize
from .sturm import critical_points_with_radius

INTERVAL_TOL = 1e-10
DISK_TOL = 1e-8
DISK_MIN_SAMPLES = 4096
DISK_MAX_SAMPLES = 1 << 16

# lower end of the interior-maximum window for the P_{a,b} family
B1 = 3.0 / 7.0 * (
    3.0
    - 2.0 * 9.0 ** (1.0 / 3.0) / (-12.0 + 7.0 * math.sqrt(3.0)) ** (1.0 / 3.0)
    + 2.0 * (-36.0 + 21.0 * math.sqrt(3.0)) ** (1.0 / 3.0)
)
B_UPPER = 3.0 - 2.0 * math.sqrt(3.0)
LAMBDA_CRIT = -2.0 * math.sqrt(5.0) / 3.0


def sup_norm_interval(q: UniPoly, lo: float = -1.0, hi: float = 1.0, tol: float = INTERVAL_TOL) -> CertifiedMax:
    """max |q| on [lo, hi] over the endpoints and every critical point."""
    if not lo < hi:
        raise ValueError("need lo < hi")
    cands = [(float(lo), 0.0), (float(hi), 0.0)]
    cands += critical_points_with_radius(q, lo, hi, tol)
    best_x, best_r, best_v = cands[0][0], 0.0, -1.0
    for x, r in cands:
        v = abs(float(q(x)))
        if v > best_v:
            best_x, best_r, best_v = x, r, v
    return CertifiedMax(arg=best_x, value=best_v, radius=best_r, method="sturm-newton")


def sup_norm_square(p: HomPoly2, tol: float = INTERVAL_TOL) -> CertifiedMax:
    """||P|| on [-1, 1]^2.

    By homogeneity |P| peaks on the boundary, and P(x, -1) = ±P(-x, 1), so the
    two edges y = 1 and x = 1 cover the whole square.
    """
    if p.is_zero():
        raise ValueError("sup norm of the zero polynomial is excluded")
    on_y = sup_norm_interval(dehomogenize(p, "y"), -1.0, 1.0, tol)
    on_x = sup_norm_interval(dehomogenize(p, "x"), -1.0, 1.0, tol)
    if on_y.value >= on_x.value:
        return CertifiedMax((on_y.arg, 1.0), on_y.value, on_y.radius, on_y.method)
    return CertifiedMax((1.0, on_x.arg), on_x.value, on_x.radius, on_x.method)


def _canonical(a: complex, b: complex, c: complex):
    """Rotate z and w so that a, c >= 0; returns (|a|, b', |c|)."""
    a, b, c = complex(a), complex(b), complex(c)
    rot = cmath.exp(-0.5j * (cmath.phase(a) + cmath.phase(c)))
    return abs(a), b * rot, abs(c)


def sup_norm_disk_complex(a: complex, b: complex, c: complex, tol: float = DISK_TOL) -> CertifiedMax:
    """max |a l^2 + b l + c| over |l| <= 1.

    Works on the squared modulus on the circle,
    g(t) = a^2 + c^2 + |b|^2 + 2[ac cos 2t + (a+c) Re b cos t + (a-c) Im b sin t],
    after rotating a and c onto the nonnegative axis. The sample count follows
    the Lipschitz bound of g; every discrete local maximum is then refined
    by golden section.
    """
    ar, br, cr = _canonical(a, b, c)
    re, im = br.real, br.imag
    const = ar * ar + cr * cr + abs(br) ** 2
    c2, c1, s1 = 2.0 * ar * cr, 2.0 * (ar + cr) * re, 2.0 * (ar - cr) * im

    def g(t):
        return const + c2 * math.cos(2.0 * t) + c1 * math.cos(t) + s1 * math.sin(t)

    if const == 0.0:
        return CertifiedMax(arg=0.0, value=0.0, radius=0.0, method="grid-refine")
    lip = 2.0 * abs(c2) + abs(c1) + abs(s1)
    n = int(math.ceil(2.0 * math.pi * lip / (1e-2 * const)))
    n = min(max(n, DISK_MIN_SAMPLES), DISK_MAX_SAMPLES)
    h = 2.0 * math.pi / n
    ts = np.arange(n) * h
    vals = const + c2 * np.cos(2.0 * ts) + c1 * np.cos(ts) + s1 * np.sin(ts)
    peaks = np.flatnonzero((vals >= np.roll(vals, 1)) & (vals >= np.roll(vals, -1)))
    # a trig polynomial of degree 2 has at most two strict local maxima;
    # plateaus are capped to keep the refinement bounded
    if len(peaks) > 8:
        peaks = np.argsort(vals)[-8:]
    best_t, best_g, radius = 0.0, -math.inf, h
    for i in sorted(int(k) for k in peaks):
        t, gv, r = golden_section_max(g, ts[i] - h, ts[i] + h, tol)
        if gv > best_g:
            best_t, best_g, radius = t, gv, r
    best_t = math.remainder(best_t, 2.0 * math.pi)
    return CertifiedMax(arg=best_t, value=math.sqrt(max(best_g, 0.0)), radius=radius, method="grid-refine")


def sup_norm_disk_real(a: float, b: float, c: float, tol: float = DISK_TOL) -> CertifiedMax:
    return sup_norm_disk_complex(complex(a, 0.0), complex(b, 0.0), complex(c, 0.0), tol)


def closed_norm_Pab(a: float, b: float) -> float:
    """||a x^3 + b x^2 y + b x y^2 + a y^3|| on the square, in closed form."""
    if a != 0.0 and B1 < b / a < B_UPPER:
        r = b / a
        return abs(
            a
            - b * b / (3.0 * a)
            + 2.0 * b**3 / (27.0 * a * a)
            + (2.0 * a / 27.0) * (-3.0 * r + r * r) ** 1.5
        )
    return abs(2.0 * a + 2.0 * b)


def q_lambda_at_x0(lam: float) -> float:
    """q(x0) for q(x) = x^5 + lam x^3 + x, x0 its smaller critical point.

    Defined for lam <= -2 sqrt(5)/3.
    """
    s = math.sqrt(max(9.0 * lam * lam - 20.0, 0.0))
    x0 = math.sqrt((-3.0 * lam - s) / 10.0)
    return (-3.0 * lam * lam + 20.0 - lam * s) / 25.0 * x0


def closed_norm_Qlambda(lam: float) -> float:
    """||x^5 y + lam x^3 y^3 + x y^5|| on the square, in closed form."""
    edge = abs(2.0 + lam)
    # both branches are evaluated at the boundary; the max keeps it continuous
    if lam <= LAMBDA_CRIT * (1.0 - 1e-15):
        return max(edge, abs(q_lambda_at_x0(lam)))
    return edge
