"""Sturm chains and real-root isolation for univariate polynomials.

Chains are built in floating point first.  When a remainder collapses
relative to its dividend, or its leading coefficient is negligible, the chain
is rebuilt in rational arithmetic, where termination at the gcd is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import UniPoly

GUARD = 1e-12


class _Degenerate(Exception):
    pass


def _neg_rem(num: tuple, den: tuple) -> list:
    """-(num mod den), ascending coefficient lists."""
    r = list(num)
    dl = den[-1]
    dd = len(den) - 1
    while len(r) - 1 >= dd and r:
        q = r[-1] / dl
        shift = len(r) - 1 - dd
        for i, c in enumerate(den):
            r[shift + i] -= q * c
        r.pop()
    return [-c for c in r]


def _float_chain(p: UniPoly, guard: float) -> tuple:
    chain = [p.to_float(), p.deriv().to_float()]
    while chain[-1].degree > 0:
        prev, cur = chain[-2].coeffs, chain[-1].coeffs
        r = _neg_rem(prev, cur)
        scale = max(abs(c) for c in prev)
        size = max((abs(c) for c in r), default=0.0)
        if size <= guard * scale:
            raise _Degenerate
        if abs(r[-1]) <= guard * size:
            raise _Degenerate
        # positive rescaling leaves every sign variation unchanged
        chain.append(UniPoly(tuple(c / size for c in r)))
    return tuple(chain)


def _exact_chain(p: UniPoly) -> tuple:
    chain = [p.to_exact(), p.to_exact().deriv()]
    while chain[-1].degree > 0:
        r = UniPoly(tuple(_neg_rem(chain[-2].coeffs, chain[-1].coeffs)))
        if r.degree < 0:
            break
        chain.append(r)
    return tuple(chain)


def _sign(v) -> int:
    return (v > 0) - (v < 0)


@dataclass(frozen=True)
class SturmChain:
    polys: tuple
    exact: bool

    def variations(self, x) -> int:
        if self.exact:
            x = Fraction(x)
        count, last = 0, 0
        for p in self.polys:
            s = _sign(p(x))
            if s:
                if last and s != last:
                    count += 1
                last = s
        return count

    def count(self, lo, hi) -> int:
        """Number of distinct roots of the chain head in (lo, hi]."""
        return self.variations(lo) - self.variations(hi)


def sturm_chain(p: UniPoly, guard: float = GUARD) -> SturmChain:
    if p.degree < 1:
        raise ValueError("a Sturm chain needs a polynomial of degree >= 1")
    if not p.exact:
        try:
            return SturmChain(_float_chain(p, guard), exact=False)
        except _Degenerate:
            pass
    return SturmChain(_exact_chain(p), exact=True)


def _refine(chain: SturmChain, p: UniPoly, a: float, b: float, tol: float):
    """Shrink (a, b] holding exactly one distinct root to width <= tol."""
    pf = p.to_float()
    fa, fb = _sign(p(a)), _sign(p(b))
    if fb == 0:
        return b, 0.0
    straddle = fa != 0 and fa != fb
    while b - a > tol:
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            break
        if straddle:
            fm = _sign(p(mid))
            if fm == 0:
                return mid, 0.0
            if fm == fa:
                a = mid
            else:
                b = mid
        else:
            if _sign(p(mid)) == 0:
                return mid, 0.0
            if chain.count(a, mid) >= 1:
                b = mid
            else:
                a = mid
    x = 0.5 * (a + b)
    radius = 0.5 * (b - a)
    dp = pf.deriv()
    d = dp(x)
    if d != 0.0:
        xn = x - pf(x) / d
        if a <= xn <= b and abs(pf(xn)) <= abs(pf(x)):
            x = xn
            radius = max(x - a, b - x)
    return x, radius


def isolate_roots(p: UniPoly, lo: float, hi: float, tol: float = 1e-10):
    """All distinct real roots of p in [lo, hi] as (root, radius) pairs."""
    if not lo < hi:
        raise ValueError("need lo < hi")
    if p.degree < 1:
        return []
    chain = sturm_chain(p)
    found = []
    if _sign(p(lo)) == 0:
        found.append((float(lo), 0.0))
    stack = [(float(lo), float(hi), chain.count(lo, hi))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            found.append(_refine(chain, p, a, b, tol))
            continue
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b or b - a <= tol:
            # roots closer than float resolution; report the cluster once
            found.append((mid, 0.5 * (b - a)))
            continue
        left = chain.count(a, mid)
        stack.append((mid, b, n - left))
        stack.append((a, mid, left))
    found.sort()
    return found


def critical_points(q: UniPoly, lo: float, hi: float, tol: float = 1e-10) -> list[float]:
    """Roots of q' in [lo, hi], each bracketed to width <= tol."""
    return [x for x, _ in critical_points_with_radius(q, lo, hi, tol)]


def critical_points_with_radius(q: UniPoly, lo: float, hi: float, tol: float = 1e-10):
    dq = q.deriv()
    if dq.degree < 1:
        return []
    return isolate_roots(dq, lo, hi, tol)
