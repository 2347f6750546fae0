"""Bivariate homogeneous polynomials and their coefficient norms.

A degree-m polynomial in (x, y) is stored densely as its m+1 coefficients in
descending powers of x: index k holds the coefficient of x^(m-k) y^k.
Coefficients are either all exact (``fractions.Fraction``) or all binary
floats; the ``exact`` flag travels with the polynomial so reports can state
which arithmetic produced a number.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

Scalar = Fraction | float


def to_scalar(value, exact: bool) -> Scalar:
    """Coerce ``value`` to the requested arithmetic.

    In exact mode floats are read through their shortest decimal repr, so a
    literal such as 0.19462 becomes 19462/100000 rather than the binary
    neighbour of that decimal.
    """
    if exact:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, Rational)):
            return Fraction(value)
        if isinstance(value, float):
            if not math.isfinite(value):
                raise ValueError(f"non-finite coefficient {value!r}")
            return Fraction(repr(value))
        if isinstance(value, (str, Decimal)):
            return Fraction(str(value))
        raise TypeError(f"cannot represent {value!r} exactly")
    out = float(value)
    if not math.isfinite(out):
        raise ValueError(f"non-finite coefficient {value!r}")
    return out


def _is_exact_literal(value) -> bool:
    return isinstance(value, (int, Rational, str, Decimal)) and not isinstance(value, bool)


@dataclass(frozen=True)
class HomPoly2:
    coeffs: tuple
    exact: bool = False

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("a homogeneous polynomial needs at least one coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def mode(self) -> str:
        return "exact" if self.exact else "float"

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __call__(self, x, y):
        m = self.degree
        return sum(c * x ** (m - k) * y**k for k, c in enumerate(self.coeffs))

    def scaled(self, c) -> "HomPoly2":
        c = to_scalar(c, self.exact)
        return HomPoly2(tuple(c * a for a in self.coeffs), self.exact)

    def to_float(self) -> "HomPoly2":
        if not self.exact:
            return self
        return HomPoly2(tuple(float(c) for c in self.coeffs), False)

    def to_exact(self) -> "HomPoly2":
        if self.exact:
            return self
        return HomPoly2(tuple(Fraction(c) for c in self.coeffs), True)

    def float_coeffs(self) -> list[float]:
        return [float(c) for c in self.coeffs]


def make_hom_poly(degree: int, coeffs: Sequence, mode: str | None = None) -> HomPoly2:
    """Validate and build a :class:`HomPoly2`.

    ``mode`` is ``"exact"``, ``"float"`` or None; None picks exact when every
    coefficient is an int, Fraction, Decimal or numeric string.
    """
    if degree < 0:
        raise ValueError(f"degree must be nonnegative, got {degree}")
    coeffs = list(coeffs)
    if len(coeffs) != degree + 1:
        raise ValueError(
            f"degree {degree} needs {degree + 1} coefficients, got {len(coeffs)}"
        )
    if mode is None:
        exact = all(_is_exact_literal(c) for c in coeffs)
    elif mode in ("exact", "float"):
        exact = mode == "exact"
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return HomPoly2(tuple(to_scalar(c, exact) for c in coeffs), exact)


def monomial(degree: int, k: int = 0, exact: bool = True) -> HomPoly2:
    """x^(degree-k) y^k."""
    one, zero = (Fraction(1), Fraction(0)) if exact else (1.0, 0.0)
    return HomPoly2(tuple(one if i == k else zero for i in range(degree + 1)), exact)


def _common_denominator(coeffs: Iterable[Fraction]) -> tuple[list[int], int]:
    coeffs = list(coeffs)
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _convolve_int(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _convolve_float(a: list[float], b: list[float]) -> list[float]:
    n = len(a) + len(b) - 1
    out = []
    for k in range(n):
        lo = max(0, k - len(b) + 1)
        hi = min(k, len(a) - 1)
        out.append(math.fsum(a[i] * b[k - i] for i in range(lo, hi + 1)))
    return out


def multiply(p: HomPoly2, q: HomPoly2) -> HomPoly2:
    """Coefficient convolution; exact when both factors are exact."""
    if p.exact and q.exact:
        pa, pd = _common_denominator(p.coeffs)
        qa, qd = _common_denominator(q.coeffs)
        den = pd * qd
        return HomPoly2(tuple(Fraction(v, den) for v in _convolve_int(pa, qa)), True)
    return HomPoly2(tuple(_convolve_float(p.float_coeffs(), q.float_coeffs())), False)


def power(p: HomPoly2, n: int) -> HomPoly2:
    if n < 1:
        raise ValueError(f"power needs n >= 1, got {n}")
    result = None
    base = p
    while True:
        if n & 1:
            result = base if result is None else multiply(result, base)
        n >>= 1
        if not n:
            return result
        base = multiply(base, base)


def _abs_log(c: Scalar) -> float:
    if isinstance(c, Fraction):
        return math.log(abs(c.numerator)) - math.log(c.denominator)
    return math.log(abs(c))


def _check_p(p) -> float:
    pf = float(p)
    if not pf > 0:
        raise ValueError(f"exponent p must be positive, got {p}")
    return pf


def log_lp_norm(p: HomPoly2, exponent) -> float:
    """log |P|_p via a log-sum-exp over the nonzero coefficients.

    Finite whenever P is nonzero, however large the coefficients or p.
    """
    pf = _check_p(exponent)
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite log-norm")
    terms = [pf * _abs_log(c) for c in p.coeffs if c != 0]
    top = max(terms)
    return (top + math.log(math.fsum(math.exp(t - top) for t in terms))) / pf


def lp_norm(p: HomPoly2, exponent) -> float:
    """(sum |a_k|^p)^(1/p) with compensated summation."""
    pf = _check_p(exponent)
    if p.is_zero():
        raise ValueError("lp_norm of the zero polynomial is excluded")
    try:
        total = math.fsum(abs(float(c)) ** pf for c in p.coeffs)
        out = total ** (1.0 / pf)
    except OverflowError:
        return math.exp(log_lp_norm(p, exponent))
    if not math.isfinite(out) or out == 0.0:
        return math.exp(log_lp_norm(p, exponent))
    return out


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial, ascending coefficients, trailing zeros trimmed.

    The zero polynomial has ``coeffs == ()`` and degree -1.
    """

    coeffs: tuple

    def __post_init__(self):
        cs = list(self.coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def exact(self) -> bool:
        return all(isinstance(c, (int, Fraction)) for c in self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def deriv(self) -> "UniPoly":
        return UniPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def to_exact(self) -> "UniPoly":
        return UniPoly(tuple(Fraction(c) for c in self.coeffs))

    def to_float(self) -> "UniPoly":
        return UniPoly(tuple(float(c) for c in self.coeffs))


def dehomogenize(p: HomPoly2, edge: str = "y") -> UniPoly:
    """Restrict P to an edge of the square.

    ``edge="y"`` sets y = 1 and returns P(x, 1); ``edge="x"`` sets x = 1 and
    returns P(1, y).
    """
    if edge == "y":
        return UniPoly(tuple(reversed(p.coeffs)))
    if edge == "x":
        return UniPoly(tuple(p.coeffs))
    raise ValueError(f"edge must be 'x' or 'y', got {edge!r}")
