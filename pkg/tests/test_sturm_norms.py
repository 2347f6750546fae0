import math
import random

import numpy as np
import pytest

from bhkit.norms import (
    B1, LAMBDA_CRIT, closed_norm_Pab, closed_norm_Qlambda, sup_norm_disk_complex, sup_norm_disk_real,
    sup_norm_interval, sup_norm_square,
)
from bhkit.extremals import p_ab, q_ab
from bhkit.poly import HomPoly2, UniPoly, make_hom_poly
from bhkit.sturm import critical_points, isolate_roots, sturm_chain


def test_sturm_counts_chebyshev_roots():
    T5 = UniPoly((0, 5, 0, -20, 0, 16))
    assert sturm_chain(T5).count(-1.0, 1.0) == 5
    roots = sorted(r for r, _ in isolate_roots(T5, -1.0, 1.0, 1e-12))
    expected = sorted(math.cos((2 * k + 1) * math.pi / 10) for k in range(5))
    assert np.allclose(roots, expected, atol=1e-10)


def test_repeated_root_found():
    roots = isolate_roots(UniPoly((0, 0, 0, 1)), -1.0, 1.0, 1e-12)
    assert len(roots) == 1 and abs(roots[0][0]) < 1e-10


def test_critical_points_of_cubic():
    pts = critical_points(UniPoly((0, -3, 0, 1)), -2.0, 2.0)
    assert np.allclose(sorted(pts), [-1.0, 1.0], atol=1e-10)


def test_interval_norm_chebyshev():
    T4 = UniPoly((1, 0, -8, 0, 8))
    assert sup_norm_interval(T4).value == pytest.approx(1.0, abs=1e-12)


def test_square_norm_simple_cases():
    assert sup_norm_square(make_hom_poly(2, [1, 0, -1])).value == pytest.approx(1.0, abs=1e-12)
    assert sup_norm_square(make_hom_poly(1, [1, 1])).value == pytest.approx(2.0, abs=1e-12)
    with pytest.raises(ValueError):
        sup_norm_square(make_hom_poly(2, [0, 0, 0]))


def _boundary_oracle(P: HomPoly2, n=100_000):
    t = np.linspace(-1.0, 1.0, n)
    cs = np.array(P.float_coeffs())
    m = P.degree
    # P(t, 1) and P(1, t)
    a = sum(c * t ** (m - k) for k, c in enumerate(cs))
    b = sum(c * t**k for k, c in enumerate(cs))
    return max(np.abs(a).max(), np.abs(b).max())


def test_square_norm_matches_dense_sampling(rng):
    for _ in range(40):
        m = rng.randint(1, 8)
        P = HomPoly2(tuple(rng.uniform(-1, 1) for _ in range(m + 1)))
        got = sup_norm_square(P).value
        oracle = _boundary_oracle(P)
        assert got >= oracle * (1 - 1e-12)
        assert got == pytest.approx(oracle, rel=1e-6)


def test_closed_Pab_matches_engine(rng):
    for _ in range(500):
        a, b = rng.uniform(-3, 3), rng.uniform(-3, 3)
        if abs(a) < 1e-3:
            continue
        assert closed_norm_Pab(a, b) == pytest.approx(sup_norm_square(p_ab(a, b)).value, abs=1e-8, rel=1e-8)


def test_closed_Qlambda_matches_engine(rng):
    for _ in range(500):
        lam = rng.uniform(-6, 3)
        assert closed_norm_Qlambda(lam) == pytest.approx(sup_norm_square(q_ab(1.0, lam)).value, abs=1e-8)


def test_closed_forms_at_branch_points():
    assert closed_norm_Pab(1.0, B1) == pytest.approx(sup_norm_square(p_ab(1.0, B1)).value, abs=1e-8)
    assert closed_norm_Qlambda(LAMBDA_CRIT) == pytest.approx(sup_norm_square(q_ab(1.0, LAMBDA_CRIT)).value, abs=1e-8)


def test_disk_norm_known_values():
    assert sup_norm_disk_real(1, 0, 0).value == pytest.approx(1.0, abs=1e-9)
    assert sup_norm_disk_real(1, 1, 1).value == pytest.approx(3.0, abs=1e-9)
    assert sup_norm_disk_real(1, 0, -1).value == pytest.approx(2.0, abs=1e-9)
    assert sup_norm_disk_complex(1j, 0, 1).value == pytest.approx(2.0, abs=1e-9)


def test_disk_norm_matches_dense_sampling(rng):
    th = np.linspace(0, 2 * np.pi, 200_001)
    z = np.exp(1j * th)
    for _ in range(30):
        a, b, c = (complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(3))
        oracle = np.abs(a * z * z + b * z + c).max()
        got = sup_norm_disk_complex(a, b, c).value
        assert got >= oracle * (1 - 1e-12)
        assert got == pytest.approx(oracle, rel=1e-8)
