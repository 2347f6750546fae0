import cmath
import math
import random

import numpy as np
import pytest

from bhkit.norms import sup_norm_disk_complex, sup_norm_disk_real
from bhkit.verify import (
    K_DEFAULT, SUITES, canonical_triple, case1_fn, certify_min_ge_one, k_minimizer, lemma_surrogate, omega1_fn,
    omega2_fn, phi2_fn, psi1_fn, run_lemma_battery, solve_k, surrogate_candidates, surrogate_factor,
)


def l43(t):
    return sum(abs(v) ** (4 / 3) for v in t) ** 0.75


def test_domains_enforced():
    with pytest.raises(ValueError):
        case1_fn(0.2, 0.5)
    with pytest.raises(ValueError):
        phi2_fn(0.5, 0.2)
    with pytest.raises(ValueError):
        omega1_fn(0.0, 0.0)
    assert math.isfinite(psi1_fn(0.0, 0.0))


def test_known_values():
    assert case1_fn(1.0, 1.0) == pytest.approx(1.0, abs=1e-14)
    assert case1_fn(0.5, 0.5) == pytest.approx(1.5, abs=1e-12)
    assert omega1_fn(1.0, 1.0) == pytest.approx(1.0, abs=1e-14)
    # tight along the whole diagonal
    assert omega1_fn(0.3, 0.3) == pytest.approx(1.0, abs=1e-12)


def test_vectorized_matches_scalar():
    xs = np.array([0.1, 0.3, 0.7])
    ys = np.array([0.2, 0.5, 0.9])
    v = omega2_fn(xs, ys)
    assert np.allclose(v, [omega2_fn(float(a), float(b)) for a, b in zip(xs, ys)])


def test_k_choice():
    assert solve_k() == K_DEFAULT
    assert solve_k(3.0) == 3.0
    with pytest.raises(ValueError):
        solve_k(-1.0)
    assert k_minimizer() == pytest.approx(2 * math.sqrt(2), abs=1e-6)
    assert surrogate_factor(K_DEFAULT) < surrogate_factor(2.7) and surrogate_factor(K_DEFAULT) < surrogate_factor(3.0)


def test_battery_small_grid():
    reps = run_lemma_battery(128)
    assert [r.suite for r in reps] == list(SUITES)
    assert all(r.passed for r in reps)


def test_certify_detects_failure():
    rep = certify_min_ge_one((lambda x, y: 0.5 + 0 * x,), "upper-triangle", 64)
    assert not rep.passed


def test_certify_rejects_coarse_grid():
    with pytest.raises(ValueError):
        certify_min_ge_one((case1_fn,), "lower-triangle", 16)


def test_canonical_triple():
    a, b, c = canonical_triple(1j, 2 + 1j, -0.5)
    assert a >= c >= 0
    assert sup_norm_disk_complex(a, b, c).value == pytest.approx(sup_norm_disk_complex(1j, 2 + 1j, -0.5).value, rel=1e-8)


def test_surrogate_sample(rng):
    for _ in range(300):
        a, b, c = (complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(3))
        t = lemma_surrogate(a, b, c)
        assert l43(t) == pytest.approx(l43((a, b, c)), rel=1e-10)
        assert sup_norm_disk_real(*t).value <= sup_norm_disk_complex(a, b, c).value + 1e-7
