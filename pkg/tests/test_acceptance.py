"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line."""
import cmath
import json
import math
import random
import subprocess
import sys
import time
from fractions import Fraction

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from bhkit.bounds import bh_quotient, catalog_log_sup, power_lower_bound
from bhkit.catalog import catalog
from bhkit.extremals import aron_klimek_extreme, choi_kim_extreme, p_ab, q_ab
from bhkit.norms import B1, closed_norm_Pab, closed_norm_Qlambda, sup_norm_disk_complex, sup_norm_disk_real, sup_norm_square
from bhkit.poly import HomPoly2, log_lp_norm, lp_norm, make_hom_poly, power
from bhkit.sharp import (
    T0_RADICAL, f_t0_radical, maximize_f, maximize_phi_on_G, maximize_quotient_E, maximize_quotient_F,
    solve_lambda_roots,
)
from bhkit.verify import K_DEFAULT, lemma_surrogate, omega1_fn, run_lemma_battery


class Gate:
    """Collects named checks for one criterion and reports a single line."""

    def __init__(self, label, budget_s):
        self.label, self.budget, self.fails = label, budget_s, []

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def check(self, name, ok, detail=""):
        if not ok:
            self.fails.append(f"{name} {detail}".strip())

    def close(self, computed, expected, tol, name):
        diff = abs(computed - expected)
        self.check(name, diff <= tol, f"computed={computed:.10g} expected={expected:.10g} diff={diff:.3g} tol={tol:g}")

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        self.check("runtime", elapsed < self.budget, f"{elapsed:.2f}s >= {self.budget}s")
        if exc_type is not None:
            self.fails.append(f"raised {exc_type.__name__}: {exc}")
        status = "PASS" if not self.fails else "FAIL"
        ACCEPTANCE_LINES.append(f"{status} {self.label} ({elapsed:.2f}s)" + ("" if not self.fails else ": " + "; ".join(self.fails)))
        print(ACCEPTANCE_LINES[-1])
        assert not self.fails, self.fails
        return False


def test_criterion_01_complex_degree2():
    with Gate("1 D_C2(2) = (3/2)^(1/4)", 1.0) as g:
        best = maximize_phi_on_G()
        g.close(best.value, 1.5**0.25, 1e-6, "value")
        g.close(abs(best.arg[0]), math.sqrt(3) / 6, 1e-5, "argmax |s|")


def test_criterion_02_real_degree2():
    with Gate("2 D_R2(2) = 1.837373 at t0 = 0.867835", 1.0) as g:
        best = maximize_f()
        g.close(best.arg, 0.867835, 1e-5, "t0")
        g.close(best.value, 1.837373, 1e-5, "value")
        g.close(T0_RADICAL, best.arg, 1e-6, "t0 radical")
        g.close(f_t0_radical(), best.value, 1e-5, "f(t0) radical")


def test_criterion_03_real_degree3():
    with Gate("3 D_R3(E) = 2.5525 at b1 = -1.6692", 1.0) as g:
        best = maximize_quotient_E()
        g.close(best.arg, -1.6692, 1e-3, "b1")
        g.close(best.value, 2.5525, 1e-3, "value")
        g.close(B1, best.arg, 1e-4, "b1 closed form")


def test_criterion_04_real_degree6():
    with Gate("4 D_R6(F) = 10.7809 at lambda0", 1.0) as g:
        lam0, lam1 = solve_lambda_roots()
        g.close(lam0, -2.2654, 1e-3, "lambda0")
        g.close(lam1, -1.6779, 1e-3, "lambda1")
        best = maximize_quotient_F()
        g.close(best.value, 10.7809, 2e-3, "value")
        g.close(best.arg, lam0, 1e-3, "argmax")


NORMS = {"P3": 1.33848, "P5": 0.28617, "P7": 0.07138, "P8": 0.02985, "P10": 0.01530}
QUOTIENTS = {"P5": 6.83591, "P7": 19.96308, "P8": 33.36323, "P10": 90.35556}
ROOTS = {"P2": (300, 1.36117), "P3": (200, 1.42234), "P5": (120, 1.54987), "P6": (100, 1.58432),
         "P7": (86, 1.61725), "P8": (75, 1.64042), "P10": (60, 1.65171)}


def test_criterion_05_catalog_norms():
    with Gate("5 catalog sup norms", 1.0) as g:
        for pid, ref in NORMS.items():
            g.close(sup_norm_square(catalog(pid).poly).value, ref, 2e-5, pid)


def test_criterion_06_catalog_quotients():
    with Gate("6 catalog BH quotients", 1.0) as g:
        for pid, ref in QUOTIENTS.items():
            g.close(bh_quotient(catalog(pid).poly).quotient, ref, 5e-3 * ref, pid)


def test_criterion_07_power_endpoints():
    with Gate("7 power-trick per-degree roots", 30.0) as g:
        for pid, (n, ref) in ROOTS.items():
            _, root = power_lower_bound(catalog(pid).poly, n, catalog_log_sup(pid))
            g.close(root, ref, 1e-3, f"{pid}^{n}")


def test_criterion_08_lemma_battery():
    with Gate("8 lemma battery at grid 1024, k = 2 sqrt 2", 20.0) as g:
        reps = {r.suite: r for r in run_lemma_battery(1024, K_DEFAULT)}
        for name, r in reps.items():
            g.check(name, r.passed, f"min={r.min_value:.10g} margin={r.margin:.3g}")
        g.check("case1 tight", reps["case1"].tight and reps["case1"].argmin == (1.0, 1.0))
        g.check("case3-im tight", reps["case3-im"].tight)
        g.close(omega1_fn(1.0, 1.0), 1.0, 1e-12, "Omega at (1,1)")
        for name in ("case2", "case3-re"):
            g.check(f"{name} strict", reps[name].min_value > 1.0 + 1e-6, f"min={reps[name].min_value}")


def _random_triple(rng):
    # magnitudes drawn to land in each ordering of a, c, |b| with random phases
    mags = [rng.expovariate(1.0) for _ in range(3)]
    if rng.random() < 0.2:
        mags[rng.randrange(3)] = mags[rng.randrange(3)] * (1 + rng.uniform(-1e-3, 1e-3))
    return tuple(m * cmath.exp(1j * rng.uniform(0, 2 * math.pi)) for m in mags)


def test_criterion_09_property_suites():
    rng = random.Random(7)
    l43 = lambda t: sum(abs(v) ** (4 / 3) for v in t) ** 0.75
    with Gate("9 property suites", 30.0) as g:
        for _ in range(500):
            a, b = rng.uniform(-3, 3), rng.uniform(-3, 3)
            if abs(a) > 1e-3:
                g.close(closed_norm_Pab(a, b), sup_norm_square(p_ab(a, b)).value, 1e-8 * max(1.0, abs(a) + abs(b)), f"Pab({a},{b})")
        for _ in range(500):
            lam = rng.uniform(-6, 3)
            g.close(closed_norm_Qlambda(lam), sup_norm_square(q_ab(1.0, lam)).value, 1e-8, f"Q({lam})")
        for t in np.linspace(0.5, 1.0, 51):
            for sign in (1, -1):
                g.close(sup_norm_square(choi_kim_extreme(float(t), sign)).value, 1.0, 1e-8, f"choi-kim t={t}")
        for s in np.linspace(-0.499, 0.499, 51):
            g.close(sup_norm_disk_complex(*aron_klimek_extreme(float(s), float(-s))).value, 1.0, 1e-6, f"aron-klimek s={s}")
        for _ in range(200):
            P = HomPoly2(tuple(rng.uniform(-2, 2) for _ in range(rng.randint(2, 8))))
            p, q = sorted(rng.uniform(1, 4) for _ in range(2))
            g.check("lp monotone", lp_norm(P, q) <= lp_norm(P, p) * (1 + 1e-12))
            c = rng.uniform(-5, 5)
            g.close(lp_norm(P.scaled(c), p), abs(c) * lp_norm(P, p), 1e-12 * lp_norm(P, p) * max(1, abs(c)), "lp homogeneous")
        for _ in range(6):
            P = make_hom_poly(3, [Fraction(rng.randint(-50, 50), rng.randint(1, 40)) for _ in range(4)], mode="exact")
            for n in (1, 10, 40, 75):
                pe = Fraction(6 * n, 3 * n + 1)
                ex, fl = log_lp_norm(power(P, n), pe), log_lp_norm(power(P.to_float(), n), pe)
                g.check("exact vs float", abs(ex - fl) <= 1e-9 * max(1.0, abs(ex)), f"n={n} {ex} {fl}")
        worst = -math.inf
        for _ in range(10_000):
            a, b, c = _random_triple(rng)
            t = lemma_surrogate(a, b, c)
            g.close(l43(t), l43((a, b, c)), 1e-10 * l43((a, b, c)), "surrogate l43")
            gap = sup_norm_disk_real(*t).value - sup_norm_disk_complex(a, b, c).value
            worst = max(worst, gap)
        g.check("surrogate sup domination", worst <= 1e-7, f"worst excess {worst:.3g}")


def test_criterion_10_determinism():
    with Gate("10 verify all is deterministic", 60.0) as g:
        outs = []
        for _ in range(2):
            proc = subprocess.run([sys.executable, "-m", "bhkit", "verify", "all", "--json", "-"],
                                  capture_output=True, text=True)
            g.check("exit code", proc.returncode == 0, proc.stderr[-500:])
            d = json.loads(proc.stdout)
            d.pop("wall_ms")
            outs.append(d)
        g.check("identical JSON", outs[0] == outs[1])
