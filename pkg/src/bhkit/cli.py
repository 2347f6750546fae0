"""Command-line front end: reproduce the reported constants and emit reports.

    bhkit exact {c2,r2,r3,r6}
    bhkit quotient P5 | --coeffs 1,0,0,1 --degree 3
    bhkit power P2 --n 300 [--series] [--csv out.csv]
    bhkit verify {lemma21,identities,all}
    bhkit figure {phi-surface,pab-curve,qab-curve,roots-by-degree} --csv out.csv

Every command prints one line per result, optionally writes a JSON report
(--json PATH, or - for stdout) and exits nonzero if any result fails.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from . import __version__
from .bounds import bh_quotient, catalog_log_sup, catalog_series, hyper_series, power_lower_bound
from .catalog import IDS, catalog
from .extremals import phi_on_segment, quotient_E, quotient_F
from .norms import B1, sup_norm_square
from .optimize import DEFAULT_GRID, DEFAULT_TOL
from .poly import make_hom_poly
from .sharp import (
    T0_RADICAL,
    check_exact_t0,
    check_lambda_roots,
    d_r3_closed_form,
    d_r6_closed_form,
    f_t0_radical,
    lambda_roots,
    maximize_f,
    maximize_phi_on_G,
    maximize_quotient_E,
    maximize_quotient_F,
)
from .verify import K_DEFAULT, k_minimizer, run_lemma_battery, solve_k

ABS_5DP = 2e-5
REL_QUOTIENT = 5e-3
ROOT_TOL = 1e-3


@dataclass
class ResultRecord:
    name: str
    computed: float
    paper: Optional[float] = None
    tol: Optional[float] = None
    relative: bool = False
    flag: Optional[bool] = None

    @property
    def diff(self) -> Optional[float]:
        if self.paper is None:
            return None
        return abs(self.computed - self.paper)

    @property
    def passed(self) -> bool:
        ok = True if self.flag is None else bool(self.flag)
        if self.paper is not None and self.tol is not None:
            bound = self.tol * abs(self.paper) if self.relative else self.tol
            ok = ok and self.diff <= bound
        return ok and math.isfinite(self.computed)

    def to_dict(self) -> dict:
        return {"name": self.name, "computed": self.computed, "paper": self.paper, "diff": self.diff, "pass": self.passed}


@dataclass
class RunReport:
    command: str
    results: list = field(default_factory=list)
    version: str = __version__
    wall_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def add(self, *args, **kwargs) -> ResultRecord:
        rec = ResultRecord(*args, **kwargs)
        self.results.append(rec)
        return rec

    def to_dict(self, timing: bool = True) -> dict:
        out = {"command": self.command, "version": self.version, "results": [r.to_dict() for r in self.results]}
        if timing:
            out["wall_ms"] = self.wall_ms
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2)


def _fmt(v) -> str:
    return "-" if v is None else f"{v:.10g}"


def _print_report(report: RunReport, stream) -> None:
    for r in report.results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name:<40} computed={_fmt(r.computed)} paper={_fmt(r.paper)} diff={_fmt(r.diff)}", file=stream)
    print(f"{'PASS' if report.passed else 'FAIL'}  {report.command} ({len(report.results)} results)", file=stream)


# -- commands -----------------------------------------------------------------


def cmd_exact(case: str, tol: float = DEFAULT_TOL, grid: int = DEFAULT_GRID) -> RunReport:
    rep = RunReport(f"exact {case}")
    if case == "c2":
        best = maximize_phi_on_G(tol=min(tol, 1e-12), grid=grid)
        rep.add("D_C2(2) = max Phi on G", best.value, 1.5**0.25, 1e-6)
        rep.add("D_C2(2) printed", best.value, 1.1066, 1e-4)
        rep.add("argmax |s|", abs(best.arg[0]), math.sqrt(3.0) / 6.0, 1e-5)
    elif case == "r2":
        best = maximize_f(tol, grid)
        rep.add("D_R2(2) = max f", best.value, 1.837373, 1e-5)
        rep.add("t0 = argmax f", best.arg, 0.867835, 1e-5)
        _identity_records(rep, check_exact_t0(tol, grid))
    elif case == "r3":
        best = maximize_quotient_E(tol, grid)
        rep.add("D_R3(E) = max quotient_E", best.value, 2.5525, 1e-3)
        rep.add("b1 = argmax quotient_E", best.arg, -1.6692, 1e-3)
        rep.add("b1 radical vs argmax", B1, best.arg, 1e-4)
        rep.add("D_R3(E) closed form vs max", d_r3_closed_form(), best.value, 1e-8)
    elif case == "r6":
        lam0, lam1 = lambda_roots()
        best = maximize_quotient_F(tol, grid)
        rep.add("lambda0", lam0, -2.2654, 1e-3)
        rep.add("lambda1", lam1, -1.6779, 1e-3)
        rep.add("D_R6(F) = max quotient_F", best.value, 10.7809, 2e-3)
        rep.add("argmax quotient_F", best.arg, -2.2654, 1e-3)
        rep.add("D_R6(F) closed form vs max", d_r6_closed_form(), best.value, 1e-8)
        for chk in check_lambda_roots((lam0, lam1)):
            rep.add(chk.name, chk.computed, chk.reference, chk.tol)
    else:
        raise ValueError(f"unknown case {case!r}")
    return rep


def _identity_records(rep: RunReport, t0rep) -> None:
    for chk in t0rep.checks:
        rep.add(chk.name, chk.computed, chk.reference, chk.tol)
    rep.add("t0 radical printed", T0_RADICAL, 0.867835, 1e-6)
    rep.add("f(t0) radical printed", f_t0_radical(), 1.837373, 1e-5)


def parse_coeffs(text: str, degree: int, mode: str):
    try:
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if mode == "exact":
            from fractions import Fraction

            values = [Fraction(p) for p in parts]
        else:
            values = [float(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"malformed coefficient list {text!r}: {exc}") from None
    return make_hom_poly(degree, values, mode)


def cmd_quotient(poly: Optional[str] = None, coeffs: Optional[str] = None, degree: Optional[int] = None,
                 mode: str = "exact", tol: float = 1e-12) -> RunReport:
    if poly is not None:
        entry = catalog(poly).as_mode(mode)
        q = bh_quotient(entry.poly, poly, tol)
        rep = RunReport(f"quotient {poly}")
        rep.add(f"||{poly}||", q.sup_norm, entry.reported_norm, ABS_5DP)
        rep.add(f"{poly} quotient", q.quotient, entry.reported_quotient, REL_QUOTIENT, relative=True)
        return rep
    if coeffs is None or degree is None:
        raise ValueError("give a catalog id or --coeffs with --degree")
    P = parse_coeffs(coeffs, degree, mode)
    q = bh_quotient(P, None, tol)
    rep = RunReport(f"quotient --coeffs {coeffs} --degree {degree}")
    rep.add("sup norm", q.sup_norm)
    rep.add(f"l_{q.p} norm", q.coeff_norm)
    rep.add("quotient", q.quotient)
    return rep


def _write_csv(path: str, header, rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([f"{v:.10g}" if isinstance(v, float) else v for v in row])


SERIES_HEADER = ("base_id", "n", "degree", "per_degree_root")


def cmd_power(base: str, n: int, series: bool = False, csv_path: Optional[str] = None, mode: str = "exact") -> RunReport:
    entry = catalog(base).as_mode(mode)
    ls = catalog_log_sup(base, mode)
    rep = RunReport(f"power {base} --n {n}" + (" --series" if series else ""))
    paper = entry.reported_root if n == entry.power_n else None
    if series or csv_path:
        s = hyper_series(entry.poly, n, 1, base, ls)
        if csv_path:
            _write_csv(csv_path, SERIES_HEADER, s.csv_rows())
        root = s.final.root
    else:
        _, root = power_lower_bound(entry.poly, n, ls)
    rep.add(f"{base}^{n} per-degree root (degree {entry.degree * n})", root, paper, ROOT_TOL)
    return rep


def cmd_verify(suite: str = "all", grid: int = 1024, k: Optional[float] = None,
               tol: float = DEFAULT_TOL) -> RunReport:
    rep = RunReport(f"verify {suite}")
    kk = solve_k(k)
    if suite in ("lemma21", "all"):
        rep.add("k minimizes the surrogate factor", k_minimizer(), K_DEFAULT, 1e-6)
        for r in run_lemma_battery(grid, kk):
            rep.add(f"lemma21 {r.suite} min of max", r.min_value, flag=r.passed)
    if suite in ("identities", "all"):
        _identity_records(rep, check_exact_t0(tol))
        best = maximize_quotient_E(tol)
        rep.add("b1 radical vs argmax quotient_E", B1, best.arg, 1e-4)
        for chk in check_lambda_roots():
            rep.add(chk.name, chk.computed, chk.reference, chk.tol)
    if suite not in ("lemma21", "identities", "all"):
        raise ValueError(f"unknown suite {suite!r}")
    return rep


def _curve(fn, lo, hi, n):
    xs = [lo + (hi - lo) * i / n for i in range(n + 1)]
    return xs, [fn(x) for x in xs]


def cmd_figure(fig: str, csv_path: str, mode: str = "exact", tol: float = DEFAULT_TOL) -> RunReport:
    rep = RunReport(f"figure {fig}")
    if fig == "phi-surface":
        rows = []
        xs, ys = _curve(phi_on_segment, 0.0, 0.5, 500)
        rows += [("segment", s, -s, v, 1) for s, v in zip(xs, ys)]
        step = 0.02
        for i in range(51):
            for j in range(51):
                s, t = -i * step, j * step
                if abs(s) + abs(t) < 1.0:
                    total = abs(s) + abs(t)
                    prod = 4.0 * abs(s) * abs(t)
                    rad = 1.0 if total == 0.0 else max(prod / (total * total) - prod, 0.0)
                    v = (abs(s) ** (4 / 3) + abs(t) ** (4 / 3) + rad ** (2 / 3)) ** 0.75
                    rows.append(("quadrant", s, t, v, int(s + t == 0.0)))
        _write_csv(csv_path, ("kind", "s", "t", "phi", "in_G"), rows)
        best = maximize_phi_on_G()
        rep.add("max Phi on G", best.value, 1.5**0.25, 1e-6)
    elif fig == "pab-curve":
        xs, ys = _curve(quotient_E, -3.0, 1.0, 800)
        _write_csv(csv_path, ("lambda", "quotient"), zip(xs, ys))
        best = maximize_quotient_E(tol)
        rep.add("max quotient_E", best.value, 2.5525, 1e-3)
        rep.add("argmax quotient_E", best.arg, -1.6692, 1e-3)
    elif fig == "qab-curve":
        xs, ys = _curve(quotient_F, -4.0, 1.0, 1000)
        _write_csv(csv_path, ("lambda", "quotient"), zip(xs, ys))
        best = maximize_quotient_F(tol)
        rep.add("max quotient_F", best.value, 10.7809, 2e-3)
        rep.add("argmax quotient_F", best.arg, -2.2654, 1e-3)
    elif fig == "roots-by-degree":
        all_series = catalog_series(IDS, mode=mode)
        rows = [row for s in all_series for row in s.csv_rows()]
        _write_csv(csv_path, SERIES_HEADER, rows)
        for s in all_series:
            e = catalog(s.base_id)
            rep.add(f"{s.base_id} final root (n={s.final.n})", s.final.root, e.reported_root, ROOT_TOL)
    else:
        raise ValueError(f"unknown figure {fig!r}")
    return rep


# -- argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="optimizer tolerance (default 1e-10)")
    common.add_argument("--grid", type=int, default=None, help="localization / certification grid size")
    common.add_argument("--k-override", type=float, default=None, help="replace k = 2 sqrt 2 in the lemma suites")
    common.add_argument("--mode", choices=("exact", "float"), default="exact", help="coefficient arithmetic")
    common.add_argument("--json", metavar="PATH", default=None, help="write the JSON report here ('-' for stdout)")

    parser = argparse.ArgumentParser(prog="bhkit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"bhkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", parents=[common], help="sharp constants in degrees 2, 3, 6")
    p.add_argument("case", choices=("c2", "r2", "r3", "r6"))

    p = sub.add_parser("quotient", parents=[common], help="BH quotient of one polynomial")
    p.add_argument("poly", nargs="?", choices=IDS)
    p.add_argument("--coeffs", help="comma-separated coefficients, descending powers of x")
    p.add_argument("--degree", type=int)

    p = sub.add_parser("power", parents=[common], help="power-trick lower bound")
    p.add_argument("base", choices=IDS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--series", action="store_true", help="compute every n up to --n")
    p.add_argument("--csv", metavar="PATH")

    p = sub.add_parser("verify", parents=[common], help="certification batteries")
    p.add_argument("suite", choices=("lemma21", "identities", "all"), nargs="?", default="all")

    p = sub.add_parser("figure", parents=[common], help="plot-ready CSV data")
    p.add_argument("figure", choices=("phi-surface", "pab-curve", "qab-curve", "roots-by-degree"))
    p.add_argument("--csv", metavar="PATH", required=True)
    return parser


def run(args: argparse.Namespace) -> RunReport:
    grid = args.grid
    if args.command == "exact":
        return cmd_exact(args.case, args.tol, grid or DEFAULT_GRID)
    if args.command == "quotient":
        return cmd_quotient(args.poly, args.coeffs, args.degree, args.mode)
    if args.command == "power":
        if args.n < 1:
            raise ValueError("--n must be >= 1")
        return cmd_power(args.base, args.n, args.series, args.csv, args.mode)
    if args.command == "verify":
        return cmd_verify(args.suite, grid or 1024, args.k_override, args.tol)
    if args.command == "figure":
        return cmd_figure(args.figure, args.csv, args.mode, args.tol)
    raise ValueError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        report = run(args)
    except (ValueError, KeyError, OSError) as exc:
        parser.exit(2, f"bhkit: error: {exc}\n")
    report.wall_ms = round((time.perf_counter() - start) * 1000.0, 3)
    out = sys.stderr if args.json == "-" else sys.stdout
    _print_report(report, out)
    if args.json == "-":
        print(report.to_json())
    elif args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
