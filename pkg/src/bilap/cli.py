"""Command-line front end: every check as a CSV/JSON report.

Reports are schema-stable rows
    check,param1,param2,lhs,rhs,margin,holds,paper_ref
with one file per subcommand.  Exit codes: 0 all asserted checks hold,
1 at least one asserted check fails, 2 configuration error.  Reported-only
rows never affect the exit code.  Two runs with the same configuration
produce byte-identical output apart from the timestamp header line.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
import time
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import avp, eig2d, riesz, semiclassical, spectra1d
from .core import (
    BCKind,
    BoundaryCondition,
    BoundReport,
    DomainSpec,
    Spectrum,
    SpectrumSource,
    dimensional_constants,
)
from .roots1d import gamma_root, proposition_bound_report

log = logging.getLogger("bilap")

CSV_COLUMNS = ("check", "param1", "param2", "lhs", "rhs", "margin", "holds", "paper_ref")


class ConfigError(ValueError):
    pass


# ----------------------------------------------------------------------------
# Argument parsing helpers
# ----------------------------------------------------------------------------

def parse_domain(text: str) -> DomainSpec:
    try:
        shape, _, dims = text.partition(":")
        if shape == "interval":
            return DomainSpec.interval(float(dims))
        if shape == "square":
            return DomainSpec.square(float(dims))
        if shape == "rect":
            lx, _, ly = dims.partition("x")
            return DomainSpec.rectangle(float(lx), float(ly))
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"bad domain spec {text!r}: {exc}") from exc
    raise ConfigError(f"bad domain spec {text!r} (interval:L | square:L | rect:LxW)")


def parse_range(text: str) -> list[float]:
    """Grid syntax: 'a:b:Nlog', 'a:b:Nlin', or a comma list."""
    try:
        if ":" in text:
            a, b, spec = text.split(":")
            if spec.endswith("log"):
                n = int(spec[:-3])
                return list(np.logspace(math.log10(float(a)), math.log10(float(b)), n))
            if spec.endswith("lin"):
                n = int(spec[:-3])
                return list(np.linspace(float(a), float(b), n))
            raise ValueError("range spec must end in 'log' or 'lin'")
        return [float(v) for v in text.split(",")]
    except ValueError as exc:
        raise ConfigError(f"bad range {text!r}: {exc}") from exc


def parse_int_range(text: str) -> list[int]:
    try:
        if ".." in text:
            a, b = text.split("..")
            return list(range(int(a), int(b) + 1))
        return [int(v) for v in text.split(",")]
    except ValueError as exc:
        raise ConfigError(f"bad integer range {text!r}: {exc}") from exc


def parse_bc(name: str, a: float) -> BoundaryCondition:
    try:
        kind = {"dirichlet": BCKind.DIRICHLET, "navier": BCKind.NAVIER,
                "ks": BCKind.KUTTLER_SIGILLITO, "neumann": BCKind.NEUMANN}[name]
    except KeyError as exc:
        raise ConfigError(f"unknown boundary condition {name!r}") from exc
    return BoundaryCondition(kind, poisson_ratio=a if kind is not BCKind.DIRICHLET else 0.0)


# ----------------------------------------------------------------------------
# Report output
# ----------------------------------------------------------------------------

def _param_columns(report: BoundReport) -> tuple[str, str]:
    items = [f"{k}={v}" for k, v in report.params]
    first = items[0] if items else ""
    rest = ";".join(items[1:]) if len(items) > 1 else ""
    return first, rest


def _float_repr(x: float) -> str:
    return repr(float(x))


def write_report(reports: Sequence[BoundReport], path: Optional[Path],
                 fmt: str, meta: dict | None = None) -> None:
    stamp = datetime.now(timezone.utc).isoformat()
    if fmt == "csv":
        lines = [f"# generated {stamp}", ",".join(CSV_COLUMNS)]
        for r in reports:
            p1, p2 = _param_columns(r)
            row = (r.check, p1, p2, _float_repr(r.lhs), _float_repr(r.rhs),
                   _float_repr(r.margin), str(r.holds).lower(), r.paper_ref)
            lines.append(",".join(_csv_quote(v) for v in row))
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        payload = {
            "timestamp": stamp,
            "meta": meta or {},
            "reports": [
                {
                    "check": r.check,
                    "params": {k: v for k, v in r.params},
                    "lhs": r.lhs, "rhs": r.rhs, "margin": r.margin,
                    "holds": r.holds, "paper_ref": r.paper_ref,
                    "asserted": r.asserted,
                }
                for r in reports
            ],
        }
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        raise ConfigError(f"unknown format {fmt!r}")

    if path is None:
        sys.stdout.write(text)
    else:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)


def _csv_quote(value: str) -> str:
    if any(ch in value for ch in ",\"\n"):
        return '"' + value.replace('"', '""') + '"'
    return value


def exit_code(reports: Sequence[BoundReport]) -> int:
    return 1 if any(r.asserted and not r.holds for r in reports) else 0


# ----------------------------------------------------------------------------
# Spectrum cache
# ----------------------------------------------------------------------------

def spectrum_cache_key(spec: Spectrum) -> str:
    source = "-".join(str(p) for p in (spec.source.kind,) + spec.source.detail)
    return f"{spec.domain.label()}_{spec.bc.label()}_{source}".replace(":", "_") \
        .replace("(", "").replace(")", "").replace(",", "_").replace(" ", "")


def cache_spectrum(spec: Spectrum, directory: Path) -> Path:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    payload = {
        "values": [format(v, ".17g") for v in spec.values],
        "domain": {"shape": spec.domain.shape, "lengths": list(spec.domain.lengths)},
        "bc": {"kind": spec.bc.kind.value, "poisson_ratio": spec.bc.poisson_ratio,
               "pair": list(spec.bc.pair) if spec.bc.pair else None},
        "source": {"kind": spec.source.kind, "detail": list(spec.source.detail)},
        "kernel_dim": spec.kernel_dim,
    }
    path = directory / (spectrum_cache_key(spec) + ".json")
    path.write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n")
    return path


def load_spectrum(key: str, directory: Path) -> Optional[Spectrum]:
    """Round-trip-exact reload; corrupt entries log a warning and return None."""
    path = Path(directory) / (key + ".json")
    if not path.exists():
        return None
    try:
        payload = json.loads(path.read_text())
        dom = DomainSpec(payload["domain"]["shape"], tuple(payload["domain"]["lengths"]))
        bc_raw = payload["bc"]
        bc = BoundaryCondition(BCKind(bc_raw["kind"]), bc_raw["poisson_ratio"],
                               tuple(bc_raw["pair"]) if bc_raw["pair"] else None)
        source = SpectrumSource(payload["source"]["kind"], tuple(payload["source"]["detail"]))
        extend = None
        if source.kind == "exact" and source.detail and source.detail[0] == "spectrum1d":
            _, i, j, length = source.detail
            extend = lambda c: spectra1d.spectrum_1d((int(i), int(j)), c, float(length))
        return Spectrum(tuple(float(v) for v in payload["values"]), dom, bc,
                        source, payload["kernel_dim"], extend=extend)
    except (KeyError, ValueError, TypeError, json.JSONDecodeError) as exc:
        log.warning("corrupt spectrum cache %s (%s); recomputing", path, exc)
        return None


# ----------------------------------------------------------------------------
# Subcommands
# ----------------------------------------------------------------------------

def cmd_roots(args) -> list[BoundReport]:
    reports = []
    for n in range(1, args.n + 1):
        root = gamma_root(n)
        reports.append(BoundReport.value_row(
            "gamma", root.gamma, "1-d-ev-equation", params={"n": n, "method": root.method}))
        reports.append(BoundReport.less_equal(
            "gamma-residual", root.residual, 1e-9, "1-d-ev-equation", params={"n": n}))
    reports.extend(proposition_bound_report(args.n))
    return reports


def cmd_spectrum1d(args) -> list[BoundReport]:
    pair = tuple(int(v) for v in args.pair.split(","))
    spec = spectra1d.spectrum_1d(pair, args.count, args.length)
    reports = [BoundReport.value_row(
        "eigenvalue", v, "riesz-1-d", params={"pair": pair, "n": n})
        for n, v in enumerate(spec.values, start=1)]
    reports.extend(spectra1d.identity_check(min(args.count, 50)))
    return reports


def cmd_riesz1d(args) -> list[BoundReport]:
    pair = tuple(int(v) for v in args.pair.split(","))
    zs = parse_range(args.z)
    spec = spectra1d.spectrum_1d(pair, 16)
    reports = []
    for z in zs:
        r1 = riesz.riesz_mean(spec, z, 1.0).value
        lower, upper = riesz.theorem_bounds_1d(pair, z)
        reports.append(BoundReport.less_equal(
            "riesz-lower", lower, r1, "riesz-1-d", params={"pair": pair, "z": z}))
        reports.append(BoundReport.less_equal(
            "riesz-upper", r1, upper, "riesz-1-d", params={"pair": pair, "z": z}))
    return reports


def cmd_lemma_onedim(args) -> list[BoundReport]:
    reports = []
    for R in parse_range(args.r_grid):
        for variant, ref in (("integers", "onedim1"), ("half_integers", "onedim2")):
            lhs, mid, rhs = riesz.lemma_onedim_bounds(R, variant)
            reports.append(BoundReport.less_equal(
                "lattice-sum-lower", lhs, mid, ref, params={"R": R, "variant": variant}))
            reports.append(BoundReport.less_equal(
                "lattice-sum-upper", mid, rhs, ref, params={"R": R, "variant": variant}))
    return reports


def cmd_constants(args) -> list[BoundReport]:
    reports = []
    for d in parse_int_range(args.dims):
        dc = dimensional_constants(d)
        for name, val, ref in (
            ("ball-volume", dc.ball_volume, "weyllaw"),
            ("classical-constant", dc.classical, "weyllaweig"),
            ("grad-sup-constant", dc.grad_sup, "adconst"),
            ("lap-sup-constant", dc.lap_sup, "adconst"),
            ("a_d", dc.a_d, "cd"), ("b_d", dc.b_d, "cd"), ("c_d", dc.c_d, "cd"),
            ("M_d", dc.m_d, "Md"),
        ):
            reports.append(BoundReport.value_row(name, val, ref, params={"d": d}))
        if d >= 2:
            for bc_name in ("dirichlet", "navier", "ks", "neumann"):
                bc = parse_bc(bc_name, args.a)
                try:
                    co = semiclassical.expansion_coefficients(bc, d)
                except ValueError:
                    continue
                reports.append(BoundReport.value_row(
                    "c0-per-volume", co.c0, "semiclassicalcounting", params={"d": d}))
                reports.append(BoundReport.value_row(
                    "c1-per-boundary", co.c1, "c1dir",
                    params={"d": d, "bc": bc.label(),
                            "limit_case": bc.is_limit_case}))
    reports.append(BoundReport.value_row("series-constant-c", riesz.constant_c(), "c"))
    reports.append(BoundReport.value_row("f-neumann", semiclassical.f_neumann(args.a),
                                         "fsigma", params={"a": args.a}))
    return reports


def cmd_predict(args) -> list[BoundReport]:
    dom = parse_domain(args.domain)
    bc = parse_bc(args.bc, args.a)
    reports = []
    for k in parse_int_range(args.k):
        val = semiclassical.predict_eigenvalue(bc, dom.dimension, dom, k)
        reports.append(BoundReport.value_row(
            "two-term-prediction", val, "weyl_dirichlet_biharmonic_single",
            params={"k": k, "bc": bc.label(), "note": "asymptotic, smooth-domain hypothesis"}))
        if bc.kind is BCKind.DIRICHLET:
            reports.append(BoundReport.value_row(
                "two-term-average", semiclassical.predict_average(dom.dimension, dom, k),
                "weyl_dirichlet_biharmonic", params={"k": k}))
    return reports


def cmd_avp(args) -> list[BoundReport]:
    dom = parse_domain(args.domain)
    d = dom.dimension
    ball = avp.inscribed_ball_profile(dom)
    profiles = [ball]
    if dom.shape == "rectangle":
        profiles.append(avp.mollified_indicator_profile(dom, args.h, args.grid_res))
    reports = []
    for k in parse_int_range(args.k):
        for prof in profiles:
            reports.append(BoundReport.value_row(
                "avg-upper-bound", avp.avg_upper_bound(prof, dom, d, k),
                "evsums-DirichletbiLaplacian1", params={"k": k, "profile": prof.kind}))
        reports.append(BoundReport.value_row(
            "rough-bound", avp.rough_bound(dom, d, k),
            "rough_estimate_bilaplacian", params={"k": k}))
        try:
            main, second, rem = avp.explicit_sum_bound(dom, d, k)
            reports.append(BoundReport.value_row(
                "explicit-sum-bound", main + second + rem, "explicit_sum",
                params={"k": k, "main": main, "second": second, "remainder": rem}))
        except avp.ThresholdError:
            pass
    for z in parse_range(args.z):
        for prof in profiles:
            reports.append(BoundReport.value_row(
                "riesz-lower-bound", avp.riesz_lower_bound(prof, z),
                "Riesz-mean-ineq-DirichletbiLaplacian", params={"z": z, "profile": prof.kind}))
    for t in parse_range(args.t):
        for prof in profiles:
            weighted, unweighted = avp.partition_lower_bound(prof, t)
            reports.append(BoundReport.value_row(
                "partition-lower-bound", unweighted, "part-fct-estimate-small-times_bi",
                params={"t": t, "profile": prof.kind, "weighted": weighted}))
    return reports


def cmd_kroeger_laptev(args) -> list[BoundReport]:
    spec = spectra1d.spectrum_1d((2, 3), args.k + 1)
    dom = DomainSpec.interval(1.0)
    return avp.kroeger_laptev_report(spec, dom, 1, args.k, extrapolated=True)


def cmd_eig2d(args) -> list[BoundReport]:
    dom = parse_domain(args.domain)
    n = parse_int_range(args.grids)[-1]
    key = f"{dom.label()}_dirichlet_finite_difference-clamped-{n}-{n}".replace(":", "_")
    spec = None
    t0 = time.perf_counter()
    cache_hit = False
    if args.cache:
        spec = load_spectrum(key, Path(args.cache))
        cache_hit = spec is not None and len(spec.values) >= args.k
        if not cache_hit:
            spec = None
    if spec is None:
        spec = eig2d.clamped_spectrum_fd(dom, n, args.k)
        if args.cache:
            cache_spectrum(spec, Path(args.cache))
    elapsed = time.perf_counter() - t0
    log.info("eig2d solve: %.3fs (cache_hit=%s)", elapsed, cache_hit)
    return [BoundReport.value_row(
        "fd-eigenvalue", v, "DBC",
        params={"j": j, "grid": n, "cache_hit": cache_hit})
        for j, v in enumerate(spec.values[:args.k], start=1)]


def cmd_compare(args) -> list[BoundReport]:
    dom = parse_domain(args.domain)
    grids = tuple(parse_int_range(args.grids))
    return eig2d.comparison_report(dom, args.k, grids)


def cmd_all(args) -> list[BoundReport]:
    """Full verification sweep: the CLI face of the acceptance suite.

    Finite-difference spectra (grids 32/64/128, 50 modes each plus 200 on
    the 64 grid) are solved once and shared across the comparison chain,
    the average sandwich, the heat-trace check and the individual bounds.
    Deterministic throughout: the sharpened-Young sweep uses a lattice, not
    random draws.
    """
    reports: list[BoundReport] = []

    # 1-2: roots, residuals, defect brackets; shared-root identities
    reports.extend(proposition_bound_report(50))
    for n in range(1, 51):
        reports.append(BoundReport.less_equal(
            "gamma-residual", gamma_root(n).residual, 1e-9, "1-d-ev-equation",
            params={"n": n}))
    reports.extend(spectra1d.identity_check(50))

    # 3, 5: Riesz envelopes on 200 thresholds per pair; second-term fits
    for pair in spectra1d.KERNEL_DIMS:
        spec = spectra1d.spectrum_1d(pair, 16)
        for z in np.logspace(0.0, 8.0, 200):
            r1 = riesz.riesz_mean(spec, float(z), 1.0).value
            lower, upper = riesz.theorem_bounds_1d(pair, float(z))
            reports.append(BoundReport.less_equal(
                "riesz-lower", lower, r1, "riesz-1-d", params={"pair": pair, "z": z}))
            reports.append(BoundReport.less_equal(
                "riesz-upper", r1, upper, "riesz-1-d", params={"pair": pair, "z": z}))
        slope = riesz.second_term_fit(pair)
        target = (pair[0] + pair[1] - 3) / 2.0
        reports.append(BoundReport.less_equal(
            "second-term-slope", abs(slope - target), 0.05, "riesz-1-d",
            params={"pair": pair, "slope": slope}))

    # 4: lattice-sum chains on 500 values
    for R in np.linspace(0.0, 200.0, 500):
        for variant, ref in (("integers", "onedim1"), ("half_integers", "onedim2")):
            lhs, mid, rhs = riesz.lemma_onedim_bounds(float(R), variant)
            reports.append(BoundReport.less_equal(
                "lattice-sum-lower", lhs, mid, ref, params={"R": R, "variant": variant}))
            reports.append(BoundReport.less_equal(
                "lattice-sum-upper", mid, rhs, ref, params={"R": R, "variant": variant}))

    c = riesz.constant_c()
    reports.append(BoundReport.less_equal(
        "series-constant-window", abs(c - 2.51272), 1e-4, "c", params={"c": c}))

    # 6: boundary-coefficient agreement
    for d in (2, 3, 4):
        for a in (-0.3, 0.0, 0.5, 0.9):
            ca = semiclassical.expansion_coefficients(
                BoundaryCondition.neumann(a), d, "arctan_g")
            cb = semiclassical.expansion_coefficients(
                BoundaryCondition.neumann(a), d, "arctan_inv_g")
            reports.append(BoundReport.less_equal(
                "neumann-c1-forms-agree", abs(ca.c1 - cb.c1), 1e-9, "c1neu",
                params={"d": d, "a": a}))
        quad, _, closed = semiclassical.dirichlet_arcsin_integral(d)
        reports.append(BoundReport.less_equal(
            "dirichlet-c1-quadrature", abs(quad - closed), 1e-9, "c1dir",
            params={"d": d}))

    # 10: refined interval bounds on the exact spectrum; sharpened Young
    spec23 = spectra1d.spectrum_1d((2, 3), 502)
    reports.extend(avp.kroeger_laptev_report(
        spec23, DomainSpec.interval(1.0), 1, 500, extrapolated=True))
    worst_young = -math.inf
    for p in np.linspace(0.0, 10.0, 101):
        for x in np.linspace(0.0, 10.0, 101):
            y, bound = avp.young_refined(float(p), float(x))
            worst_young = max(worst_young, y - bound)
    reports.append(BoundReport.less_equal(
        "young-refined-lattice", worst_young, 1e-12, "technical_lemma",
        params={"grid": "101x101"}))

    # 7-9, 11: finite-difference spectra, solved once
    dom = DomainSpec.square(1.0)
    grids = (32, 64, 128)
    fd = {n: eig2d.clamped_spectrum_fd(dom, n, 50) for n in grids}
    reports.extend(eig2d.comparison_report(dom, 10, grids, fd_spectra=fd))

    limits, bands = [], []
    for j in range(1, 51):
        limit, band = eig2d.richardson_extrapolate(*(fd[n].value(j) for n in grids))
        limits.append(limit)
        bands.append(band)

    ball = avp.inscribed_ball_profile(dom)
    moll = avp.mollified_indicator_profile(dom, 0.1, 96)
    for k in range(1, 31):
        fd_avg = sum(limits[:k]) / k
        band = sum(bands[:k]) / k
        reports.append(BoundReport.less_equal(
            "average-lower-weyl", semiclassical.predict_average_leading(2, dom, k),
            fd_avg + band, "weyl_dirichlet_biharmonic", params={"k": k}))
        for prof in (ball, moll):
            reports.append(BoundReport.less_equal(
                "average-upper-avp", fd_avg - band,
                avp.avg_upper_bound(prof, dom, 2, k),
                "evsums-DirichletbiLaplacian1", params={"k": k, "profile": prof.kind}))

    heat = eig2d.clamped_spectrum_fd(dom, 64, 200)
    for t in (1e-3, 1e-4):
        trace = sum(math.exp(-v * t) for v in heat.values)
        _, unweighted = avp.partition_lower_bound(moll, t)
        reports.append(BoundReport.less_equal(
            "heat-trace-lower", unweighted, trace,
            "part-fct-estimate-small-times_bi", params={"t": t}))

    A = avp.second_term_coefficient(dom, 2)
    for k in range(20, 51):
        lower, upper = avp.individual_bounds(dom, 2, A, k)
        reports.append(BoundReport.less_equal(
            "individual-lower", lower, limits[k - 1] + bands[k - 1],
            "dirichlet_ineq_1_2", params={"k": k}))
        reports.append(BoundReport.less_equal(
            "individual-upper", limits[k - 1] - bands[k - 1], upper,
            "dirichlet_ineq_2_2", params={"k": k}))

    # 12: two-term sharpness of the clamped interval spectrum
    for k in range(1, 51):
        reports.append(BoundReport.less_equal(
            "two-term-sharpness", gamma_root(k).r,
            math.pi * math.exp(-math.pi * k), "1st-1d-ev-expansion",
            params={"k": k}))
    return reports


# ----------------------------------------------------------------------------
# Entry point
# ----------------------------------------------------------------------------

def build_parser(config_defaults: dict | None = None) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bilap",
        description="Fourth-order spectra: exact 1D solutions, finite-difference "
                    "2D solves, and machine-checkable semiclassical bound reports.")
    parser.add_argument("--config", type=Path, help="JSON file of flag defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", type=Path, default=None, help="report path (default stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--cache", type=Path, default=None, help="spectrum cache directory")
        p.add_argument("--seedless", action="store_true",
                       help="reserved; the artifact never draws random numbers")
        if config_defaults:
            p.set_defaults(**config_defaults)

    p = sub.add_parser("roots", help="frequency-equation roots and defect brackets")
    p.add_argument("--n", type=int, default=20)
    common(p)

    p = sub.add_parser("spectrum1d", help="exact interval spectra")
    p.add_argument("--pair", default="0,1")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--length", type=float, default=1.0)
    common(p)

    p = sub.add_parser("riesz1d", help="Riesz means against the explicit envelopes")
    p.add_argument("--pair", default="0,1")
    p.add_argument("--z", default="1:1e8:64log")
    common(p)

    p = sub.add_parser("lemma-onedim", help="lattice-sum envelope checks")
    p.add_argument("--r-grid", default="0:200:101lin")
    common(p)

    p = sub.add_parser("constants", help="dimensional and boundary coefficients")
    p.add_argument("--dims", default="1..6")
    p.add_argument("--a", type=float, default=0.0)
    common(p)

    p = sub.add_parser("predict", help="two-term eigenvalue predictions")
    p.add_argument("--domain", default="square:1")
    p.add_argument("--bc", default="dirichlet")
    p.add_argument("--a", type=float, default=0.0)
    p.add_argument("--k", default="1..20")
    common(p)

    p = sub.add_parser("avp", help="averaged-variational-principle bounds")
    p.add_argument("--domain", default="square:1")
    p.add_argument("--k", default="1..30")
    p.add_argument("--z", default="1e3:1e6:8log")
    p.add_argument("--t", default="1e-4,1e-3")
    p.add_argument("--h", type=float, default=0.1)
    p.add_argument("--grid-res", type=int, default=96)
    common(p)

    p = sub.add_parser("kroeger-laptev", help="refined two-sided interval bounds")
    p.add_argument("--k", type=int, default=120)
    common(p)

    p = sub.add_parser("eig2d", help="finite-difference clamped spectrum")
    p.add_argument("--domain", default="square:1")
    p.add_argument("--grids", default="32")
    p.add_argument("--k", type=int, default=10)
    common(p)

    p = sub.add_parser("compare", help="eigenvalue comparison chain")
    p.add_argument("--domain", default="square:1")
    p.add_argument("--grids", default="32,64,128")
    p.add_argument("--k", type=int, default=10)
    common(p)

    p = sub.add_parser("all", help="full verification sweep")
    common(p)
    return parser


_COMMANDS = {
    "roots": cmd_roots,
    "spectrum1d": cmd_spectrum1d,
    "riesz1d": cmd_riesz1d,
    "lemma-onedim": cmd_lemma_onedim,
    "constants": cmd_constants,
    "predict": cmd_predict,
    "avp": cmd_avp,
    "kroeger-laptev": cmd_kroeger_laptev,
    "eig2d": cmd_eig2d,
    "compare": cmd_compare,
    "all": cmd_all,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(name)s: %(message)s")
    try:
        # config values become subparser defaults, so explicit flags still win
        pre = argparse.ArgumentParser(add_help=False)
        pre.add_argument("--config", type=Path)
        known, _ = pre.parse_known_args(argv)
        defaults = json.loads(Path(known.config).read_text()) if known.config else None
        parser = build_parser(defaults)
        args = parser.parse_args(argv)
        reports = _COMMANDS[args.command](args)
        write_report(reports, args.out, args.format, meta={"command": args.command})
    except (ConfigError, OSError, json.JSONDecodeError) as exc:
        print(f"bilap: configuration error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"bilap: configuration error: {exc}", file=sys.stderr)
        return 2
    failed = sum(1 for r in reports if r.asserted and not r.holds)
    if failed:
        print(f"bilap: {failed} asserted check(s) failed", file=sys.stderr)
    return exit_code(reports)


if __name__ == "__main__":
    sys.exit(main())
