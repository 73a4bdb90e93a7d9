"""Command-line front end.

    squarewell spectrum --family A --count 5 --out a.json
    squarewell negscan --custom "2,1:1,0" --out robin.json
    squarewell sweep --grid 20 --out sweep.csv
    squarewell hermiticity --family E --count 8
    squarewell validate --out validate.json [--strict-paper] [--families A,B]

Exit codes: 0 ok, 1 failed check, 2 usage error, 3 incomplete computation,
4 internal inconsistency between solver and oracle.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import __version__
from .audit import audit
from .bcalgebra import DEFAULT_QMAX, DEFAULT_SCAN_POINTS, negative_energy_scan, solve_coefficients
from .core import (
    FAMILIES,
    BoundaryCondition,
    BoundaryEquation,
    EnergyClass,
    IncompleteSpectrum,
    InvalidBoundaryCondition,
    SquareWellError,
    UnsupportedBoundary,
    WellConfig,
    canonicalize_bc,
    family_bc,
)
from .fdoracle import DEFAULT_N, negative_count, oracle_energies
from .hermiticity import check_hermiticity
from .report import (
    RunReport,
    bc_dict,
    cells_to_dicts,
    hermiticity_dict,
    oracle_table,
    scan_dict,
    spectrum_dict,
    sweep_csv,
)
from .spectral import find_spectrum
from .sweep import bc_sweep, theta_grid
from .validation import run_all, subsample

log = logging.getLogger("squarewell")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INCOMPLETE = 3
EXIT_INCONSISTENT = 4

# sample points for showing particular (G, H) under an inhomogeneous condition
_SAMPLE_QL = (0.5, 2.0, 5.0)


class UsageError(Exception):
    pass


def parse_custom(text: str) -> BoundaryCondition:
    """Parse ``a0,b0:aL,bL`` with an optional ``=c1:c2`` right-hand side."""
    try:
        lhs, _, rhs = text.partition("=")
        left, right = lhs.split(":")
        a0, b0 = (float(v) for v in left.split(","))
        aL, bL = (float(v) for v in right.split(","))
        c1, c2 = (float(v) for v in rhs.split(":")) if rhs else (0.0, 0.0)
    except ValueError as exc:
        raise UsageError(f"cannot parse boundary condition {text!r}: expected a,b:a,b[=c1:c2]") from exc
    return BoundaryCondition(BoundaryEquation(a0, b0, c1), BoundaryEquation(aL, bL, c2), label="custom")


def resolve_bc(args) -> BoundaryCondition:
    picked = [args.family is not None, args.custom is not None, args.theta0 is not None or args.thetaL is not None]
    if sum(picked) != 1:
        raise UsageError("give exactly one of --family, --custom, or --theta0/--thetaL")
    if args.family is not None:
        return family_bc(args.family)
    if args.custom is not None:
        return parse_custom(args.custom)
    if args.theta0 is None or args.thetaL is None:
        raise UsageError("--theta0 and --thetaL must be given together")
    return BoundaryCondition.from_angles(args.theta0, args.thetaL)


def _well(args) -> WellConfig:
    return WellConfig(args.L)


def _inputs(args, bc: BoundaryCondition | None = None) -> dict:
    out = {}
    if bc is not None:
        out["bc"] = bc_dict(canonicalize_bc(bc))
    for key in ("count", "qmax", "grid", "L", "N", "families", "strict_paper"):
        if hasattr(args, key):
            out[key] = getattr(args, key)
    return out


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _family_audit(bc: BoundaryCondition):
    if bc.label in FAMILIES:
        return audit((bc.label,))
    return {"findings": [], "errata": [], "confirmed": []}


def _oracle_rows(rep, bc, args) -> list:
    try:
        oracle = oracle_energies(bc, len(rep.states), args.N, _well(args))
    except UnsupportedBoundary as exc:
        log.warning("oracle skipped: %s", exc)
        return []
    return oracle_table(rep.energies, oracle)


def cmd_spectrum(args) -> int:
    bc = resolve_bc(args)
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    report = RunReport("spectrum", _inputs(args, bc))
    rep = find_spectrum(bc, args.count, _well(args), args.qmax, args.scan_points)
    report.spectrum = spectrum_dict(rep)
    report.negative_scan = scan_dict(rep.negative_scan)
    if not args.no_oracle:
        report.oracle_comparison = _oracle_rows(rep, bc, args)
    _attach_audit(report, _family_audit(bc))
    _emit(report.to_json(), args.out)
    return EXIT_OK


def _attach_audit(report: RunReport, result: dict) -> None:
    report.paper_audit = result["findings"]
    report.errata = result["errata"]
    report.confirmed_claims = result["confirmed"]


def cmd_negscan(args) -> int:
    bc = resolve_bc(args)
    well = _well(args)
    scan = negative_energy_scan(bc, args.qmax, args.scan_points, well)
    report = RunReport("negscan", _inputs(args, bc))
    report.negative_scan = scan_dict(scan)
    if not bc.is_homogeneous:
        samples = []
        for q in _SAMPLE_QL:
            try:
                sol = solve_coefficients(bc, EnergyClass.NEGATIVE, q)
            except SquareWellError as exc:
                samples.append({"qL": q, "error": str(exc)})
                continue
            samples.append({"qL": q, "G": [sol.coefficients[0].real, sol.coefficients[0].imag],
                            "H": [sol.coefficients[1].real, sol.coefficients[1].imag]})
        report.negative_scan["particular_coefficients"] = samples
    status = EXIT_OK
    try:
        count = negative_count(bc.homogeneous(), args.N, well)
    except UnsupportedBoundary as exc:
        count = None
        log.warning("oracle skipped: %s", exc)
    report.negative_scan["oracle_negative_count"] = count
    if count is not None and count != scan.count:
        report.status = "inconsistent"
        status = EXIT_INCONSISTENT
        print(f"scan found {scan.count} root(s), oracle found {count} negative eigenvalue(s)", file=sys.stderr)
    _attach_audit(report, _family_audit(bc))
    _emit(report.to_json(), args.out)
    return status


def cmd_sweep(args) -> int:
    n0 = args.grid0 or args.grid
    nL = args.gridL or args.grid
    try:
        g0, gL = theta_grid(n0), theta_grid(nL)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    cells = bc_sweep(g0, gL, args.qmax, args.scan_points, workers=args.workers)
    _emit(sweep_csv(cells), args.out)
    if args.no_oracle:
        return EXIT_OK
    lookup = {(c.theta0, c.thetaL): c for c in cells}
    bad = []
    for t0 in subsample(g0):
        for tL in subsample(gL):
            n = negative_count(BoundaryCondition.from_angles(t0, tL), args.N)
            if n != lookup[(t0, tL)].negative_count:
                bad.append((t0, tL, lookup[(t0, tL)].negative_count, n))
    if args.report:
        report = RunReport("sweep", _inputs(args))
        report.checks = [{"name": "sweep-oracle-consistency", "passed": not bad, "mismatches": [list(b) for b in bad],
                          "cells": cells_to_dicts(cells)}]
        report.status = "ok" if not bad else "inconsistent"
        report.write(args.report)
    if bad:
        for t0, tL, s, o in bad:
            print(f"theta0={t0:.6f} thetaL={tL:.6f}: scan {s}, oracle {o}", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_hermiticity(args) -> int:
    bc = resolve_bc(args)
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    rep = find_spectrum(bc, args.count, _well(args), args.qmax, args.scan_points)
    herm = check_hermiticity(bc, rep.states)
    report = RunReport("hermiticity", _inputs(args, bc))
    report.spectrum = spectrum_dict(rep)
    report.hermiticity = hermiticity_dict(herm)
    _emit(report.to_json(), args.out)
    return EXIT_OK


def _parse_families(text: str | None) -> tuple[str, ...]:
    if not text:
        return FAMILIES
    fams = tuple(f.strip().upper() for f in text.split(",") if f.strip())
    unknown = [f for f in fams if f not in FAMILIES]
    if unknown or not fams:
        raise UsageError(f"unknown families {unknown}; choose from {','.join(FAMILIES)}")
    return fams


def cmd_validate(args) -> int:
    families = _parse_families(args.families)
    checks = run_all(families, args.N)
    report = RunReport("validate", _inputs(args))
    report.checks = [c.as_dict() for c in checks]
    _attach_audit(report, audit(families, args.qmax))
    failed = [c.name for c in checks if not c.passed]
    code = EXIT_OK
    if failed:
        report.status = "failed"
        code = EXIT_FAILED
        print("failed checks: " + ", ".join(failed), file=sys.stderr)
    elif args.strict_paper and (report.paper_audit or report.errata):
        report.status = "paper-disagreement"
        code = EXIT_FAILED
        print(
            f"strict mode: {len(report.paper_audit)} contradicted claim(s), {len(report.errata)} formula erratum/errata",
            file=sys.stderr,
        )
    for c in checks:
        print(f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}", file=sys.stderr)
    _emit(report.to_json(), args.out)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="squarewell", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, bc=True):
        if bc:
            p.add_argument("--family", choices=FAMILIES)
            p.add_argument("--custom", metavar="a,b:a,b[=c1:c2]")
            p.add_argument("--theta0", type=float)
            p.add_argument("--thetaL", type=float)
        p.add_argument("--qmax", type=float, default=DEFAULT_QMAX)
        p.add_argument("--scan-points", type=int, default=DEFAULT_SCAN_POINTS)
        p.add_argument("--L", type=float, default=1.0)
        p.add_argument("--N", type=int, default=DEFAULT_N, help="oracle grid size")
        p.add_argument("--out", help="output file (default stdout)")

    p = sub.add_parser("spectrum", help="lowest eigenstates of a boundary condition")
    common(p)
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--no-oracle", action="store_true")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("negscan", help="negative-energy scan with oracle cross-check")
    common(p)
    p.set_defaults(func=cmd_negscan)

    p = sub.add_parser("sweep", help="verdict grid over boundary angles (CSV)")
    common(p, bc=False)
    p.add_argument("--grid", type=int, default=20)
    p.add_argument("--grid0", type=int)
    p.add_argument("--gridL", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--report", help="also write a JSON report with the oracle subsample check")
    p.add_argument("--no-oracle", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("hermiticity", help="boundary terms and Gram matrix of the lowest states")
    common(p)
    p.add_argument("--count", type=int, default=8)
    p.set_defaults(func=cmd_hermiticity)

    p = sub.add_parser("validate", help="run every reproduction check")
    common(p, bc=False)
    p.add_argument("--families", help="comma-separated subset of A,B,C,D,E")
    p.add_argument("--strict-paper", action="store_true", help="fail on any published claim that does not hold")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, InvalidBoundaryCondition, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IncompleteSpectrum as exc:
        print(f"incomplete: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE


if __name__ == "__main__":
    sys.exit(main())
