"""Reproduction checks run by ``squarewell validate``.

Each check returns a :class:`CheckResult`; the tolerances are fixed here and
mirror the acceptance test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .analytic import negative_coefficients_closed_form
from .bcalgebra import negative_energy_scan, solve_coefficients
from .core import FAMILIES, BoundaryCondition, EnergyClass, family_bc
from .fdoracle import DEFAULT_N, negative_count, oracle_energies, richardson_extrapolate
from .hermiticity import check_hermiticity
from .spectral import find_spectrum
from .sweep import bc_sweep, theta_grid


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    metrics: dict = field(default_factory=dict)

    def __post_init__(self):
        self.passed = bool(self.passed)

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail, "metrics": self.metrics}


def _positive_kL(rep):
    return [s.wavenumber for s in rep.states if s.energy_class is EnergyClass.POSITIVE]


def _oracle_rel(rep, N: int) -> float:
    oracle = oracle_energies(rep.bc, len(rep.states), N)
    worst = 0.0
    for s, o in zip(rep.energies, oracle):
        if s == 0:
            continue
        worst = max(worst, abs(o - s) / abs(s))
    return worst


def check_family_a(N: int = DEFAULT_N) -> CheckResult:
    rep = find_spectrum(family_bc("A"), 10)
    exact = [(n * math.pi) ** 2 for n in range(1, 11)]
    err = max(abs(a - b) for a, b in zip(rep.energies, exact))
    rel = _oracle_rel(rep, N)
    ok = err < 1e-10 and rel < 1e-5
    return CheckResult("family-A-spectrum", ok, f"max |E - (n pi)^2| = {err:.3e}, oracle rel {rel:.3e}",
                       {"abs_error": err, "oracle_relative": rel})


def check_families_cd(N: int = DEFAULT_N) -> CheckResult:
    metrics = {}
    ok = True
    for fam in "CD":
        rep = find_spectrum(family_bc(fam), 10)
        exact = [(n + 0.5) * math.pi for n in range(10)]
        err = max(abs(a - b) for a, b in zip(_positive_kL(rep), exact))
        rel = _oracle_rel(rep, N)
        metrics[fam] = {"kL_error": err, "oracle_relative": rel}
        ok &= err < 1e-10 and rel < 1e-5
    return CheckResult("families-C-D-spectrum", ok, "kL = (n+1/2) pi and oracle agreement", metrics)


def check_family_b(N: int = DEFAULT_N) -> CheckResult:
    rep = find_spectrum(family_bc("B"), 11)
    zero = rep.zero_mode
    xs = np.linspace(0.0, 1.0, 7)
    const_err = float(np.max(np.abs(zero.value(xs) - 1.0))) if zero is not None else math.inf
    oracle_low = oracle_energies(rep.bc, 1, N)[0]
    cos_err = max(abs(e - (n * math.pi) ** 2) for n, e in enumerate(rep.energies[1:], 1))
    ok = zero is not None and const_err < 1e-12 and abs(oracle_low) < 1e-5 and cos_err < 1e-10
    return CheckResult(
        "family-B-zero-mode",
        ok,
        f"constant zero mode err {const_err:.2e}, oracle lowest {oracle_low:.2e}, cosine err {cos_err:.2e}",
        {"zero_mode_error": const_err, "oracle_lowest": oracle_low, "cosine_error": cos_err},
    )


def check_elimination(families=("A", "B", "C", "D"), N: int = DEFAULT_N) -> CheckResult:
    metrics = {}
    ok = True
    for fam in families:
        bc = family_bc(fam)
        roots = negative_energy_scan(bc, 50.0).roots
        count = negative_count(bc, N)
        metrics[fam] = {"scan_roots": len(roots), "oracle_negative": count}
        ok &= not roots and count == 0
    return CheckResult("negative-state-elimination", ok, "no roots and no negative oracle eigenvalues", metrics)


def check_family_e(N: int = DEFAULT_N) -> CheckResult:
    bc = family_bc("E")
    scan = negative_energy_scan(bc, 50.0)
    ok = len(scan.roots) == 1 and abs(scan.roots[0] - 1.0) < 1e-10
    metrics = {"roots": list(scan.roots)}
    if ok:
        state = scan.bound_states[0]
        residual = max(abs(r) for r in state.boundary_residuals(bc))
        xs = np.linspace(0.0, 1.0, 9)
        shape = state.value(xs) / state.value(0.0) - np.exp(-xs)
        shape_err = float(np.max(np.abs(shape)))
        count = negative_count(bc, N)
        rich = richardson_extrapolate(bc, 0)
        metrics.update(
            residual=residual,
            shape_error=shape_err,
            energy=state.energy,
            oracle_negative=count,
            extrapolated=rich.value,
        )
        ok = (
            residual < 1e-12
            and shape_err < 1e-10
            and abs(state.energy + 1.0) < 1e-10
            and count == 1
            and abs(rich.value + 1.0) < 1e-6
        )
    return CheckResult("family-E-bound-state", ok, "single bound state at qL = 1 with E = -1", metrics)


def check_coefficients(families=FAMILIES, seed: int = 20240611) -> CheckResult:
    rng = np.random.default_rng(seed)
    rhs = rng.uniform(-2.0, 2.0, size=(20, 2))
    worst = 0.0
    zero_ok = True
    for fam in families:
        bc = family_bc(fam)
        for q in (0.1, 0.5, 2.0, 5.0, 10.0):
            for c1, c2 in rhs:
                closed = negative_coefficients_closed_form(fam, q, c1, c2)
                generic = solve_coefficients(bc, EnergyClass.NEGATIVE, q, c1, c2)
                for a, b in zip(closed.coefficients, generic.coefficients):
                    worst = max(worst, abs(a - b) / max(1.0, abs(b)))
            zc = negative_coefficients_closed_form(fam, q, 0.0, 0.0)
            zero_ok &= zc.coefficients == (0j, 0j)
    ok = worst < 1e-12 and zero_ok
    return CheckResult("coefficient-formulas", ok, f"max componentwise mismatch {worst:.3e}",
                       {"max_mismatch": worst, "zero_rhs_gives_zero": zero_ok})


def check_hermiticity_all(families=FAMILIES) -> CheckResult:
    metrics = {}
    ok = True
    for fam in families:
        bc = family_bc(fam)
        rep = check_hermiticity(bc, find_spectrum(bc, 8).states)
        metrics[fam] = {"max_boundary_term": rep.max_boundary_term, "gram_deviation": rep.gram_deviation}
        ok &= rep.max_boundary_term < 1e-12 and rep.gram_deviation < 1e-10
    return CheckResult("hermiticity", ok, "boundary terms < 1e-12, Gram deviation < 1e-10", metrics)


def subsample(grid, n: int = 5):
    step = max(1, len(grid) // n)
    return list(grid)[::step][:n]


def check_sweep(grid_size: int = 20, N: int = DEFAULT_N) -> CheckResult:
    grid = theta_grid(grid_size)
    cells = bc_sweep(grid, grid)
    lookup = {(c.theta0, c.thetaL): c for c in cells}
    mismatches = []
    sub = subsample(grid)
    for t0 in sub:
        for tL in sub:
            n = negative_count(BoundaryCondition.from_angles(t0, tL), N)
            if n != lookup[(t0, tL)].negative_count:
                mismatches.append([t0, tL, lookup[(t0, tL)].negative_count, n])
    return CheckResult("sweep-oracle-consistency", not mismatches,
                       f"{len(sub) ** 2} subsampled cells, {len(mismatches)} mismatches",
                       {"mismatches": mismatches, "cells": len(cells)})


def ground_state_index(family: str) -> int:
    """Eigenvalue index used for the convergence check.

    Family B's ground state is the constant zero mode, which the difference
    scheme reproduces exactly at every N, so no order can be observed; its
    first cosine state is used instead.
    """
    return 1 if family == "B" else 0


def check_convergence(families=FAMILIES) -> CheckResult:
    metrics = {}
    ok = True
    for fam in families:
        rich = richardson_extrapolate(family_bc(fam), ground_state_index(fam))
        metrics[fam] = {"order": rich.order, "value": rich.value}
        ok &= abs(rich.order - 2.0) <= 0.2
    return CheckResult("richardson-order", ok, "observed order 2.0 +- 0.2", metrics)


def run_all(families=FAMILIES, N: int = DEFAULT_N) -> list[CheckResult]:
    families = tuple(families)
    checks = []
    if "A" in families:
        checks.append(check_family_a(N))
    if set("CD") & set(families):
        checks.append(check_families_cd(N))
    if "B" in families:
        checks.append(check_family_b(N))
    elim = tuple(f for f in families if f in "ABCD")
    if elim:
        checks.append(check_elimination(elim, N))
    if "E" in families:
        checks.append(check_family_e(N))
    checks.append(check_coefficients(families))
    checks.append(check_hermiticity_all(families))
    checks.append(check_sweep(20, N))
    checks.append(check_convergence(families))
    return checks
