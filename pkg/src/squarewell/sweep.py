"""Verdict grid over the angle family cos(t) Psi + sin(t) L Psi' = 0 at each wall."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from .bcalgebra import DEFAULT_QMAX, DEFAULT_SCAN_POINTS, negative_energy_scan, zero_mode_detect
from .core import BoundaryCondition
from .spectral import positive_roots


@dataclass(frozen=True)
class SweepCell:
    theta0: float
    thetaL: float
    negative_count: int
    zero_mode: bool
    ground_energy: float


def theta_grid(n: int) -> list[float]:
    """n equally spaced angles covering [0, pi)."""
    if n < 2:
        raise ValueError("need at least two angles per axis")
    return [j * math.pi / n for j in range(n)]


def sweep_cell(
    theta0: float,
    thetaL: float,
    qL_max: float = DEFAULT_QMAX,
    scan_points: int = DEFAULT_SCAN_POINTS,
) -> SweepCell:
    bc = BoundaryCondition.from_angles(theta0, thetaL)
    scan = negative_energy_scan(bc, qL_max, scan_points)
    zero = zero_mode_detect(bc) is not None
    if scan.roots:
        ground = -max(scan.roots) ** 2
    elif zero:
        ground = 0.0
    else:
        (k,), _ = positive_roots(bc, 1)
        ground = k * k
    return SweepCell(theta0, thetaL, scan.count, zero, ground)


def _cell(pair, qL_max, scan_points):
    return sweep_cell(pair[0], pair[1], qL_max, scan_points)


def bc_sweep(
    theta0_grid,
    thetaL_grid,
    qL_max: float = DEFAULT_QMAX,
    scan_points: int = DEFAULT_SCAN_POINTS,
    workers: int | None = None,
) -> list[SweepCell]:
    """Negative-state count, zero-mode flag and ground energy for every (theta0, thetaL).

    Cells come back in row-major order (theta0 outer) whatever ``workers`` is.
    """
    pairs = [(t0, tL) for t0 in theta0_grid for tL in thetaL_grid]
    job = partial(_cell, qL_max=qL_max, scan_points=scan_points)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(job, pairs, chunksize=8))
    return [job(p) for p in pairs]
