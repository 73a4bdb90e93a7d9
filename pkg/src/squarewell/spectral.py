"""Positive-energy spectrum by root finding on the boundary determinant."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .bcalgebra import (
    DEFAULT_QMAX,
    DEFAULT_SCAN_POINTS,
    NegativeScanReport,
    Verdict,
    boundary_matrix,
    positive_determinant,
    kernel_vector,
    negative_energy_scan,
    zero_mode_detect,
)
from .core import (
    DEFAULT_WELL,
    BoundaryCondition,
    Eigenstate,
    EnergyClass,
    IncompleteSpectrum,
    TrivialState,
    WellConfig,
)
from .roots import bisect
from .states import normalize, state_from_coefficients

__all__ = [
    "SpectrumReport",
    "characteristic",
    "find_spectrum",
    "normalize",
    "positive_roots",
]

log = logging.getLogger(__name__)

BRACKET_WIDTH = math.pi / 4
SCAN_START = 1e-6
# bisect until the bracket cannot shrink further; 1e-12 alone leaves
# boundary residuals of order kL * 1e-12
ROOT_XTOL = 0.0
MIN_ROOT_GAP = 1e-8
DEGENERATE_TOL = 1e-9
_FD_STEP = 1e-6


@dataclass(frozen=True)
class SpectrumReport:
    bc: BoundaryCondition
    states: tuple[Eigenstate, ...]
    negative_scan: NegativeScanReport
    requested_count: int
    degenerate_roots: tuple[float, ...] = ()

    @property
    def negative_verdict(self) -> Verdict:
        return self.negative_scan.verdict

    @property
    def energies(self) -> list[float]:
        return [s.energy for s in self.states]

    @property
    def zero_mode(self) -> Eigenstate | None:
        for s in self.states:
            if s.energy_class is EnergyClass.ZERO:
                return s
        return None


def characteristic(bc: BoundaryCondition, kL):
    """Real function of kL whose zeros are the positive eigenwavenumbers.

    The complex determinant on the e^{+-ikx} basis equals -2i times the
    determinant on the {cos, sin} basis, so the unit phase i turns it real
    (see :func:`positive_determinant`).  Dividing by the row norms of the real
    system keeps the value in [-1, 1]; for Dirichlet-Dirichlet it is exactly
    sin(kL).
    """
    w = np.asarray(kL, dtype=float)
    e0, eL = bc.at_zero, bc.at_L
    scale = np.sqrt(e0.a**2 + (e0.b * w) ** 2) * np.sqrt(eL.a**2 + (eL.b * w) ** 2)
    out = positive_determinant(bc, w) / scale
    return float(out) if out.ndim == 0 else out


def _degenerate_root(f, lo: float, hi: float) -> float | None:
    """Touching zero of ``f`` on [lo, hi] found through a sign change of its slope."""

    def slope(x):
        x = max(x, 2 * _FD_STEP)
        return (f(x + _FD_STEP) - f(x - _FD_STEP)) / (2 * _FD_STEP)

    try:
        x = bisect(slope, lo, hi, ROOT_XTOL)
    except ValueError:
        return None
    return x if abs(f(x)) < DEGENERATE_TOL else None


def positive_roots(bc: BoundaryCondition, count: int, k_limit: float | None = None):
    """First ``count`` zeros of :func:`characteristic` plus any touching zeros seen on the way.

    Brackets of width pi/4 are scanned upward from kL = 1e-6.
    """
    if k_limit is None:
        k_limit = (count + 4) * math.pi * 2

    def f(k):
        return characteristic(bc, k)

    roots: list[float] = []
    degenerate: list[float] = []
    lo, flo = SCAN_START, f(SCAN_START)
    while len(roots) < count and lo < k_limit:
        hi = lo + BRACKET_WIDTH
        fhi = f(hi)
        if flo == 0:
            roots.append(lo)
        elif fhi != 0 and math.copysign(1.0, flo) != math.copysign(1.0, fhi):
            roots.append(bisect(f, lo, hi, ROOT_XTOL))
        else:
            d = _degenerate_root(f, lo, hi)
            if d is not None:
                log.warning("touching root of the characteristic at kL=%.15g", d)
                degenerate.append(d)
        if len(roots) >= 2 and roots[-1] - roots[-2] < MIN_ROOT_GAP:
            roots.pop()
        lo, flo = hi, fhi
    return roots[:count], degenerate


def find_spectrum(
    bc: BoundaryCondition,
    count: int,
    well: WellConfig = DEFAULT_WELL,
    qL_max: float = DEFAULT_QMAX,
    scan_points: int = DEFAULT_SCAN_POINTS,
) -> SpectrumReport:
    """Lowest ``count`` states: negative bound states, then a zero mode, then positive states.

    Indices run from 0 in order of increasing energy.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    hom = bc.homogeneous()
    scan = negative_energy_scan(hom, qL_max, scan_points, well)
    zero = zero_mode_detect(hom, well)

    lower = sorted(scan.bound_states, key=lambda s: s.energy)
    if zero is not None:
        lower.append(zero)
    need = count - len(lower)

    positive: list[Eigenstate] = []
    degenerate: list[float] = []
    if need > 0:
        k_limit = (count + 4) * math.pi * 2
        roots, degenerate = positive_roots(hom, need, k_limit)
        for k in roots:
            v = kernel_vector(boundary_matrix(hom, EnergyClass.POSITIVE, k))
            try:
                positive.append(state_from_coefficients(EnergyClass.POSITIVE, k, v, 0, well.L))
            except TrivialState:
                log.info("discarding trivial root kL=%.15g", k)
        if len(positive) < need:
            raise IncompleteSpectrum(
                f"found {len(positive)} of {need} positive states below kL={k_limit:.6g}"
            )

    ordered = (lower + positive)[:count]
    states = tuple(
        Eigenstate(s.energy_class, s.wavenumber, s.coefficients, s.norm_constant, i, s.L)
        for i, s in enumerate(ordered)
    )
    return SpectrumReport(
        bc=bc,
        states=states,
        negative_scan=scan,
        requested_count=count,
        degenerate_roots=tuple(degenerate),
    )
