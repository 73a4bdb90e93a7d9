"""Boundary systems on the three general-solution bases.

Any separated condition applied to a two-function basis gives a 2x2 linear
system for the coefficient pair.  Its determinant decides whether a
homogeneous condition admits a nontrivial solution at a given wavenumber,
which is all the negative-energy question needs.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_WELL,
    BoundaryCondition,
    BoundaryEquation,
    Eigenstate,
    EnergyClass,
    InconsistentSystem,
    WellConfig,
    basis_values,
)
from .roots import refine_brackets, sign_change_brackets
from .states import state_from_coefficients

log = logging.getLogger(__name__)

SCAN_START = 1e-6
DEFAULT_QMAX = 50.0
DEFAULT_SCAN_POINTS = 10_000
# bisect until the bracket cannot shrink further; 1e-12 alone leaves
# boundary residuals of order kL * 1e-12
ROOT_XTOL = 0.0

# |det| below this fraction of the Hadamard bound is treated as singular.
SINGULAR_RTOL = 1e-13
ZERO_MODE_RTOL = 1e-12


class Verdict(str, enum.Enum):
    ELIMINATED = "eliminated"
    BOUND_STATES_FOUND = "bound-states-found"


@dataclass(frozen=True)
class CoefficientSolution:
    coefficients: tuple[complex, complex]
    determinant: complex
    rhs: tuple[float, float]
    kernel: bool = False


@dataclass(frozen=True)
class NegativeScanReport:
    bc: BoundaryCondition
    roots: tuple[float, ...]
    verdict: Verdict
    bound_states: tuple[Eigenstate, ...]
    qL_max: float
    grid_points: int

    @property
    def count(self) -> int:
        return len(self.roots)


def _rows(eq: BoundaryEquation, energy_class: EnergyClass, w, s: float):
    phi0, phi1, dphi0, dphi1 = basis_values(energy_class, w, s)
    return eq.a * phi0 + eq.b * dphi0, eq.a * phi1 + eq.b * dphi1


def boundary_matrix(
    bc: BoundaryCondition, energy_class: EnergyClass, wavenumber: float | None = None
) -> np.ndarray:
    """Row i is boundary equation i applied to the two basis functions of the class.

    Bases are e^{+-qx} (negative), e^{+-ikx} (positive) and {x/L, 1} (zero);
    ``wavenumber`` is the dimensionless qL or kL and is ignored for the zero class.
    """
    energy_class = EnergyClass(energy_class)
    if energy_class is not EnergyClass.ZERO and not wavenumber > 0:
        raise ValueError(f"wavenumber must be positive, got {wavenumber!r}")
    r0 = _rows(bc.at_zero, energy_class, wavenumber, 0.0)
    r1 = _rows(bc.at_L, energy_class, wavenumber, 1.0)
    dtype = complex if energy_class is EnergyClass.POSITIVE else float
    return np.array([[r0[0], r0[1]], [r1[0], r1[1]]], dtype=dtype)


def determinant(bc: BoundaryCondition, energy_class: EnergyClass, w):
    """Determinant of :func:`boundary_matrix`, elementwise over an array of wavenumbers."""
    energy_class = EnergyClass(energy_class)
    a00, a01 = _rows(bc.at_zero, energy_class, w, 0.0)
    a10, a11 = _rows(bc.at_L, energy_class, w, 1.0)
    return a00 * a11 - a01 * a10


def negative_characteristic(bc: BoundaryCondition, qL):
    """Negative-class determinant divided by 2 qL, in a form that is exact near qL = 0.

    Expanding the e^{+-qx} determinant gives
    2 [qL D cosh(qL) - (a0 aL - b0 bL qL^2) sinh(qL)] with D = b0 aL - a0 bL.
    Dividing by 2 qL leaves a smooth function whose qL -> 0 limit is the
    zero-energy determinant, so a zero mode cannot leak in as a spurious
    root just above qL = 0.
    """
    q = np.asarray(qL, dtype=float)
    e0, eL = bc.at_zero, bc.at_L
    cross = e0.b * eL.a - e0.a * eL.b
    sinhc = np.sinh(q) / np.where(q == 0, 1.0, q)
    sinhc = np.where(q == 0, 1.0, sinhc)
    out = cross * np.cosh(q) - (e0.a * eL.a - e0.b * eL.b * q * q) * sinhc
    return float(out) if out.ndim == 0 else out


def positive_determinant(bc: BoundaryCondition, kL):
    """Determinant on the {cos, sin} basis; equals (i/2) times the e^{+-ikx} determinant.

    Written out as kL [a0 aL sinc(kL) - D cos(kL) + b0 bL kL sin(kL)] so that
    it stays sign-reliable as kL -> 0.
    """
    w = np.asarray(kL, dtype=float)
    e0, eL = bc.at_zero, bc.at_L
    cross = e0.b * eL.a - e0.a * eL.b
    sinc = np.sinc(w / np.pi)
    out = w * (e0.a * eL.a * sinc - cross * np.cos(w) + e0.b * eL.b * w * np.sin(w))
    return float(out) if out.ndim == 0 else out


def _hadamard(m: np.ndarray) -> float:
    return float(np.linalg.norm(m[0]) * np.linalg.norm(m[1]))


def kernel_vector(m: np.ndarray) -> np.ndarray:
    """Unit null vector of a (numerically) singular 2x2 matrix.

    Sign/phase fixed so the first nonzero component is real and positive.
    """
    _, _, vh = np.linalg.svd(m)
    v = np.conj(vh[-1]).astype(complex)
    v /= np.linalg.norm(v)
    for c in v:
        if abs(c) > 1e-14:
            v *= abs(c) / c
            break
    return v


def solve_coefficients(
    bc: BoundaryCondition,
    energy_class: EnergyClass,
    wavenumber: float | None = None,
    c1: float | None = None,
    c2: float | None = None,
) -> CoefficientSolution:
    """Solve the boundary system for the coefficient pair.

    ``c1``/``c2`` default to the right-hand sides carried by ``bc``.  A singular
    homogeneous system returns a unit kernel vector; a singular system with a
    nonzero right-hand side raises :class:`InconsistentSystem`.
    """
    rhs = (
        float(bc.at_zero.rhs if c1 is None else c1),
        float(bc.at_L.rhs if c2 is None else c2),
    )
    m = boundary_matrix(bc, energy_class, wavenumber)
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    det = complex(det) if m.dtype == complex else float(det)
    singular = abs(det) <= SINGULAR_RTOL * _hadamard(m)
    if not singular:
        coeffs = np.linalg.solve(m.astype(complex), np.asarray(rhs, dtype=complex))
        return CoefficientSolution(tuple(complex(c) for c in coeffs), det, rhs)
    if rhs == (0.0, 0.0):
        v = kernel_vector(m)
        return CoefficientSolution(tuple(complex(c) for c in v), det, rhs, kernel=True)
    raise InconsistentSystem(
        f"singular boundary system (det={det:.3e}) with nonzero right-hand side {rhs}",
        determinant=det,
    )


def negative_energy_scan(
    bc: BoundaryCondition,
    qL_max: float = DEFAULT_QMAX,
    grid_points: int = DEFAULT_SCAN_POINTS,
    well: WellConfig = DEFAULT_WELL,
) -> NegativeScanReport:
    """Locate every qL in (0, qL_max] where the homogeneous negative-energy system is singular.

    Roots are accepted only through a sign change of the determinant (in the
    form of :func:`negative_characteristic`) on a uniform grid starting at
    qL = 1e-6, then bisected to machine precision.  The E = 0
    case is left to :func:`zero_mode_detect`.
    """
    if not qL_max > 0:
        raise ValueError("qL_max must be positive")
    if grid_points < 100:
        raise ValueError("grid_points must be at least 100")
    hom = bc.homogeneous()
    grid = np.linspace(SCAN_START, qL_max, grid_points)
    values = negative_characteristic(hom, grid)

    def f(q):
        return negative_characteristic(hom, q)

    roots = refine_brackets(f, sign_change_brackets(grid, values), ROOT_XTOL)
    roots = sorted(roots)
    # lowest energy (largest qL) gets index 0
    states = []
    for rank, q in enumerate(sorted(roots, reverse=True)):
        v = kernel_vector(boundary_matrix(hom, EnergyClass.NEGATIVE, q))
        states.append(state_from_coefficients(EnergyClass.NEGATIVE, q, v, rank, well.L))
    states.sort(key=lambda s: s.wavenumber)
    verdict = Verdict.BOUND_STATES_FOUND if roots else Verdict.ELIMINATED
    if roots:
        log.info("negative-energy roots for %s: %s", bc.describe(), roots)
    return NegativeScanReport(
        bc=bc,
        roots=tuple(float(r) for r in roots),
        verdict=verdict,
        bound_states=tuple(states),
        qL_max=float(qL_max),
        grid_points=int(grid_points),
    )


def zero_mode_detect(bc: BoundaryCondition, well: WellConfig = DEFAULT_WELL) -> Eigenstate | None:
    """E = 0 state of the linear form A x + B, if the homogeneous condition admits one."""
    m = boundary_matrix(bc.homogeneous(), EnergyClass.ZERO)
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    if abs(det) > ZERO_MODE_RTOL * _hadamard(m):
        return None
    v = kernel_vector(m)
    return state_from_coefficients(EnergyClass.ZERO, None, v, 0, well.L)
