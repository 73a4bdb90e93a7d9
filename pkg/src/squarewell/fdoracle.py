"""Finite-difference reference solver for -Psi'' = E Psi on (0, L).

Works in units hbar^2/(2m) = 1, so matrix eigenvalues are k^2; multiply by
L^2 for the dimensionless energies used elsewhere.  Boundary conditions are
built into the matrix: Dirichlet ends drop the boundary node, Neumann and
Robin ends keep it and eliminate a ghost node with a centred difference.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .core import (
    DEFAULT_WELL,
    BoundaryCondition,
    ConvergenceError,
    UnsupportedBoundary,
    WellConfig,
)

DEFAULT_N = 4000
# Dimensionless energies below -NEGATIVE_TOL count as negative.  Sturm counts are
# exact only up to about eps * ||H||, roughly 1e-8 at N = 4000.
NEGATIVE_TOL = 1e-6


@dataclass(frozen=True)
class DiscreteHamiltonian:
    grid_size: int
    spacing: float
    diagonal: np.ndarray
    off_diagonal: np.ndarray
    L: float
    encoding: tuple[str, str]
    # diagonal = scale * (2 + diag_defect), off_diagonal**2 = scale**2 * (1 + coupling_defect)
    scale: float
    diag_defect: np.ndarray
    coupling_defect: np.ndarray

    def dense(self) -> np.ndarray:
        return (
            np.diag(self.diagonal)
            + np.diag(self.off_diagonal, 1)
            + np.diag(self.off_diagonal, -1)
        )


def _kind(a: float, b: float) -> str:
    if b == 0:
        return "dirichlet"
    return "neumann" if a == 0 else "robin"


def discretize(bc: BoundaryCondition, N: int, well: WellConfig = DEFAULT_WELL) -> DiscreteHamiltonian:
    """Symmetric tridiagonal second-difference matrix with the condition encoded.

    At a Neumann/Robin end the ghost-node row reads (2 + 2 h kappa, -2)/h^2.
    That row is symmetrized by the diagonal similarity that scales the
    boundary unknown by 1/sqrt(2): the diagonal is kept and the coupling
    becomes -sqrt(2)/h^2.  Eigenvalues are unchanged, so the scheme stays
    second order.
    """
    if not bc.is_homogeneous:
        raise UnsupportedBoundary("the finite-difference oracle handles homogeneous conditions only")
    if N < 1:
        raise ValueError("grid size must be positive")
    L = well.L
    left, right = bc.at_zero, bc.at_L
    kinds = (_kind(left.a, left.b), _kind(right.a, right.b))
    kept_ends = sum(k != "dirichlet" for k in kinds)
    h = L / (N + 1 - kept_ends)
    inv_h2 = 1.0 / (h * h)

    delta = np.zeros(N)
    eps = np.zeros(N - 1)
    if kinds[0] != "dirichlet":
        # Psi'(0) = kappa Psi(0)
        kappa = -left.a / (left.b * L)
        delta[0] = 2.0 * h * kappa
        if N > 1:
            eps[0] = 1.0
    if kinds[1] != "dirichlet":
        kappa = -right.a / (right.b * L)
        delta[-1] = -2.0 * h * kappa
        if N > 1:
            eps[-1] = 1.0
    diag = (2.0 + delta) * inv_h2
    off = -np.sqrt(1.0 + eps) * inv_h2
    return DiscreteHamiltonian(N, h, diag, off, L, kinds, inv_h2, delta, eps)


def sturm_count(Hd: DiscreteHamiltonian, shift: float) -> int:
    """Number of eigenvalues strictly below ``shift`` (LDL^T inertia).

    The pivots are carried as q_i = scale * (1 + t_i) with
    t_i = delta_i - s + (t_{i-1} - eps_{i-1}) / (1 + t_{i-1}),
    which never forms 2 - s.  Low eigenvalues of the second-difference matrix
    sit at s ~ 1/N^2, and the plain recurrence would lose that many digits.
    """
    s = shift / Hd.scale
    delta = Hd.diag_defect.tolist()
    eps = Hd.coupling_defect.tolist()
    tiny = np.finfo(float).tiny
    t = 1.0 + delta[0] - s
    p = 1.0 + t
    if p == 0:
        p, t = -tiny, -1.0 - tiny
    count = 1 if p < 0 else 0
    for di, ei in zip(delta[1:], eps):
        t = di - s + (t - ei) / p
        p = 1.0 + t
        if p == 0:
            p, t = -tiny, -1.0 - tiny
        if p < 0:
            count += 1
    return count


def _gershgorin(Hd: DiscreteHamiltonian) -> tuple[float, float]:
    r = np.zeros(Hd.grid_size)
    a = np.abs(Hd.off_diagonal)
    r[:-1] += a
    r[1:] += a
    lo = float(np.min(Hd.diagonal - r))
    hi = float(np.max(Hd.diagonal + r))
    pad = 2 * np.finfo(float).eps * max(abs(lo), abs(hi)) + 1e-300
    return lo - pad, hi + pad


def eigenvalues(Hd: DiscreteHamiltonian, count: int) -> list[float]:
    """The ``count`` algebraically smallest eigenvalues, by Sturm-sequence bisection."""
    if not 1 <= count <= Hd.grid_size:
        raise ValueError(f"count must be in [1, {Hd.grid_size}]")
    glo, ghi = _gershgorin(Hd)
    lower = [glo] * count
    upper = [ghi] * count
    for j in range(count):
        a, b = lower[j], upper[j]
        while True:
            mid = 0.5 * (a + b)
            if not (a < mid < b) or b - a <= 1e-13 * max(1.0, abs(a), abs(b)):
                break
            c = sturm_count(Hd, mid)
            # every probe tightens the brackets of the eigenvalues still to come
            for i in range(j, count):
                if c > i:
                    upper[i] = min(upper[i], mid)
                else:
                    lower[i] = max(lower[i], mid)
            a, b = lower[j], upper[j]
    return [0.5 * (lower[j] + upper[j]) for j in range(count)]


def oracle_energies(
    bc: BoundaryCondition, count: int, N: int = DEFAULT_N, well: WellConfig = DEFAULT_WELL
) -> list[float]:
    """Lowest ``count`` dimensionless energies E L^2 of the discretized problem."""
    Hd = discretize(bc.homogeneous(), N, well)
    return [float(v * well.L**2) for v in eigenvalues(Hd, count)]


def negative_count(
    bc: BoundaryCondition, N: int = DEFAULT_N, well: WellConfig = DEFAULT_WELL, tol: float = NEGATIVE_TOL
) -> int:
    Hd = discretize(bc.homogeneous(), N, well)
    return sturm_count(Hd, -tol / well.L**2)


@dataclass(frozen=True)
class RichardsonResult:
    value: float
    order: float
    error_estimate: float
    grid_sizes: tuple[int, ...]
    spacings: tuple[float, ...]
    estimates: tuple[float, ...]


def richardson_extrapolate(
    bc: BoundaryCondition,
    index: int,
    N_sequence=(500, 1000, 2000),
    well: WellConfig = DEFAULT_WELL,
) -> RichardsonResult:
    """Continuum estimate of dimensionless eigenvalue ``index`` from a grid-doubling sequence.

    Fits E(h) = E0 + C h^p through the three finest grids.  The spacings are
    taken as they are (h = L/(N + 1 - kept ends)), not assumed to halve
    exactly.  The error estimate is the spread between this fit and plain
    second-order Richardson on the two finest grids.

    Raises:
        ConvergenceError: differences that change sign or vanish, so no
            order can be fitted.
    """
    Ns = [int(n) for n in N_sequence]
    if len(Ns) < 3:
        raise ValueError("need at least three grid sizes")
    if any(b != 2 * a for a, b in zip(Ns, Ns[1:])):
        raise ValueError(f"grid sizes must double, got {Ns}")
    hom = bc.homogeneous()
    values, spacings = [], []
    for n in Ns:
        Hd = discretize(hom, n, well)
        values.append(eigenvalues(Hd, index + 1)[index] * well.L**2)
        spacings.append(Hd.spacing / well.L)
    e1, e2, e3 = values[-3:]
    h1, h2, h3 = spacings[-3:]
    d12, d23 = e1 - e2, e2 - e3
    floor = 1e-9 * max(1.0, abs(e3))
    if abs(d23) <= floor or abs(d12) <= floor or d12 * d23 <= 0:
        raise ConvergenceError(
            f"non-monotone or stalled convergence for eigenvalue {index}: {values}"
        )
    ratio = d12 / d23

    def mismatch(p):
        return (h1**p - h2**p) / (h2**p - h3**p) - ratio

    try:
        p = brentq(mismatch, 0.05, 20.0, xtol=1e-14)
    except ValueError:
        raise ConvergenceError(f"no convergence order fits ratio {ratio:.6g}") from None
    value = e3 - d23 * h3**p / (h2**p - h3**p)
    second_order = e3 - d23 * h3**2 / (h2**2 - h3**2)
    return RichardsonResult(
        value=float(value),
        order=float(p),
        error_estimate=float(abs(value - second_order)),
        grid_sizes=tuple(Ns),
        spacings=tuple(spacings),
        estimates=tuple(values),
    )
