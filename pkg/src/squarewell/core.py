"""Shared vocabulary: well geometry, boundary conditions, eigenstates.

Units are dimensionless throughout: energies are reported in units of
hbar^2 / (2 m L^2), so a positive state has E = (kL)^2 and a negative one
E = -(qL)^2.  Boundary equations act on (Psi, L Psi') so their coefficients
carry no dimension either.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace

import numpy as np


class SquareWellError(Exception):
    """Base class for library errors."""


class InvalidBoundaryCondition(SquareWellError, ValueError):
    pass


class DomainError(SquareWellError, ValueError):
    pass


class SingularDenominator(SquareWellError, ArithmeticError):
    pass


class InconsistentSystem(SquareWellError, ArithmeticError):
    """Singular boundary system with a right-hand side outside its range."""

    def __init__(self, message: str, determinant: complex):
        super().__init__(message)
        self.determinant = determinant


class TrivialState(SquareWellError, ValueError):
    pass


class IncompleteSpectrum(SquareWellError, RuntimeError):
    pass


class UnsupportedBoundary(SquareWellError, ValueError):
    pass


class ConvergenceError(SquareWellError, RuntimeError):
    pass


@dataclass(frozen=True)
class WellConfig:
    """Infinite square well occupying 0 < x < L."""

    L: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.L) and self.L > 0):
            raise ValueError(f"well width must be positive and finite, got {self.L!r}")


DEFAULT_WELL = WellConfig()


@dataclass(frozen=True)
class BoundaryEquation:
    """``a * Psi(x0) + b * L * Psi'(x0) = rhs`` at a single endpoint."""

    a: float
    b: float
    rhs: float = 0.0

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.a, self.b, self.rhs)):
            raise InvalidBoundaryCondition(f"non-finite boundary coefficients {self}")
        if self.a == 0 and self.b == 0:
            raise InvalidBoundaryCondition("boundary equation needs (a, b) != (0, 0)")

    @classmethod
    def from_angle(cls, theta: float, rhs: float = 0.0) -> BoundaryEquation:
        """``cos(theta) Psi + sin(theta) L Psi' = rhs``."""
        return cls(math.cos(theta), math.sin(theta), rhs)

    def canonical(self) -> BoundaryEquation:
        norm = math.hypot(self.a, self.b)
        sign = 1.0 if (self.a > 0 or (self.a == 0 and self.b > 0)) else -1.0
        s = sign / norm
        return BoundaryEquation(self.a * s, self.b * s, self.rhs * s)

    @property
    def is_dirichlet(self) -> bool:
        return self.b == 0

    def residual(self, value: complex, scaled_slope: complex) -> complex:
        """Left side minus rhs, given Psi(x0) and L*Psi'(x0)."""
        return self.a * value + self.b * scaled_slope - self.rhs


@dataclass(frozen=True)
class BoundaryCondition:
    """Separated two-point condition: one equation at x=0, one at x=L."""

    at_zero: BoundaryEquation
    at_L: BoundaryEquation
    label: str | None = field(default=None, compare=False)

    @property
    def rhs(self) -> tuple[float, float]:
        return (self.at_zero.rhs, self.at_L.rhs)

    @property
    def is_homogeneous(self) -> bool:
        return self.at_zero.rhs == 0 and self.at_L.rhs == 0

    def homogeneous(self) -> BoundaryCondition:
        return replace(
            self,
            at_zero=replace(self.at_zero, rhs=0.0),
            at_L=replace(self.at_L, rhs=0.0),
        )

    def with_rhs(self, c1: float, c2: float) -> BoundaryCondition:
        return replace(
            self,
            at_zero=replace(self.at_zero, rhs=float(c1)),
            at_L=replace(self.at_L, rhs=float(c2)),
        )

    @classmethod
    def from_angles(cls, theta0: float, thetaL: float) -> BoundaryCondition:
        return cls(BoundaryEquation.from_angle(theta0), BoundaryEquation.from_angle(thetaL))

    def describe(self) -> str:
        def fmt(eq: BoundaryEquation) -> str:
            return f"{eq.a:.6g},{eq.b:.6g}"

        text = f"{fmt(self.at_zero)}:{fmt(self.at_L)}"
        if not self.is_homogeneous:
            text += f"={self.at_zero.rhs:.6g}:{self.at_L.rhs:.6g}"
        return text


def canonicalize_bc(bc: BoundaryCondition) -> BoundaryCondition:
    """Scale each equation to a^2 + b^2 = 1 with the first nonzero of (a, b) positive.

    The right-hand side is scaled by the same factor, so the solution set of
    each equation is unchanged.
    """
    return replace(bc, at_zero=bc.at_zero.canonical(), at_L=bc.at_L.canonical())


# (a, b) at x=0 and at x=L for the five reference families.
FAMILY_COEFFICIENTS: dict[str, tuple[tuple[float, float], tuple[float, float]]] = {
    "A": ((1.0, 0.0), (1.0, 0.0)),  # Psi(0) = c1, Psi(L) = c2
    "B": ((0.0, 1.0), (0.0, 1.0)),  # L Psi'(0) = c1, L Psi'(L) = c2
    "C": ((1.0, 0.0), (0.0, 1.0)),  # Psi(0) = c1, L Psi'(L) = c2
    "D": ((0.0, 1.0), (1.0, 0.0)),  # L Psi'(0) = c1, Psi(L) = c2
    "E": ((1.0, 1.0), (1.0, 1.0)),  # Psi + L Psi' = c at both ends
}

FAMILIES = tuple(FAMILY_COEFFICIENTS)


def family_bc(family: str, c1: float = 0.0, c2: float = 0.0) -> BoundaryCondition:
    try:
        (a0, b0), (aL, bL) = FAMILY_COEFFICIENTS[family]
    except KeyError:
        raise InvalidBoundaryCondition(
            f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}"
        ) from None
    return BoundaryCondition(
        BoundaryEquation(a0, b0, float(c1)),
        BoundaryEquation(aL, bL, float(c2)),
        label=family,
    )


class EnergyClass(str, enum.Enum):
    NEGATIVE = "negative"
    ZERO = "zero"
    POSITIVE = "positive"


def basis_values(energy_class: EnergyClass, w: float | None, s):
    """The two basis functions and their L-scaled slopes at s = x/L.

    Returns ``(phi0, phi1, Lphi0', Lphi1')``.  Bases: e^{+-i w s} (positive),
    e^{+-w s} (negative), {s, 1} (zero).  Works elementwise on arrays.
    """
    s = np.asarray(s, dtype=float)
    if energy_class is EnergyClass.POSITIVE:
        p = np.exp(1j * w * s)
        m = np.exp(-1j * w * s)
        return p, m, 1j * w * p, -1j * w * m
    if energy_class is EnergyClass.NEGATIVE:
        p = np.exp(w * s)
        m = np.exp(-w * s)
        return p, m, w * p, -w * m
    return s, np.ones_like(s), np.ones_like(s), np.zeros_like(s)


@dataclass(frozen=True)
class Eigenstate:
    """A stationary state of the well.

    ``Psi(x) = norm_constant * (c0 * phi0(x/L) + c1 * phi1(x/L))`` inside the
    well with the basis picked by ``energy_class`` (see :func:`basis_values`);
    ``coefficients`` is a unit vector.  For the zero class the pair is
    (slope * L, intercept) of the linear form A x + B.  ``wavenumber`` is kL or
    qL and is None for the zero class.
    """

    energy_class: EnergyClass
    wavenumber: float | None
    coefficients: tuple[complex, complex]
    norm_constant: float
    index: int
    L: float = 1.0

    @property
    def energy(self) -> float:
        if self.energy_class is EnergyClass.POSITIVE:
            return self.wavenumber**2
        if self.energy_class is EnergyClass.NEGATIVE:
            return -(self.wavenumber**2)
        return 0.0

    def _combine(self, x, derivative: bool):
        phi0, phi1, dphi0, dphi1 = basis_values(self.energy_class, self.wavenumber, x / self.L)
        c0, c1 = self.coefficients
        if derivative:
            return self.norm_constant * (c0 * dphi0 + c1 * dphi1) / self.L
        return self.norm_constant * (c0 * phi0 + c1 * phi1)

    def value(self, x):
        """Psi from the interior formula (no cut-off at the walls)."""
        return self._combine(x, derivative=False)

    def derivative(self, x):
        """Psi' from the interior formula, exact in the basis."""
        return self._combine(x, derivative=True)

    def boundary_residuals(self, bc: BoundaryCondition) -> tuple[complex, complex]:
        """Residuals of the homogeneous boundary equations, scaled by sqrt(L)."""
        out = []
        for eq, x in ((bc.at_zero, 0.0), (bc.at_L, self.L)):
            v = complex(self.value(x))
            d = complex(self.derivative(x)) * self.L
            out.append((eq.a * v + eq.b * d) * math.sqrt(self.L))
        return tuple(out)


def eval_eigenstate(state: Eigenstate, x):
    """Psi(x), zero outside [0, L]; accepts scalars or arrays."""
    xa = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(xa)):
        raise DomainError(f"position must be finite, got {x!r}")
    inside = (xa >= 0.0) & (xa <= state.L)
    out = np.where(inside, state.value(np.clip(xa, 0.0, state.L)), 0.0 + 0.0j)
    if out.ndim == 0:
        return complex(out)
    return out
