"""Closed-form results for the five reference boundary-condition families.

These are kept apart from the generic solver on purpose so the two routes can
be compared.  Where a published formula fails direct substitution the corrected
form is what the functions here return by default; the literal form stays
available (``printed=True``) for auditing.
"""

from __future__ import annotations

import enum
import math

from .core import (
    DEFAULT_WELL,
    Eigenstate,
    EnergyClass,
    SingularDenominator,
    WellConfig,
)
from .bcalgebra import CoefficientSolution
from .states import fix_phase


class FamilyId(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"


# First valid quantum number per family.
FIRST_INDEX = {"A": 1, "B": 1, "C": 0, "D": 0, "E": 1}


def closed_form_wavenumbers(family: str, count: int) -> list[float]:
    family = FamilyId(family).value
    if count < 1:
        raise ValueError("count must be at least 1")
    if family in ("C", "D"):
        return [(n + 0.5) * math.pi for n in range(count)]
    return [n * math.pi for n in range(1, count + 1)]


def family_e_ratio(kL: float) -> complex:
    """B/A for the family E positive state, from Psi(0) + L Psi'(0) = 0."""
    return complex(kL, -1.0) / complex(kL, 1.0)


def printed_family_e_ratio(kL: float) -> complex:
    """The ratio as published, (kL + i)/(kL - i); the complex conjugate of the correct one."""
    return complex(kL, 1.0) / complex(kL, -1.0)


def closed_form_eigenstate(
    family: str, n: int, well: WellConfig = DEFAULT_WELL, *, printed: bool = False
) -> Eigenstate:
    """Positive-energy eigenstate n of a family from its closed form.

    sin for A and C, cos for B and D, e^{ikx} + r e^{-ikx} for E.  For E the
    coefficient ratio is the one that satisfies the boundary equations unless
    ``printed`` is set.
    """
    family = FamilyId(family).value
    first = FIRST_INDEX[family]
    if not isinstance(n, int) or n < first:
        raise ValueError(f"family {family} states start at n={first}, got {n!r}")
    kL = closed_form_wavenumbers(family, n - first + 1)[-1]
    root_half = math.sqrt(0.5)
    if family in ("A", "C"):
        # sqrt(2/L) sin(kx) = (1/sqrt(L)) * (-i e^{ikx} + i e^{-ikx}) / sqrt(2)
        coeffs = (-1j * root_half, 1j * root_half)
    elif family in ("B", "D"):
        coeffs = (root_half + 0j, root_half + 0j)
    else:
        r = printed_family_e_ratio(kL) if printed else family_e_ratio(kL)
        coeffs = (root_half + 0j, r * root_half)
    state = Eigenstate(
        energy_class=EnergyClass.POSITIVE,
        wavenumber=kL,
        coefficients=coeffs,
        norm_constant=1.0 / math.sqrt(well.L),
        index=n,
        L=well.L,
    )
    return fix_phase(state)


def zero_energy_state(family: str, well: WellConfig = DEFAULT_WELL) -> Eigenstate | None:
    """The constant sqrt(1/L) state for family B; no other family has an E = 0 state."""
    if FamilyId(family) is not FamilyId.B:
        return None
    return Eigenstate(
        energy_class=EnergyClass.ZERO,
        wavenumber=None,
        coefficients=(0j, 1 + 0j),
        norm_constant=1.0 / math.sqrt(well.L),
        index=0,
        L=well.L,
    )


# (family, coefficient) pairs whose published expression fails substitution.
PRINTED_ERRATA = {
    ("B", "H"): "published H has the opposite overall sign",
    ("E", "G"): "published G carries a spurious factor qL on c2",
}


def closed_form_determinant(family: str, qL: float) -> float:
    """Determinant of the negative-energy boundary system on the e^{+-qx} basis."""
    family = FamilyId(family).value
    e = math.exp(qL)
    if family == "A":
        return 1 / e - e
    if family == "B":
        return qL**2 * (e - 1 / e)
    if family == "C":
        return -qL * (e + 1 / e)
    if family == "D":
        return qL * (e + 1 / e)
    return (1 - qL**2) * (1 / e - e)


def negative_coefficients_closed_form(
    family: str, qL: float, c1: float, c2: float, *, printed: bool = False
) -> CoefficientSolution:
    """(G, H) for Psi = G e^{qx} + H e^{-qx} under the family's inhomogeneous condition.

    The published formulas write k for the decay constant q.  With
    ``printed=True`` they are evaluated literally, including the two
    expressions listed in :data:`PRINTED_ERRATA`.

    Raises:
        SingularDenominator: family E at qL = 1, where the H denominator
            (qL - 1)(e^{2qL} - 1) vanishes.  This is the family E bound state.
    """
    family = FamilyId(family).value
    if not qL > 0:
        raise ValueError(f"qL must be positive, got {qL!r}")
    q = qL
    e = math.exp(q)
    e2m = e * e - 1.0
    e2p = e * e + 1.0
    if family == "A":
        G = (c2 * e - c1) / e2m
        H = e * (c1 * e - c2) / e2m
    elif family == "B":
        G = (c2 * e - c1) / (q * e2m)
        H = e * (c1 * e - c2) / (q * e2m)
        if not printed:
            H = -H
    elif family == "C":
        G = (c1 * q + c2 * e) / (q * e2p)
        H = e * (q * c1 * e - c2) / (q * e2p)
    elif family == "D":
        G = (c1 + c2 * q * e) / (q * e2p)
        H = e * (c2 * q - c1 * e) / (q * e2p)
    else:
        if q - 1.0 == 0.0:
            raise SingularDenominator("denominator (qL - 1)(e^{2qL} - 1) vanishes at qL = 1")
        if printed:
            G = (c2 * q * e - c1) / ((1 + q) * e2m)
        else:
            G = (c2 * e - c1) / ((1 + q) * e2m)
        H = e * (c2 - c1 * e) / ((q - 1) * e2m)
    return CoefficientSolution(
        coefficients=(complex(G), complex(H)),
        determinant=closed_form_determinant(family, q),
        rhs=(float(c1), float(c2)),
    )
