"""Spectra, negative-energy scans and hermiticity checks for the 1D infinite square well."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    DEFAULT_WELL,
    FAMILIES,
    BoundaryCondition,
    BoundaryEquation,
    Eigenstate,
    EnergyClass,
    WellConfig,
    canonicalize_bc,
    eval_eigenstate,
    family_bc,
)
from .bcalgebra import (  # noqa: E402
    negative_energy_scan,
    solve_coefficients,
    zero_mode_detect,
)
from .spectral import find_spectrum  # noqa: E402

__all__ = [
    "DEFAULT_WELL",
    "FAMILIES",
    "BoundaryCondition",
    "BoundaryEquation",
    "Eigenstate",
    "EnergyClass",
    "WellConfig",
    "canonicalize_bc",
    "eval_eigenstate",
    "family_bc",
    "find_spectrum",
    "negative_energy_scan",
    "solve_coefficients",
    "zero_mode_detect",
]
