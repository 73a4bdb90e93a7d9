"""Normalization and phase fixing of eigenstates."""

from __future__ import annotations

import math
from dataclasses import replace

import numpy as np

from .core import Eigenstate, EnergyClass, TrivialState
from .quadrature import integrate, panel_count

# Psi(0) counts as vanishing below this fraction of |Psi(0)| + |L Psi'(0)|.
_PHASE_CUTOFF = 1e-10


def fix_phase(state: Eigenstate) -> Eigenstate:
    v = complex(state.value(0.0))
    d = complex(state.derivative(0.0)) * state.L
    ref = v if abs(v) > _PHASE_CUTOFF * (abs(v) + abs(d)) else d
    if ref == 0:
        return state
    phase = ref.conjugate() / abs(ref)
    c0, c1 = state.coefficients
    return replace(state, coefficients=(complex(c0 * phase), complex(c1 * phase)))


def normalize(state: Eigenstate) -> Eigenstate:
    """Rescale so that the integral of |Psi|^2 over [0, L] is 1.

    The coefficient pair becomes a unit vector, the norm constant absorbs the
    rest, and the phase is rotated so the first nonvanishing of
    Psi(0), Psi'(0) is real and positive.
    """
    c = np.asarray(state.coefficients, dtype=complex)
    cnorm = float(np.linalg.norm(c))
    if cnorm == 0 or not math.isfinite(cnorm):
        raise TrivialState("zero coefficient vector")
    unit = replace(state, coefficients=tuple(complex(v) for v in c / cnorm), norm_constant=1.0)
    w = state.wavenumber or 0.0
    total = float(integrate(lambda x: np.abs(unit.value(x)) ** 2, state.L, panel_count(w)))
    if not total > 1e-24 * state.L:
        raise TrivialState(f"eigenfunction has zero norm ({total:g})")
    return fix_phase(replace(unit, norm_constant=1.0 / math.sqrt(total)))


def state_from_coefficients(
    energy_class: EnergyClass,
    wavenumber: float | None,
    coefficients,
    index: int,
    L: float,
) -> Eigenstate:
    raw = Eigenstate(
        energy_class=energy_class,
        wavenumber=None if energy_class is EnergyClass.ZERO else float(wavenumber),
        coefficients=tuple(complex(v) for v in coefficients),
        norm_constant=1.0,
        index=index,
        L=L,
    )
    return normalize(raw)
