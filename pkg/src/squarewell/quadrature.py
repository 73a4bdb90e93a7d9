"""Composite Gauss-Legendre quadrature on [0, L]."""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

NODES_PER_PANEL = 32
MIN_PANELS = 8


@lru_cache(maxsize=None)
def _legendre(order: int):
    return np.polynomial.legendre.leggauss(order)


def panel_count(max_wavenumber: float = 0.0) -> int:
    """Panels needed so each one spans at most a quarter wavelength or one decay length."""
    return max(MIN_PANELS, int(math.ceil(2.0 * max_wavenumber / math.pi)) + 1)


def nodes_and_weights(L: float, panels: int = MIN_PANELS, order: int = NODES_PER_PANEL):
    t, w = _legendre(order)
    edges = np.linspace(0.0, L, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    x = (mid[:, None] + half[:, None] * t[None, :]).ravel()
    wt = (half[:, None] * w[None, :]).ravel()
    return x, wt


def integrate(f, L: float, panels: int = MIN_PANELS, order: int = NODES_PER_PANEL):
    x, wt = nodes_and_weights(L, panels, order)
    return np.sum(wt * f(x))
