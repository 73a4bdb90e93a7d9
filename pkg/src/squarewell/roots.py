"""Sign-change bracketing and bisection for scalar characteristic functions."""

from __future__ import annotations

import math

import numpy as np


def bisect(f, lo: float, hi: float, xtol: float = 1e-12, max_iter: int = 200) -> float:
    """Bisect a bracketed sign change of ``f`` down to ``hi - lo < xtol``."""
    flo = f(lo)
    fhi = f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if math.copysign(1.0, flo) == math.copysign(1.0, fhi):
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    for _ in range(max_iter):
        if hi - lo < xtol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = f(mid)
        if fmid == 0:
            return mid
        if math.copysign(1.0, fmid) == math.copysign(1.0, flo):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def sign_change_brackets(xs, fs) -> list[tuple[float, float]]:
    """Intervals [x_i, x_{i+1}] on which sampled values change sign.

    A sample that is exactly zero yields the degenerate bracket (x_i, x_i).
    """
    xs = np.asarray(xs, dtype=float)
    fs = np.asarray(fs, dtype=float)
    sign = np.sign(fs)
    exact = np.flatnonzero(sign == 0)
    crossing = np.flatnonzero(sign[:-1] * sign[1:] < 0)
    out = [(float(xs[i]), float(xs[i])) for i in exact]
    out += [(float(xs[i]), float(xs[i + 1])) for i in crossing]
    return sorted(out)


def refine_brackets(f, brackets, xtol: float = 1e-12) -> list[float]:
    return [lo if lo == hi else bisect(f, lo, hi, xtol) for lo, hi in brackets]
