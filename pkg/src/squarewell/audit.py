"""Cross-check published closed forms and conclusions against direct computation.

Three kinds of entry come out of :func:`audit_family`:

* ``findings``: a published conclusion that the computation contradicts;
* ``errata``: a published formula that fails substitution while the
  conclusion drawn from it still holds;
* ``confirmed``: conclusions that check out.
"""

from __future__ import annotations

import math

from .analytic import (
    closed_form_eigenstate,
    closed_form_wavenumbers,
    family_e_ratio,
    negative_coefficients_closed_form,
    printed_family_e_ratio,
)
from .bcalgebra import Verdict, negative_energy_scan, solve_coefficients, zero_mode_detect
from .core import FAMILIES, EnergyClass, SingularDenominator, family_bc
from .spectral import positive_roots

COEFFICIENT_GRID = (0.1, 0.5, 2.0, 5.0, 10.0)
_RHS_SAMPLES = ((1.0, 0.0), (0.0, 1.0), (0.7, -1.3))


def _entry(family: str, claim: str, finding: str, **evidence) -> dict:
    return {"family": family, "claim": claim, "finding": finding, "evidence": evidence}


def coefficient_mismatch(family: str, printed: bool) -> tuple[float, float]:
    """Largest relative |G|, |H| mismatch against the generic solve over a fixed sample."""
    bc = family_bc(family)
    worst_g = worst_h = 0.0
    for q in COEFFICIENT_GRID:
        for c1, c2 in _RHS_SAMPLES:
            closed = negative_coefficients_closed_form(family, q, c1, c2, printed=printed)
            generic = solve_coefficients(bc, EnergyClass.NEGATIVE, q, c1, c2)
            scale = max(1.0, *(abs(c) for c in generic.coefficients))
            worst_g = max(worst_g, abs(closed.coefficients[0] - generic.coefficients[0]) / scale)
            worst_h = max(worst_h, abs(closed.coefficients[1] - generic.coefficients[1]) / scale)
    return worst_g, worst_h


def audit_family(family: str, qL_max: float = 50.0) -> dict:
    findings, errata, confirmed = [], [], []
    bc = family_bc(family)

    scan = negative_energy_scan(bc, qL_max)
    claim = "the homogeneous condition admits no negative-energy state"
    if scan.verdict is Verdict.ELIMINATED:
        confirmed.append(_entry(family, claim, "no root of the negative-energy determinant", qL_max=qL_max))
    else:
        findings.append(
            _entry(
                family,
                claim,
                "bound state(s) with E = -(qL)^2 at the listed qL",
                roots=[float(r) for r in scan.roots],
                energies=[-(r * r) for r in scan.roots],
            )
        )

    count = 10
    expected = closed_form_wavenumbers(family, count)
    found, _ = positive_roots(bc, count)
    dev = max(abs(a - b) for a, b in zip(expected, found))
    claim = f"positive wavenumbers kL = {'(n+1/2)pi' if family in 'CD' else 'n pi'}"
    if dev < 1e-10:
        confirmed.append(_entry(family, claim, "first 10 roots agree", max_deviation=dev))
    else:
        findings.append(_entry(family, claim, "roots differ from closed form", max_deviation=dev))

    zero = zero_mode_detect(bc)
    if family == "B":
        claim = "a constant E = 0 state sqrt(1/L) exists"
        if zero is not None and abs(zero.value(0.3) - 1.0) < 1e-12:
            confirmed.append(_entry(family, claim, "zero mode found and constant"))
        else:
            findings.append(_entry(family, claim, "no constant zero mode"))
    elif zero is not None:
        findings.append(_entry(family, "no E = 0 state", "zero mode present"))

    g_err, h_err = coefficient_mismatch(family, printed=True)
    for name, err in (("G", g_err), ("H", h_err)):
        if err > 1e-12:
            errata.append(
                _entry(
                    family,
                    f"published closed form for {name} (negative energy, k read as q)",
                    "disagrees with the direct 2x2 solve; corrected form used",
                    max_relative_mismatch=err,
                )
            )

    if family == "E":
        kL = math.pi
        r_ok, r_pub = family_e_ratio(kL), printed_family_e_ratio(kL)
        state = closed_form_eigenstate("E", 1, printed=True)
        residual = max(abs(r) for r in state.boundary_residuals(bc))
        if residual > 1e-12:
            errata.append(
                _entry(
                    family,
                    "positive state ratio (kL + i)/(kL - i)",
                    "fails both boundary equations; the conjugate (kL - i)/(kL + i) satisfies them",
                    printed_ratio=[r_pub.real, r_pub.imag],
                    derived_ratio=[r_ok.real, r_ok.imag],
                    printed_residual=float(residual),
                )
            )
        # at n = 0 the published combination is 1 + ratio(0) = 1 - 1
        if abs(1 + printed_family_e_ratio(0.0)) == 0:
            errata.append(
                _entry(
                    family,
                    "quantum number n starts at 0",
                    "n = 0 gives the zero function; states start at n = 1",
                )
            )
        try:
            negative_coefficients_closed_form("E", 1.0, 0.0, 1.0)
        except SingularDenominator:
            findings.append(
                _entry(
                    family,
                    "(c1, c2) = (0, 0) forces G = H = 0",
                    "H denominator vanishes at qL = 1; there the homogeneous system has the kernel e^{-x/L}",
                    qL=1.0,
                )
            )
    return {"findings": findings, "errata": errata, "confirmed": confirmed}


def audit(families=FAMILIES, qL_max: float = 50.0) -> dict:
    out = {"findings": [], "errata": [], "confirmed": []}
    for fam in families:
        part = audit_family(fam, qL_max)
        for k in out:
            out[k].extend(part[k])
    return out
