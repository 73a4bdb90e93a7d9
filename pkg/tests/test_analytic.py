import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from squarewell import EnergyClass, family_bc
from squarewell.analytic import (
    closed_form_determinant,
    closed_form_eigenstate,
    closed_form_wavenumbers,
    family_e_ratio,
    negative_coefficients_closed_form,
    printed_family_e_ratio,
    zero_energy_state,
)
from squarewell.bcalgebra import determinant, solve_coefficients
from squarewell.core import SingularDenominator

E = math.e


@pytest.mark.parametrize(
    "family, count, expected",
    [("A", 3, [1, 2, 3]), ("C", 2, [0.5, 1.5]), ("D", 2, [0.5, 1.5]), ("E", 2, [1, 2]), ("B", 2, [1, 2])],
)
def test_wavenumbers(family, count, expected):
    assert closed_form_wavenumbers(family, count) == pytest.approx([n * math.pi for n in expected], abs=1e-15)


def test_state_values():
    a1 = closed_form_eigenstate("A", 1)
    assert a1.value(0.25).real == pytest.approx(math.sqrt(2) * math.sin(math.pi / 4), rel=1e-14)
    d0 = closed_form_eigenstate("D", 0)
    assert d0.value(0.0).real == pytest.approx(math.sqrt(2), rel=1e-14)


def test_invalid_index():
    with pytest.raises(ValueError):
        closed_form_eigenstate("A", 0)
    with pytest.raises(ValueError):
        closed_form_eigenstate("E", 0)


@pytest.mark.parametrize("n", [1, 2, 5])
def test_family_e_corrected_ratio_satisfies_boundary(n):
    bc = family_bc("E")
    good = closed_form_eigenstate("E", n)
    assert max(abs(r) for r in good.boundary_residuals(bc)) < 1e-12
    bad = closed_form_eigenstate("E", n, printed=True)
    assert min(abs(r) for r in bad.boundary_residuals(bc)) > 0.1


def test_ratios_are_conjugate():
    for k in (0.3, math.pi, 7.0):
        assert printed_family_e_ratio(k) == pytest.approx(family_e_ratio(k).conjugate())
        assert abs(family_e_ratio(k)) == pytest.approx(1.0)


def test_zero_energy_state():
    state = zero_energy_state("B")
    assert state.energy == 0
    assert state.value(0.3).real == pytest.approx(1.0)
    for fam in "ACDE":
        assert zero_energy_state(fam) is None


def test_family_a_coefficients_example():
    sol = negative_coefficients_closed_form("A", 1.0, 1.0, 0.0)
    G, H = sol.coefficients
    assert G.real == pytest.approx(-1 / (E**2 - 1), rel=1e-14)
    assert H.real == pytest.approx(E**2 / (E**2 - 1), rel=1e-14)
    assert G.real == pytest.approx(-0.156518, abs=1e-6)
    # substitute back: Psi(0) = 1, Psi(L) = 0
    assert (G + H).real == pytest.approx(1.0, abs=1e-14)
    assert (G * E + H / E).real == pytest.approx(0.0, abs=1e-14)


@pytest.mark.parametrize("family", list("ABCDE"))
@pytest.mark.parametrize("q", [0.1, 0.5, 2.0, 5.0, 10.0])
def test_homogeneous_rhs_gives_zero(family, q):
    assert negative_coefficients_closed_form(family, q, 0.0, 0.0).coefficients == (0j, 0j)


def test_family_e_singular_denominator():
    with pytest.raises(SingularDenominator):
        negative_coefficients_closed_form("E", 1.0, 0.0, 1.0)


def test_printed_forms_differ_only_where_listed():
    for fam in "ACD":
        for q in (0.5, 3.0):
            a = negative_coefficients_closed_form(fam, q, 0.7, -1.2).coefficients
            b = negative_coefficients_closed_form(fam, q, 0.7, -1.2, printed=True).coefficients
            assert a == b
    b_ok = negative_coefficients_closed_form("B", 2.0, 0.7, -1.2)
    b_pub = negative_coefficients_closed_form("B", 2.0, 0.7, -1.2, printed=True)
    assert b_pub.coefficients[0] == b_ok.coefficients[0]
    assert b_pub.coefficients[1] == pytest.approx(-b_ok.coefficients[1])
    e_ok = negative_coefficients_closed_form("E", 2.0, 0.7, -1.2)
    e_pub = negative_coefficients_closed_form("E", 2.0, 0.7, -1.2, printed=True)
    assert e_pub.coefficients[0] != pytest.approx(e_ok.coefficients[0])
    assert e_pub.coefficients[1] == pytest.approx(e_ok.coefficients[1])


@given(st.sampled_from("ABCDE"), st.floats(0.05, 15.0), st.floats(-3, 3), st.floats(-3, 3))
def test_corrected_closed_forms_match_solve(family, q, c1, c2):
    if family == "E" and abs(q - 1.0) < 1e-3:
        return
    closed = negative_coefficients_closed_form(family, q, c1, c2).coefficients
    generic = solve_coefficients(family_bc(family), EnergyClass.NEGATIVE, q, c1, c2).coefficients
    scale = max(1.0, *(abs(g) for g in generic))
    assert np.allclose(closed, generic, rtol=0, atol=1e-11 * scale)


@given(st.sampled_from("ABCDE"), st.floats(0.01, 20.0))
def test_closed_form_determinant(family, q):
    ref = determinant(family_bc(family), EnergyClass.NEGATIVE, q)
    assert closed_form_determinant(family, q) == pytest.approx(ref, rel=1e-10, abs=1e-12)
