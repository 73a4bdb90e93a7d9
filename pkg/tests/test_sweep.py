import math

import pytest

from squarewell import BoundaryCondition
from squarewell.fdoracle import negative_count
from squarewell.sweep import bc_sweep, sweep_cell, theta_grid

PI = math.pi


def test_theta_grid():
    assert theta_grid(4) == pytest.approx([0, PI / 4, PI / 2, 3 * PI / 4])
    with pytest.raises(ValueError):
        theta_grid(1)


def test_reference_cells():
    assert sweep_cell(0.0, 0.0).negative_count == 0
    nn = sweep_cell(PI / 2, PI / 2)
    assert nn.negative_count == 0 and nn.zero_mode
    assert nn.ground_energy == 0.0
    dd = sweep_cell(0.0, 0.0)
    assert dd.ground_energy == pytest.approx(PI**2, abs=1e-10)


def test_both_walls_attractive():
    # theta = 3pi/4 at both walls: Psi' = Psi/L at 0 and at L
    cell = sweep_cell(3 * PI / 4, 3 * PI / 4)
    assert cell.negative_count == negative_count(BoundaryCondition.from_angles(3 * PI / 4, 3 * PI / 4))
    assert cell.ground_energy < 0


def test_row_major_and_parallel_identical():
    grid = theta_grid(6)
    serial = bc_sweep(grid, grid)
    assert [(c.theta0, c.thetaL) for c in serial] == [(a, b) for a in grid for b in grid]
    assert bc_sweep(grid, grid, workers=2) == serial


def test_small_grid_matches_oracle():
    grid = theta_grid(8)
    for c in bc_sweep(grid, grid):
        assert c.negative_count == negative_count(BoundaryCondition.from_angles(c.theta0, c.thetaL), 1000)
