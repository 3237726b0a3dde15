"""
Transport region testcase.

Author : Coke
Date   : 2025-06-15
"""

import numpy as np
import pytest

from src.schemas.domain import GridMeasure, PointSet
from src.schemas.transport import TransportPlan
from src.services.grids import make_grid_measure
from src.services.points import gen_point_set
from src.services.transport import regions, solve_w1, solve_winf


def test_single_point_owns_every_cell() -> None:
    g = make_grid_measure(2, 8)
    _, plan = solve_winf(PointSet.build(dim=2, points=[[0.3, 0.6]]), g)
    (region,) = regions(plan)

    assert region.point == 0
    assert np.array_equal(region.cells, np.arange(64))
    assert region.masses.sum() == pytest.approx(1.0, abs=1e-12)


def test_midpoint_quadrants() -> None:
    g = make_grid_measure(2, 8)
    _, plan = solve_winf(gen_point_set("midpoint_grid", 2, 4), g)
    low, high = range(0, 4), range(4, 8)
    blocks = [(low, low), (low, high), (high, low), (high, high)]

    for region, (rows, cols) in zip(regions(plan), blocks):
        assert region.cells.tolist() == [i * 8 + j for i in rows for j in cols]
        assert np.allclose(region.masses, 1 / 64)


def test_bottleneck_regions_stay_within_value(
    midpoint_16: PointSet, unit_grid: GridMeasure, winf_16: tuple[float, TransportPlan]
) -> None:
    w_inf, plan = winf_16
    for region in regions(plan):
        distance = np.linalg.norm(unit_grid.centers[region.cells] - midpoint_16.points[region.point], axis=1)
        assert distance.max() <= w_inf + 1e-12


def test_midpoint_regions_are_disjoint(winf_16: tuple[float, TransportPlan]) -> None:
    cells = np.concatenate([region.cells for region in regions(winf_16[1])])
    assert cells.size == np.unique(cells).size == 64 * 64


def test_w1_regions_carry_one_over_n() -> None:
    pts = gen_point_set("full_random", 2, 6, seed=13)
    _, plan = solve_w1(pts, make_grid_measure(2, 16))
    parts = regions(plan)

    assert [region.point for region in parts] == list(range(6))
    for region in parts:
        assert region.masses.sum() == pytest.approx(1 / 6, abs=1e-12)
        assert np.all(np.diff(region.cells) > 0)
