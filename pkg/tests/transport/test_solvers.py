"""
Transport solver testcase.

Author : Coke
Date   : 2025-06-15
"""

import math
import random

import numpy as np
import pytest

from src.core.config import settings
from src.core.exceptions import BudgetError
from src.schemas.domain import GridMeasure, PointSet
from src.schemas.transport import TransportKind, TransportPlan
from src.services.grids import make_grid_measure, restrict_to_ball
from src.services.points import gen_point_set
from src.services.transport import (
    bottleneck_feasible,
    covering_radius,
    format_plan,
    solve_w1,
    solve_winf,
)
from src.utils.constants import ball_volume
from tests.utils import random_point_set, reflect, swap_axes


def assert_feasible(plan: TransportPlan, g: GridMeasure) -> None:
    assert np.allclose(plan.row_sums(), 1 / plan.n_points, atol=1e-9)
    assert np.allclose(plan.column_sums(g.n_cells), g.cell_mass / g.total_mass, atol=1e-9)


def test_single_point_unit_interval() -> None:
    m = 1024
    g = make_grid_measure(1, m)
    pts = PointSet.build(dim=1, points=[[0.5]])

    w1, plan = solve_w1(pts, g)
    assert w1 == pytest.approx(0.25, abs=2 / m)
    assert plan.kind == TransportKind.W1
    assert_feasible(plan, g)

    w_inf, plan = solve_winf(pts, g)
    assert w_inf == pytest.approx(0.5, abs=1 / m)
    assert covering_radius(pts, g) == pytest.approx(0.5, abs=1 / m)


def test_single_point_unit_square(unit_grid: GridMeasure) -> None:
    pts = PointSet.build(dim=2, points=[[0.5, 0.5]])
    w1, _ = solve_w1(pts, unit_grid)
    w_inf, _ = solve_winf(pts, unit_grid)
    assert w1 == pytest.approx(0.3826, abs=0.02)
    assert w_inf == pytest.approx(math.sqrt(2) / 2, abs=2 / 64)


@pytest.mark.parametrize("n", [2, 4, 8])
def test_midpoint_closed_forms_1d(n: int) -> None:
    m = 2048
    g = make_grid_measure(1, m)
    pts = gen_point_set("midpoint_grid", 1, n)

    w1, w1_plan = solve_w1(pts, g)
    w_inf, winf_plan = solve_winf(pts, g)
    assert w1 == pytest.approx(1 / (4 * n), abs=2 / m)
    assert w_inf == pytest.approx(1 / (2 * n), abs=2 / m)
    assert_feasible(w1_plan, g)
    assert_feasible(winf_plan, g)


@pytest.mark.parametrize("k", [2, 4, 8])
def test_midpoint_bottleneck_2d(k: int, unit_grid: GridMeasure) -> None:
    pts = gen_point_set("midpoint_grid", 2, k * k)
    w_inf, plan = solve_winf(pts, unit_grid)

    assert w_inf == pytest.approx(math.sqrt(2) / (2 * k), abs=3 / 64)
    assert w_inf >= covering_radius(pts, unit_grid) - 1e-9
    assert float(plan.distance.max()) == w_inf
    assert bottleneck_feasible(pts, unit_grid, w_inf)
    assert not bottleneck_feasible(pts, unit_grid, w_inf - 1e-13)
    assert_feasible(plan, unit_grid)


def test_w1_below_winf(w1_16: tuple[float, TransportPlan], winf_16: tuple[float, TransportPlan]) -> None:
    assert w1_16[0] <= winf_16[0] + 1e-9


def test_w1_value_matches_plan(w1_16: tuple[float, TransportPlan]) -> None:
    w1, plan = w1_16
    assert float(np.dot(plan.mass, plan.distance)) == pytest.approx(w1, abs=1e-9)


def test_clustered_covering_radius(unit_grid: GridMeasure) -> None:
    pts = gen_point_set("clustered", 2, 10, seed=2)
    assert covering_radius(pts, unit_grid) >= math.dist((1.0, 1.0), (0.1, 0.1)) - 0.05


def test_symmetry_invariance() -> None:
    g = make_grid_measure(2, 32)
    pts = gen_point_set("full_random", 2, 8, seed=21)
    w1, _ = solve_w1(pts, g)
    w_inf, _ = solve_winf(pts, g)

    for image in (reflect(pts, 0), reflect(pts, 1), swap_axes(pts)):
        assert solve_w1(image, g)[0] == pytest.approx(w1, abs=1e-9)
        assert solve_winf(image, g)[0] == pytest.approx(w_inf, abs=1e-9)


def covering_slack(n: int, d: int, m: int) -> float:
    """2d/m, or N^(1/d) half cell diagonals once the point count makes that larger."""
    return max(2 * d / m, n ** (1 / d) * math.sqrt(d) / (2 * m))


def test_covering_bound_on_generated_sets() -> None:
    m = 32
    rng = random.Random(10)
    for d, kind, n in [(1, "midpoint_grid", 8), (1, "full_random", 5), (2, "jittered", 9), (2, "clustered", 6)]:
        pts = gen_point_set(kind, d, n, rng.getrandbits(64))
        w_inf, _ = solve_winf(pts, make_grid_measure(d, m))
        assert n ** (1 / d) * w_inf >= ball_volume(d) ** (-1 / d) - covering_slack(n, d, m) - 1e-12

    for _ in range(4):
        pts = random_point_set(rng, 2, rng.randint(1, 12))
        w_inf, _ = solve_winf(pts, make_grid_measure(2, m))
        assert pts.n**0.5 * w_inf >= ball_volume(2) ** -0.5 - covering_slack(pts.n, 2, m)


def test_restricted_measure_is_normalized() -> None:
    g = restrict_to_ball(make_grid_measure(2, 32), [0.5, 0.5], 0.3)
    pts = gen_point_set("midpoint_grid", 2, 4)
    w_inf, plan = solve_winf(pts, g)
    assert_feasible(plan, g)
    assert set(plan.cell_index.tolist()) <= set(g.support.tolist())
    assert w_inf >= covering_radius(pts, g) - 1e-9


def test_flow_budget(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(settings, "MAX_UNITS", 100)
    with pytest.raises(BudgetError):
        solve_w1(gen_point_set("midpoint_grid", 2, 4), make_grid_measure(2, 16))


def test_plan_export() -> None:
    g = make_grid_measure(1, 4)
    _, plan = solve_winf(PointSet.build(dim=1, points=[[0.5]]), g)
    lines = format_plan(plan).splitlines()
    assert lines[0] == "kind=w_infinity value=0.375 n=1 m=4 d=1"
    assert len(lines) == 5
    assert lines[1].split()[:2] == ["0", "0"]
