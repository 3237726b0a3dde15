"""
Fixtures for testing the lab.

Transport solutions reused by several modules are computed once per session.

Author : Coke
Date   : 2025-06-14
"""

from pathlib import Path

import pytest

from src.core.config import settings
from src.schemas.domain import GridMeasure, PointSet
from src.schemas.transport import TransportPlan
from src.services.grids import make_grid_measure
from src.services.points import gen_point_set
from src.services.transport import solve_w1, solve_winf


@pytest.fixture(autouse=True)
def log_dir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """
    Redirects the rotating log file of command line runs into the test's temporary directory.
    """
    directory = tmp_path / "logs"
    monkeypatch.setattr(settings, "LOG_DIR", str(directory))
    return directory


@pytest.fixture(scope="session")
def unit_grid() -> GridMeasure:
    """Lebesgue measure on [0, 1]^2 with 64 cells per axis."""
    return make_grid_measure(2, 64)


@pytest.fixture(scope="session")
def midpoint_16() -> PointSet:
    """Centers of the 4 x 4 subsquares of the unit square."""
    return gen_point_set("midpoint_grid", 2, 16)


@pytest.fixture(scope="session")
def winf_16(midpoint_16: PointSet, unit_grid: GridMeasure) -> tuple[float, TransportPlan]:
    """
    W∞ of the 16-point midpoint grid against the 64 x 64 Lebesgue grid.

    Returns:
        tuple[float, TransportPlan]: The bottleneck value and its plan.
    """
    return solve_winf(midpoint_16, unit_grid)


@pytest.fixture(scope="session")
def w1_16(midpoint_16: PointSet, unit_grid: GridMeasure) -> tuple[float, TransportPlan]:
    return solve_w1(midpoint_16, unit_grid)
