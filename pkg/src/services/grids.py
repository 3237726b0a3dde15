"""
Grid measures.

Discretized Lebesgue measure on a cube and its restrictions to balls and cones (μ ≤ dx).
Cell membership is decided by the cell center.

Author : Coke
Date   : 2025-06-04
"""

import logging
import math
from typing import Sequence

import numpy as np

from src.core.config import settings
from src.core.exceptions import ArgumentError, DegenerateSupportError, ResolutionError
from src.schemas.domain import Cube, GridMeasure

logger = logging.getLogger(__name__)


def make_grid_measure(d: int, m: int, support: Cube | None = None) -> GridMeasure:
    """
    Uniform Lebesgue measure on a cube, one mass per cell equal to the cell volume.

    On the unit cube every cell carries m^-d and the total mass is 1.

    Args:
        d (int): Dimension, d >= 1.
        m (int): Cells per axis, m >= 2.
        support (Cube | None): Covered cube, the unit cube by default.

    Returns:
        GridMeasure: The grid measure.

    Raises:
        ArgumentError: If d or m is out of range.
        ResolutionError: If m^d exceeds the configured cell budget.
    """
    if d < 1:
        raise ArgumentError(detail="dimension must be >= 1.", param="d")
    if m < 2:
        raise ArgumentError(detail="resolution must be >= 2.", param="m")
    if m**d > settings.MAX_CELLS:
        raise ResolutionError(detail=f"{m}^{d} cells exceed the budget of {settings.MAX_CELLS}.")

    cube = support or Cube()
    volume = (cube.side / m) ** d
    logger.debug("grid d=%d m=%d origin=%s side=%s", d, m, cube.origin, cube.side)
    return GridMeasure(dim=d, res=m, cube=cube, cell_mass=np.full(m**d, volume))


def centered_cube(m: int, half_width: float) -> Cube:
    """
    Cube covering [-half_width, half_width] whose grid of m cells per axis has the origin as a cell center.

    Centers sit at -half_width + i * c with c = half_width / floor((m - 1) / 2).

    Args:
        m (int): Cells per axis, m >= 3.
        half_width (float): Half the extent to cover.

    Returns:
        Cube: The cube descriptor.
    """
    if m < 3:
        raise ArgumentError(detail="a centered grid needs m >= 3.", param="m")
    if half_width <= 0:
        raise ArgumentError(detail="half width must be positive.", param="half_width")

    width = half_width / ((m - 1) // 2)
    return Cube(origin=-half_width - width / 2, side=m * width)


def _restrict(g: GridMeasure, inside: np.ndarray, what: str) -> GridMeasure:
    mass = np.where(inside, g.cell_mass, 0.0)
    if not np.any(mass > 0.0):
        raise DegenerateSupportError(detail=f"no positive cell center lies inside the {what}.")

    logger.debug("restricted to %s: %d of %d cells", what, int(np.count_nonzero(mass)), g.n_cells)
    return GridMeasure(dim=g.dim, res=g.res, cube=g.cube, cell_mass=mass)


def _as_point(point: Sequence[float] | np.ndarray, dim: int, param: str) -> np.ndarray:
    array = np.asarray(point, dtype=np.float64).reshape(-1)
    if array.shape != (dim,):
        raise ArgumentError(detail=f"expected {dim} coordinates, got {array.shape[0]}.", param=param)
    return array


def restrict_to_ball(g: GridMeasure, center: Sequence[float] | np.ndarray, R: float) -> GridMeasure:
    """
    Keep the cells whose center lies in the closed ball B(center, R).

    Args:
        g (GridMeasure): Measure to restrict.
        center (Sequence[float]): Ball center.
        R (float): Radius.

    Returns:
        GridMeasure: Restricted measure, cell masses unchanged inside and zero outside.

    Raises:
        DegenerateSupportError: If R is below half a cell diagonal or no cell center is inside.
    """
    half_diagonal = g.cell_width * math.sqrt(g.dim) / 2
    if R < half_diagonal:
        raise DegenerateSupportError(detail=f"radius {R} is below half a cell diagonal ({half_diagonal:.3g}).")

    c = _as_point(center, g.dim, "center")
    inside = np.linalg.norm(g.centers - c, axis=1) <= R
    return _restrict(g, inside, "ball")


def restrict_to_cone(
    g: GridMeasure,
    apex: Sequence[float] | np.ndarray,
    axis: Sequence[float] | np.ndarray,
    R: float,
    h: float,
) -> GridMeasure:
    """
    Keep the cells whose center lies in the solid cone with the given apex and axis, length R and
    half-width h at its base; the cross-section widens linearly from the apex.

    A center v (relative to the apex) is inside when t = <v, axis> lies in [0, R] and its distance to
    the axis is at most h * t / R. For d = 2 the cone is the triangle of area R * h.

    Args:
        g (GridMeasure): Measure to restrict.
        apex (Sequence[float]): Cone apex.
        axis (Sequence[float]): Direction, normalized internally.
        R (float): Length.
        h (float): Half-width at the base, 0 < h <= R.

    Returns:
        GridMeasure: Restricted measure.

    Raises:
        DegenerateSupportError: If R <= 0 or no cell center is inside.
        ArgumentError: If h is out of range or the axis is zero.
    """
    if R <= 0:
        raise DegenerateSupportError(detail="cone length must be positive.")
    if not 0 < h <= R:
        raise ArgumentError(detail="half-width must satisfy 0 < h <= R.", param="h")

    direction = _as_point(axis, g.dim, "axis")
    norm = float(np.linalg.norm(direction))
    if norm == 0.0:
        raise ArgumentError(detail="cone axis must be nonzero.", param="axis")
    direction = direction / norm

    v = g.centers - _as_point(apex, g.dim, "apex")
    t = v @ direction
    lateral = np.linalg.norm(v - np.outer(t, direction), axis=1)
    inside = (t >= 0.0) & (t <= R) & (lateral <= h * t / R)
    return _restrict(g, inside, "cone")
