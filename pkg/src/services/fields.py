"""
Test functions on grids.

Analytic families are sampled at cell centers together with their exact gradient magnitude;
sampled fields get theirs from finite differences.

Author : Coke
Date   : 2025-06-04
"""

import logging
from typing import Sequence

import numpy as np
from scipy.interpolate import RegularGridInterpolator
from scipy.spatial import cKDTree

from src.core.exceptions import ArgumentError, ResolutionError
from src.schemas.domain import FieldFamily, FieldKind, GridMeasure, PointSet, ScalarField

logger = logging.getLogger(__name__)


def _nearest_distance(sites: np.ndarray, x: np.ndarray) -> np.ndarray:
    distance, _ = cKDTree(sites).query(x, k=1)
    return np.asarray(distance, dtype=np.float64)


def _analytic(family: FieldFamily, sites: np.ndarray | None, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Values and gradient magnitudes of an analytic family at the rows of x."""
    match family.kind:
        case FieldKind.EXTREMAL_EPS:
            assert family.eps is not None and sites is not None
            distance = _nearest_distance(sites, x)
            # ties at the cap resolve to the flat side
            return np.minimum(distance, family.eps), (distance < family.eps).astype(np.float64)

        case FieldKind.DISTANCE_CAP:
            assert family.delta is not None and sites is not None
            distance = np.linalg.norm(x - sites[0], axis=1)
            return np.minimum(distance, family.delta), (distance < family.delta).astype(np.float64)

        case FieldKind.LINEAR:
            coef = np.asarray(family.coef, dtype=np.float64)
            values = x @ coef + family.offset
            return values, np.full(x.shape[0], float(np.linalg.norm(coef)))

        case FieldKind.PRODUCT_SINE:
            freq = np.pi * np.asarray(family.coef, dtype=np.float64)
            sines = np.sin(freq * x)
            cosines = np.cos(freq * x)
            partials = np.empty_like(x)
            for i in range(x.shape[1]):
                others = np.prod(np.delete(sines, i, axis=1), axis=1)
                partials[:, i] = freq[i] * cosines[:, i] * others
            return family.offset + np.prod(sines, axis=1), np.linalg.norm(partials, axis=1)

    raise ArgumentError(detail="sampled fields have no formula; use sampled_field.", param="family")


def build_field(
    family: FieldFamily,
    g: GridMeasure,
    *,
    points: PointSet | None = None,
    anchor: Sequence[float] | np.ndarray | None = None,
) -> ScalarField:
    """
    Sample an analytic family at the cell centers of a grid.

    Args:
        family (FieldFamily): Family and parameters.
        g (GridMeasure): Grid geometry.
        points (PointSet | None): Required for extremal_eps.
        anchor (Sequence[float] | None): Required for distance_cap.

    Returns:
        ScalarField: Values and exact gradient magnitudes.

    Raises:
        ArgumentError: If a required point set or anchor is missing, or dimensions disagree.
    """
    sites: np.ndarray | None = None
    if family.kind == FieldKind.EXTREMAL_EPS:
        if points is None:
            raise ArgumentError(detail="extremal_eps needs a point set.", param="points")
        if points.dim != g.dim:
            raise ArgumentError(detail=f"point set has dimension {points.dim}, grid has {g.dim}.", param="points")
        sites = points.points
    elif family.kind == FieldKind.DISTANCE_CAP:
        if anchor is None:
            raise ArgumentError(detail="distance_cap needs an anchor point.", param="anchor")
        sites = np.asarray(anchor, dtype=np.float64).reshape(1, -1)
        if sites.shape[1] != g.dim:
            raise ArgumentError(detail=f"anchor must have {g.dim} coordinates.", param="anchor")
    elif family.kind in (FieldKind.LINEAR, FieldKind.PRODUCT_SINE) and len(family.coef) != g.dim:
        raise ArgumentError(detail=f"coef must have {g.dim} entries, got {len(family.coef)}.", param="coef")

    values, grad_mag = _analytic(family, sites, g.centers)
    logger.debug("field %s on %d cells", family.kind.value, g.n_cells)
    return ScalarField(grid=g, values=values, grad_mag=grad_mag, family=family, sites=sites)


def finite_diff_gradient(values: np.ndarray, g: GridMeasure) -> np.ndarray:
    """
    Gradient magnitude of grid samples: central differences inside, one-sided at the boundary.

    Raises:
        ResolutionError: If the grid has fewer than 3 cells per axis.
    """
    if g.res < 3:
        raise ResolutionError(detail="finite differences need at least 3 cells per axis.")

    samples = np.asarray(values, dtype=np.float64).reshape(g.shape)
    partials = np.gradient(samples, g.cell_width, edge_order=1)
    if g.dim == 1:
        return np.abs(partials).ravel()
    return np.sqrt(np.sum(np.square(partials), axis=0)).ravel()


def sampled_field(
    g: GridMeasure, values: np.ndarray | Sequence[float], grad_mag: np.ndarray | None = None
) -> ScalarField:
    """
    Wrap arbitrary cell-center samples as a field; gradients default to finite differences.

    Raises:
        ArgumentError: If the sample count does not match the grid.
    """
    samples = np.asarray(values, dtype=np.float64).reshape(-1)
    if samples.shape != (g.n_cells,):
        raise ArgumentError(detail=f"expected {g.n_cells} samples, got {samples.shape[0]}.", param="values")

    grad = finite_diff_gradient(samples, g) if grad_mag is None else grad_mag
    return ScalarField.build(
        grid=g,
        values=samples,
        grad_mag=grad,
        family=FieldFamily(kind=FieldKind.SAMPLED),
    )


def evaluate_field(f: ScalarField, x: np.ndarray | Sequence[Sequence[float]]) -> np.ndarray:
    """
    Point values of a field: the analytic formula when the family has one, else multilinear
    interpolation of the cell-center samples (linear extrapolation in the outer half cells).

    Args:
        f (ScalarField): The field.
        x (array-like): (k, d) evaluation points.

    Returns:
        np.ndarray: (k,) values.
    """
    points = np.asarray(x, dtype=np.float64).reshape(-1, f.grid.dim)
    if f.family.kind != FieldKind.SAMPLED:
        values, _ = _analytic(f.family, f.sites, points)
        return f.scale * values

    axes = (f.grid.axis_centers,) * f.grid.dim
    interpolator = RegularGridInterpolator(axes, f.values.reshape(f.grid.shape), bounds_error=False, fill_value=None)
    return np.asarray(interpolator(points), dtype=np.float64)
