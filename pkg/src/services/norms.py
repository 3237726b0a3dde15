"""
Norms of gradient fields.

Sampled fields are read as piecewise constant on cells, so L1, L∞ and the Lorentz L^{d,1}
norm (with the prefactor d) are computed exactly by a layer cake over the distinct values.

Author : Coke
Date   : 2025-06-06
"""

import logging

import numpy as np

from src.core.exceptions import ArgumentError
from src.schemas.domain import ScalarField
from src.schemas.norms import NormSummary
from src.utils.constants import IDENTITY_TOL

logger = logging.getLogger(__name__)


def _restrict(h: np.ndarray, subset: np.ndarray | None) -> np.ndarray:
    values = np.abs(np.asarray(h, dtype=np.float64).reshape(-1))
    if subset is not None:
        values = values[np.asarray(subset, dtype=np.int64)]
    if values.size == 0:
        raise ArgumentError(detail="norms need a nonempty cell subset.", param="subset")
    return values


def lp_norms(h: np.ndarray, cell_volume: float, subset: np.ndarray | None = None) -> tuple[float, float]:
    """
    L1 and L∞ norms of |h| on a cell subset (all cells when subset is None).

    Returns:
        tuple[float, float]: (Σ |h_j| * cell_volume, max |h_j|).

    Raises:
        ArgumentError: If the subset is empty.
    """
    values = _restrict(h, subset)
    return float(values.sum() * cell_volume), float(values.max())


def lorentz_d1(h: np.ndarray, d: int, cell_volume: float, subset: np.ndarray | None = None) -> float:
    """
    Lorentz norm d * ∫_0^∞ |{|h| >= t}|^(1/d) dt of the piecewise constant field.

    With distinct values v_1 < ... < v_r and super-level measures s_i = #{|h| >= v_i} * cell_volume,
    the integral is Σ (v_i - v_{i-1}) s_i^(1/d) with v_0 = 0. For d = 1 this is the L1 norm.

    Raises:
        ArgumentError: If the subset is empty.
    """
    values = _restrict(h, subset)
    if d == 1:
        return float(values.sum() * cell_volume)

    levels, counts = np.unique(values, return_counts=True)
    above = np.cumsum(counts[::-1])[::-1] * cell_volume
    steps = np.diff(levels, prepend=0.0)
    return float(d * np.sum(steps * above ** (1.0 / d)))


def interp_bound(l1: float, linf: float, d: int) -> float:
    """d * linf^((d-1)/d) * l1^(1/d)."""
    return d * linf ** ((d - 1) / d) * l1 ** (1 / d)


def interpolation_check(h: np.ndarray, d: int, cell_volume: float, subset: np.ndarray | None = None) -> float:
    """
    Slack of the interpolation inequality ||h||_{L^{d,1}} <= d ||h||_∞^((d-1)/d) ||h||_1^(1/d).

    Returns:
        float: interp_bound - lorentz_d1, nonnegative up to rounding.
    """
    l1, linf = lp_norms(h, cell_volume, subset)
    slack = interp_bound(l1, linf, d) - lorentz_d1(h, d, cell_volume, subset)
    if slack < -IDENTITY_TOL:
        logger.warning("interpolation inequality violated: slack %.3g (d=%d)", slack, d)
    return slack


def summarize(h: np.ndarray, d: int, cell_volume: float, subset: np.ndarray | None = None) -> NormSummary:
    l1, linf = lp_norms(h, cell_volume, subset)
    return NormSummary(
        l1=l1,
        linf=linf,
        lorentz_d1=lorentz_d1(h, d, cell_volume, subset),
        interp_bound=interp_bound(l1, linf, d),
        subset="cube" if subset is None else f"cells:{len(subset)}",
    )


def field_norms(f: ScalarField, subset: np.ndarray | None = None) -> NormSummary:
    """Norm summary of |∇f| on the field's grid."""
    return summarize(f.grad_mag, f.grid.dim, f.grid.cell_volume, subset)
