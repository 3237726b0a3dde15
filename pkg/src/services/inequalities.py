"""
Inequality evaluators.

Quadrature errors, the transport bounds with all their right-hand sides, the localized
estimates on restricted measures and balls, and the step-by-step audit of the transport
argument on a bottleneck plan. Inequalities whose constants are only known up to the
dimension are reported as ratios, never asserted.

Author : Coke
Date   : 2025-06-10
"""

import logging
import math
from typing import Iterable, Sequence

import numpy as np

from src.core.exceptions import ArgumentError, PreconditionError
from src.schemas.domain import FieldFamily, FieldKind, GridMeasure, PointSet, ScalarField
from src.schemas.norms import NormSummary
from src.schemas.reports import AuditReport, DeltaRow, InequalityReport, Lemma1Case, Lemma1Report, Lemma4Report
from src.schemas.transport import TransportKind, TransportPlan
from src.services.fields import build_field, evaluate_field
from src.services.grids import centered_cube, make_grid_measure, restrict_to_ball, restrict_to_cone
from src.services.norms import field_norms, interp_bound, lorentz_d1, lp_norms
from src.services.transport import regions, solve_w1, solve_winf
from src.utils.constants import IDENTITY_TOL, OVERLAP_TOL, density_constant
from src.utils.utils import safe_ratio

logger = logging.getLogger(__name__)

# Absolute slack on support and f(0) checks, in units of length.
GEOMETRY_TOL = 1e-12


def _check_same_grid(f: ScalarField, g: GridMeasure) -> None:
    if (f.grid.dim, f.grid.res, f.grid.cube) != (g.dim, g.res, g.cube):
        raise ArgumentError(detail="the field and the measure live on different grids.", param="g")


def _probability_masses(g: GridMeasure) -> np.ndarray:
    total = g.total_mass
    if total <= 0:
        raise PreconditionError(detail="the measure has zero total mass.")
    return g.cell_mass / total


def quadrature_error(f: ScalarField, pts: PointSet, g: GridMeasure | None = None) -> float:
    """
    E = |∫ f dx - (1/N) Σ f(x_k)| with the integral as midpoint quadrature on the grid.

    Point values use the analytic family when there is one, multilinear interpolation otherwise.

    Args:
        f (ScalarField): Test function.
        pts (PointSet): Quadrature nodes.
        g (GridMeasure | None): Integration measure, normalized to a probability; f's grid by default.

    Returns:
        float: The quadrature error.
    """
    g = g or f.grid
    _check_same_grid(f, g)
    if pts.dim != g.dim:
        raise ArgumentError(detail=f"point set has dimension {pts.dim}, grid has {g.dim}.", param="points")

    integral = float(np.dot(f.values, _probability_masses(g)))
    average = float(np.mean(evaluate_field(f, pts.points)))
    return abs(integral - average)


def rhs_delta(norms: NormSummary, d: int, n: int, w_inf: float, delta: float) -> float:
    """linf^((d-1)/d) * l1^(1/d) * N^(delta/d) * w_inf^(1+delta); delta = 1 and delta = d give the two main bounds."""
    delta = float(delta)
    return norms.linf ** ((d - 1) / d) * norms.l1 ** (1 / d) * n ** (delta / d) * w_inf ** (1 + delta)


def _check_deltas(deltas: Iterable[float], d: int) -> list[float]:
    checked = [float(delta) for delta in deltas]
    for delta in checked:
        if not 0 < delta <= d:
            raise ArgumentError(detail=f"delta must lie in (0, {d}], got {delta}.", param="deltas")
    return checked


def theorem_report(
    f: ScalarField,
    pts: PointSet,
    g: GridMeasure | None = None,
    deltas: Sequence[float] = (),
    *,
    w1: float | None = None,
    w_inf: float | None = None,
) -> InequalityReport:
    """
    Evaluate the quadrature error against every transport bound.

    Args:
        f (ScalarField): Test function on the grid.
        pts (PointSet): Point set.
        g (GridMeasure | None): Reference measure, f's grid by default.
        deltas (Sequence[float]): Exponents of the interpolating family, each in (0, d].
        w1 (float | None): Precomputed W1, solved when omitted.
        w_inf (float | None): Precomputed W∞, solved when omitted.

    Returns:
        InequalityReport: Norms, distances, right-hand sides and ratios.
    """
    g = g or f.grid
    d, n = g.dim, pts.n
    checked = _check_deltas(deltas, d)

    if w1 is None:
        w1, _ = solve_w1(pts, g)
    if w_inf is None:
        w_inf, _ = solve_winf(pts, g)

    e = quadrature_error(f, pts, g)
    norms = field_norms(f)
    rhs_kr = norms.linf * w1
    rhs_theorem = rhs_delta(norms, d, n, w_inf, 1.0)
    rhs_proposition = rhs_delta(norms, d, n, w_inf, d)
    rhs_by_delta = {delta: rhs_delta(norms, d, n, w_inf, delta) for delta in checked}

    logger.debug("report N=%d d=%d: E=%.6g W1=%.6g W∞=%.6g", n, d, e, w1, w_inf)
    return InequalityReport(
        dim=d,
        n=n,
        res=g.res,
        e=e,
        w1=w1,
        w_inf=w_inf,
        norms=norms,
        rhs_kr=rhs_kr,
        rhs_theorem=rhs_theorem,
        rhs_proposition=rhs_proposition,
        rhs_delta=rhs_by_delta,
        ratio_kr=safe_ratio(e, rhs_kr),
        ratio_theorem=safe_ratio(e, rhs_theorem),
        ratio_proposition=safe_ratio(e, rhs_proposition),
        ratio_delta={delta: safe_ratio(e, rhs) for delta, rhs in rhs_by_delta.items()},
        w_inf_inflation=n ** (1 / d) * w_inf,
    )


def delta_sweep(
    f: ScalarField,
    pts: PointSet,
    g: GridMeasure | None = None,
    deltas: Sequence[float] = (),
    report: InequalityReport | None = None,
) -> list[DeltaRow]:
    """
    Right-hand sides linf^((d-1)/d) l1^(1/d) N^(delta/d) w_inf^(1+delta) and their ratios for each delta.

    Raises:
        ArgumentError: If a delta lies outside (0, d].
    """
    g = g or f.grid
    checked = _check_deltas(deltas, g.dim)
    report = report or theorem_report(f, pts, g)

    rows = []
    for delta in checked:
        rhs = rhs_delta(report.norms, report.dim, report.n, report.w_inf, delta)
        rows.append(DeltaRow(delta=delta, rhs=rhs, ratio=safe_ratio(report.e, rhs)))
    return rows


def _distance_cap(delta: float) -> FieldFamily:
    return FieldFamily.build(kind=FieldKind.DISTANCE_CAP, delta=delta)


def ball_example(d: int, R: float, delta: float, m: int) -> Lemma1Case:
    """
    Lebesgue measure on B(0, R) with f(x) = min(||x||, delta).

    The grid covers [-R, R]^d with the origin as a cell center.
    """
    g = make_grid_measure(d, m, centered_cube(m, R))
    mu = restrict_to_ball(g, np.zeros(d), R)
    f = build_field(_distance_cap(delta), mu, anchor=np.zeros(d))
    return Lemma1Case(label=f"ball:R={R}:delta={delta}", measure=mu, field=f, radius=R)


def cone_example(d: int, R: float, h: float, delta: float, m: int) -> Lemma1Case:
    """
    Lebesgue measure on the cone with apex 0, axis e_1, length R and half-width h, with
    f(x) = min(||x||, delta). The supporting ball has radius sqrt(R^2 + h^2).
    """
    radius = math.hypot(R, h)
    g = make_grid_measure(d, m, centered_cube(m, radius))
    axis = np.eye(d)[0]
    mu = restrict_to_cone(g, np.zeros(d), axis, R, h)
    f = build_field(_distance_cap(delta), mu, anchor=np.zeros(d))
    return Lemma1Case(label=f"cone:R={R}:h={h}:delta={delta}", measure=mu, field=f, radius=radius)


def _origin_value(f: ScalarField) -> float:
    """
    f at the cell containing the origin, checked to vanish up to linf * side * sqrt(d) / m.

    Raises:
        PreconditionError: If the origin is outside the grid or f does not vanish there.
    """
    g = f.grid
    position = (0.0 - g.cube.origin) / g.cell_width
    if not 0 <= position <= g.res:
        raise PreconditionError(detail="the origin lies outside the grid.")

    index = min(int(math.floor(position)), g.res - 1)
    value = float(f.values[np.ravel_multi_index((index,) * g.dim, g.shape)])
    tolerance = float(f.grad_mag.max()) * g.cube.side * math.sqrt(g.dim) / g.res + GEOMETRY_TOL
    if abs(value) > tolerance:
        raise PreconditionError(detail=f"f must vanish at the origin, found {value:.3g} (tolerance {tolerance:.3g}).")
    return value


def _ball_cells(g: GridMeasure, radius: float, center: np.ndarray | None = None) -> np.ndarray:
    offsets = g.centers if center is None else g.centers - center
    return np.flatnonzero(np.linalg.norm(offsets, axis=1) <= radius + GEOMETRY_TOL)


def lemma1_verify(mu: GridMeasure, f: ScalarField, R: float) -> Lemma1Report:
    """
    Evaluate |∫ f dμ| <= c * R * μ(R^d)^((d-1)/d) * ||∇f||_{L^{d,1}(||x|| <= R)} on a restricted measure.

    The Lorentz norm is reported on the ball (the statement) and on the support of μ.

    Args:
        mu (GridMeasure): Measure with mu <= dx supported in B(0, R).
        f (ScalarField): Test function with f(0) = 0 on the same grid.
        R (float): Radius of the supporting ball.

    Raises:
        PreconditionError: If mu has mass outside B(0, R) or f(0) != 0.
    """
    _check_same_grid(f, mu)
    d = mu.dim
    outside = np.linalg.norm(mu.centers[mu.support], axis=1) > R + GEOMETRY_TOL
    if np.any(outside):
        raise PreconditionError(detail=f"{int(outside.sum())} positive cells lie outside the ball of radius {R}.")
    origin_value = _origin_value(f)

    lhs = abs(float(np.dot(f.values, mu.cell_mass)))
    mass = mu.total_mass
    scale = R * mass ** ((d - 1) / d)

    lorentz = lorentz_d1(f.grad_mag, d, mu.cell_volume, _ball_cells(mu, R))
    support_lorentz = lorentz_d1(f.grad_mag, d, mu.cell_volume, mu.support) if mu.support.size else 0.0

    logger.debug("lemma1 R=%.4g mass=%.6g lhs=%.6g lorentz=%.6g", R, mass, lhs, lorentz)
    return Lemma1Report(
        lhs=lhs,
        radius=R,
        mass=mass,
        lorentz=lorentz,
        rhs=scale * lorentz,
        ratio=safe_ratio(lhs, scale * lorentz),
        support_lorentz=support_lorentz,
        support_rhs=scale * support_lorentz,
        support_ratio=safe_ratio(lhs, scale * support_lorentz),
        origin_value=origin_value,
    )


def lemma4_case(d: int, r: float, m: int, delta: float | None = None) -> ScalarField:
    """f(x) = min(||x||, delta) on a grid over [-r, r]^d centered at the origin; delta defaults to r."""
    g = make_grid_measure(d, m, centered_cube(m, r))
    return build_field(_distance_cap(r if delta is None else delta), g, anchor=np.zeros(d))


def lemma4_verify(f: ScalarField, r: float) -> Lemma4Report:
    """
    Evaluate |∫_{B(0,r)} f dx| against r^d * linf^((d-1)/d) * l1^(1/d), the norms taken on the ball.

    Raises:
        PreconditionError: If f(0) != 0.
        ArgumentError: If no cell center lies in the ball.
    """
    if r <= 0:
        raise ArgumentError(detail="radius must be positive.", param="r")
    _origin_value(f)

    g = f.grid
    cells = _ball_cells(g, r)
    if cells.size == 0:
        raise ArgumentError(detail="no cell center lies in the ball.", param="r")

    lhs = abs(float(f.values[cells].sum() * g.cell_volume))
    l1, linf = lp_norms(f.grad_mag, g.cell_volume, cells)
    rhs = r**g.dim * linf ** ((g.dim - 1) / g.dim) * l1 ** (1 / g.dim)
    return Lemma4Report(lhs=lhs, radius=r, l1=l1, linf=linf, ratio=safe_ratio(lhs, rhs))


def proof_chain_audit(
    f: ScalarField,
    pts: PointSet,
    g: GridMeasure | None = None,
    plan: TransportPlan | None = None,
) -> AuditReport:
    """
    Follow the transport argument on a bottleneck plan.

    The mass of x_k goes to the region X_k with restricted measure μ_k of total 1/N. Records the
    terms t_k = |∫_{X_k} f dμ_k - f(x_k)/N| and their excess over E, the localized ratios on each
    region, the Hölder step over the regions, the overlap ratio against ω_d 2^d and the ball terms
    of the cheap variant on B(x_k, W∞).

    Args:
        f (ScalarField): Test function.
        pts (PointSet): Point set.
        g (GridMeasure | None): Reference measure, f's grid by default.
        plan (TransportPlan | None): W∞ plan, solved when omitted.

    Returns:
        AuditReport: The audit.
    """
    g = g or f.grid
    _check_same_grid(f, g)
    if plan is None:
        _, plan = solve_winf(pts, g)
    if plan.kind != TransportKind.W_INFINITY:
        raise ArgumentError(detail="the audit needs a w_infinity plan.", param="plan")

    d, n, w_inf = g.dim, pts.n, plan.value
    e = quadrature_error(f, pts, g)
    at_points = evaluate_field(f, pts.points)
    norms = field_norms(f)

    terms, lemma1_ratios, region_lorentz, region_interp, region_l1, ball_terms = [], [], [], [], [], []
    for region in regions(plan):
        k = region.point
        t_k = abs(float(np.dot(f.values[region.cells], region.masses)) - at_points[k] / n)
        lorentz = lorentz_d1(f.grad_mag, d, g.cell_volume, region.cells)
        l1, linf = lp_norms(f.grad_mag, g.cell_volume, region.cells)

        terms.append(t_k)
        lemma1_ratios.append(safe_ratio(t_k, w_inf / n ** ((d - 1) / d) * lorentz))
        region_lorentz.append(lorentz)
        region_interp.append(interp_bound(l1, linf, d))
        region_l1.append(l1)

        ball = _ball_cells(g, w_inf, pts.points[k])
        ball_terms.append(abs(float(np.sum(f.values[ball] - at_points[k]) * g.cell_volume)))

    triangle_slack = sum(terms) - e
    if triangle_slack < -IDENTITY_TOL:
        logger.warning("triangle step violated: slack %.3g", triangle_slack)

    overlap_ratio = safe_ratio(sum(region_l1), w_inf**d * n * norms.l1)
    overlap_bound = density_constant(d)
    if overlap_ratio > overlap_bound + OVERLAP_TOL:
        logger.warning("overlap step violated: ratio %.4g exceeds %.4g", overlap_ratio, overlap_bound)
    logger.info("audit N=%d: E=%.6g Σt=%.6g overlap=%.4g", n, e, sum(terms), overlap_ratio)
    return AuditReport(
        n=n,
        w_inf=w_inf,
        e=e,
        terms=tuple(terms),
        triangle_slack=triangle_slack,
        lemma1_ratios=tuple(lemma1_ratios),
        region_lorentz=tuple(region_lorentz),
        region_interp=tuple(region_interp),
        region_l1=tuple(region_l1),
        holder_lhs=sum(l1 ** (1 / d) for l1 in region_l1),
        holder_rhs=n ** ((d - 1) / d) * sum(region_l1) ** (1 / d),
        overlap_ratio=overlap_ratio,
        overlap_bound=overlap_bound,
        ball_terms_sum=sum(ball_terms),
    )
