"""
Semi-discrete transport between an empirical point measure and a grid measure.

Both measures are scaled to exact integers: with P positive cells (all of equal mass) and
g = gcd(N, P), every point supplies P/g units and every positive cell demands N/g units.
W1 is a min-cost flow on that network, W∞ a binary search over the sorted distinct
point-to-center distances with max-flow feasibility. Distances are rounded to
`COST_DECIMALS` digits so values are reproducible and the W∞ value is one of the candidates.

Author : Coke
Date   : 2025-06-05
"""

import logging
import math
from pathlib import Path

import numpy as np
from ortools.graph.python import max_flow, min_cost_flow
from scipy.spatial import cKDTree
from scipy.spatial.distance import cdist

from src.core.config import settings
from src.core.exceptions import ArgumentError, BudgetError, PreconditionError, SolverError
from src.schemas.domain import GridMeasure, PointSet
from src.schemas.transport import DensityReport, Region, TransportKind, TransportPlan
from src.utils.constants import COUNT_TOL, density_constant
from src.utils.prng import SplitMix64

logger = logging.getLogger(__name__)

INT64_MAX = 2**63 - 1


class TransportNetwork:
    """
    Integer-scaled bipartite network of a transport instance.

    Nodes 0..N-1 are the points, nodes N..N+P-1 the positive cells in index order.
    """

    def __init__(self, pts: PointSet, g: GridMeasure) -> None:
        if pts.dim != g.dim:
            raise ArgumentError(detail=f"point set has dimension {pts.dim}, grid has {g.dim}.", param="points")

        support = g.support
        if support.size == 0:
            raise PreconditionError(detail="the grid measure has no positive cell.")
        masses = g.cell_mass[support]
        if not np.allclose(masses, masses[0], rtol=1e-12, atol=0.0):
            raise PreconditionError(detail="transport needs equal masses on every positive cell.")

        self.pts = pts
        self.grid = g
        self.support = support
        self.n = pts.n
        self.p = int(support.size)
        common = math.gcd(self.n, self.p)
        self.supply = self.p // common
        self.demand = self.n // common
        self.units = self.n * self.p // common
        if self.units > settings.MAX_UNITS:
            raise BudgetError(detail=f"{self.units} flow units exceed the budget of {settings.MAX_UNITS}.")

        self.distance = np.round(cdist(pts.points, g.centers[support]), settings.COST_DECIMALS)
        self.cost = np.rint(self.distance * 10**settings.COST_DECIMALS).astype(np.int64)
        if self.units * int(self.cost.max()) > INT64_MAX:
            raise BudgetError(detail="total transport cost overflows 64-bit integers.")

        logger.debug("network N=%d P=%d units=%d edges=%d", self.n, self.p, self.units, self.distance.size)

    def edges(self, mask: np.ndarray | None = None) -> tuple[np.ndarray, np.ndarray]:
        """(point, support position) of the retained edges, row-major."""
        if mask is None:
            mask = np.ones(self.distance.shape, dtype=bool)
        return np.nonzero(mask)

    def min_cost(self, mask: np.ndarray | None = None) -> tuple[int, np.ndarray, np.ndarray, np.ndarray] | None:
        """
        Solve the min-cost flow on the retained edges.

        Returns:
            (total cost, point index, support position, flow) of the edges carrying flow,
            or None when the restricted problem is infeasible.
        """
        rows, cols = self.edges(mask)
        solver = min_cost_flow.SimpleMinCostFlow()
        arcs = solver.add_arcs_with_capacity_and_unit_cost(
            rows,
            cols + self.n,
            np.full(rows.size, min(self.supply, self.demand), dtype=np.int64),
            self.cost[rows, cols],
        )
        solver.set_nodes_supplies(
            np.arange(self.n + self.p),
            np.concatenate([np.full(self.n, self.supply), np.full(self.p, -self.demand)]).astype(np.int64),
        )

        status = solver.solve()
        if status == solver.INFEASIBLE:
            return None
        if status != solver.OPTIMAL:
            raise SolverError(detail=f"min-cost flow ended with status {status}.")

        flows = np.asarray(solver.flows(arcs))
        used = flows > 0
        return int(solver.optimal_cost()), rows[used], cols[used], flows[used]

    def feasible(self, threshold: float) -> bool:
        """Whether the edges of length <= threshold can carry every unit."""
        rows, cols = self.edges(self.distance <= threshold)
        if rows.size == 0:
            return False

        source, sink = self.n + self.p, self.n + self.p + 1
        solver = max_flow.SimpleMaxFlow()
        solver.add_arcs_with_capacity(
            np.concatenate([np.full(self.n, source), rows, np.arange(self.p) + self.n]),
            np.concatenate([np.arange(self.n), cols + self.n, np.full(self.p, sink)]),
            np.concatenate(
                [
                    np.full(self.n, self.supply),
                    np.full(rows.size, min(self.supply, self.demand)),
                    np.full(self.p, self.demand),
                ]
            ).astype(np.int64),
        )

        status = solver.solve(source, sink)
        if status != solver.OPTIMAL:
            raise SolverError(detail=f"max-flow ended with status {status}.")
        return int(solver.optimal_flow()) == self.units

    def plan(
        self, kind: TransportKind, value: float, rows: np.ndarray, cols: np.ndarray, flows: np.ndarray
    ) -> TransportPlan:
        return TransportPlan(
            kind=kind,
            value=value,
            n_points=self.n,
            dim=self.grid.dim,
            res=self.grid.res,
            point_index=rows,
            cell_index=self.support[cols],
            mass=flows / self.units,
            distance=self.distance[rows, cols],
        )


def covering_radius(pts: PointSet, g: GridMeasure) -> float:
    """Largest distance from a positive-mass cell center to its nearest point."""
    if pts.dim != g.dim:
        raise ArgumentError(detail=f"point set has dimension {pts.dim}, grid has {g.dim}.", param="points")
    if g.support.size == 0:
        return 0.0

    distance, _ = cKDTree(pts.points).query(g.centers[g.support], k=1)
    return float(np.max(distance))


def solve_w1(pts: PointSet, g: GridMeasure) -> tuple[float, TransportPlan]:
    """
    Exact W1 between the empirical measure of pts and the normalized grid measure.

    Edges longer than PRUNE_FACTOR times the covering radius are dropped first; the full
    graph is solved instead when the pruned problem is infeasible or its optimum reaches the
    pruning frontier.

    Returns:
        tuple[float, TransportPlan]: Mean transport cost and an optimal plan.

    Raises:
        BudgetError: If the integer scaling exceeds the flow budget.
        SolverError: If the solver fails.
    """
    network = TransportNetwork(pts, g)
    cutoff = settings.PRUNE_FACTOR * covering_radius(pts, g)
    mask = network.distance <= cutoff

    result = None
    if not mask.all():
        result = network.min_cost(mask)
        frontier = network.distance[mask].max()
        if result is None or np.any(network.distance[result[1], result[2]] >= frontier):
            logger.warning("pruned W1 problem inconclusive (N=%d, P=%d), solving the full graph", network.n, network.p)
            result = None
    if result is None:
        result = network.min_cost()
    if result is None:
        raise SolverError(detail="the full transport problem is infeasible.")

    total, rows, cols, flows = result
    value = total / (network.units * 10**settings.COST_DECIMALS)
    logger.info("W1 N=%d d=%d m=%d: %.12g", network.n, g.dim, g.res, value)
    return value, network.plan(TransportKind.W1, value, rows, cols, flows)


def bottleneck_feasible(pts: PointSet, g: GridMeasure, t: float) -> bool:
    """Whether a coupling exists that moves no mass farther than t (distances rounded as in the solvers)."""
    return TransportNetwork(pts, g).feasible(t)


def solve_winf(pts: PointSet, g: GridMeasure) -> tuple[float, TransportPlan]:
    """
    Exact W∞ between the empirical measure of pts and the normalized grid measure.

    The value is the smallest candidate distance with a feasible flow. The returned plan is
    the cheapest (in mean distance) among the plans attaining it.

    Returns:
        tuple[float, TransportPlan]: Bottleneck distance and a bottleneck-optimal plan.

    Raises:
        BudgetError: If the integer scaling exceeds the flow budget.
        SolverError: If the solver fails.
    """
    network = TransportNetwork(pts, g)
    candidates = np.unique(network.distance)
    # rounded covering radius, the smallest candidate that can be feasible
    lower = network.distance.min(axis=0).max()

    lo = int(np.searchsorted(candidates, lower, side="left"))
    hi = candidates.size - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if network.feasible(float(candidates[mid])):
            hi = mid
        else:
            lo = mid + 1
    value = float(candidates[lo])

    result = network.min_cost(network.distance <= value)
    if result is None:
        raise SolverError(detail=f"no flow at the bottleneck value {value}.")

    _, rows, cols, flows = result
    logger.info("W∞ N=%d d=%d m=%d: %.12g (%d candidates)", network.n, g.dim, g.res, value, candidates.size)
    return value, network.plan(TransportKind.W_INFINITY, value, rows, cols, flows)


def regions(plan: TransportPlan) -> list[Region]:
    """
    Cells X_k receiving mass from each point k, with the masses μ_k placed there.

    Returns:
        list[Region]: One region per point, in point order, cells ascending.
    """
    order = np.lexsort((plan.cell_index, plan.point_index))
    points = plan.point_index[order]
    bounds = np.searchsorted(points, np.arange(plan.n_points + 1))

    return [
        Region(
            point=k,
            cells=plan.cell_index[order][bounds[k] : bounds[k + 1]],
            masses=plan.mass[order][bounds[k] : bounds[k + 1]],
        )
        for k in range(plan.n_points)
    ]


def density_bound_check(
    pts: PointSet,
    w_inf: float,
    probes: int | None = None,
    seed: int = 0,
    extra: np.ndarray | None = None,
) -> DensityReport:
    """
    Count the points within w_inf of probe locations against ω_d 2^d w_inf^d N.

    Probes are `probes` uniform locations drawn from SplitMix64(seed), every point of the set,
    and the optional extra locations.

    Raises:
        ArgumentError: If w_inf <= 0 or probes < 1.
    """
    probes = settings.PROBES if probes is None else probes
    if w_inf <= 0:
        raise ArgumentError(detail="w_inf must be positive.", param="w_inf")
    if probes < 1:
        raise ArgumentError(detail="at least one probe is required.", param="probes")

    locations = [SplitMix64(seed).uniform((probes, pts.dim)), pts.points]
    if extra is not None:
        locations.append(np.asarray(extra, dtype=np.float64).reshape(-1, pts.dim))
    at = np.concatenate(locations)

    counts = np.count_nonzero(cdist(at, pts.points) <= w_inf + COUNT_TOL, axis=1)
    constant = density_constant(pts.dim)
    bound = constant * w_inf**pts.dim * pts.n
    max_count = int(counts.max())

    logger.debug("density check: %d probes, max count %d, bound %.6g", at.shape[0], max_count, bound)
    return DensityReport(
        n_probes=int(at.shape[0]),
        counts=counts,
        w_inf=w_inf,
        constant=constant,
        bound=bound,
        max_count=max_count,
        max_ratio=max_count / bound,
    )


def format_plan(plan: TransportPlan) -> str:
    """Text export: a header line, then one `k j mass distance` line per entry."""
    lines = [f"kind={plan.kind.value} value={plan.value!r} n={plan.n_points} m={plan.res} d={plan.dim}"]
    lines.extend(f"{k} {j} {mass!r} {distance!r}" for k, j, mass, distance in plan.entries)
    return "\n".join(lines) + "\n"


def save_plan(path: Path, plan: TransportPlan) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_plan(plan), encoding="utf-8")
