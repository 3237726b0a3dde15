"""
Experiment runner.

Each mode turns an ExperimentConfig into CSV, SVG or point files under an output directory.
Rows are emitted in (N, seed) order whatever order the workers finish in, so a rerun of the
same configuration reproduces the files byte for byte.

Author : Coke
Date   : 2025-06-12
"""

import logging
from functools import partial
from pathlib import Path
from typing import Any, Callable

from src.core.exceptions import ConfigError
from src.queues.worker import run_bounded
from src.schemas.config import ExperimentConfig, Mode
from src.schemas.domain import FieldFamily, FieldKind, PointSet, ScalarField
from src.services.fields import build_field
from src.services.grids import make_grid_measure
from src.services.inequalities import (
    ball_example,
    cone_example,
    lemma1_verify,
    lemma4_case,
    lemma4_verify,
    proof_chain_audit,
    theorem_report,
)
from src.services.points import gen_point_set, load_point_set, save_point_set
from src.services.transport import density_bound_check, save_plan, solve_w1, solve_winf
from src.utils.svg import save_line_chart
from src.utils.table import read_columns, write_csv

logger = logging.getLogger(__name__)

Row = dict[str, Any]

RESULT_COLUMNS = (
    "d", "m", "N", "kind", "seed", "family", "eps_or_delta",
    "E", "w1", "winf", "l1", "linf", "lorentz_d1",
    "rhs_kr", "rhs_theorem", "rhs_prop", "ratio_kr", "ratio_theorem", "ratio_prop",
)  # fmt: skip
DELTA_COLUMNS = ("d", "m", "N", "kind", "seed", "delta", "rhs_delta", "ratio_delta", "w_inf_inflation")
LEMMA1_COLUMNS = (
    "example", "d", "m", "R", "h", "delta", "lhs", "mass", "lorentz", "rhs", "ratio",
    "support_lorentz", "support_rhs", "support_ratio", "origin_value",
)  # fmt: skip
LEMMA4_COLUMNS = ("d", "m", "r", "delta", "lhs", "l1", "linf", "ratio")
REGION_COLUMNS = ("k", "term", "lemma1_ratio", "region_lorentz", "region_interp", "region_l1")
AUDIT_COLUMNS = (
    "d", "m", "N", "kind", "seed", "family", "eps_or_delta", "E", "winf", "sum_terms", "triangle_slack",
    "holder_lhs", "holder_rhs", "overlap_ratio", "overlap_bound", "ball_terms_sum",
    "density_max_count", "density_bound", "density_max_ratio",
)  # fmt: skip


def _points(cfg: ExperimentConfig, n: int | None, seed: int) -> PointSet:
    if cfg.points_file:
        pts = load_point_set(Path(cfg.points_file))
        if pts.dim != cfg.d:
            raise ConfigError(detail=f"`points_file` has dimension {pts.dim}, config says d={cfg.d}.")
        return pts
    if n is None:
        raise ConfigError(detail="`N` is required unless `points_file` is given.")
    return gen_point_set(cfg.pointset, cfg.d, n, seed)


def _kind(cfg: ExperimentConfig) -> str:
    return "file" if cfg.points_file else cfg.pointset.value


def _family(cfg: ExperimentConfig, w_inf: float) -> FieldFamily:
    """The configured test function; eps_scale ties eps (or delta) to the instance's W∞."""
    scaled = None if cfg.eps_scale is None else cfg.eps_scale * w_inf
    match cfg.family:
        case FieldKind.EXTREMAL_EPS:
            eps = cfg.eps if cfg.eps is not None else scaled
            if eps is None:
                raise ConfigError(detail="extremal_eps needs `eps` or `eps_scale`.")
            return FieldFamily.build(kind=cfg.family, eps=eps)
        case FieldKind.DISTANCE_CAP:
            delta = cfg.delta if cfg.delta is not None else scaled
            if delta is None:
                raise ConfigError(detail="distance_cap needs `delta` or `eps_scale`.")
            return FieldFamily.build(kind=cfg.family, delta=delta)
        case FieldKind.LINEAR | FieldKind.PRODUCT_SINE:
            return FieldFamily.build(kind=cfg.family, coef=tuple(cfg.coef), offset=cfg.offset)
    raise ConfigError(detail="`family = sampled` cannot be built from a configuration.")


def _field(cfg: ExperimentConfig, pts: PointSet, w_inf: float) -> ScalarField:
    g = make_grid_measure(cfg.d, cfg.m)
    anchor = cfg.anchor or [0.5] * cfg.d
    return build_field(_family(cfg, w_inf), g, points=pts, anchor=anchor)


def evaluate_instance(cfg: ExperimentConfig, n: int | None, seed: int) -> tuple[Row, list[Row]]:
    """
    Solve one (point set, field) pair and report it.

    Returns:
        tuple[Row, list[Row]]: The result row and one row per delta.
    """
    pts = _points(cfg, n, seed)
    g = make_grid_measure(cfg.d, cfg.m)
    w1, _ = solve_w1(pts, g)
    w_inf, _ = solve_winf(pts, g)
    f = _field(cfg, pts, w_inf)
    report = theorem_report(f, pts, g, cfg.delta_list, w1=w1, w_inf=w_inf)

    key = {"d": cfg.d, "m": cfg.m, "N": pts.n, "kind": _kind(cfg), "seed": seed}
    row = {
        **key,
        "family": f.family.kind.value,
        "eps_or_delta": f.family.parameter,
        "E": report.e,
        "w1": report.w1,
        "winf": report.w_inf,
        "l1": report.norms.l1,
        "linf": report.norms.linf,
        "lorentz_d1": report.norms.lorentz_d1,
        "rhs_kr": report.rhs_kr,
        "rhs_theorem": report.rhs_theorem,
        "rhs_prop": report.rhs_proposition,
        "ratio_kr": report.ratio_kr,
        "ratio_theorem": report.ratio_theorem,
        "ratio_prop": report.ratio_proposition,
    }
    delta_rows = [
        {
            **key,
            "delta": delta,
            "rhs_delta": rhs,
            "ratio_delta": report.ratio_delta[delta],
            "w_inf_inflation": report.w_inf_inflation,
        }
        for delta, rhs in report.rhs_delta.items()
    ]
    return row, delta_rows


def _sibling(path: Path, suffix: str) -> Path:
    return path.with_name(f"{path.stem}_{suffix}{path.suffix}")


def _run_instances(cfg: ExperimentConfig, out: Path, sizes: list[int | None]) -> list[Path]:
    items = sorted(((n, seed) for n in sizes for seed in cfg.seed_list), key=lambda item: (item[0] or 0, item[1]))
    results = run_bounded([partial(evaluate_instance, cfg, n, seed) for n, seed in items])

    path = out / cfg.csv
    deltas = _sibling(path, "deltas")
    write_csv(path, RESULT_COLUMNS, [row for row, _ in results])
    write_csv(deltas, DELTA_COLUMNS, [delta_row for _, delta_rows in results for delta_row in delta_rows])
    return [path, deltas]


def run_eval(cfg: ExperimentConfig, out: Path) -> list[Path]:
    return _run_instances(cfg, out, [cfg.N])


def run_sweep(cfg: ExperimentConfig, out: Path) -> list[Path]:
    if not cfg.sizes:
        raise ConfigError(detail="sweep needs `sizes`.")
    return _run_instances(cfg, out, sorted(set(cfg.sizes)))


def run_lemma1(cfg: ExperimentConfig, out: Path) -> list[Path]:
    if cfg.delta is None:
        raise ConfigError(detail="lemma1 needs `delta`.")
    if cfg.example == "ball":
        case = ball_example(cfg.d, cfg.R, cfg.delta, cfg.m)
    else:
        case = cone_example(cfg.d, cfg.R, cfg.h, cfg.delta, cfg.m)
    report = lemma1_verify(case.measure, case.field, case.radius)

    row = {
        "example": cfg.example,
        "d": cfg.d,
        "m": cfg.m,
        "R": cfg.R,
        "h": cfg.h if cfg.example == "cone" else None,
        "delta": cfg.delta,
        **report.serializable_dict(exclude={"radius"}),
    }
    path = out / cfg.csv
    write_csv(path, LEMMA1_COLUMNS, [row])
    return [path]


def run_lemma4(cfg: ExperimentConfig, out: Path) -> list[Path]:
    f = lemma4_case(cfg.d, cfg.r, cfg.m, cfg.delta)
    report = lemma4_verify(f, cfg.r)

    row = {"d": cfg.d, "m": cfg.m, "r": cfg.r, "delta": f.family.delta, **report.serializable_dict(exclude={"radius"})}
    path = out / cfg.csv
    write_csv(path, LEMMA4_COLUMNS, [row])
    return [path]


def run_audit(cfg: ExperimentConfig, out: Path) -> list[Path]:
    pts = _points(cfg, cfg.N, cfg.seed)
    g = make_grid_measure(cfg.d, cfg.m)
    w_inf, plan = solve_winf(pts, g)
    f = _field(cfg, pts, w_inf)
    audit = proof_chain_audit(f, pts, g, plan)
    density = density_bound_check(pts, w_inf, cfg.probes, cfg.seed)

    summary = {
        "d": cfg.d,
        "m": cfg.m,
        "N": pts.n,
        "kind": _kind(cfg),
        "seed": cfg.seed,
        "family": f.family.kind.value,
        "eps_or_delta": f.family.parameter,
        "E": audit.e,
        "winf": audit.w_inf,
        "sum_terms": sum(audit.terms),
        "triangle_slack": audit.triangle_slack,
        "holder_lhs": audit.holder_lhs,
        "holder_rhs": audit.holder_rhs,
        "overlap_ratio": audit.overlap_ratio,
        "overlap_bound": audit.overlap_bound,
        "ball_terms_sum": audit.ball_terms_sum,
        "density_max_count": density.max_count,
        "density_bound": density.bound,
        "density_max_ratio": density.max_ratio,
    }
    columns = zip(audit.terms, audit.lemma1_ratios, audit.region_lorentz, audit.region_interp, audit.region_l1)
    regions = [dict(zip(REGION_COLUMNS, (k, *values))) for k, values in enumerate(columns)]

    path = out / cfg.csv
    region_path = _sibling(path, "regions")
    plan_path = out / "plan.txt"
    write_csv(path, AUDIT_COLUMNS, [summary])
    write_csv(region_path, REGION_COLUMNS, regions)
    save_plan(plan_path, plan)
    return [path, region_path, plan_path]


def run_gen_points(cfg: ExperimentConfig, out: Path) -> list[Path]:
    if cfg.N is None:
        raise ConfigError(detail="gen-points needs `N`.")
    path = out / "points.txt"
    save_point_set(path, gen_point_set(cfg.pointset, cfg.d, cfg.N, cfg.seed))
    return [path]


def run_plot(cfg: ExperimentConfig, out: Path) -> list[Path]:
    if cfg.input is None:
        raise ConfigError(detail="plot needs `input`.")
    points = read_columns(Path(cfg.input), cfg.x, cfg.y)
    path = out / cfg.svg
    title = f"{cfg.y} vs {cfg.x}"
    save_line_chart(path, points, x_label=cfg.x, y_label=cfg.y, title=title, logx=cfg.logx, logy=cfg.logy)
    return [path]


RUNNERS: dict[Mode, Callable[[ExperimentConfig, Path], list[Path]]] = {
    Mode.EVAL: run_eval,
    Mode.SWEEP: run_sweep,
    Mode.LEMMA1: run_lemma1,
    Mode.LEMMA4: run_lemma4,
    Mode.AUDIT: run_audit,
    Mode.GEN_POINTS: run_gen_points,
    Mode.PLOT: run_plot,
}


def run(cfg: ExperimentConfig, mode: Mode | str | None = None, out: Path | None = None) -> list[Path]:
    """
    Execute one experiment.

    Args:
        cfg (ExperimentConfig): Parsed configuration.
        mode (Mode | str | None): Mode to run, overriding cfg.mode.
        out (Path | None): Output directory, overriding cfg.out (default the working directory).

    Returns:
        list[Path]: The files written.

    Raises:
        ConfigError: If no mode is given or the configuration lacks a key the mode needs.
    """
    selected = mode or cfg.mode
    if selected is None:
        raise ConfigError(detail="no mode given.")
    try:
        selected = Mode(selected)
    except ValueError:
        raise ConfigError(detail=f"unknown mode `{selected}`.") from None

    directory = out or Path(cfg.out or ".")
    directory.mkdir(parents=True, exist_ok=True)
    written = RUNNERS[selected](cfg, directory)
    for path in written:
        logger.info("wrote %s", path)
    return written
