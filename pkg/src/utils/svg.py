"""
Minimal SVG line chart.

Hand-emitted markup (axes, dashed grid, one polyline, labels) for log-log plots of sweep columns.

Author : Coke
Date   : 2025-06-09
"""

import math
from pathlib import Path
from typing import Sequence

import numpy as np

from src.core.exceptions import ArgumentError

Point = tuple[float, float]

WIDTH, HEIGHT = 800.0, 400.0
PADDING_LEFT, PADDING_RIGHT = 70.0, 20.0
PADDING_TOP, PADDING_BOTTOM = 50.0, 50.0


def _ensure_range(min_value: float, max_value: float) -> tuple[float, float]:
    if math.isclose(min_value, max_value):
        epsilon = 1.0 if math.isclose(min_value, 0.0) else abs(min_value) * 0.01
        return min_value - epsilon, max_value + epsilon
    return min_value, max_value


def _grid_lines(axis_start: Point, axis_end: Point, steps: int, orientation: str) -> list[str]:
    lines: list[str] = []
    x0, y0 = axis_start
    x1, y1 = axis_end
    for step in range(1, steps):
        ratio = step / steps
        if orientation == "horizontal":
            pos = y0 + ratio * (y1 - y0)
            lines.append(
                f'<line x1="{x0:.2f}" y1="{pos:.2f}" x2="{x1:.2f}" y2="{pos:.2f}" '
                'stroke="#d0d0d0" stroke-width="1" stroke-dasharray="4 4" />'
            )
        else:
            pos = x0 + ratio * (x1 - x0)
            lines.append(
                f'<line x1="{pos:.2f}" y1="{y0:.2f}" x2="{pos:.2f}" y2="{y1:.2f}" '
                'stroke="#d0d0d0" stroke-width="1" stroke-dasharray="4 4" />'
            )
    return lines


def fitted_slope(points: Sequence[Point], *, logx: bool = True, logy: bool = True) -> float:
    """
    Least-squares slope of the points in the plotted coordinates.

    Args:
        points (Sequence[Point]): Data points.
        logx (bool): Fit against log10(x).
        logy (bool): Fit against log10(y).

    Returns:
        float: The slope, nan with fewer than two distinct abscissae.
    """
    xs = np.array([p[0] for p in points], dtype=np.float64)
    ys = np.array([p[1] for p in points], dtype=np.float64)
    if logx:
        xs = np.log10(xs)
    if logy:
        ys = np.log10(ys)
    if len(np.unique(xs)) < 2:
        return math.nan
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


def render_line_chart(
    points: Sequence[Point],
    *,
    x_label: str = "",
    y_label: str = "",
    title: str = "",
    logx: bool = True,
    logy: bool = True,
    color: str = "#2266cc",
) -> str:
    """
    Render an SVG line chart of the points, sorted by abscissa.

    Args:
        points (Sequence[Point]): Data points, all positive on log axes.
        x_label (str): Label of the horizontal axis.
        y_label (str): Label of the vertical axis.
        title (str): Chart title.
        logx (bool): Logarithmic horizontal axis.
        logy (bool): Logarithmic vertical axis.
        color (str): Polyline stroke color.

    Returns:
        str: SVG document.

    Raises:
        ArgumentError: If there are no points or a log axis receives a non-positive value.
    """
    if not points:
        raise ArgumentError(detail="no points to plot.")
    points = sorted(points)
    if (logx and any(x <= 0 for x, _ in points)) or (logy and any(y <= 0 for _, y in points)):
        raise ArgumentError(detail="log axes need positive values.")

    xs = [math.log10(x) if logx else x for x, _ in points]
    ys = [math.log10(y) if logy else y for _, y in points]
    x_min, x_max = _ensure_range(min(xs), max(xs))
    y_min, y_max = _ensure_range(min(ys), max(ys))

    def project(x: float, y: float) -> Point:
        x_norm = (x - x_min) / (x_max - x_min)
        y_norm = (y - y_min) / (y_max - y_min)
        x_px = PADDING_LEFT + x_norm * (WIDTH - PADDING_LEFT - PADDING_RIGHT)
        y_px = HEIGHT - PADDING_BOTTOM - y_norm * (HEIGHT - PADDING_TOP - PADDING_BOTTOM)
        return x_px, y_px

    projected = [project(x, y) for x, y in zip(xs, ys)]
    axis_x0, axis_y0 = PADDING_LEFT, HEIGHT - PADDING_BOTTOM
    axis_x1, axis_y1 = WIDTH - PADDING_RIGHT, PADDING_TOP
    slope = fitted_slope(points, logx=logx, logy=logy)

    elements: list[str] = [
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff" />',
        f'<line x1="{axis_x0}" y1="{axis_y0}" x2="{axis_x1}" y2="{axis_y0}" stroke="#000000" stroke-width="2" />',
        f'<line x1="{axis_x0}" y1="{axis_y0}" x2="{axis_x0}" y2="{axis_y1}" stroke="#000000" stroke-width="2" />',
    ]
    elements.extend(_grid_lines((axis_x0, axis_y0), (axis_x1, axis_y1), 5, orientation="horizontal"))
    elements.extend(_grid_lines((axis_x0, axis_y0), (axis_x1, axis_y1), 5, orientation="vertical"))
    elements.append(
        f'<polyline fill="none" stroke="{color}" stroke-width="2" points="'
        + " ".join(f"{x:.2f},{y:.2f}" for x, y in projected)
        + '" />'
    )
    for x_px, y_px in projected:
        elements.append(f'<circle cx="{x_px:.2f}" cy="{y_px:.2f}" r="3" fill="{color}" />')

    # tick labels carry data values, not their logarithms
    for (x_value, y_value), (x_px, y_px) in zip(points, projected):
        elements.append(
            f'<text x="{x_px:.2f}" y="{axis_y0 + 18:.2f}" text-anchor="middle" '
            f'font-family="Arial" font-size="12">{x_value:.4g}</text>'
        )
        elements.append(
            f'<text x="{axis_x0 - 8:.2f}" y="{y_px + 4:.2f}" text-anchor="end" '
            f'font-family="Arial" font-size="12">{y_value:.4g}</text>'
        )

    if title:
        elements.append(
            f'<text x="{WIDTH / 2}" y="{PADDING_TOP / 2}" text-anchor="middle" '
            f'font-family="Arial" font-size="18">{title}</text>'
        )
    if x_label:
        elements.append(
            f'<text x="{(axis_x0 + axis_x1) / 2}" y="{HEIGHT - 10}" text-anchor="middle" '
            f'font-family="Arial" font-size="14">{x_label}</text>'
        )
    if y_label:
        y_mid = (HEIGHT - PADDING_BOTTOM + PADDING_TOP) / 2
        elements.append(
            f'<text x="{PADDING_LEFT / 4}" y="{y_mid}" text-anchor="middle" font-family="Arial" font-size="14" '
            f'transform="rotate(-90 {PADDING_LEFT / 4},{y_mid})">{y_label}</text>'
        )
    if not math.isnan(slope):
        elements.append(
            f'<text class="slope" x="{axis_x1:.2f}" y="{axis_y1 - 8:.2f}" text-anchor="end" '
            f'font-family="Arial" font-size="12">slope={slope:.4f}</text>'
        )

    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(WIDTH)}" height="{int(HEIGHT)}" '
        f'viewBox="0 0 {int(WIDTH)} {int(HEIGHT)}">\n' + "\n".join(elements) + "\n</svg>\n"
    )


def save_line_chart(
    path: Path,
    points: Sequence[Point],
    *,
    x_label: str = "",
    y_label: str = "",
    title: str = "",
    logx: bool = True,
    logy: bool = True,
) -> None:
    """Render the chart and write it to `path`, creating parent directories."""
    content = render_line_chart(points, x_label=x_label, y_label=y_label, title=title, logx=logx, logy=logy)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(content, encoding="utf-8")
