"""
CSV tables.

Author : Coke
Date   : 2025-06-09
"""

import csv
import io
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from src.core.exceptions import ArgumentError
from src.utils.utils import format_number


def render_csv(columns: Sequence[str], rows: Iterable[Mapping[str, Any]]) -> str:
    """
    Render rows as CSV text with a fixed column order and reproducible number formatting.

    Args:
        columns (Sequence[str]): Header, also the order of the cells.
        rows (Iterable[Mapping[str, Any]]): Row mappings; missing keys become empty cells.

    Returns:
        str: CSV text with "\\n" line endings.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(column)) for column in columns])
    return buffer.getvalue()


def _cell(value: Any) -> str:
    if value is None or isinstance(value, (int, float)):
        return format_number(value)
    return str(value)


def write_csv(path: Path, columns: Sequence[str], rows: Iterable[Mapping[str, Any]]) -> None:
    """Write rows to `path`, creating parent directories."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_csv(columns, rows), encoding="utf-8")


def read_columns(path: Path, x: str, y: str) -> list[tuple[float, float]]:
    """
    Read two numeric columns of a CSV file.

    Args:
        path (Path): CSV file with a header row.
        x (str): Abscissa column.
        y (str): Ordinate column.

    Returns:
        list[tuple[float, float]]: One (x, y) pair per row, rows with empty cells skipped.

    Raises:
        ArgumentError: If the file or a column is missing.
    """
    if not path.is_file():
        raise ArgumentError(detail=f"file not found: {path}", param="input")

    with path.open("r", encoding="utf-8", newline="") as file:
        reader = csv.DictReader(file)
        header = reader.fieldnames or []
        for column in (x, y):
            if column not in header:
                raise ArgumentError(detail=f"column `{column}` not in {header}", param="input")
        return [(float(row[x]), float(row[y])) for row in reader if row[x] and row[y]]
