"""
Point set testcase.

Author : Coke
Date   : 2025-06-14
"""

from pathlib import Path

import numpy as np
import pytest

from src.core.exceptions import ArgumentError
from src.schemas.domain import PointSet
from src.services.points import format_point_set, gen_point_set, load_point_set, parse_point_set, save_point_set
from src.utils.prng import SplitMix64


def test_splitmix64_reference_stream() -> None:
    rng = SplitMix64(0)
    assert [rng.next_uint64() for _ in range(3)] == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_splitmix64_seed_range() -> None:
    with pytest.raises(ArgumentError):
        SplitMix64(-1)
    with pytest.raises(ArgumentError):
        SplitMix64(2**64)


def test_midpoint_grid() -> None:
    pts = gen_point_set("midpoint_grid", 2, 4)
    assert np.allclose(pts.points, [[0.25, 0.25], [0.25, 0.75], [0.75, 0.25], [0.75, 0.75]])


def test_midpoint_grid_needs_a_power() -> None:
    with pytest.raises(ArgumentError):
        gen_point_set("midpoint_grid", 2, 5)


def test_full_random_is_deterministic() -> None:
    first = gen_point_set("full_random", 2, 16, seed=7)
    second = gen_point_set("full_random", 2, 16, seed=7)
    assert np.array_equal(first.points, second.points)
    assert not np.array_equal(first.points, gen_point_set("full_random", 2, 16, seed=8).points)


def test_jittered_one_point_per_stratum() -> None:
    pts = gen_point_set("jittered", 2, 16, seed=3)
    strata = {tuple(cell) for cell in np.floor(pts.points * 4).astype(int)}
    assert len(strata) == 16


def test_clustered_corner() -> None:
    pts = gen_point_set("clustered", 3, 20, seed=1)
    assert pts.points.max() <= 0.1


def test_single_point() -> None:
    pts = gen_point_set("single", 2, 3)
    assert np.array_equal(pts.points, np.full((3, 2), 0.5))


def test_unknown_kind() -> None:
    with pytest.raises(ArgumentError):
        gen_point_set("sobol", 2, 4)


def test_point_set_validation() -> None:
    with pytest.raises(ArgumentError):
        PointSet.build(dim=2, points=[[0.5, 1.5]])
    with pytest.raises(ArgumentError):
        PointSet.build(dim=2, points=[[0.5]])


def test_point_file(tmp_path: Path) -> None:
    pts = gen_point_set("full_random", 2, 5, seed=11)
    text = format_point_set(pts)
    assert text.splitlines()[0] == "d=2 n=5"

    path = tmp_path / "points.txt"
    save_point_set(path, pts)
    assert np.array_equal(load_point_set(path).points, pts.points)


@pytest.mark.parametrize("text", ["", "0.5 0.5\n", "d=2 n=2\n0.5 0.5\n", "d=2 n=1\n0.5\n"])
def test_malformed_point_file(text: str) -> None:
    with pytest.raises(ArgumentError):
        parse_point_set(text)
