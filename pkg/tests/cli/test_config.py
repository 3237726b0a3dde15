"""
Experiment configuration testcase.

Author : Coke
Date   : 2025-06-17
"""

from pathlib import Path

import pytest

from src.core.exceptions import ConfigError
from src.schemas.config import Mode, parse_config
from src.schemas.domain import FieldKind, PointSetKind

EXAMPLE = """
# extremal field on the 4 x 4 midpoint grid
mode = eval
d = 2
m = 64
N = 16
pointset = midpoint_grid
family = extremal_eps
eps = 0.05   # trailing comment
"""


def test_example_config() -> None:
    cfg = parse_config(EXAMPLE)
    assert cfg.mode == Mode.EVAL
    assert (cfg.d, cfg.m, cfg.N) == (2, 64, 16)
    assert cfg.pointset == PointSetKind.MIDPOINT_GRID
    assert cfg.family == FieldKind.EXTREMAL_EPS
    assert cfg.eps == 0.05


def test_defaults() -> None:
    cfg = parse_config("")
    assert cfg.mode is None
    assert cfg.delta_list == [0.5, 1.0, 2.0]
    assert cfg.seed_list == [0]
    assert cfg.csv == "results.csv"


def test_lists() -> None:
    cfg = parse_config("sizes = 4, 16,64\nseeds = 3,1,3\ndeltas = 0.5, 1\ncoef = 1, -2.5")
    assert cfg.sizes == [4, 16, 64]
    assert cfg.seed_list == [1, 3]
    assert cfg.delta_list == [0.5, 1.0]
    assert cfg.coef == [1.0, -2.5]


def test_booleans() -> None:
    cfg = parse_config("logx = false\nlogy = true")
    assert cfg.logx is False
    assert cfg.logy is True


def test_invalid_value_names_the_key() -> None:
    with pytest.raises(ConfigError) as exc:
        parse_config("mode = eval\nd = 0\n")
    assert exc.value.detail.startswith("d ")


def test_unknown_key() -> None:
    with pytest.raises(ConfigError) as exc:
        parse_config("d = 2\nunknownkey = 1\n")
    assert "line 2" in exc.value.detail
    assert "unknownkey" in exc.value.detail


def test_line_without_value() -> None:
    with pytest.raises(ConfigError) as exc:
        parse_config("d = 2\nm 64\n")
    assert "line 2" in exc.value.detail


def test_repeated_key() -> None:
    with pytest.raises(ConfigError):
        parse_config("d = 2\nd = 3\n")


@pytest.mark.parametrize(
    "text",
    [
        "eps = 0.1\neps_scale = 0.25",
        "d = 2\ndeltas = 0.5, 3",
        "d = 2\nanchor = 0.5",
        f"seed = {2**64}",
        "seeds = 1, -1",
        "sizes = 4, 0",
        "mode = fit",
        "pointset = sobol",
        "example = square",
    ],
)
def test_rejected_values(text: str) -> None:
    with pytest.raises(ConfigError):
        parse_config(text)


def test_shipped_configs_parse() -> None:
    configs = sorted((Path(__file__).parents[2] / "configs").glob("*.cfg"))
    assert configs
    for path in configs:
        parse_config(path.read_text(encoding="utf-8"))
