"""
Localized estimate testcase.

Author : Coke
Date   : 2025-06-16
"""

import math

import numpy as np
import pytest

from src.core.exceptions import ArgumentError, PreconditionError
from src.schemas.domain import FieldFamily, FieldKind
from src.schemas.reports import Lemma1Report
from src.services.fields import build_field
from src.services.inequalities import ball_example, cone_example, lemma1_verify, lemma4_case, lemma4_verify


@pytest.fixture(scope="module")
def ball_reports() -> dict[float, Lemma1Report]:
    """
    Ball example with R = 0.5 on a 256 x 256 grid, one report per delta.
    """
    reports = {}
    for delta in (0.02, 0.05, 0.1):
        case = ball_example(2, 0.5, delta, 256)
        reports[delta] = lemma1_verify(case.measure, case.field, case.radius)
    return reports


def test_ball_example_integral(ball_reports: dict[float, Lemma1Report]) -> None:
    for delta, report in ball_reports.items():
        assert 0.8 <= report.lhs / (delta * report.mass) <= 1.0
        assert report.mass == pytest.approx(math.pi / 4, abs=0.02)
        assert report.origin_value == pytest.approx(0.0, abs=1e-12)


def test_ball_example_ratio_is_stable(ball_reports: dict[float, Lemma1Report]) -> None:
    ratios = [report.ratio for report in ball_reports.values()]
    assert max(ratios) / min(ratios) <= 2
    assert ratios[0] == pytest.approx(0.5, rel=0.1)


def test_ball_lorentz_equals_support_lorentz(ball_reports: dict[float, Lemma1Report]) -> None:
    for report in ball_reports.values():
        assert report.support_lorentz == pytest.approx(report.lorentz, rel=1e-9)


def test_cone_example(ball_reports: dict[float, Lemma1Report]) -> None:
    case = cone_example(2, 1.0, 0.05, 0.02, 512)
    report = lemma1_verify(case.measure, case.field, case.radius)

    assert case.radius == pytest.approx(math.hypot(1.0, 0.05))
    assert 0.5 * 0.05 <= report.mass <= 2 * 0.05
    ball_ratio = ball_reports[0.02].ratio
    assert ball_ratio / 4 <= report.support_ratio <= 4 * ball_ratio
    assert report.ratio <= report.support_ratio


def test_zero_field() -> None:
    case = ball_example(2, 0.5, 0.05, 64)
    zero = build_field(FieldFamily(kind=FieldKind.LINEAR, coef=(0.0, 0.0)), case.measure)
    report = lemma1_verify(case.measure, zero, case.radius)
    assert (report.lhs, report.lorentz, report.ratio) == (0.0, 0.0, 0.0)


def test_measure_outside_the_ball() -> None:
    case = ball_example(2, 0.5, 0.05, 64)
    with pytest.raises(PreconditionError):
        lemma1_verify(case.measure, case.field, 0.25)


def test_field_must_vanish_at_the_origin() -> None:
    case = ball_example(2, 0.5, 0.05, 64)
    shifted = build_field(FieldFamily(kind=FieldKind.DISTANCE_CAP, delta=0.05), case.measure, anchor=[0.3, 0.0])
    with pytest.raises(PreconditionError):
        lemma1_verify(case.measure, shifted, case.radius)


def test_lemma4_ratio_is_scale_free() -> None:
    reports = [lemma4_verify(lemma4_case(2, r, 129), r) for r in (0.25, 0.5, 1.0)]
    ratios = [report.ratio for report in reports]

    assert ratios[1] == pytest.approx(ratios[0], rel=1e-9)
    assert ratios[2] == pytest.approx(ratios[0], rel=1e-9)
    assert ratios[0] == pytest.approx(2 * math.pi / 3 / math.sqrt(math.pi), rel=0.05)
    assert reports[2].linf == 1.0


def test_lemma4_ratio_is_homogeneous() -> None:
    f = lemma4_case(2, 0.5, 129)
    base = lemma4_verify(f, 0.5).ratio
    assert lemma4_verify(f.scaled(2.5), 0.5).ratio == pytest.approx(base, rel=1e-9)
    assert lemma4_verify(f.scaled(-1.0), 0.5).ratio == pytest.approx(base, rel=1e-9)


def test_lemma4_smaller_cap() -> None:
    f = lemma4_case(3, 0.5, 33, delta=0.1)
    report = lemma4_verify(f, 0.5)
    assert 0 < report.ratio
    assert np.isfinite(report.ratio)


def test_lemma4_preconditions() -> None:
    f = lemma4_case(2, 0.5, 33)
    with pytest.raises(ArgumentError):
        lemma4_verify(f, 0.0)

    shifted = build_field(FieldFamily(kind=FieldKind.DISTANCE_CAP, delta=0.5), f.grid, anchor=[0.25, 0.25])
    with pytest.raises(PreconditionError):
        lemma4_verify(shifted, 0.5)
