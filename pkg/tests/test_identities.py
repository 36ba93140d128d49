"""Tests for the identity checks and their reports."""

import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from latticepaths import (
    DEFAULT_SEED,
    HagenRotheParams,
    NiederhausenQuery,
    ValidationError,
    complement_check,
    hagen_rothe,
    hagen_rothe_check,
    niederhausen_forms_check,
    recurrence_check,
    shift_check,
    upper_negation_check,
)
from latticepaths.identities import random_hagen_rothe, random_upper_negation


def test_hagen_rothe_examples():
    assert hagen_rothe(HagenRotheParams(1, 2, 1, 2)) == (15, 15)
    assert hagen_rothe(HagenRotheParams(0, Fraction(1, 2), Fraction(1, 2), 1)) == (1, 1)
    assert hagen_rothe(HagenRotheParams(3, -2, 5, 0)) == (1, 1)


def test_hagen_rothe_params_reject_vanishing_denominator():
    with pytest.raises(ValidationError):
        HagenRotheParams(1, -1, 2, 3)


@given(
    st.fractions(min_value=-6, max_value=6, max_denominator=6),
    st.fractions(min_value=-6, max_value=6, max_denominator=6),
    st.fractions(min_value=-6, max_value=6, max_denominator=6),
    st.integers(min_value=0, max_value=8),
)
def test_hagen_rothe_property(alpha, beta, gamma, n):
    if any(gamma + beta * i == 0 for i in range(n + 1)):
        return
    lhs, rhs = hagen_rothe(HagenRotheParams(alpha, beta, gamma, n))
    assert lhs == rhs


def test_hagen_rothe_check_report_shape():
    report = hagen_rothe_check(HagenRotheParams(1, 2, 1, 2))
    assert report.name == "hagen-rothe"
    assert report.ok
    assert report.values["lhs"] == report.values["rhs"] == 15
    assert report.line().startswith("pass hagen-rothe:")
    json.dumps(report.as_dict())


def test_upper_negation_check():
    report = upper_negation_check(Fraction(-7, 3), 4)
    assert report.ok
    assert report.values["direct"] == report.values["negated"]


def test_complement_check_examples():
    report = complement_check(1, 2, 2, 1)
    assert (report.values["total"], report.values["intersecting"],
            report.values["avoiding"]) == (3, 1, 2)
    assert report.ok

    report = complement_check(1, 1, 2, 1)
    assert (report.values["total"], report.values["intersecting"],
            report.values["avoiding"]) == (3, 3, 0)
    assert report.ok

    report = complement_check(1, 10, 2, 1)
    assert (report.values["total"], report.values["intersecting"],
            report.values["avoiding"]) == (3, 0, 3)
    assert report.ok


def test_recurrence_check_examples():
    report = recurrence_check(1, 0, 0, 1, 2, 2)
    assert report.ok
    assert (report.values["start_up"], report.values["start"],
            report.values["start_right"]) == (1, 2, 1)

    report = recurrence_check(2, 0, 0, 2, 1, 3)
    assert report.ok
    assert report.values["start_up"] == report.values["start"] - report.values["start_right"]


def test_recurrence_check_rejects_outside_condition_block():
    with pytest.raises(ValidationError):
        recurrence_check(2, 0, 0, 1, 1, 3)


def test_shift_check_small_grid():
    for k, r, a, b, m, n in (
        (1, 1, 0, 1, 2, 3),
        (2, 0, 0, 1, 1, 3),
        (1, 0, 1, 2, 3, 4),
    ):
        report = shift_check(k, r, a, b, m, n)
        assert report.ok
        assert report.values["strict"] == report.values["weak"]


def test_niederhausen_forms_check_examples():
    report = niederhausen_forms_check(NiederhausenQuery(1, 1, 2, 2))
    assert report.ok
    assert (report.values["subtracted"], report.values["collected"],
            report.values["direct"]) == (2, 2, 2)

    report = niederhausen_forms_check(NiederhausenQuery(2, 1, 1, 2))
    assert report.ok
    assert report.values["subtracted"] == 2

    report = niederhausen_forms_check(NiederhausenQuery(1, 1, 0, 3))
    assert report.ok
    assert report.values["direct"] == 1


def test_failing_report_line_is_marked():
    report = recurrence_check(1, 0, 0, 1, 2, 2)
    assert report.line().startswith("pass ")
    broken = type(report)(report.name, report.parameters, report.values, False)
    assert broken.line().startswith("FAIL ")


def test_random_generators_are_deterministic():
    first = [random_hagen_rothe(random.Random(DEFAULT_SEED)) for _ in range(5)]
    second = [random_hagen_rothe(random.Random(DEFAULT_SEED)) for _ in range(5)]
    assert first == second

    rng = random.Random(11)
    pairs = [random_upper_negation(rng) for _ in range(10)]
    for x, k in pairs:
        assert 0 <= k <= 12
        report = upper_negation_check(x, k)
        assert report.ok
