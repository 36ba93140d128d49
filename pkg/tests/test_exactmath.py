"""Tests for the exact integer and rational arithmetic layer."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from latticepaths import (
    ValidationError,
    as_integer,
    binomial,
    generalized_binomial,
    upper_negation,
)


def test_binomial_small_values():
    assert binomial(4, 2) == 6
    assert binomial(5, 0) == 1
    assert binomial(3, 5) == 0
    assert binomial(0, 0) == 1


def test_binomial_out_of_range_is_zero():
    assert binomial(6, -1) == 0
    assert binomial(6, 7) == 0


def test_binomial_rejects_negative_upper_index():
    with pytest.raises(ValidationError):
        binomial(-1, 0)


@given(st.integers(min_value=1, max_value=64), st.integers(min_value=0, max_value=64))
def test_binomial_pascal_rule(n, k):
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@given(st.integers(min_value=0, max_value=64))
def test_binomial_row_ends(n):
    assert binomial(n, 0) == 1
    assert binomial(n, n) == 1


def test_generalized_binomial_examples():
    assert generalized_binomial(-1, 2) == 1
    assert generalized_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert generalized_binomial(6, 2) == 15
    assert generalized_binomial(Fraction(7, 3), 0) == 1


def test_generalized_binomial_rejects_negative_order():
    with pytest.raises(ValidationError):
        generalized_binomial(Fraction(1, 2), -1)


@given(st.integers(min_value=0, max_value=20), st.integers(min_value=0, max_value=20))
def test_generalized_binomial_agrees_with_binomial(n, k):
    if k <= n:
        assert generalized_binomial(n, k) == binomial(n, k)


def test_upper_negation_examples():
    assert upper_negation(-2, 1) == (-2, -2)
    assert upper_negation(5, 2) == (10, 10)
    assert upper_negation(Fraction(1, 2), 1) == (Fraction(1, 2), Fraction(1, 2))


@given(
    st.fractions(
        min_value=-8, max_value=8, max_denominator=6
    ),
    st.integers(min_value=0, max_value=12),
)
def test_upper_negation_components_equal(x, k):
    left, right = upper_negation(x, k)
    assert left == right


def test_as_integer_accepts_integral_rationals():
    assert as_integer(Fraction(10, 2)) == 5
    assert as_integer(Fraction(0, 7)) == 0


def test_as_integer_rejects_proper_fractions():
    with pytest.raises(ArithmeticError):
        as_integer(Fraction(1, 2))
