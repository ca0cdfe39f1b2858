"""Gaussian-rational scalar arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crclass.gaussian import GR_I, GR_ONE, GR_ZERO, GaussianRational, gr

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)
scalars = st.builds(GaussianRational, fractions, fractions)


def test_constructor_and_constants():
    assert gr(0) == GR_ZERO
    assert gr(1) == GR_ONE
    assert gr(0, 1) == GR_I
    assert gr(2, -3).re == Fraction(2)
    assert gr(2, -3).im == Fraction(-3)


def test_basic_identities():
    assert GR_I * GR_I == gr(-1)
    assert gr(3, 4) * gr(3, -4) == gr(25)
    assert gr(1, 1) + gr(1, -1) == gr(2)
    assert -gr(2, 5) == gr(-2, -5)


def test_division():
    assert gr(1) / GR_I == -GR_I
    assert gr(5, 5) / gr(1, 1) == gr(5)
    with pytest.raises(ZeroDivisionError):
        gr(1) / GR_ZERO


def test_inverse():
    v = gr(3, -4)
    assert v * v.inverse() == GR_ONE
    with pytest.raises(ZeroDivisionError):
        GR_ZERO.inverse()


def test_predicates():
    assert GR_ZERO.is_zero()
    assert GR_ONE.is_one()
    assert gr(7).is_real()
    assert not GR_I.is_real()
    assert GR_I.conj() == -GR_I


def test_str_forms():
    assert str(gr(0)) == "0"
    assert str(gr(0, 1)) == "I"
    assert str(gr(0, Fraction(3, 4))) == "3/4*I"
    assert str(gr(2, 3)) == "2 + 3*I"
    assert str(gr(2, -3)) == "2 - 3*I"
    assert str(gr(Fraction(-1, 2))) == "-1/2"


@given(scalars, scalars)
def test_mul_commutes_and_conj_is_multiplicative(a, b):
    assert a * b == b * a
    assert (a * b).conj() == a.conj() * b.conj()


@given(scalars, scalars, scalars)
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(scalars)
def test_field_inverse(a):
    if not a.is_zero():
        assert a * a.inverse() == GR_ONE
    assert a.conj().conj() == a
