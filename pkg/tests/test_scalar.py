from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hochschild.scalar import I, ONE, ZERO, Scalar, ScalarParseError, format_scalar, parse_scalar


@pytest.mark.parametrize(
    "text, re, im",
    [
        ("3/2", Fraction(3, 2), 0),
        ("-i", 0, -1),
        ("1/2-2/3i", Fraction(1, 2), Fraction(-2, 3)),
        ("i", 0, 1),
        ("0", 0, 0),
        ("-7", -7, 0),
        ("2i", 0, 2),
        (" 1 / 2 + 3 i ", Fraction(1, 2), 3),
        ("4/6", Fraction(2, 3), 0),
        ("-1+2i", -1, 2),
        ("+5", 5, 0),
    ],
)
def test_parse(text, re, im):
    assert parse_scalar(text) == Scalar(re, im)


@pytest.mark.parametrize("text", ["", "1/0", "abc", "1+", "i2", "1+2+3", "3j", "2I", "1/2/3", "1+2"])
def test_parse_errors(text):
    with pytest.raises(ScalarParseError):
        parse_scalar(text)


def test_parse_error_position():
    with pytest.raises(ScalarParseError) as info:
        parse_scalar("1/2x")
    assert info.value.pos == 3
    with pytest.raises(ScalarParseError) as info:
        parse_scalar("3/0i")
    assert "zero denominator" in str(info.value)


@pytest.mark.parametrize(
    "s, text",
    [
        (Scalar(0, 0), "0"),
        (Scalar(Fraction(3, 2), 0), "3/2"),
        (Scalar(-1, 2), "-1+2i"),
        (Scalar(0, 1), "i"),
        (Scalar(0, -1), "-i"),
        (Scalar(Fraction(1, 2), Fraction(-2, 3)), "1/2-2/3i"),
        (Scalar(5, 1), "5+i"),
    ],
)
def test_format(s, text):
    assert format_scalar(s) == text


def test_field_examples():
    assert I * I == Scalar(-1, 0)
    # (1+i)(1/2 - i/2) = 1/2 - i/2 + i/2 + 1/2 = 1
    assert Scalar(1, 1).inv() == Scalar(Fraction(1, 2), Fraction(-1, 2))
    assert Scalar(1, 1) * Scalar(Fraction(1, 2), Fraction(-1, 2)) == ONE
    x = Scalar(Fraction(-3, 7), 4)
    assert (x + (-x)).is_zero()


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ZERO.inv()
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_mixed_with_ints():
    assert 2 * I == Scalar(0, 2)
    assert 1 - I == Scalar(1, -1)
    assert I / 2 == Scalar(0, Fraction(1, 2))
    assert Scalar(3) == 3
    assert I ** 4 == ONE and I ** -1 == -I


def test_floats_rejected():
    # exact arithmetic only
    with pytest.raises(TypeError):
        Scalar(0.5)


def test_immutable_and_hashable():
    s = Scalar(1, 2)
    with pytest.raises(AttributeError):
        s.re = 5
    assert len({Scalar(1, 2), parse_scalar("1+2i"), Scalar(2, 4) / 2}) == 1


rationals = st.builds(Fraction, st.integers(-10**6, 10**6), st.integers(1, 50))
scalars = st.builds(Scalar, rationals, rationals)


@settings(max_examples=10_000, deadline=None)
@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if not a.is_zero():
        assert a * a.inv() == ONE


@settings(max_examples=2000, deadline=None)
@given(scalars)
def test_round_trip(s):
    assert parse_scalar(format_scalar(s)) == s
