from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from k3moduli.poly import NumberField, ParseError, format_polynomial, parse_polynomial, upoly_gcd


def test_parse_basic():
    p = parse_polynomial("x^3*y + 1/2*z^4 - x*y*z^2")
    assert p == {(3, 1, 0): 1, (0, 0, 4): Fraction(1, 2), (1, 1, 2): -1}


def test_parse_expands_powers():
    p = parse_polynomial("(x^2+y^2+z^2)^2")
    assert p[(2, 2, 0)] == 2 and p[(4, 0, 0)] == 1 and len(p) == 6


def test_leading_sign_and_spaces():
    assert parse_polynomial(" - x ^ 2 + 3 ") == {(2, 0, 0): -1, (0, 0, 0): 3}


def test_cancellation_gives_zero():
    assert parse_polynomial("x - x") == {}


@pytest.mark.parametrize("text, pos", [("x^4 + ", 6), ("x**2", 2), ("(x+y", 4), ("1/0", 2), ("w", 0), ("", 0),
                                       ("x^", 2)])
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_polynomial(text)
    assert exc.value.position == pos


def test_format_roundtrip():
    p = parse_polynomial("3*x^2*y - 1/3*z^3 + x*y*z")
    assert parse_polynomial(format_polynomial(p, ("x", "y", "z"))) == p


# number fields

K = NumberField((2, 0, 1))        # Q(sqrt(-2))
L = NumberField((1, 1, 0, 1))     # t^3 + t + 1


def test_field_arithmetic():
    t = K.gen
    assert t * t == -2
    assert (1 + t) * (1 - t) == 3
    assert (t / t) == 1
    s = L.gen
    assert s ** 3 + s + 1 == 0


elements = st.lists(st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20)), min_size=3, max_size=3)


@settings(max_examples=100, deadline=None)
@given(elements, elements)
def test_field_division_inverts_multiplication(a, b):
    from k3moduli.poly import NFElement
    x, y = NFElement(L, a), NFElement(L, b)
    if not y:
        return
    assert (x * y) / y == x
    assert y * y.inverse() == 1


def test_zero_inverse():
    with pytest.raises(ZeroDivisionError):
        K(0).inverse()


def test_upoly_gcd():
    # (y - 1)(y - 2) and (y - 1)(y + 3)
    g = upoly_gcd([Fraction(2), Fraction(-3), Fraction(1)], [Fraction(-3), Fraction(2), Fraction(1)])
    assert g == [-1, 1]
    t = K.gen
    # (y - t)(y + t) = y^2 + 2 and (y - t) share y - t
    g = upoly_gcd([K(2), K(0), K(1)], [-t, K(1)])
    assert g == [-t, 1]
