from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from conftest import nonzero_scalars, scalars
from hypothesis import given

from cuntzcar.scalar import IMAG, INV_SQRT2, ONE, SQRT2, ZERO, Scalar, unit_roots_of_order_8


def to_sympy(s: Scalar):
    a, b, c, d = (sympy.Rational(v.numerator, v.denominator) for v in s.components)
    return (a + b * sympy.sqrt(2)) + (c + d * sympy.sqrt(2)) * sympy.I


def same(s: Scalar, expr) -> bool:
    return sympy.expand(to_sympy(s) - expr) == 0


def test_constants():
    assert SQRT2 * SQRT2 == 2
    assert IMAG * IMAG == -1
    assert INV_SQRT2 * SQRT2 == ONE
    assert ZERO.is_zero() and not ZERO


@given(scalars, scalars)
def test_ring_operations_match_sympy(x, y):
    assert same(x + y, to_sympy(x) + to_sympy(y))
    assert same(x * y, sympy.expand(to_sympy(x) * to_sympy(y)))
    assert same(x - y, to_sympy(x) - to_sympy(y))


@given(nonzero_scalars)
def test_inverse(x):
    assert x * x.inverse() == ONE
    assert sympy.expand(to_sympy(x.inverse()) * to_sympy(x)) == 1


@given(scalars)
def test_conjugate_and_modulus(x):
    assert x.conj().conj() == x
    assert x.abs2() == x * x.conj()
    assert abs(complex(x.abs2()) - abs(complex(x)) ** 2) < 1e-9


@given(scalars, scalars)
def test_complex_embedding_is_a_ring_map(x, y):
    assert abs(complex(x * y) - complex(x) * complex(y)) < 1e-9


@given(scalars)
def test_str_is_parseable(x):
    from cuntzcar.parser import parse_scalar

    assert parse_scalar(str(x)) == x


def test_roots_of_unity():
    roots = unit_roots_of_order_8()
    assert len(set(roots)) == 8
    for z in roots:
        assert z**8 == ONE
        assert z.is_unit_modulus()


def test_equality_with_rationals():
    assert Scalar(Fraction(1, 2)) == Fraction(1, 2)
    assert Scalar(3) == 3
    assert Scalar(0, 1) != 1
    assert hash(Scalar(2)) == hash(Scalar(Fraction(4, 2)))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_negative_power():
    assert SQRT2**-2 == Fraction(1, 2)
