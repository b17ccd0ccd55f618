from __future__ import annotations

import random
from fractions import Fraction

import pytest
from conftest import elements
from hypothesis import given
from hypothesis import strategies as st

from cuntzcar.algebra import adjoint, equals, identity, mul, psi, psi_star
from cuntzcar.krieger import average_isometry
from cuntzcar.maps import apply_zeta
from cuntzcar.parser import (
    Adjoint,
    BinOp,
    ExpressionSyntaxError,
    Gen,
    Neg,
    Number,
    format_ast,
    parse_ast,
    parse_expression,
    parse_scalar,
)
from cuntzcar.sampling import random_element
from cuntzcar.scalar import IMAG, SQRT2, Scalar


def test_examples():
    assert parse_expression("s1 s2*") == mul(psi(1), psi_star(2))
    assert equals(parse_expression("(1/2)(s1 s1* - s2 s2*)"),
                  apply_zeta(identity()).scale(Fraction(1, 2)))
    assert equals(parse_expression("(1/sqrt2)(s1 + s2)"), average_isometry())


def test_precedence():
    # adjoint > product > unary minus > addition
    assert parse_ast("s1 s2*") == BinOp("*", Gen(1), Adjoint(Gen(2)))
    assert parse_ast("-s1 s2") == Neg(BinOp("*", Gen(1), Gen(2)))
    assert parse_ast("s1 + s2 s1") == BinOp("+", Gen(1), BinOp("*", Gen(2), Gen(1)))
    assert parse_ast("(s1 s2)*") == Adjoint(BinOp("*", Gen(1), Gen(2)))
    assert parse_ast("s1 - s2 - s1") == BinOp("-", BinOp("-", Gen(1), Gen(2)), Gen(1))
    assert parse_ast("1/2 s1") == BinOp("*", BinOp("/", Number(1), Number(2)), Gen(1))


def test_explicit_product_and_unicode():
    assert parse_expression("s1 . s2") == parse_expression("s1 s2")
    assert parse_expression("s1·s2 − s2") == parse_expression("s1 s2 - s2")
    assert parse_expression("s1**") == psi(1)


def test_scalars():
    assert parse_scalar("i") == IMAG
    assert parse_scalar("sqrt2/2") == SQRT2 / 2
    assert parse_scalar("(1 + i)(1 - i)") == 2
    assert parse_scalar("3/4") == Scalar(Fraction(3, 4))
    assert equals(parse_expression("i s1*"), adjoint(parse_expression("-i s1")))


def test_generator_count():
    assert parse_expression("s3").d == 3
    assert parse_expression("I").d == 2
    with pytest.raises(ValueError):
        parse_expression("s3", d=2)


@pytest.mark.parametrize("text,pos", [("s1 +", 4), ("(s1", 3), ("s1 $ s2", 3), ("", 0), ("s1)", 2)])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_expression(text)
    assert err.value.position == pos


def test_division_only_by_scalars():
    with pytest.raises(ValueError):
        parse_expression("s1 / s2")
    with pytest.raises(ZeroDivisionError):
        parse_expression("s1 / (s1* s1 - I)")


def test_printer_roundtrip_seeded():
    rng = random.Random(0)
    for _ in range(200):
        x = random_element(rng, max_level=3, max_terms=5)
        assert parse_expression(str(x)) == x


@given(elements(d=3))
def test_printer_roundtrip_property(x):
    assert parse_expression(str(x), d=3) == x


ast_leaves = st.one_of(st.integers(1, 3).map(Gen), st.integers(0, 9).map(Number))
asts = st.recursive(ast_leaves, lambda kids: st.one_of(
    kids.map(Adjoint), kids.map(Neg),
    st.builds(BinOp, st.sampled_from("+-*"), kids, kids)), max_leaves=8)


@given(asts)
def test_ast_roundtrip(node):
    assert parse_ast(format_ast(node)) == node
