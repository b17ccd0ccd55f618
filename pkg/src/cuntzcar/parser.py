"""Expression syntax for Cuntz-algebra elements.

Grammar (loosest binding first)::

    sum      := term (('+' | '-') term)*
    term     := '-' term | product
    product  := postfix (('.' | '·' | '/' | <juxtaposition>) postfix)*
    postfix  := atom '*'*
    atom     := s1..s9 | I | i | sqrt2 | INTEGER | '(' sum ')'

``*`` is always the adjoint; products are written by juxtaposition or with
``.``.  Division is only allowed by scalars.  Examples::

    s1 s2*                  psi_1 psi_2^*
    (1/2)(s1 s1* - s2 s2*)  zeta(I)/2
    (1/sqrt2)(s1 + s2)      the averaged isometry
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .algebra import Element, Monomial, adjoint, canonical, identity, mul
from .scalar import IMAG, SQRT2, Scalar


class ExpressionSyntaxError(ValueError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


# -- AST ------------------------------------------------------------------------

@dataclass(frozen=True)
class Gen:
    index: int


@dataclass(frozen=True)
class Ident:
    pass


@dataclass(frozen=True)
class Imag:
    pass


@dataclass(frozen=True)
class Sqrt2:
    pass


@dataclass(frozen=True)
class Number:
    value: int


@dataclass(frozen=True)
class Adjoint:
    operand: Node


@dataclass(frozen=True)
class Neg:
    operand: Node


@dataclass(frozen=True)
class BinOp:
    op: str  # one of "+", "-", "*", "/"
    left: Node
    right: Node


Node = Union[Gen, Ident, Imag, Sqrt2, Number, Adjoint, Neg, BinOp]

# -- lexer ----------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<gen>s[1-9])(?![A-Za-z0-9_])
  | (?P<sqrt2>sqrt2)(?![A-Za-z0-9_])
  | (?P<ident>I)(?![A-Za-z0-9_])
  | (?P<imag>i)(?![A-Za-z0-9_])
  | (?P<num>\d+)
  | (?P<op>[-+*/().·−])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExpressionSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            if kind == "op":
                value = {"−": "-", "·": "."}.get(value, value)
            tokens.append(Token(kind, value, pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


# -- Pratt parser -----------------------------------------------------------------

_SUM_BP = 10
_PRODUCT_BP = 20
_ADJOINT_BP = 30
_ATOM_KINDS = {"gen", "sqrt2", "ident", "imag", "num"}


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def starts_operand(self, t: Token) -> bool:
        return t.kind in _ATOM_KINDS or (t.kind == "op" and t.text == "(")

    def left_bp(self, t: Token) -> int:
        if t.kind == "op":
            if t.text in "+-":
                return _SUM_BP
            if t.text in "./":
                return _PRODUCT_BP
            if t.text == "*":
                return _ADJOINT_BP
        if self.starts_operand(t):
            return _PRODUCT_BP  # juxtaposition
        return 0

    def parse(self) -> Node:
        if self.tok.kind == "end":
            raise ExpressionSyntaxError("empty expression", 0)
        node = self.expression(0)
        if self.tok.kind != "end":
            raise ExpressionSyntaxError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def expression(self, rbp: int) -> Node:
        left = self.prefix()
        while self.left_bp(self.tok) > rbp:
            left = self.infix(left)
        return left

    def prefix(self) -> Node:
        t = self.advance()
        if t.kind == "gen":
            return Gen(int(t.text[1:]))
        if t.kind == "ident":
            return Ident()
        if t.kind == "imag":
            return Imag()
        if t.kind == "sqrt2":
            return Sqrt2()
        if t.kind == "num":
            return Number(int(t.text))
        if t.kind == "op" and t.text == "(":
            inner = self.expression(0)
            if not (self.tok.kind == "op" and self.tok.text == ")"):
                raise ExpressionSyntaxError("expected ')'", self.tok.pos)
            self.advance()
            return inner
        if t.kind == "op" and t.text == "-":
            # binds tighter than '+' but looser than products
            return Neg(self.expression(_SUM_BP))
        if t.kind == "end":
            raise ExpressionSyntaxError("unexpected end of expression", t.pos)
        raise ExpressionSyntaxError(f"unexpected {t.text!r}", t.pos)

    def infix(self, left: Node) -> Node:
        t = self.tok
        if t.kind == "op" and t.text == "*":
            self.advance()
            return Adjoint(left)
        if t.kind == "op" and t.text in "+-":
            self.advance()
            return BinOp(t.text, left, self.expression(_SUM_BP))
        if t.kind == "op" and t.text in "./":
            self.advance()
            op = "/" if t.text == "/" else "*"
            return BinOp(op, left, self.expression(_PRODUCT_BP))
        return BinOp("*", left, self.expression(_PRODUCT_BP))


def parse_ast(text: str) -> Node:
    return _Parser(text).parse()


def format_ast(node: Node) -> str:
    """Print an AST so that ``parse_ast(format_ast(n)) == n``."""
    if isinstance(node, Gen):
        return f"s{node.index}"
    if isinstance(node, Ident):
        return "I"
    if isinstance(node, Imag):
        return "i"
    if isinstance(node, Sqrt2):
        return "sqrt2"
    if isinstance(node, Number):
        return str(node.value)
    if isinstance(node, Adjoint):
        return f"{_wrap(node.operand)}*"
    if isinstance(node, Neg):
        return f"-{_wrap(node.operand)}"
    if isinstance(node, BinOp):
        op = {"*": " ", "/": " / "}.get(node.op, f" {node.op} ")
        return f"{_wrap(node.left)}{op}{_wrap(node.right)}"
    raise TypeError(f"not an expression node: {node!r}")


def _wrap(node: Node) -> str:
    text = format_ast(node)
    if isinstance(node, (Gen, Ident, Imag, Sqrt2, Number, Adjoint)):
        return text
    return f"({text})"


def max_generator(node: Node) -> int:
    if isinstance(node, Gen):
        return node.index
    if isinstance(node, (Adjoint, Neg)):
        return max_generator(node.operand)
    if isinstance(node, BinOp):
        return max(max_generator(node.left), max_generator(node.right))
    return 0


def evaluate(node: Node, d: int = 2) -> Element:
    if isinstance(node, Gen):
        if node.index > d:
            raise ValueError(f"generator s{node.index} exceeds d = {d}")
        return Element._raw(d, {Monomial((node.index,), ()): Scalar(1)})
    if isinstance(node, Ident):
        return identity(d)
    if isinstance(node, Imag):
        return identity(d).scale(IMAG)
    if isinstance(node, Sqrt2):
        return identity(d).scale(SQRT2)
    if isinstance(node, Number):
        return identity(d).scale(Fraction(node.value))
    if isinstance(node, Adjoint):
        return adjoint(evaluate(node.operand, d))
    if isinstance(node, Neg):
        return -evaluate(node.operand, d)
    left, right = evaluate(node.left, d), evaluate(node.right, d)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return mul(left, right)
    c = canonical(right).scalar_part()
    if c is None:
        raise ValueError(f"can only divide by scalars, not by {right}")
    if c.is_zero():
        raise ZeroDivisionError("division by zero in expression")
    return left.scale(c.inverse())


def parse_expression(text: str, d: int | None = None) -> Element:
    """Parse ``text`` into an element of O_d.

    ``d`` defaults to the largest generator index that occurs (at least 2).
    """
    node = parse_ast(text)
    needed = max(2, max_generator(node))
    if d is None:
        d = needed
    elif max_generator(node) > d:
        raise ValueError(f"generator index {max_generator(node)} exceeds d = {d}")
    return evaluate(node, d)


def parse_scalar(text: str) -> Scalar:
    c = canonical(parse_expression(text)).scalar_part()
    if c is None:
        raise ValueError(f"{text!r} is not a scalar")
    return c
