"""Exact arithmetic in the field Q(i, sqrt2).

An element is stored as four rationals ``(a, b, c, d)`` meaning
``(a + b*sqrt2) + (c + d*sqrt2)*i``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]
ScalarLike = Union["Scalar", int, Fraction]

_SQRT2_FLOAT = 2.0**0.5
_F0 = Fraction(0)


class Scalar:
    __slots__ = ("a", "b", "c", "d", "_rational")

    # Treated as immutable; every operation returns a new instance.

    def __init__(self, a: Rational | str = 0, b: Rational | str = 0,
                 c: Rational | str = 0, d: Rational | str = 0) -> None:
        self.a, self.b, self.c, self.d = Fraction(a), Fraction(b), Fraction(c), Fraction(d)
        self._rational = not (self.b or self.c or self.d)

    @classmethod
    def _make(cls, a: Fraction, b: Fraction, c: Fraction, d: Fraction) -> Scalar:
        new = object.__new__(cls)
        new.a, new.b, new.c, new.d = a, b, c, d
        new._rational = not (b or c or d)
        return new

    @classmethod
    def coerce(cls, value: ScalarLike) -> Scalar:
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot interpret {value!r} as an element of Q(i, sqrt2)")

    @property
    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    @property
    def is_rational(self) -> bool:
        return self._rational

    @property
    def is_real(self) -> bool:
        return not (self.c or self.d)

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: ScalarLike) -> Scalar:
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                return Scalar._make(self.a + other, self.b, self.c, self.d)
            return NotImplemented
        return Scalar._make(self.a + other.a, self.b + other.b,
                      self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar._make(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other: ScalarLike) -> Scalar:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other: ScalarLike) -> Scalar:
        return Scalar.coerce(other) - self

    def __mul__(self, other: ScalarLike) -> Scalar:
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                return Scalar._make(self.a * other, self.b * other, self.c * other, self.d * other)
            return NotImplemented
        if other._rational:
            r = other.a
            return Scalar._make(self.a * r, self.b * r, self.c * r, self.d * r)
        if self._rational:
            r = self.a
            return Scalar._make(other.a * r, other.b * r, other.c * r, other.d * r)
        # (p + q i)(r + s i) with p, q, r, s in Q(sqrt2)
        p_a, p_b, q_a, q_b = self.a, self.b, self.c, self.d
        r_a, r_b, s_a, s_b = other.a, other.b, other.c, other.d
        pr_a, pr_b = p_a * r_a + 2 * p_b * r_b, p_a * r_b + p_b * r_a
        qs_a, qs_b = q_a * s_a + 2 * q_b * s_b, q_a * s_b + q_b * s_a
        ps_a, ps_b = p_a * s_a + 2 * p_b * s_b, p_a * s_b + p_b * s_a
        qr_a, qr_b = q_a * r_a + 2 * q_b * r_b, q_a * r_b + q_b * r_a
        return Scalar._make(pr_a - qs_a, pr_b - qs_b, ps_a + qr_a, ps_b + qr_b)

    __rmul__ = __mul__

    def conj(self) -> Scalar:
        """Complex conjugate (sqrt2 is fixed, i goes to -i)."""
        return Scalar._make(self.a, self.b, -self.c, -self.d)

    def abs2(self) -> Scalar:
        """``self * conj(self)``, a real element of Q(sqrt2)."""
        u = self.a * self.a + 2 * self.b * self.b + self.c * self.c + 2 * self.d * self.d
        v = 2 * (self.a * self.b + self.c * self.d)
        return Scalar._make(u, v, _F0, _F0)

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(i, sqrt2)")
        if self._rational:
            return Scalar(1 / self.a)
        n = self.abs2()
        # 1/(u + v sqrt2) = (u - v sqrt2)/(u^2 - 2 v^2); the denominator is nonzero
        # because sqrt2 is irrational.
        den = n.a * n.a - 2 * n.b * n.b
        return self.conj() * Scalar(n.a / den, -n.b / den)

    def __truediv__(self, other: ScalarLike) -> Scalar:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other: ScalarLike) -> Scalar:
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> Scalar:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_unit_modulus(self) -> bool:
        return self.abs2() == ONE

    # -- comparison / conversion -----------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return (self.a == other.a and self.b == other.b
                    and self.c == other.c and self.d == other.d)
        if isinstance(other, (int, Fraction)):
            return self._rational and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._rational:
            return hash(self.a)
        return hash((self.a, self.b, self.c, self.d))

    def __complex__(self) -> complex:
        return complex(float(self.a) + float(self.b) * _SQRT2_FLOAT,
                       float(self.c) + float(self.d) * _SQRT2_FLOAT)

    def __repr__(self) -> str:
        return f"Scalar({self.a}, {self.b}, {self.c}, {self.d})"

    def __str__(self) -> str:
        parts: list[tuple[Fraction, str]] = [
            (self.a, ""), (self.b, "sqrt2"), (self.c, "i"), (self.d, "i sqrt2")]
        out = ""
        for value, unit in parts:
            if not value:
                continue
            sign = "-" if value < 0 else "+"
            mag = abs(value)
            if unit and mag == 1:
                body = unit
            elif unit:
                body = f"{mag} {unit}"
            else:
                body = str(mag)
            if not out:
                out = body if sign == "+" else f"-{body}"
            else:
                out += f" {sign} {body}"
        return out or "0"


ZERO = Scalar(0)
ONE = Scalar(1)
IMAG = Scalar(0, 0, 1)
SQRT2 = Scalar(0, 1)
INV_SQRT2 = Scalar(0, Fraction(1, 2))


def unit_roots_of_order_8() -> list[Scalar]:
    """All unit-modulus elements of Q(i, sqrt2) that are roots of unity."""
    h = Fraction(1, 2)
    return [ONE, -ONE, IMAG, -IMAG,
            Scalar(0, h, 0, h), Scalar(0, h, 0, -h), Scalar(0, -h, 0, h), Scalar(0, -h, 0, -h)]
