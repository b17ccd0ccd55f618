"""O_2 as the crossed product of A_C by ``delta(a) = psi_1 a psi_1^*``.

A :class:`CrossedElement` is a finite sum

    psi_1^{*N} a_{-N} + ... + psi_1^* a_{-1} + a_0 + a_1 psi_1 + ... + a_N psi_1^N

with every coefficient gauge-invariant.  Key ``k > 0`` stores the coefficient
of ``a_k psi_1^k`` and key ``k < 0`` the coefficient of ``psi_1^{*|k|} a``.

The representation is unique once coefficients are *reduced*:
``a_k = a_k delta^k(1)`` for ``k > 0`` and ``a_k = delta^|k|(1) a_k`` for
``k < 0`` (any other choice differs by something killed by ``psi_1^k``).
:func:`from_cuntz` always returns reduced coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .algebra import (
    Element,
    Monomial,
    canonical,
    equals,
    grade,
    identity,
    mul,
    require_gauge_invariant,
)
from .errors import NotGaugeInvariant, UnsupportedGeneratorCount
from .maps import apply_delta, apply_delta_star, iterate
from .report import INCONCLUSIVE, PASS, Check, Report, check
from .scalar import ONE


def _psi1_power(k: int) -> Element:
    return Element._raw(2, {Monomial((1,) * k, ()): ONE})


def _psi1_star_power(k: int) -> Element:
    return Element._raw(2, {Monomial((), (1,) * k): ONE})


def range_projection(k: int) -> Element:
    """``e_k = delta^k(1) = psi_1^k psi_1^{*k}``."""
    return Element._raw(2, {Monomial((1,) * k, (1,) * k): ONE})


@dataclass(frozen=True)
class CrossedElement:
    coeffs: Mapping[int, Element] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[int, Element] = {}
        for k, a in self.coeffs.items():
            if a.d != 2:
                raise UnsupportedGeneratorCount("crossed-product coefficients live in O_2")
            if not a.is_gauge_invariant():
                raise NotGaugeInvariant(f"coefficient at {k} is not in A_C: {a}")
            if not a.is_structurally_zero():
                clean[int(k)] = a
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    def __getitem__(self, k: int) -> Element:
        return self.coeffs.get(k, Element._raw(2, {}))

    def support(self) -> list[int]:
        return list(self.coeffs)

    def reduced(self) -> CrossedElement:
        """Reduced coefficients with semantically zero entries dropped."""
        out = {}
        for k, a in self.coeffs.items():
            if k > 0:
                a = mul(a, range_projection(k))
            elif k < 0:
                a = mul(range_projection(-k), a)
            a = canonical(a)
            if not a.is_structurally_zero():
                out[k] = a
        return CrossedElement(out)

    def equals(self, other: CrossedElement) -> bool:
        """Coefficient-wise equality in A_C (unreduced coefficients compared as given)."""
        keys = set(self.coeffs) | set(other.coeffs)
        return all(equals(self[k], other[k]) for k in keys)

    def __add__(self, other: CrossedElement) -> CrossedElement:
        out = dict(self.coeffs)
        for k, a in other.coeffs.items():
            out[k] = out[k] + a if k in out else a
        return CrossedElement(out)

    def __mul__(self, other: CrossedElement) -> CrossedElement:
        return mul_crossed(self, other)

    def to_text(self) -> dict[str, str]:
        return {str(k): str(a) for k, a in self.coeffs.items()}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, a in self.coeffs.items():
            if k > 0:
                parts.append(f"({a}) s1^{k}" if k > 1 else f"({a}) s1")
            elif k < 0:
                parts.append(f"s1*^{-k} ({a})" if k < -1 else f"s1* ({a})")
            else:
                parts.append(f"({a})")
        return " + ".join(parts)


def from_cuntz(x: Element) -> CrossedElement:
    """Decompose a polynomial of O_2 into reduced crossed-product form.

    The degree-g part ``x_g`` gives ``a_g = x_g psi_1^{*g}`` for ``g > 0`` and
    ``a_g = psi_1^{|g|} x_g`` for ``g < 0``; both are gauge-invariant and
    recover ``x_g`` because ``psi_1^{*k} psi_1^k = 1``.
    """
    if x.d != 2:
        raise UnsupportedGeneratorCount("crossed-product form is defined on O_2")
    out: dict[int, Element] = {}
    for g, part in grade(x).items():
        if g > 0:
            a = mul(part, _psi1_star_power(g))
        elif g < 0:
            a = mul(_psi1_power(-g), part)
        else:
            a = part
        out[g] = a
    return CrossedElement(out)


def to_cuntz(ce: CrossedElement) -> Element:
    total = Element._raw(2, {})
    for k, a in ce.coeffs.items():
        require_gauge_invariant(a, f"coefficient at {k}")
        if k > 0:
            total = total + mul(a, _psi1_power(k))
        elif k < 0:
            total = total + mul(_psi1_star_power(-k), a)
        else:
            total = total + a
    return total


def _delta_pow(n: int, x: Element) -> Element:
    return iterate(apply_delta, n, x)


def _term_product(k: int, a: Element, l: int, b: Element) -> tuple[int, Element]:
    """Product of two single crossed terms, returned as ``(index, coefficient)``.

    Terms with index >= 0 are read as ``a psi_1^k``, negative ones as
    ``psi_1^{*|k|} a``.  Rules used:

    * ``psi_1^m b = delta^m(b) psi_1^m``            (covariance)
    * ``b psi_1^{*m} = psi_1^{*m} delta^m(b)``       (its adjoint)
    * ``psi_1^* c psi_1 = delta_*(c)``               (transfer)
    * ``psi_1^k psi_1^{*j} = psi_1^{k-j} e_j`` (k >= j), ``e_k psi_1^{*(j-k)}`` (k < j)
    """
    if k >= 0 and l >= 0:
        return k + l, mul(a, _delta_pow(k, b))
    if k < 0 and l < 0:
        j, m = -k, -l
        return -(j + m), mul(_delta_pow(m, a), b)
    if k < 0:
        # psi_1^{*j} (a b) psi_1^l
        j = -k
        m = min(j, l)
        c = iterate(apply_delta_star, m, mul(a, b))
        return (l - m, c) if j == m else (-(j - m), c)
    # (a psi_1^k)(psi_1^{*j} b)
    j = -l
    if k >= j:
        return k - j, mul(a, _delta_pow(k - j, mul(range_projection(j), b)))
    return -(j - k), mul(_delta_pow(j - k, mul(a, range_projection(k))), b)


def mul_crossed(u: CrossedElement, v: CrossedElement) -> CrossedElement:
    """Multiply in crossed-product form without passing through O_2.

    The result is reduced, so it coincides coefficient-for-coefficient with
    ``from_cuntz`` of the product.
    """
    acc: dict[int, Element] = {}
    for k, a in u.coeffs.items():
        require_gauge_invariant(a, f"left coefficient at {k}")
        for l, b in v.coeffs.items():
            require_gauge_invariant(b, f"right coefficient at {l}")
            idx, c = _term_product(k, a, l, b)
            acc[idx] = acc[idx] + c if idx in acc else c
    return CrossedElement(acc).reduced()


def check_covariance(samples: Sequence[Element]) -> Report:
    """``psi_1 a = delta(a) psi_1`` for every gauge-invariant sample."""
    p1 = _psi1_power(1)
    report = Report("covariance")
    for k, a in enumerate(samples):
        require_gauge_invariant(a, f"sample {k}")
        lhs, rhs = mul(p1, a), mul(apply_delta(a), p1)
        report.add(check("psi_1 a = delta(a) psi_1", equals(lhs, rhs), (k,), lhs - rhs))
    return report


@dataclass(frozen=True)
class CoefficientBound:
    """Outcome of comparing ``||a_0||`` with lower bounds for ``||x||``."""

    a0_norm: float
    lower_bounds: tuple[float, ...]
    tolerance: float

    @property
    def best_lower_bound(self) -> float:
        return max(self.lower_bounds, default=0.0)

    @property
    def status(self) -> str:
        # a miss at finite depth is never a refutation
        return PASS if self.a0_norm <= self.best_lower_bound + self.tolerance else INCONCLUSIVE

    def is_monotone(self, tol: float = 1e-9) -> bool:
        seq = self.lower_bounds
        return all(seq[i] <= seq[i + 1] + tol for i in range(len(seq) - 1))


def coefficient_bound(x: Element, depth: int, tolerance: float = 1e-9,
                      max_depth: int | None = None) -> CoefficientBound:
    from .uhf import lower_bound_sequence, norm_gauge_invariant

    a0 = grade(x).get(0, Element._raw(x.d, {}))
    return CoefficientBound(norm_gauge_invariant(a0),
                            tuple(lower_bound_sequence(x, depth, max_depth)), tolerance)


def check_coefficient_bound(x: Element, depth: int, tolerance: float = 1e-9,
                            max_depth: int | None = None) -> Report:
    """Check ``||a_0|| <= ||x||`` using compression lower bounds up to ``depth``."""
    result = coefficient_bound(x, depth, tolerance, max_depth)
    report = Report("condition (*)")
    report.add(Check("||a_0|| <= ||x||", result.status, (),
                     None if result.status == PASS else x,
                     {"a0_norm": result.a0_norm, "lower_bound": result.best_lower_bound,
                      "depth": depth}))
    report.add(check("lower bounds nondecreasing in depth", result.is_monotone(),
                     counterexample=x, bounds=list(result.lower_bounds)))
    return report


def crossed_roundtrip(x: Element) -> tuple[bool, bool]:
    """``(to_cuntz(from_cuntz(x)) == x, from_cuntz(to_cuntz(ce)) == ce)``."""
    ce = from_cuntz(x)
    back = to_cuntz(ce)
    return equals(back, x), from_cuntz(back).equals(ce)


def crossed_identity() -> CrossedElement:
    return CrossedElement({0: identity()})


def generators() -> tuple[CrossedElement, CrossedElement]:
    """Crossed-product forms of ``psi_1`` and ``psi_2``."""
    return (from_cuntz(_psi1_power(1)),
            from_cuntz(Element._raw(2, {Monomial((2,), ()): ONE})))


def is_reduced(ce: CrossedElement) -> bool:
    return ce.equals(ce.reduced())


__all__ = [
    "CoefficientBound",
    "CrossedElement",
    "check_coefficient_bound",
    "check_covariance",
    "coefficient_bound",
    "crossed_roundtrip",
    "from_cuntz",
    "mul_crossed",
    "range_projection",
    "to_cuntz",
]
