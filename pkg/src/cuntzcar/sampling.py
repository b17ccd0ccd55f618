"""Seeded random elements for property checks."""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import Element, Monomial
from .scalar import Scalar

_HALF = Fraction(1, 2)
_COMPONENT_VALUES = (0, 0, 0, 1, -1, 2, -2, _HALF, -_HALF)


def random_scalar(rng: random.Random, rational: bool = False) -> Scalar:
    """A small nonzero element of Q(i, sqrt2); rational-only when asked."""
    while True:
        if rational:
            s = Scalar(rng.choice(_COMPONENT_VALUES))
        else:
            s = Scalar(*(rng.choice(_COMPONENT_VALUES) for _ in range(4)))
        if not s.is_zero():
            return s


def random_word(rng: random.Random, length: int, d: int = 2) -> tuple[int, ...]:
    return tuple(rng.randint(1, d) for _ in range(length))


def random_monomial(rng: random.Random, max_level: int, d: int = 2,
                    balanced: bool = False) -> Monomial:
    n = rng.randint(0, max_level)
    m = n if balanced else rng.randint(0, max_level)
    return Monomial(random_word(rng, n, d), random_word(rng, m, d))


def random_element(rng: random.Random, max_level: int = 3, max_terms: int = 4,
                   d: int = 2, balanced: bool = False, rational: bool = False) -> Element:
    """Random polynomial whose monomials have ``|I|, |J| <= max_level``."""
    terms: dict[Monomial, Scalar] = {}
    for _ in range(rng.randint(1, max_terms)):
        m = random_monomial(rng, max_level, d, balanced)
        terms[m] = random_scalar(rng, rational)
    return Element(terms, d=d)


def random_elements(seed: int, count: int, **kwargs) -> list[Element]:
    rng = random.Random(seed)
    return [random_element(rng, **kwargs) for _ in range(count)]
