"""Polynomial elements of the Cuntz algebra O_d.

A monomial ``(I, J)`` stands for ``psi_I psi_J^*`` where ``psi_I`` is the
product ``psi_{i1} psi_{i2} ... psi_{im}``.  Both words are stored in creator
order, so ``psi_J^* = psi_{jn}^* ... psi_{j1}^*`` and every product of two
monomials reduces with a single prefix test.

Elements are finite linear combinations of monomials with coefficients in
Q(i, sqrt2).  Because ``sum_i psi_i psi_i^* = I`` the term map of an element
is not canonical; :func:`equals` decides semantic equality by expanding every
degree class to a common annihilator length, where monomials are linearly
independent.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import product as _cartesian
from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import GeneratorCountMismatch, LevelTooSmall, NotGaugeInvariant
from .scalar import ONE, ZERO, Scalar, ScalarLike

Word = tuple[int, ...]


class Monomial(NamedTuple):
    creators: Word = ()
    annihilators: Word = ()

    @property
    def degree(self) -> int:
        return len(self.creators) - len(self.annihilators)

    @property
    def is_balanced(self) -> bool:
        return len(self.creators) == len(self.annihilators)

    def adjoint(self) -> Monomial:
        return Monomial(self.annihilators, self.creators)

    def __str__(self) -> str:
        parts = [f"s{i}" for i in self.creators]
        parts += [f"s{j}*" for j in reversed(self.annihilators)]
        return " ".join(parts) if parts else "I"


IDENTITY_MONOMIAL = Monomial((), ())


def contract(m1: Monomial, m2: Monomial) -> Monomial | None:
    """Product of two monomials, or ``None`` when it vanishes."""
    i1, j1 = m1
    i2, j2 = m2
    n, k = len(j1), len(i2)
    if n <= k:
        if i2[:n] == j1:
            return Monomial(i1 + i2[n:], j2)
        return None
    if j1[:k] == i2:
        return Monomial(i1, j2 + j1[k:])
    return None


def _sort_key(m: Monomial) -> tuple:
    return (len(m.creators) + len(m.annihilators), m.creators, m.annihilators)


class Element:
    """A finite Q(i, sqrt2)-linear combination of monomials in O_d.

    Instances are immutable.  ``==`` compares term maps; use :func:`equals`
    for equality in the algebra.
    """

    __slots__ = ("_d", "_terms")

    def __init__(self, terms: Mapping[Monomial | tuple, ScalarLike] | None = None,
                 d: int = 2) -> None:
        if not isinstance(d, int) or d < 2:
            raise ValueError(f"generator count must be an integer >= 2, got {d!r}")
        clean: dict[Monomial, Scalar] = {}
        for key, coeff in (terms or {}).items():
            mono = Monomial(tuple(key[0]), tuple(key[1]))
            for letter in mono.creators + mono.annihilators:
                if not (isinstance(letter, int) and 1 <= letter <= d):
                    raise ValueError(f"generator index {letter!r} outside 1..{d}")
            c = Scalar.coerce(coeff)
            if mono in clean:
                c = clean[mono] + c
            clean[mono] = c
        self._d = d
        self._terms = {m: c for m, c in clean.items() if not c.is_zero()}

    @classmethod
    def _raw(cls, d: int, terms: dict[Monomial, Scalar]) -> Element:
        # terms must already be free of zero coefficients
        new = object.__new__(cls)
        new._d = d
        new._terms = terms
        return new

    @classmethod
    def _collect(cls, d: int, terms: dict[Monomial, Scalar]) -> Element:
        return cls._raw(d, {m: c for m, c in terms.items() if not c.is_zero()})

    # -- basic accessors ---------------------------------------------------

    @property
    def d(self) -> int:
        return self._d

    @property
    def terms(self) -> Mapping[Monomial, Scalar]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Scalar]]:
        return iter(sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0])))

    def coefficient(self, m: Monomial | tuple) -> Scalar:
        return self._terms.get(Monomial(tuple(m[0]), tuple(m[1])), ZERO)

    def __len__(self) -> int:
        return len(self._terms)

    def is_structurally_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set[int]:
        return {m.degree for m in self._terms}

    def is_gauge_invariant(self) -> bool:
        return all(m.is_balanced for m in self._terms)

    def max_level(self) -> int:
        """Length of the longest annihilator word (0 for the empty element)."""
        return max((len(m.annihilators) for m in self._terms), default=0)

    def scalar_part(self) -> Scalar | None:
        """The coefficient ``c`` if the term map is exactly ``c * I``, else ``None``."""
        if not self._terms:
            return ZERO
        if len(self._terms) == 1 and IDENTITY_MONOMIAL in self._terms:
            return self._terms[IDENTITY_MONOMIAL]
        return None

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: Element) -> None:
        if other._d != self._d:
            raise GeneratorCountMismatch(
                f"cannot combine elements of O_{self._d} and O_{other._d}")

    def _lift(self, other) -> Element | None:
        if isinstance(other, Element):
            self._check(other)
            return other
        if isinstance(other, (Scalar, int, Fraction)):
            return Element._collect(self._d, {IDENTITY_MONOMIAL: Scalar.coerce(other)})
        return None

    def __add__(self, other) -> Element:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc[m] + c if m in acc else c
        return Element._collect(self._d, acc)

    __radd__ = __add__

    def __neg__(self) -> Element:
        return Element._raw(self._d, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> Element:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Element:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c: ScalarLike) -> Element:
        c = Scalar.coerce(c)
        if c.is_zero():
            return Element._raw(self._d, {})
        return Element._raw(self._d, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other) -> Element:
        if isinstance(other, Element):
            return mul(self, other)
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> Element:
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other) -> Element:
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(Scalar.coerce(other).inverse())
        return NotImplemented

    def __pow__(self, n: int) -> Element:
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = identity(self._d)
        for _ in range(n):
            result = mul(result, self)
        return result

    def adjoint(self) -> Element:
        return adjoint(self)

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Element):
            return self._d == other._d and self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._d, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"Element({self}, d={self._d})"

    def __str__(self) -> str:
        return format_element(self)


def format_element(x: Element) -> str:
    """Render ``x`` in the expression syntax accepted by the parser."""
    if not x._terms:
        return "0"
    pieces: list[str] = []
    for m, c in x.items():
        mono = str(m)
        if c == 1:
            body, negative = mono, False
        elif c == -1:
            body, negative = mono, True
        else:
            body, negative = f"({c}) {mono}", False
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)


# -- constructors -----------------------------------------------------------

def identity(d: int = 2) -> Element:
    return Element._raw(d, {IDENTITY_MONOMIAL: ONE})


def zero(d: int = 2) -> Element:
    return Element._raw(d, {})


def monomial(creators: Iterable[int] = (), annihilators: Iterable[int] = (),
             coeff: ScalarLike = 1, d: int = 2) -> Element:
    return Element({Monomial(tuple(creators), tuple(annihilators)): coeff}, d=d)


def psi(i: int, d: int = 2) -> Element:
    return monomial((i,), (), d=d)


def psi_star(i: int, d: int = 2) -> Element:
    return monomial((), (i,), d=d)


def basis_monomials(level: int, d: int = 2, balanced: bool = False) -> list[Monomial]:
    """All monomials ``(I, J)`` with ``|I|, |J| <= level``.

    With ``balanced=True`` only ``|I| == |J|`` is kept.
    """
    words = [w for n in range(level + 1) for w in _cartesian(range(1, d + 1), repeat=n)]
    return [Monomial(i, j) for i in words for j in words
            if not balanced or len(i) == len(j)]


# -- operations -------------------------------------------------------------

def mul_monomial(m1: Monomial, m2: Monomial, d: int = 2) -> Element:
    for letter in m1.creators + m1.annihilators + m2.creators + m2.annihilators:
        if letter > d:
            raise GeneratorCountMismatch(f"generator index {letter} outside 1..{d}")
    m = contract(m1, m2)
    if m is None:
        return zero(d)
    return Element._raw(d, {m: ONE})


def mul(x: Element, y: Element) -> Element:
    x._check(y)
    acc: dict[Monomial, Scalar] = {}
    for m1, c1 in x._terms.items():
        for m2, c2 in y._terms.items():
            m = contract(m1, m2)
            if m is None:
                continue
            c = c1 * c2
            acc[m] = acc[m] + c if m in acc else c
    return Element._collect(x._d, acc)


def adjoint(x: Element) -> Element:
    return Element._raw(x._d, {m.adjoint(): c.conj() for m, c in x._terms.items()})


def anticommutator(x: Element, y: Element) -> Element:
    return mul(x, y) + mul(y, x)


def commutator(x: Element, y: Element) -> Element:
    return mul(x, y) - mul(y, x)


def _expand_terms(terms: Iterable[tuple[Monomial, Scalar]], level: int, d: int,
                  acc: dict[Monomial, Scalar]) -> None:
    letters = range(1, d + 1)
    for m, c in terms:
        missing = level - len(m.annihilators)
        if missing < 0:
            raise LevelTooSmall(
                f"term {m} has annihilator length {len(m.annihilators)} > level {level}")
        if missing == 0:
            acc[m] = acc[m] + c if m in acc else c
            continue
        for w in _cartesian(letters, repeat=missing):
            key = Monomial(m.creators + w, m.annihilators + w)
            acc[key] = acc[key] + c if key in acc else c


def expand_to_level(x: Element, level: int) -> Element:
    """Rewrite every term so its annihilator word has length ``level``.

    Each ``(I, J)`` becomes ``sum_W (I W, J W)`` over words ``W`` of length
    ``level - |J|``; a degree-g term ends up with ``|I| = level + g``.
    """
    if level < 0:
        raise LevelTooSmall("level must be non-negative")
    acc: dict[Monomial, Scalar] = {}
    _expand_terms(x._terms.items(), level, x._d, acc)
    return Element._collect(x._d, acc)


def _by_degree(x: Element) -> dict[int, list[tuple[Monomial, Scalar]]]:
    parts: dict[int, list[tuple[Monomial, Scalar]]] = defaultdict(list)
    for m, c in x._terms.items():
        parts[m.degree].append((m, c))
    return parts


def is_zero(x: Element) -> bool:
    """Decide ``x == 0`` in O_d."""
    for terms in _by_degree(x).values():
        level = max(len(m.annihilators) for m, _ in terms)
        acc: dict[Monomial, Scalar] = {}
        _expand_terms(terms, level, x._d, acc)
        if any(not c.is_zero() for c in acc.values()):
            return False
    return True


def equals(x: Element, y: Element) -> bool:
    x._check(y)
    return is_zero(x - y)


def canonical(x: Element) -> Element:
    """The unique shortest term map representing ``x``.

    Each degree class is expanded to its deepest level and then complete
    families ``{(I w, J w) : w = 1..d}`` with a common coefficient are folded
    back into ``(I, J)`` until none remain.  Two elements are equal in O_d iff
    their canonical forms are identical term maps.
    """
    d = x._d
    out: dict[Monomial, Scalar] = {}
    for terms in _by_degree(x).values():
        level = max(len(m.annihilators) for m, _ in terms)
        acc: dict[Monomial, Scalar] = {}
        _expand_terms(terms, level, d, acc)
        current = {m: c for m, c in acc.items() if not c.is_zero()}
        for lvl in range(level, 0, -1):
            families: dict[Monomial, list[tuple[Monomial, Scalar]]] = defaultdict(list)
            for m, c in current.items():
                if (len(m.annihilators) == lvl and m.creators
                        and m.creators[-1] == m.annihilators[-1]):
                    families[Monomial(m.creators[:-1], m.annihilators[:-1])].append((m, c))
            folded = False
            for parent, members in families.items():
                if len(members) != d:
                    continue
                c0 = members[0][1]
                if all(c == c0 for _, c in members):
                    for m, _ in members:
                        del current[m]
                    current[parent] = c0
                    folded = True
            if not folded:
                break
        out.update(current)
    return Element._raw(d, out)


def grade(x: Element) -> dict[int, Element]:
    """Split ``x`` into its homogeneous components, keyed by degree.

    The degree-0 component is the image of ``x`` under the conditional
    expectation onto the gauge-invariant subalgebra.
    """
    return {g: Element._raw(x._d, dict(terms)) for g, terms in _by_degree(x).items()}


def degree_part(x: Element, g: int) -> Element:
    return Element._raw(x._d, {m: c for m, c in x._terms.items() if m.degree == g})


def gauge_rotate(x: Element, z: ScalarLike) -> Element:
    """Apply the gauge automorphism ``psi_i -> z psi_i``; ``|z|`` must be 1."""
    z = Scalar.coerce(z)
    if not z.is_unit_modulus():
        raise ValueError(f"gauge parameter {z} is not of modulus 1")
    zbar = z.conj()
    powers: dict[int, Scalar] = {}
    out: dict[Monomial, Scalar] = {}
    for m, c in x._terms.items():
        g = m.degree
        if g not in powers:
            powers[g] = z**g if g >= 0 else zbar ** (-g)
        out[m] = c * powers[g]
    return Element._raw(x._d, out)


def require_gauge_invariant(x: Element, what: str = "element") -> None:
    if not x.is_gauge_invariant():
        raise NotGaugeInvariant(f"{what} is not gauge-invariant: {x}")
