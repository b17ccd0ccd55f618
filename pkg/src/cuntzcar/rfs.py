"""The standard recursive fermion system in O_2 and the CAR relations it yields.

The seed is ``a = psi_1 psi_2^*`` and the n-th fermion mode is
``zeta^(n-1)(a)``.  The image of the CAR algebra is the gauge-invariant
subalgebra A_C, so membership of a polynomial is a matter of every monomial
being balanced.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .algebra import (
    Element,
    adjoint,
    anticommutator,
    basis_monomials,
    equals,
    identity,
    is_zero,
    monomial,
    mul,
    zero,
)
from .config import DEFAULT, require_within
from .maps import apply_rho, apply_zeta, iterate
from .report import Report, check
from .scalar import ONE


@dataclass(frozen=True)
class CarGenerator:
    n: int
    value: Element

    @property
    def dagger(self) -> Element:
        return adjoint(self.value)


def rfs_seed() -> Element:
    return monomial((1,), (2,))


@lru_cache(maxsize=None)
def _mode(n: int) -> Element:
    if n == 1:
        return rfs_seed()
    return apply_zeta(_mode(n - 1))


def car_generator(n: int, max_index: int | None = None) -> CarGenerator:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"mode index must be a positive integer, got {n!r}")
    require_within("mode index", n, DEFAULT.max_car_index if max_index is None else max_index)
    return CarGenerator(n, _mode(n))


def in_car_subalgebra(x: Element) -> bool:
    return x.d == 2 and x.is_gauge_invariant()


def check_car_relations(N: int, max_index: int | None = None) -> Report:
    """Every anticommutator among ``a_1, ..., a_N`` and their adjoints.

    Covers each unordered pair (with repetition) of the 2N operators, i.e.
    ``N (2N + 1)`` identities.
    """
    modes = [car_generator(n, max_index).value for n in range(1, N + 1)]
    daggers = [adjoint(a) for a in modes]
    one = identity()
    report = Report(f"car relations (N={N})")
    for m in range(N):
        for n in range(m, N):
            ac = anticommutator(modes[m], modes[n])
            report.add(check("{a_m, a_n} = 0", is_zero(ac), (m + 1, n + 1), ac))
            ac = anticommutator(daggers[m], daggers[n])
            report.add(check("{a_m*, a_n*} = 0", is_zero(ac), (m + 1, n + 1), ac))
    for m, n in product(range(N), repeat=2):
        ac = anticommutator(modes[m], daggers[n])
        expected = one if m == n else zero()
        report.add(check("{a_m, a_n*} = delta_mn I", equals(ac, expected),
                         (m + 1, n + 1), ac - expected))
    return report


def check_reduction_chain(N: int) -> Report:
    """Compare each anticommutator with its reduction to the seed.

    ``{a_m, a_n}   = rho^(m-1)({a, zeta^(n-m)(a)})``   for m <= n
    ``{a_m, a_n^*} = rho^(m-1)({a, zeta^(n-m)(a^*)})`` for m < n
    ``{a_n, a_n^*} = rho^(n-1)({a, a^*})``
    """
    a = rfs_seed()
    a_dag = adjoint(a)
    report = Report(f"reduction chain (N={N})")
    for m in range(1, N + 1):
        am = car_generator(m).value
        for n in range(m, N + 1):
            an = car_generator(n).value
            lhs = anticommutator(am, an)
            rhs = iterate(apply_rho, m - 1, anticommutator(a, iterate(apply_zeta, n - m, a)))
            report.add(check("{a_m, a_n} = rho^(m-1){a, zeta^(n-m) a}",
                             equals(lhs, rhs), (m, n), lhs - rhs))
            lhs = anticommutator(am, adjoint(an))
            rhs = iterate(apply_rho, m - 1,
                          anticommutator(a, iterate(apply_zeta, n - m, a_dag)))
            report.add(check("{a_m, a_n*} = rho^(m-1){a, zeta^(n-m) a*}",
                             equals(lhs, rhs), (m, n), lhs - rhs))
    return report


def check_rfs_axioms(level: int, max_level: int | None = None,
                     balanced: bool = False) -> Report:
    """Verify the recursive-fermion-system axioms for the standard triple.

    The seed conditions ``a^2 = 0`` and ``{a, a^*} = I`` are checked once; the
    conditions on ``zeta`` are checked for every basis monomial with
    ``|I|, |J| <= level`` (or only balanced ones) and every ordered pair of them.
    """
    require_within("basis level", level, DEFAULT.max_basis_level if max_level is None else max_level)
    a = rfs_seed()
    one = identity()
    report = Report(f"rfs axioms (level={level})")
    sq = mul(a, a)
    report.add(check("a^2 = 0", is_zero(sq), counterexample=sq))
    ac = anticommutator(a, adjoint(a))
    report.add(check("{a, a*} = I", equals(ac, one), counterexample=ac - one))

    basis = basis_elements(level, balanced)
    images = [apply_zeta(x) for x in basis]
    for k, (x, zx) in enumerate(zip(basis, images)):
        ac = anticommutator(a, zx)
        report.add(check("{a, zeta(X)} = 0", is_zero(ac), (k,), ac))
        diff = adjoint(zx) - apply_zeta(adjoint(x))
        report.add(check("zeta(X)* = zeta(X*)", is_zero(diff), (k,), diff))
    for i, j in product(range(len(basis)), repeat=2):
        diff = mul(images[i], images[j]) - apply_rho(mul(basis[i], basis[j]))
        report.add(check("zeta(X)zeta(Y) = phi(XY)", is_zero(diff), (i, j), diff))
    report.info["basis size"] = len(basis)
    return report


def basis_elements(level: int, balanced: bool = False) -> list[Element]:
    return [Element._raw(2, {m: ONE}) for m in basis_monomials(level, 2, balanced)]
