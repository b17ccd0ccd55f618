"""Endomorphisms of O_2 used by the recursive fermion system and the crossed product.

* ``rho(x)   = psi_1 x psi_1^* + psi_2 x psi_2^*``  (canonical endomorphism, also ``phi``)
* ``zeta(x)  = psi_1 x psi_1^* - psi_2 x psi_2^*``
* ``delta(x) = psi_1 x psi_1^*``
* ``delta_star(x) = psi_1^* x psi_1``  (transfer operator for ``delta``)
"""

from __future__ import annotations

from enum import Enum
from itertools import product
from typing import Callable, Iterable, Sequence

from .algebra import (
    Element,
    Monomial,
    adjoint,
    contract,
    equals,
    identity,
    is_zero,
    mul,
)
from .errors import UnsupportedGeneratorCount
from .report import Report, check
from .scalar import Scalar

_PSI1 = Monomial((1,), ())
_PSI1_STAR = Monomial((), (1,))
# fixed non-real scalar for the linearity checks
_LINEARITY_SCALAR = Scalar(1, 0, 1, 0)


class MapName(str, Enum):
    RHO = "rho"
    ZETA = "zeta"
    PHI = "phi"
    DELTA = "delta"
    DELTA_STAR = "delta_star"


def _require_o2(x: Element) -> None:
    if x.d != 2:
        raise UnsupportedGeneratorCount(f"map is implemented on O_2 only, got O_{x.d}")


def _conjugate_by(x: Element, signs: dict[int, int]) -> Element:
    """``sum_i sign_i * psi_i x psi_i^*``; conjugation prepends ``i`` to both words."""
    out: dict[Monomial, Scalar] = {}
    for i, sign in signs.items():
        for m, c in x._terms.items():
            out[Monomial((i,) + m.creators, (i,) + m.annihilators)] = c if sign > 0 else -c
    return Element._raw(x.d, out)


def apply_rho(x: Element) -> Element:
    _require_o2(x)
    return _conjugate_by(x, {1: 1, 2: 1})


apply_phi = apply_rho


def apply_zeta(x: Element) -> Element:
    _require_o2(x)
    return _conjugate_by(x, {1: 1, 2: -1})


def apply_delta(x: Element) -> Element:
    _require_o2(x)
    return _conjugate_by(x, {1: 1})


def apply_delta_star(x: Element) -> Element:
    _require_o2(x)
    out: dict[Monomial, Scalar] = {}
    for m, c in x._terms.items():
        left = contract(_PSI1_STAR, m)
        if left is None:
            continue
        both = contract(left, _PSI1)
        if both is None:
            continue
        out[both] = out[both] + c if both in out else c
    return Element._collect(x.d, out)


def iterate(f: Callable[[Element], Element], n: int, x: Element) -> Element:
    for _ in range(n):
        x = f(x)
    return x


MAPS: dict[MapName, Callable[[Element], Element]] = {
    MapName.RHO: apply_rho,
    MapName.PHI: apply_phi,
    MapName.ZETA: apply_zeta,
    MapName.DELTA: apply_delta,
    MapName.DELTA_STAR: apply_delta_star,
}


def get_map(name: MapName | str) -> Callable[[Element], Element]:
    return MAPS[MapName(name.replace("-", "_") if isinstance(name, str) else name)]


def _pairs(n: int, pairs: Iterable[tuple[int, int]] | None) -> Iterable[tuple[int, int]]:
    return product(range(n), repeat=2) if pairs is None else pairs


def verify_endomorphism(name: MapName | str, samples: Sequence[Element],
                        pairs: Iterable[tuple[int, int]] | None = None) -> Report:
    """Check the *-endomorphism identities of a named map on samples.

    For ``zeta`` multiplicativity is replaced by ``zeta(x) zeta(y) = rho(x y)``.
    Unitality is checked for ``rho``/``phi``; gauge-invariant samples must be
    mapped to gauge-invariant elements for every map.
    """
    name = MapName(name.replace("-", "_") if isinstance(name, str) else name)
    f = MAPS[name]
    report = Report(f"endomorphism:{name.value}")
    images = [f(x) for x in samples]

    if name in (MapName.RHO, MapName.PHI) and samples:
        one = identity(samples[0].d)
        img = f(one)
        report.add(check("unital", equals(img, one), counterexample=img))

    for k, (x, fx) in enumerate(zip(samples, images)):
        lhs, rhs = f(adjoint(x)), adjoint(fx)
        report.add(check("*-preserving", equals(lhs, rhs), (k,), lhs - rhs))
        if x.is_gauge_invariant():
            report.add(check("preserves A_C", fx.is_gauge_invariant(), (k,), fx))

    for i, j in _pairs(len(samples), pairs):
        x, y = samples[i], samples[j]
        lin = f(x + y.scale(_LINEARITY_SCALAR)) - (images[i] + images[j].scale(_LINEARITY_SCALAR))
        report.add(check("linear", is_zero(lin), (i, j), lin))
        if name is MapName.ZETA:
            diff = mul(images[i], images[j]) - apply_rho(mul(x, y))
            report.add(check("zeta(x)zeta(y) = phi(xy)", is_zero(diff), (i, j), diff))
        else:
            diff = f(mul(x, y)) - mul(images[i], images[j])
            report.add(check("multiplicative", is_zero(diff), (i, j), diff))
    return report


def verify_transfer(samples: Sequence[Element],
                    pairs: Iterable[tuple[int, int]] | None = None,
                    positivity: bool = True, tol: float = 1e-9) -> Report:
    """Check that ``delta_star`` is a full transfer operator for ``delta``.

    Transfer identity on ordered pairs, fullness on single samples, plus
    involution preservation, the left-inverse property ``delta_star(delta(x)) = x``
    and, for gauge-invariant samples, positivity of ``delta_star(x^* x)`` as a
    matrix at its minimal UHF level.
    """
    report = Report("transfer")
    if not samples:
        return report
    e = apply_delta(identity(samples[0].d))
    for k, x in enumerate(samples):
        lhs, rhs = apply_delta(apply_delta_star(x)), mul(mul(e, x), e)
        report.add(check("full: delta(delta_*(x)) = delta(1) x delta(1)",
                         equals(lhs, rhs), (k,), lhs - rhs))
        back = apply_delta_star(apply_delta(x))
        report.add(check("left inverse: delta_*(delta(x)) = x", equals(back, x), (k,), back - x))
        lhs, rhs = apply_delta_star(adjoint(x)), adjoint(apply_delta_star(x))
        report.add(check("*-preserving", equals(lhs, rhs), (k,), lhs - rhs))
        if positivity and x.is_gauge_invariant():
            from .uhf import min_eigenvalue_gauge_invariant

            y = apply_delta_star(mul(adjoint(x), x))
            lowest = min_eigenvalue_gauge_invariant(y)
            report.add(check("positive: delta_*(x^* x) >= 0", lowest >= -tol, (k,), y,
                             min_eigenvalue=lowest))
    for i, j in _pairs(len(samples), pairs):
        x, y = samples[i], samples[j]
        lhs = apply_delta_star(mul(apply_delta(x), y))
        rhs = mul(x, apply_delta_star(y))
        report.add(check("transfer: delta_*(delta(x) y) = x delta_*(y)",
                         equals(lhs, rhs), (i, j), lhs - rhs))
    return report
