"""The F_A core for the all-ones 2x2 matrix A, seen inside O_2.

With ``S_i = psi_i`` the Cuntz-Krieger algebra of the all-ones matrix is O_2
itself.  Its core F_A is spanned by ``S_mu P_i S_nu^*`` with ``|mu| = |nu| = k``
and ``P_i = S_i S_i^*``, i.e. balanced monomials of level ``k + 1`` whose two
words end in the same letter.  At a fixed level that span is the proper
subspace ``M_{2^k} (x) diag(2)`` of ``M_{2^(k+1)}``.  It does contain the
whole previous level, because ``psi_mu psi_nu^* = sum_i psi_mu P_i psi_nu^*``;
so ``psi_1 psi_2^*`` is outside the ``k = 0`` span only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Hashable, Mapping, Sequence

from .algebra import (
    Element,
    Monomial,
    adjoint,
    equals,
    expand_to_level,
    identity,
    is_zero,
    mul,
    require_gauge_invariant,
)
from .config import DEFAULT, require_within
from .errors import LevelTooSmall
from .report import Report, check
from .scalar import INV_SQRT2, ONE, Scalar

Vector = Mapping[Hashable, Scalar]


@dataclass(frozen=True)
class FaLevel:
    k: int
    generators: tuple[Monomial, ...]

    def elements(self) -> list[Element]:
        return [Element._raw(2, {m: ONE}) for m in self.generators]


def fa_generators(k: int, max_level: int | None = None) -> FaLevel:
    """All ``psi_mu psi_i psi_i^* psi_nu^*`` with ``|mu| = |nu| = k``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    require_within("F_A level", k + 1, DEFAULT.max_level if max_level is None else max_level)
    words = list(product((1, 2), repeat=k))
    gens = tuple(Monomial(mu + (i,), nu + (i,)) for mu in words for nu in words for i in (1, 2))
    return FaLevel(k, gens)


def exact_rank(vectors: Sequence[Vector]) -> int:
    """Rank over Q(i, sqrt2) of sparse vectors, by Gaussian elimination."""
    pivots: dict[Hashable, dict[Hashable, Scalar]] = {}
    rank = 0
    for vec in vectors:
        v = {k: c for k, c in vec.items() if not c.is_zero()}
        while v:
            lead = min(v, key=repr)
            if lead not in pivots:
                inv = v[lead].inverse()
                pivots[lead] = {k: c * inv for k, c in v.items()}
                rank += 1
                break
            row = pivots[lead]
            factor = v[lead]
            for k, c in row.items():
                new = v.get(k, Scalar(0)) - factor * c
                if new.is_zero():
                    v.pop(k, None)
                else:
                    v[k] = new
    return rank


def _vector(x: Element, level: int) -> dict[Monomial, Scalar]:
    return dict(expand_to_level(x, level)._terms)


def fa_span_membership(x: Element, k: int) -> bool:
    """Whether ``x`` lies in the span of the level-``k`` F_A generators."""
    require_gauge_invariant(x)
    if x.max_level() > k + 1:
        raise LevelTooSmall(f"element needs level {x.max_level()} > {k + 1}")
    gens = [{m: ONE} for m in fa_generators(k).generators]
    target = _vector(x, k + 1)
    return exact_rank(gens + [target]) == exact_rank(gens)


def average_isometry() -> Element:
    """``S = (psi_1 + psi_2)/sqrt2``."""
    return Element._raw(2, {Monomial((1,), ()): INV_SQRT2, Monomial((2,), ()): INV_SQRT2})


def level_witness(k: int) -> Element:
    """``psi_1^k psi_2^* psi_1^{*(k-1)}``: balanced of level ``k``, words ending in 1 and 2.

    At ``k = 1`` this is ``psi_1 psi_2^*``.
    """
    return Element._raw(2, {Monomial((1,) * k, (1,) * (k - 1) + (2,)): ONE})


def compare_fa_vs_car(k: int) -> Report:
    """Dimension of F_A versus the full balanced algebra at level ``k``.

    The witness checked is :func:`level_witness`.  Whether ``psi_1 psi_2^*``
    itself lies in the span is recorded under ``info``: for ``k >= 2`` it does,
    since ``psi_1 psi_2^* = psi_1 P_1 psi_2^* + psi_1 P_2 psi_2^*``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    require_within("level", k, DEFAULT.max_level)
    fa = fa_generators(k - 1)
    fa_dim = exact_rank([{m: ONE} for m in fa.generators])
    words = list(product((1, 2), repeat=k))
    full_dim = exact_rank([{Monomial(i, j): ONE} for i in words for j in words])
    witness = level_witness(k)
    report = Report(f"F_A vs A_C (level {k})")
    report.add(check("dim F_A = 2^(2k-1)", fa_dim == 2 ** (2 * k - 1), (k,),
                     dimension=fa_dim))
    report.add(check("dim A_C level = 2^(2k)", full_dim == 2 ** (2 * k), (k,),
                     dimension=full_dim))
    report.add(check("level-k witness in A_C but not in F_A span",
                     witness.is_gauge_invariant() and not fa_span_membership(witness, k - 1),
                     (k,), witness))
    seed_monomial = Element._raw(2, {Monomial((1,), (2,)): ONE})
    report.info.update({"dim F_A": fa_dim, "dim A_C": full_dim,
                        "witness": str(witness),
                        "psi_1 psi_2* in F_A span": fa_span_membership(seed_monomial, k - 1)})
    return report


def check_fa_structure(k: int) -> Report:
    """Closure of the level-``k`` F_A span under products and adjoints,
    and its inclusion in the next level's span."""
    gens = fa_generators(k).elements()
    report = Report(f"F_A structure (k={k})")
    for a_idx, g in enumerate(gens):
        report.add(check("adjoint of generator is a generator",
                         adjoint(g)._terms.keys() <= set(fa_generators(k).generators),
                         (a_idx,), g))
        report.add(check("level coherence", fa_span_membership(g, k + 1), (a_idx,), g))
    for i, j in product(range(len(gens)), repeat=2):
        p = mul(gens[i], gens[j])
        ok = is_zero(p) or fa_span_membership(p, k)
        report.add(check("closed under products", ok, (i, j), p))
    return report


def check_krieger_relations() -> Report:
    """``P_1 P_2 = 0`` and ``Q_i = S_i^* S_i = P_1 + P_2 = I`` for the all-ones matrix."""
    s = [Element._raw(2, {Monomial((i,), ()): ONE}) for i in (1, 2)]
    p = [mul(si, adjoint(si)) for si in s]
    one = identity()
    report = Report("Cuntz-Krieger relations (A = all ones)")
    report.add(check("P_1 P_2 = 0", is_zero(mul(p[0], p[1])), (1, 2)))
    for i, si in enumerate(s, 1):
        q = mul(adjoint(si), si)
        report.add(check("Q_i = sum_r A(i,r) P_r", equals(q, p[0] + p[1]), (i,), q))
        report.add(check("Q_i = I", equals(q, one), (i,), q))
    S = average_isometry()
    sts = mul(adjoint(S), S)
    report.add(check("S* S = I", equals(sts, one), counterexample=sts))
    sst = mul(S, adjoint(S))
    report.add(check("S S* is a projection", equals(mul(sst, sst), sst), counterexample=sst))
    report.add(check("S S* != I", not equals(sst, one), counterexample=sst))
    return report
