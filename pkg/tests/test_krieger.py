from __future__ import annotations

import numpy as np
import pytest

from cuntzcar.algebra import adjoint, equals, identity, mul, psi, psi_star
from cuntzcar.errors import LevelTooSmall
from cuntzcar.krieger import (
    average_isometry,
    check_fa_structure,
    check_krieger_relations,
    compare_fa_vs_car,
    exact_rank,
    fa_generators,
    fa_span_membership,
    level_witness,
)
from cuntzcar.scalar import SQRT2, Scalar
from cuntzcar.uhf import to_matrix_level


def numeric_span(k: int) -> np.ndarray:
    """Generators of F_A at level k as flattened UHF matrices at level k + 1."""
    return np.array([to_matrix_level(g, k + 1).to_numpy().ravel()
                     for g in fa_generators(k).elements()])


def numeric_member(x, k: int) -> bool:
    basis = numeric_span(k)
    target = to_matrix_level(x, k + 1).to_numpy().ravel()
    return np.linalg.matrix_rank(np.vstack([basis, target])) == np.linalg.matrix_rank(basis)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_dimensions(k):
    report = compare_fa_vs_car(k)
    assert report.info["dim F_A"] == 2 ** (2 * k - 1)
    assert report.info["dim A_C"] == 2 ** (2 * k)
    assert np.linalg.matrix_rank(numeric_span(k - 1)) == 2 ** (2 * k - 1)
    assert report.passed


@pytest.mark.parametrize("k", [1, 2, 3])
def test_level_witness_outside_span(k):
    w = level_witness(k)
    assert w.is_gauge_invariant()
    assert not fa_span_membership(w, k - 1)
    assert not numeric_member(w, k - 1)


def test_seed_membership_by_level():
    x = mul(psi(1), psi_star(2))
    assert not fa_span_membership(x, 0)
    # at higher levels the span refines psi_1 psi_2^* = sum_i psi_1 P_i psi_2^*
    for k in (1, 2, 3):
        assert fa_span_membership(x, k)
        assert numeric_member(x, k)
    assert equals(x, mul(mul(psi(1), psi(1)), mul(psi_star(1), psi_star(2)))
                  + mul(mul(psi(1), psi(2)), mul(psi_star(2), psi_star(2))))


def test_membership_needs_room():
    with pytest.raises(LevelTooSmall):
        fa_span_membership(level_witness(3), 1)


@pytest.mark.parametrize("k", [0, 1])
def test_structure(k):
    assert check_fa_structure(k).passed


def test_krieger_relations():
    assert check_krieger_relations().passed
    S = average_isometry()
    assert equals(mul(adjoint(S), S), identity())


def test_exact_rank_over_the_field():
    v1 = {"x": Scalar(1), "y": SQRT2}
    v2 = {"x": SQRT2, "y": Scalar(2)}  # sqrt2 * v1
    v3 = {"x": Scalar(0, 1)}
    assert exact_rank([v1, v2]) == 1
    assert exact_rank([v1, v2, v3]) == 2
    assert exact_rank([]) == 0
