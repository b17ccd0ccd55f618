from __future__ import annotations

import random

import numpy as np
import pytest
from conftest import elements
from hypothesis import given
from oracles import kron_all

from cuntzcar.algebra import adjoint, equals, identity, is_zero, mul, psi, psi_star
from cuntzcar.errors import UnsupportedGeneratorCount
from cuntzcar.maps import (
    MapName,
    apply_delta,
    apply_delta_star,
    apply_phi,
    apply_rho,
    apply_zeta,
    get_map,
    iterate,
    verify_endomorphism,
    verify_transfer,
)
from cuntzcar.rfs import basis_elements, rfs_seed
from cuntzcar.sampling import random_element
from cuntzcar.uhf import to_matrix_level

Z = np.diag([1.0, -1.0])
E11 = np.diag([1.0, 0.0])


def dense(x, level):
    return to_matrix_level(x, level).to_numpy()


@given(elements(balanced=True, max_len=2))
def test_maps_match_tensor_model(x):
    X = dense(x, 2)
    assert np.allclose(dense(apply_rho(x), 3), kron_all(np.eye(2), X))
    assert np.allclose(dense(apply_zeta(x), 3), kron_all(Z, X))
    assert np.allclose(dense(apply_delta(x), 3), kron_all(E11, X))


def test_delta_star_is_compression_to_first_block():
    rng = random.Random(3)
    for _ in range(30):
        x = random_element(rng, max_level=3, balanced=True)
        X = dense(x, 3)
        assert np.allclose(dense(apply_delta_star(x), 2), X[:4, :4])


@pytest.mark.parametrize("name", ["rho", "zeta", "delta", "phi", "delta_star"])
def test_named_maps_resolve(name):
    assert get_map(name) is get_map(MapName(name))


def test_delta_star_hyphen_alias():
    assert get_map("delta-star") is apply_delta_star


def test_basic_values():
    one = identity()
    assert equals(apply_rho(one), one)
    assert apply_phi is apply_rho
    assert equals(apply_zeta(one), mul(psi(1), psi_star(1)) - mul(psi(2), psi_star(2)))
    assert equals(apply_delta(one), mul(psi(1), psi_star(1)))
    assert not equals(apply_delta(one), one)
    assert is_zero(apply_delta_star(rfs_seed()))
    assert equals(iterate(apply_zeta, 2, one), apply_zeta(apply_zeta(one)))


def test_zeta_squares_to_phi_of_product():
    # zeta(x) zeta(y) = rho(x y): the sign factors square away
    x, y = rfs_seed(), adjoint(rfs_seed())
    assert equals(mul(apply_zeta(x), apply_zeta(y)), apply_rho(mul(x, y)))


def test_only_two_generators():
    with pytest.raises(UnsupportedGeneratorCount):
        apply_rho(psi(1, 3))


def test_delta_star_left_inverse_of_zeta_on_basis():
    for x in basis_elements(3):
        assert equals(apply_delta_star(apply_zeta(x)), x)


@pytest.mark.parametrize("name", ["rho", "zeta", "delta"])
def test_endomorphism_suites(name):
    rng = random.Random(1)
    samples = [random_element(rng, max_level=2) for _ in range(8)]
    assert verify_endomorphism(name, samples).passed


def test_transfer_suite_on_gauge_invariant_samples():
    rng = random.Random(2)
    samples = [random_element(rng, max_level=3, balanced=True) for _ in range(10)]
    report = verify_transfer(samples)
    assert report.passed
    assert "transfer" in " ".join(report.summary())


def test_delta_star_is_not_multiplicative():
    # delta_* is a transfer operator, not an endomorphism
    # delta_*(s1 s2*) = 0 but delta_*(s1 s2* s2 s1*) = I
    x = mul(psi(1), psi_star(2))
    assert not verify_endomorphism("delta_star", [x, adjoint(x)]).passed
