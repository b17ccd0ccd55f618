"""Exact symbolic computation in the Cuntz algebra O_2, the CAR algebra it
contains via the standard recursive fermion system, and the crossed product
of the gauge-invariant subalgebra by the corner endomorphism."""

from __future__ import annotations

from .algebra import (
    Element,
    Monomial,
    adjoint,
    anticommutator,
    canonical,
    equals,
    grade,
    identity,
    is_zero,
    mul,
    psi,
    psi_star,
)
from .crossed import CrossedElement, from_cuntz, mul_crossed, to_cuntz
from .errors import AlgebraError, ResourceBoundError
from .maps import apply_delta, apply_delta_star, apply_phi, apply_rho, apply_zeta
from .parser import parse_expression
from .rfs import car_generator
from .scalar import Scalar
from .uhf import UhfMatrix, jordan_wigner, norm_lower_bound, to_matrix_level

__all__ = [
    "AlgebraError",
    "CrossedElement",
    "Element",
    "Monomial",
    "ResourceBoundError",
    "Scalar",
    "UhfMatrix",
    "adjoint",
    "anticommutator",
    "apply_delta",
    "apply_delta_star",
    "apply_phi",
    "apply_rho",
    "apply_zeta",
    "canonical",
    "car_generator",
    "equals",
    "from_cuntz",
    "grade",
    "identity",
    "is_zero",
    "jordan_wigner",
    "mul",
    "mul_crossed",
    "norm_lower_bound",
    "parse_expression",
    "psi",
    "psi_star",
    "to_cuntz",
    "to_matrix_level",
]
