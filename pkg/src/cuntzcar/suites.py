"""Batch verification suites behind ``cuntzcar check``."""

from __future__ import annotations

import random
from itertools import product

from .algebra import (
    Element,
    Monomial,
    adjoint,
    equals,
    identity,
    mul,
    psi,
    psi_star,
    zero,
)
from .config import DEFAULT, Config
from .crossed import (
    check_covariance,
    coefficient_bound,
    from_cuntz,
    mul_crossed,
    to_cuntz,
)
from .krieger import check_fa_structure, check_krieger_relations, compare_fa_vs_car
from .maps import apply_delta_star, apply_zeta, verify_endomorphism, verify_transfer
from .report import Check, Report, check
from .rfs import (
    basis_elements,
    car_generator,
    check_car_relations,
    check_reduction_chain,
    check_rfs_axioms,
    rfs_seed,
)
from .sampling import random_element
from .scalar import ONE
from .uhf import UhfMatrix, jordan_wigner, to_matrix_level


def cuntz_suite(dims: tuple[int, ...] = (2, 3)) -> Report:
    report = Report("cuntz relations")
    for d in dims:
        one = identity(d)
        for i, j in product(range(1, d + 1), repeat=2):
            lhs = mul(psi_star(i, d), psi(j, d))
            rhs = one if i == j else zero(d)
            report.add(check("psi_i* psi_j = delta_ij I", equals(lhs, rhs), (d, i, j), lhs))
        total = sum((mul(psi(i, d), psi_star(i, d)) for i in range(1, d + 1)), zero(d))
        report.add(check("sum_i psi_i psi_i* = I", equals(total, one), (d,), total))
    return report


def rfs_suite(level: int = 3) -> Report:
    return check_rfs_axioms(level)


def car_suite(N: int = 6, chain: int = 5) -> Report:
    report = check_car_relations(N)
    report.extend(check_reduction_chain(min(N, chain)))
    report.title = f"car relations (N={N})"
    return report


def _balanced_pairs(rng: random.Random, count: int, max_level: int = 3):
    samples = [random_element(rng, max_level=max_level, balanced=True) for _ in range(2 * count)]
    pairs = [(2 * k, 2 * k + 1) for k in range(count)]
    return samples, pairs


def transfer_suite(seed: int = 0, pairs: int = 100, basis_level: int = 4) -> Report:
    rng = random.Random(seed)
    samples, idx = _balanced_pairs(rng, pairs)
    report = Report("transfer operator")
    report.extend(verify_endomorphism("delta", samples, idx))
    report.extend(verify_transfer(samples, idx))
    for k, x in enumerate(basis_elements(basis_level)):
        back = apply_delta_star(apply_zeta(x))
        report.add(check("delta_*(zeta(X)) = X", equals(back, x), (k,), back - x))
    a = rfs_seed()
    report.add(check("delta_*(a) = 0", apply_delta_star(a).is_structurally_zero(),
                     counterexample=apply_delta_star(a)))
    return report


def covariance_suite(seed: int = 0, count: int = 100) -> Report:
    rng = random.Random(seed)
    samples = [identity(), rfs_seed(), car_generator(2).value, car_generator(3).value]
    samples += [random_element(rng, max_level=3, balanced=True) for _ in range(count)]
    return check_covariance(samples)


def crossed_roundtrip_suite(seed: int = 0, count: int = 100) -> Report:
    rng = random.Random(seed)
    report = Report("crossed product")
    s1, s2 = psi(1), psi(2)
    e1 = Element._raw(2, {Monomial((1,), (1,)): ONE})
    g1 = Element._raw(2, {Monomial((2,), (1,)): ONE})
    f1, f2 = from_cuntz(s1), from_cuntz(s2)
    report.add(check("from_cuntz(psi_1) = {1: psi_1 psi_1*}",
                     f1.support() == [1] and equals(f1[1], e1), counterexample=f1))
    report.add(check("from_cuntz(psi_2) = {1: psi_2 psi_1*}",
                     f2.support() == [1] and equals(f2[1], g1), counterexample=f2))
    xs = [random_element(rng, max_level=3) for _ in range(count)]
    for k, x in enumerate(xs):
        ce = from_cuntz(x)
        back = to_cuntz(ce)
        report.add(check("to_cuntz(from_cuntz(x)) = x", equals(back, x), (k,), back - x))
        again = from_cuntz(back)
        report.add(check("from_cuntz(to_cuntz(ce)) = ce", again.equals(ce), (k,), x))
        report.add(check("coefficients in A_C",
                         all(a.is_gauge_invariant() for a in ce.coeffs.values()), (k,), x))
        xa = adjoint(x)
        report.add(check("adjoint compatible",
                         equals(to_cuntz(from_cuntz(xa)), xa), (k,), x))
    for k in range(count):
        x, y = xs[k], xs[(k + 1) % count]
        prod = mul_crossed(from_cuntz(x), from_cuntz(y))
        ok = equals(to_cuntz(prod), mul(x, y))
        report.add(check("to_cuntz(u v) = to_cuntz(u) to_cuntz(v)", ok, (k, (k + 1) % count), x))
    return report


def condition_star_suite(seed: int = 0, count: int = 50, depth: int | None = None,
                         config: Config = DEFAULT) -> Report:
    depth = config.max_depth if depth is None else depth
    rng = random.Random(seed)
    report = Report(f"condition (*) (depth {depth})")
    xs = [random_element(rng, max_level=3, max_terms=5) for _ in range(count)]
    # the zero-margin case and a mixed-degree case
    xs = [psi(1) * adjoint(psi(2)) + psi(2) * adjoint(psi(1)), identity() + psi(1)] + xs
    for k, x in enumerate(xs):
        r = coefficient_bound(x, depth, tolerance=1e-6, max_depth=max(depth, config.max_depth))
        report.add(Check("||a_0|| <= ||x||", r.status, (k,), None if r.status == "pass" else x,
                         {"a0_norm": r.a0_norm, "lower_bound": r.best_lower_bound}))
        report.add(check("lower bound nondecreasing in depth", r.is_monotone(config.tolerance),
                         (k,), x))
    report.info["inconclusive"] = report.count("inconclusive")
    return report


def matrix_suite(seed: int = 0, pairs: int = 100, level: int = 4, N: int = 8) -> Report:
    """The UHF model is a *-homomorphism and reproduces Jordan-Wigner."""
    rng = random.Random(seed)
    samples, idx = _balanced_pairs(rng, pairs, max_level=level)
    report = Report(f"matrix model (level {level}, N={N})")
    mats = [to_matrix_level(x, level) for x in samples]
    for i, j in idx:
        prod = to_matrix_level(mul(samples[i], samples[j]), level)
        report.add(check("M(xy) = M(x) M(y)", prod == mats[i] @ mats[j], (i, j), samples[i]))
        adj = to_matrix_level(adjoint(samples[i]), level)
        report.add(check("M(x*) = M(x)^*", adj == mats[i].adjoint(), (i,), samples[i]))
    for n_max in range(1, N + 1):
        one = UhfMatrix.identity(n_max)
        a = [to_matrix_level(car_generator(n).value, n_max) for n in range(1, n_max + 1)]
        for n in range(1, n_max + 1):
            report.add(check("M(a_n) = Jordan-Wigner", a[n - 1] == jordan_wigner(n, n_max),
                             (n, n_max)))
        if n_max != N:
            continue
        for m, n in product(range(N), repeat=2):
            anti = a[m] @ a[n] + a[n] @ a[m]
            report.add(check("{a_m, a_n} = 0", anti.is_zero(), (m + 1, n + 1)))
            ad = a[n].adjoint()
            anti = a[m] @ ad + ad @ a[m]
            expected = one if m == n else one.scale(0)
            report.add(check("{a_m, a_n*} = delta_mn I", anti == expected, (m + 1, n + 1)))
    return report


def fa_suite(K: int = 3) -> Report:
    report = Report(f"F_A core (K={K})")
    for k in range(1, K + 1):
        sub = compare_fa_vs_car(k)
        report.extend(sub)
        report.info[f"level {k}"] = sub.info
    for k in range(0, min(K, 3)):
        report.extend(check_fa_structure(k))
    report.extend(check_krieger_relations())
    return report


def all_suites(seed: int = 0, config: Config = DEFAULT) -> list[Report]:
    return [
        cuntz_suite(),
        rfs_suite(3),
        car_suite(6),
        transfer_suite(seed),
        covariance_suite(seed),
        crossed_roundtrip_suite(seed),
        condition_star_suite(seed, config=config),
        matrix_suite(seed),
        fa_suite(3),
    ]


__all__ = [
    "all_suites",
    "car_suite",
    "condition_star_suite",
    "covariance_suite",
    "crossed_roundtrip_suite",
    "cuntz_suite",
    "fa_suite",
    "matrix_suite",
    "rfs_suite",
    "transfer_suite",
]
