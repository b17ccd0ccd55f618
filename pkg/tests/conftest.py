from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from cuntzcar.algebra import Element, Monomial  # noqa: E402
from cuntzcar.scalar import Scalar  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_fractions = st.sampled_from([Fraction(0), Fraction(1), Fraction(-1), Fraction(2),
                                   Fraction(1, 2), Fraction(-3, 2), Fraction(1, 3)])
scalars = st.builds(Scalar, small_fractions, small_fractions, small_fractions, small_fractions)
nonzero_scalars = scalars.filter(lambda s: not s.is_zero())


def words(d: int = 2, max_len: int = 3):
    return st.lists(st.integers(1, d), max_size=max_len).map(tuple)


def monomials(d: int = 2, max_len: int = 3):
    return st.builds(Monomial, words(d, max_len), words(d, max_len))


def balanced_monomials(d: int = 2, max_len: int = 3):
    return st.integers(0, max_len).flatmap(
        lambda n: st.builds(Monomial, st.lists(st.integers(1, d), min_size=n, max_size=n).map(tuple),
                            st.lists(st.integers(1, d), min_size=n, max_size=n).map(tuple)))


def elements(d: int = 2, max_len: int = 3, max_terms: int = 4, balanced: bool = False):
    monos = balanced_monomials(d, max_len) if balanced else monomials(d, max_len)
    return st.dictionaries(monos, nonzero_scalars, max_size=max_terms).map(
        lambda terms: Element(terms, d=d))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
