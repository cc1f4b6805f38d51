import numpy as np
import pytest
from hypothesis import given, strategies as st

from dirac_abc.roots import cauchy_bound, horner, real_roots


def _from_roots(roots):
    return list(np.polynomial.polynomial.polyfromroots(roots))


def test_horner():
    assert horner([1.0, -3.0, 2.0], 2.0) == 3.0


def test_cauchy_bound_encloses_roots():
    coeffs = _from_roots([-7.5, 0.3, 2.0])
    assert cauchy_bound(coeffs) >= 7.5


@given(st.lists(st.floats(-20, 20), min_size=1, max_size=6, unique=True))
def test_recovers_well_separated_roots(roots):
    roots = sorted(roots)
    if min(np.diff(roots), default=1.0) < 1e-2:
        return
    got = real_roots(_from_roots(roots))
    assert len(got) == len(roots)
    for g, r in zip(got, roots):
        assert g == pytest.approx(r, abs=1e-8 * max(1.0, abs(r)))


def test_complex_pair_is_ignored():
    # (x^2 + 1)(x - 2)
    assert real_roots([-2.0, 1.0, -2.0, 1.0]) == pytest.approx([2.0])


def test_interval_restriction_and_plain_floats():
    got = real_roots(_from_roots([-1.0, 0.5, 3.0]), 0.0, 5.0)
    assert got == pytest.approx([0.5, 3.0])
    assert all(type(r) is float for r in got)
