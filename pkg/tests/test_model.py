import math

import pytest
from hypothesis import given, strategies as st

from dirac_abc import (
    InvalidParameters,
    NegativeEffectiveFrequency,
    QuantumNumbers,
    SupercriticalCoupling,
    SystemParams,
    compute_gamma,
    cyclotron_frequency,
    derived_quantities,
    effective_frequency,
    kappa,
)

half_odd = st.integers(-6, 5).map(lambda k: k + 0.5)


@pytest.mark.parametrize(
    "e_abs, B, m0, expected",
    [(1.0, 0.0, 1.0, 0.0), (1.0, 2.0, 1.0, 2.0), (0.5, 2.0, 2.0, 0.5)],
)
def test_cyclotron_frequency(e_abs, B, m0, expected):
    assert cyclotron_frequency(SystemParams(m0=m0, e_abs=e_abs, Z=0.0, B=B)) == expected


def test_effective_frequency_examples():
    assert effective_frequency(1.0, 1.0) == 0.5
    assert effective_frequency(0.5, 1.0) == 0.0
    # oscillator switched off: the field alone sets the scale
    assert effective_frequency(0.0, 0.8) == 0.8


def test_effective_frequency_below_resonance_raises():
    with pytest.raises(NegativeEffectiveFrequency):
        effective_frequency(0.3, 1.0)
    with pytest.raises(NegativeEffectiveFrequency):
        SystemParams(m0=1, e_abs=1, Z=0, B=1, omega=0.3)


@given(st.floats(0.01, 10), st.floats(0, 5), st.floats(0.01, 1))
def test_effective_frequency_is_affine(omega, omega_c, step):
    omega = omega + omega_c + step  # keep omega_bar >= 0 after the shift
    base = effective_frequency(omega, omega_c)
    assert math.isclose(effective_frequency(omega + step, omega_c) - base, step, abs_tol=1e-12)
    assert math.isclose(
        effective_frequency(omega, omega_c + step) - base, -step / 2, abs_tol=1e-12
    )


@pytest.mark.parametrize(
    "m_l, Z, expected",
    [(0.5, 0.0, 0.5), (0.5, 0.3, 0.4), (0.5, 0.5, 0.0)],
)
def test_compute_gamma_examples(m_l, Z, expected):
    params = SystemParams(m0=1, e_abs=1, Z=Z)
    assert compute_gamma(params, m_l) == pytest.approx(expected, abs=1e-15)


def test_compute_gamma_supercritical():
    with pytest.raises(SupercriticalCoupling):
        compute_gamma(SystemParams(m0=1, e_abs=1, Z=0.6), 0.5)


def test_gamma_forms_differ_only_in_orbital_term():
    linear = SystemParams(m0=1, e_abs=1, Z=0.1, phi_ab=0.2)
    printed = SystemParams(m0=1, e_abs=1, Z=0.1, phi_ab=0.2, gamma_form="as_printed")
    assert compute_gamma(linear, 1.5) == pytest.approx(math.sqrt(1.7**2 - 0.01))
    assert compute_gamma(printed, 1.5) == pytest.approx(math.sqrt(2.45**2 - 0.01))


@given(half_odd, st.floats(-0.4, 0.4), st.floats(0, 0.2), st.floats(0.1, 2))
def test_gamma_identity(m_l, phi, Z, e_abs):
    params = SystemParams(m0=1, e_abs=e_abs, Z=Z, phi_ab=phi)
    orbital = m_l + e_abs * phi
    coulomb = Z * e_abs**2
    if orbital**2 < coulomb**2:
        return
    g = compute_gamma(params, m_l)
    assert g >= 0
    assert math.isclose(g**2 + coulomb**2, orbital**2, rel_tol=1e-13, abs_tol=1e-15)


def test_kappa_examples():
    assert kappa(1, 0.5, 1, 0.5, 0.0) == 1.0
    assert kappa(2, 0.5, -1, 0.5, 0.0) == 4.0
    gamma = math.sqrt(0.25 - 0.01)
    assert kappa(1, gamma, 1, 0.5, 0.0) == pytest.approx(0.989898, abs=1e-6)


@given(st.integers(1, 30), st.floats(0, 5), st.sampled_from([1, -1]), half_odd, st.floats(-1, 1))
def test_kappa_unit_step(n, gamma, s, m_l, ephi):
    assert kappa(n + 1, gamma, s, m_l, ephi) - kappa(n, gamma, s, m_l, ephi) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize(
    "kwargs",
    [dict(m0=0, e_abs=1, Z=0), dict(m0=1, e_abs=-1, Z=0), dict(m0=1, e_abs=1, Z=-1),
     dict(m0=1, e_abs=1, Z=0, B=-1), dict(m0=1, e_abs=1, Z=0, omega=-1)],
)
def test_system_params_validation(kwargs):
    with pytest.raises(InvalidParameters):
        SystemParams(**kwargs)


@pytest.mark.parametrize(
    "kwargs",
    [dict(n=0, m_l=0.5, s=1), dict(n=1, m_l=1.0, s=1), dict(n=1, m_l=0.5, s=0),
     dict(n=1, m_l=0.5, s=1, branch=2), dict(n=1.5, m_l=0.5, s=1)],
)
def test_quantum_number_validation(kwargs):
    with pytest.raises(InvalidParameters):
        QuantumNumbers(**kwargs)


def test_branch_flip_only_flips_a_bar(running_params):
    plus = derived_quantities(running_params, QuantumNumbers(1, 0.5, 1, 1), energy=1.02, omega_bar=0.02)
    minus = derived_quantities(running_params, QuantumNumbers(1, 0.5, 1, -1), energy=-1.02, omega_bar=0.02)
    assert minus.a_bar == -plus.a_bar
    for name in ("gamma", "delta_s", "kappa", "omega_c", "omega_bar", "eps_s"):
        assert getattr(minus, name) == getattr(plus, name)


def test_derived_at_resonance_has_no_heun_coupling(running_params):
    d = derived_quantities(running_params, QuantumNumbers(1, 0.5, 1), energy=1.0, omega_bar=0.0)
    assert math.isnan(d.a_bar) and math.isnan(d.eps_s)
    assert d.delta_s == pytest.approx(2 * d.gamma)
