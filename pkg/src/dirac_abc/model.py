"""Physical parameters and derived scalar quantities of the radial problem.

Natural units (hbar = c = 1) throughout. The charge magnitude ``e_abs`` is a
required input; the usual choice is ``e_abs**2`` equal to the fine-structure
constant, but nothing here assumes it.

The radial equation in the dimensionless coordinate ``x = sqrt(m0*omega_bar)*rho``
reads::

    phi'' - [gamma*(gamma - s)/x**2 + x**2 - A_bar/x - E_bar] phi = 0

and every quantity below is one of the scalars entering that equation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

from .errors import InvalidParameters, NegativeEffectiveFrequency, SupercriticalCoupling

GammaForm = Literal["linear", "as_printed"]


@dataclass(frozen=True)
class SystemParams:
    """Physical configuration.

    Parameters
    ----------
    m0 : float
        Rest mass, > 0.
    e_abs : float
        Charge magnitude |e|, >= 0.
    Z : float
        Atomic number of the Coulomb centre, >= 0.
    phi_ab : float
        Aharonov-Bohm flux parameter Phi/(2 pi). Either sign is accepted.
    B : float
        Homogeneous magnetic field, >= 0.
    omega : float, optional
        Oscillator frequency. Leave as ``None`` when the solver determines it.
    gamma_form : {"linear", "as_printed"}
        ``"linear"`` uses ``(m_l + |e| Phi_AB)**2`` inside gamma. ``"as_printed"``
        uses ``(m_l**2 + |e| Phi_AB)**2`` for comparison with the literal
        published expression.
    """

    m0: float
    e_abs: float
    Z: float
    phi_ab: float = 0.0
    B: float = 0.0
    omega: float | None = None
    gamma_form: GammaForm = "linear"

    def __post_init__(self):
        for name in ("m0", "e_abs", "Z", "phi_ab", "B"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidParameters(f"{name} must be finite")
        if self.m0 <= 0:
            raise InvalidParameters(f"m0 must be > 0, got {self.m0}")
        if self.e_abs < 0:
            raise InvalidParameters(f"e_abs must be >= 0, got {self.e_abs}")
        if self.Z < 0:
            raise InvalidParameters(f"Z must be >= 0, got {self.Z}")
        if self.B < 0:
            raise InvalidParameters(f"B must be >= 0, got {self.B}")
        if self.gamma_form not in ("linear", "as_printed"):
            raise InvalidParameters(f"unknown gamma_form {self.gamma_form!r}")
        if self.omega is not None:
            if not (math.isfinite(self.omega) and self.omega >= 0):
                raise InvalidParameters(f"omega must be >= 0, got {self.omega}")
            # raises NegativeEffectiveFrequency for omega < omega_c / 2
            effective_frequency(self.omega, cyclotron_frequency(self))

    @property
    def coulomb(self) -> float:
        """Coulomb strength Z |e|^2."""
        return self.Z * self.e_abs**2

    @property
    def ephi(self) -> float:
        """Flux coupling |e| Phi_AB."""
        return self.e_abs * self.phi_ab


@dataclass(frozen=True)
class QuantumNumbers:
    """Labels of one bound state: ``n >= 1``, half-odd ``m_l``, ``s`` and ``branch`` in {+1, -1}."""

    n: int
    m_l: float
    s: int
    branch: int = 1

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise InvalidParameters(f"n must be an integer >= 1, got {self.n}")
        two_ml = 2 * self.m_l
        if abs(two_ml - round(two_ml)) > 1e-12 or round(two_ml) % 2 == 0:
            raise InvalidParameters(f"m_l must be half-odd (+-1/2, +-3/2, ...), got {self.m_l}")
        if self.s not in (1, -1):
            raise InvalidParameters(f"s must be +1 or -1, got {self.s}")
        if self.branch not in (1, -1):
            raise InvalidParameters(f"branch must be +1 or -1, got {self.branch}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "m_l", round(two_ml) / 2)


@dataclass(frozen=True)
class DerivedQuantities:
    """Scalars computed from parameters and labels.

    ``a_bar`` and ``eps_s`` are NaN at resonance (``omega_bar == 0``), where the
    dimensionless coordinate is undefined.
    """

    gamma: float
    delta_s: float
    kappa: float
    omega_c: float
    omega_bar: float
    a_bar: float
    eps_s: float


@dataclass(frozen=True)
class BoundState:
    """A solved state.

    ``heun_coeffs`` holds a_0..a_n of the terminating Heun polynomial. A state
    with ``omega_bar == 0`` is the degenerate resonance solution (E = +-m0);
    its coefficients are evaluated at A_bar = 0 and carry no truncation
    guarantee.
    """

    qn: QuantumNumbers
    energy: float
    omega: float
    omega_bar: float
    a_bar_root: float
    heun_coeffs: tuple[float, ...]
    derived: DerivedQuantities = field(repr=False)

    @property
    def resonant(self) -> bool:
        return self.omega_bar == 0.0

    @property
    def eps_bar(self) -> float:
        """Dimensionless eigenvalue 2n + 2 gamma + 2 - s of the radial operator."""
        return 2 * self.qn.n + 2 * self.derived.gamma + 2 - self.qn.s


def cyclotron_frequency(params: SystemParams) -> float:
    """Return omega_c = |e| B / m0."""
    return params.e_abs * params.B / params.m0


def effective_frequency(omega: float, omega_c: float) -> float:
    """Return the effective frequency omega_bar = omega - omega_c/2.

    ``omega == 0`` is the special case where the oscillator is switched off;
    the field alone then confines the particle and omega_bar -> |omega_c|.

    Raises
    ------
    NegativeEffectiveFrequency
        If ``omega > 0`` and ``omega < omega_c / 2``.
    """
    if omega < 0 or omega_c < 0:
        raise InvalidParameters("omega and omega_c must be >= 0")
    if omega == 0:
        return abs(omega_c)
    omega_bar = omega - omega_c / 2
    if omega_bar < 0:
        raise NegativeEffectiveFrequency(
            f"omega={omega} is below omega_c/2={omega_c / 2}; omega_bar={omega_bar} < 0"
        )
    return omega_bar


def compute_gamma(params: SystemParams, m_l: float) -> float:
    """Return gamma = sqrt((m_l + |e| Phi_AB)^2 - Z^2 |e|^4) >= 0.

    Raises
    ------
    SupercriticalCoupling
        If the radicand is negative.
    """
    if params.gamma_form == "as_printed":
        orbital = m_l**2 + params.ephi
    else:
        orbital = m_l + params.ephi
    radicand = orbital**2 - params.coulomb**2
    if radicand < 0:
        raise SupercriticalCoupling(
            f"(m_l + |e|Phi)^2 = {orbital**2:.6g} < (Z|e|^2)^2 = {params.coulomb**2:.6g}"
        )
    return math.sqrt(radicand)


def kappa(n: int, gamma: float, s: int, m_l: float, ephi: float) -> float:
    """Spectral combination n + |gamma| + 1 - s - m_l - |e| Phi_AB."""
    return n + abs(gamma) + 1 - s - m_l - ephi


def heun_delta(gamma: float, s: int) -> float:
    """delta = 2|gamma| + 1 - s."""
    return 2 * abs(gamma) + 1 - s


def radial_exponent(gamma: float, s: int) -> float:
    """Power of x in front of the Heun factor: |gamma| + (1 - s)/2."""
    return abs(gamma) + (1 - s) / 2


def derived_quantities(
    params: SystemParams,
    qn: QuantumNumbers,
    energy: float | None = None,
    omega_bar: float | None = None,
) -> DerivedQuantities:
    """Collect gamma, delta, kappa, omega_c, omega_bar, A_bar and eps for a state.

    ``omega_bar`` defaults to the value implied by ``params.omega``. ``energy``
    is needed for A_bar and eps; without it both are NaN.
    """
    gamma = compute_gamma(params, qn.m_l)
    omega_c = cyclotron_frequency(params)
    if omega_bar is None:
        omega_bar = effective_frequency(params.omega, omega_c) if params.omega is not None else math.nan
    a_bar = eps = math.nan
    if energy is not None and omega_bar > 0:
        m0w = params.m0 * omega_bar
        a_bar = 2 * params.coulomb * energy / math.sqrt(m0w)
        e_s = (
            energy**2
            - params.m0**2
            + 2 * m0w * params.ephi
            + m0w * (2 * qn.m_l + qn.s)
        )
        eps = e_s / m0w - 2 * gamma - (2 - qn.s)
    return DerivedQuantities(
        gamma=gamma,
        delta_s=heun_delta(gamma, qn.s),
        kappa=kappa(qn.n, gamma, qn.s, qn.m_l, params.ephi),
        omega_c=omega_c,
        omega_bar=omega_bar,
        a_bar=a_bar,
        eps_s=eps,
    )
