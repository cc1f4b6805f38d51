"""Quantization by polynomial truncation of the Heun series.

A bound state needs ``eps = 2n`` and ``a_{n+1}(A_bar) = 0``. The first
condition fixes the energy as a function of omega_bar::

    E = +- sqrt(m0**2 + 2 m0 omega_bar kappa)

and the second fixes A_bar = 2 Z|e|^2 E / sqrt(m0 omega_bar) to a root of a
polynomial. Eliminating omega_bar between the two gives::

    E**2 = m0**2 / (1 - 8 kappa Z**2 |e|**4 / A_bar**2)
    m0 omega_bar = 4 Z**2 |e|**4 E**2 / A_bar**2

so the oscillator frequency is quantized along with the energy. For n = 1 and
n = 2 the roots are A_bar**2 = 2 delta and A_bar**2 = 4 (2 delta + 1), which
gives closed forms; for general n the roots are isolated numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    CriticalExponent,
    DegenerateCondition,
    ImaginaryEnergy,
    InvalidParameters,
    NegativeEffectiveFrequency,
    NoBoundState,
)
from .heun import HeunParams, coefficients, truncation_polynomial, truncation_residual
from .model import (
    BoundState,
    DerivedQuantities,
    QuantumNumbers,
    SystemParams,
    compute_gamma,
    cyclotron_frequency,
    heun_delta,
    kappa,
)
from .roots import real_roots

DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class SpectrumRequest:
    params: SystemParams
    qn: QuantumNumbers
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if not self.tol > 0:
            raise InvalidParameters("tol must be > 0")


@dataclass(frozen=True)
class SolutionSet:
    """Solved states plus a log of rejected roots as ``(root, reason)`` pairs."""

    states: tuple[BoundState, ...]
    diagnostics: tuple[tuple[float, str], ...] = field(default=())

    def __len__(self):
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def __getitem__(self, i):
        return self.states[i]


def energy_from_frequency(omega_bar: float, qn: QuantumNumbers, params: SystemParams) -> float:
    """Energy of level ``qn`` at a given effective frequency.

    At resonance (``omega_bar == 0``) this is exactly ``branch * m0``.

    Raises
    ------
    ImaginaryEnergy
        If ``m0**2 + 2 m0 omega_bar kappa < 0``.
    """
    if omega_bar < 0:
        raise NegativeEffectiveFrequency(f"omega_bar must be >= 0, got {omega_bar}")
    if omega_bar == 0:
        return qn.branch * params.m0
    gamma = compute_gamma(params, qn.m_l)
    k = kappa(qn.n, gamma, qn.s, qn.m_l, params.ephi)
    e2 = params.m0**2 + 2 * params.m0 * omega_bar * k
    if e2 < 0:
        raise ImaginaryEnergy(f"E^2 = {e2:.6g} < 0 for n={qn.n}, m_l={qn.m_l}, s={qn.s}")
    return qn.branch * math.sqrt(e2)


def _index_and_delta(params, m_l, s):
    gamma = compute_gamma(params, m_l)
    delta = heun_delta(gamma, s)
    if delta <= 0:
        raise CriticalExponent(
            f"gamma = 0 with s = +1 (m_l={m_l}): the radial function cannot vanish at x = 0"
        )
    return gamma, delta


def _make_state(params, qn, gamma, delta, energy, omega_bar, a_bar):
    omega_c = cyclotron_frequency(params)
    coeffs = coefficients(HeunParams(a_bar, delta, 2 * qn.n), qn.n).coeffs
    derived = DerivedQuantities(
        gamma=gamma,
        delta_s=delta,
        kappa=kappa(qn.n, gamma, qn.s, qn.m_l, params.ephi),
        omega_c=omega_c,
        omega_bar=omega_bar,
        a_bar=a_bar,
        eps_s=float(2 * qn.n),
    )
    return BoundState(
        qn=qn,
        energy=energy,
        omega=omega_bar + omega_c / 2,
        omega_bar=omega_bar,
        a_bar_root=a_bar,
        heun_coeffs=coeffs,
        derived=derived,
    )


def _branches(branch):
    if branch is None:
        return (1, -1)
    if branch not in (1, -1):
        raise InvalidParameters(f"branch must be +1, -1 or None, got {branch}")
    return (branch,)


def _closed_form(params, n, m_l, s, branch, weight, denominator_of):
    # E^2 = m0^2 / (1 - weight * C^2 kappa / D);  m0 omega_bar = (weight/2) C^2 E^2 / D
    gamma, delta = _index_and_delta(params, m_l, s)
    states = []
    for b in _branches(branch):
        qn = QuantumNumbers(n, m_l, s, b)
        if params.coulomb == 0:
            states.append(_make_state(params, qn, gamma, delta, b * params.m0, 0.0, 0.0))
            continue
        d = denominator_of(gamma, s)
        c2 = params.coulomb**2
        k = kappa(n, gamma, s, m_l, params.ephi)
        denom = 1 - weight * c2 * k / d
        if denom <= 0:
            raise NoBoundState(
                f"n={n}: 1 - {weight} Z^2|e|^4 kappa / {d:.6g} = {denom:.6g} <= 0"
            )
        energy = b * params.m0 / math.sqrt(denom)
        omega_bar = (weight / 2) * c2 * energy**2 / (params.m0 * d)
        a_bar = 2 * params.coulomb * energy / math.sqrt(params.m0 * omega_bar)
        states.append(_make_state(params, qn, gamma, delta, energy, omega_bar, a_bar))
    return SolutionSet(tuple(states))


def solve_ground_state(params: SystemParams, m_l: float, s: int, branch: int | None = None) -> SolutionSet:
    """Closed-form n = 1 level.

    ``E = +- m0 / sqrt(1 - 4 Z^2|e|^4 kappa / delta)`` and
    ``omega = omega_c/2 + 2 Z^2|e|^4 E^2 / (m0 delta)``. With Z = 0 this
    degenerates to the resonance E = +-m0, omega = omega_c/2.
    Both branches are returned (positive first) unless ``branch`` is given.
    """
    return _closed_form(params, 1, m_l, s, branch, 4, lambda g, s_: heun_delta(g, s_))


def solve_first_excited(params: SystemParams, m_l: float, s: int, branch: int | None = None) -> SolutionSet:
    """Closed-form n = 2 level.

    ``E = +- m0 / sqrt(1 - 2 Z^2|e|^4 kappa / (4|gamma| + 3 - 2s))`` and
    ``omega = omega_c/2 + Z^2|e|^4 E^2 / (m0 (4|gamma| + 3 - 2s))``.
    """
    return _closed_form(params, 2, m_l, s, branch, 2, lambda g, s_: 4 * abs(g) + 3 - 2 * s_)


def solve_general(params: SystemParams, qn: QuantumNumbers, tol: float = DEFAULT_TOL) -> SolutionSet:
    """Solve both truncation conditions for arbitrary n.

    All real nonzero roots of ``a_{n+1}(A_bar)`` are isolated. A root is kept
    when its sign matches the energy branch, the energy is real and the
    truncation residual is within ``tol``. The surviving states are sorted by
    omega_bar; rejected roots are listed in ``diagnostics``.

    Raises
    ------
    DegenerateCondition
        If Z|e|^2 = 0: A_bar vanishes identically and omega is not quantized.
    NoBoundState
        If no root survives.
    """
    if not tol > 0:
        raise InvalidParameters("tol must be > 0")
    if params.coulomb == 0:
        raise DegenerateCondition(
            "Z|e|^2 = 0: a_{n+1} = 0 does not constrain omega; supply omega and use energy_from_frequency"
        )
    n = qn.n
    gamma, delta = _index_and_delta(params, qn.m_l, qn.s)
    k = kappa(n, gamma, qn.s, qn.m_l, params.ephi)
    c2 = params.coulomb**2

    poly = truncation_polynomial(n, delta)
    poly = poly / poly[-1]
    diagnostics: list[tuple[float, str]] = []
    while len(poly) > 1 and poly[0] == 0:
        diagnostics.append((0.0, "zero root"))
        poly = poly[1:]

    states = []
    for root in real_roots(poly):
        if root == 0:
            diagnostics.append((root, "zero root"))
            continue
        if (root > 0) != (qn.branch > 0):
            diagnostics.append((root, "opposite branch"))
            continue
        a = coefficients(HeunParams(root, delta, 2 * n), n).coeffs
        residual = truncation_residual(n, root, delta)
        if abs(residual) > tol * max(1.0, max(abs(c) for c in a)):
            diagnostics.append((root, "residual above tol"))
            continue
        denom = 1 - 8 * k * c2 / root**2
        if denom <= 0:
            diagnostics.append((root, "imaginary energy"))
            continue
        energy = qn.branch * params.m0 / math.sqrt(denom)
        omega_bar = 4 * c2 * energy**2 / (root**2 * params.m0)
        if not omega_bar > 0:
            diagnostics.append((root, "non-positive omega_bar"))
            continue
        states.append(_make_state(params, qn, gamma, delta, energy, omega_bar, root))

    if not states:
        raise NoBoundState(
            f"no admissible root for n={n}, m_l={qn.m_l}, s={qn.s}, branch={qn.branch}: {diagnostics}"
        )
    states.sort(key=lambda st: st.omega_bar)
    return SolutionSet(tuple(states), tuple(diagnostics))


def solve(request: SpectrumRequest) -> SolutionSet:
    """Run :func:`solve_general` for a request."""
    return solve_general(request.params, request.qn, request.tol)
