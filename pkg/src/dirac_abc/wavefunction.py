"""Analytic radial functions of solved states.

In the dimensionless coordinate ``x = sqrt(m0 omega_bar) rho``::

    phi(x) = C * x**p * exp(-x**2/2) * f(x),    p = |gamma| + (1 - s)/2

where ``f`` is the terminating Heun polynomial. The norm is the flat L2 norm
in ``x``; the 1/sqrt(rho) Jacobian is already carried by the spinor
separation, so no extra measure appears.
"""

from __future__ import annotations

import csv
import math
import warnings
from dataclasses import dataclass, replace
from typing import IO

import numpy as np
from scipy import integrate

from .errors import CriticalExponent, DegenerateCondition, InvalidParameters, QuadratureFailure
from .heun import HeunParams, bhe_residual
from .model import BoundState, heun_delta, radial_exponent
from .roots import cauchy_bound, real_roots


@dataclass(frozen=True)
class RadialFunction:
    """Radial profile ``C x**p exp(-x**2/2) f(x)`` of a level.

    ``poly`` holds the ascending coefficients of ``f``. ``norm_const`` is 1
    until :func:`normalize` is applied.
    """

    gamma: float
    s: int
    n: int
    a_bar: float
    poly: tuple[float, ...]
    norm_const: float = 1.0
    state: BoundState | None = None

    def __post_init__(self):
        if self.s not in (1, -1):
            raise InvalidParameters("s must be +1 or -1")
        if self.exponent <= 0:
            raise CriticalExponent(
                "exponent |gamma| + (1-s)/2 is 0: phi(0) != 0 violates the boundary condition"
            )

    @classmethod
    def from_state(cls, state: BoundState) -> RadialFunction:
        if state.resonant:
            raise DegenerateCondition("omega_bar = 0: the dimensionless coordinate is undefined")
        return cls(
            gamma=state.derived.gamma,
            s=state.qn.s,
            n=state.qn.n,
            a_bar=state.a_bar_root,
            poly=tuple(state.heun_coeffs),
            state=state,
        )

    @property
    def exponent(self) -> float:
        return radial_exponent(self.gamma, self.s)

    @property
    def delta(self) -> float:
        return heun_delta(self.gamma, self.s)

    @property
    def eps_bar(self) -> float:
        """Eigenvalue of the dimensionless radial operator, 2n + 2|gamma| + 2 - s."""
        return 2 * self.n + 2 * abs(self.gamma) + 2 - self.s

    def heun_params(self) -> HeunParams:
        return HeunParams(self.a_bar, self.delta, 2 * self.n)

    def __call__(self, x):
        return radial_value(self, x)


def radial_function(state: BoundState) -> RadialFunction:
    """Unnormalized radial function of a solved state."""
    return RadialFunction.from_state(state)


def radial_value(rf: RadialFunction, x):
    """phi(x); accepts scalars or arrays, ``x >= 0``."""
    x = np.asarray(x, dtype=float)
    val = (
        rf.norm_const
        * np.power(x, rf.exponent)
        * np.exp(-0.5 * x * x)
        * np.polynomial.polynomial.polyval(x, rf.poly)
    )
    return float(val) if val.ndim == 0 else val


def _tail_cutoff(rf: RadialFunction) -> float:
    return math.sqrt(2 * (rf.exponent + rf.n) + 40)


def normalize(rf: RadialFunction, tol: float = 1e-12) -> RadialFunction:
    """Return a copy with ``norm_const`` fixed so that the x-space L2 norm is 1.

    The integral ``int_0^xmax x**(2p) exp(-x**2) f(x)**2 dx`` is computed by
    adaptive Gauss-Kronrod quadrature with the algebraic endpoint weight
    ``x**(2p)`` treated exactly. ``xmax`` puts the Gaussian tail below
    round-off.

    Raises
    ------
    QuadratureFailure
        If the estimated relative error exceeds ``tol``.
    """
    if not tol > 0:
        raise InvalidParameters("tol must be > 0")
    x_max = _tail_cutoff(rf)
    poly = np.asarray(rf.poly, dtype=float)

    def smooth(x):
        f = np.polynomial.polynomial.polyval(x, poly)
        return math.exp(-x * x) * f * f

    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            value, abserr = integrate.quad(
                smooth, 0.0, x_max, weight="alg", wvar=(2 * rf.exponent, 0.0),
                epsabs=0.0, epsrel=tol, limit=500,
            )
        except integrate.IntegrationWarning as exc:
            raise QuadratureFailure(str(exc)) from exc
    if not (value > 0 and abserr <= max(tol, 1e-14) * value):
        raise QuadratureFailure(f"integral={value}, error estimate={abserr}")
    return replace(rf, norm_const=1.0 / math.sqrt(value))


def norm_squared(rf: RadialFunction) -> float:
    """x-space integral of |phi|^2 at the current ``norm_const``."""
    x_max = _tail_cutoff(rf)
    poly = np.asarray(rf.poly, dtype=float)
    value, _ = integrate.quad(
        lambda x: math.exp(-x * x) * np.polynomial.polynomial.polyval(x, poly) ** 2,
        0.0, x_max, weight="alg", wvar=(2 * rf.exponent, 0.0), epsabs=0.0, epsrel=1e-13, limit=500,
    )
    return rf.norm_const**2 * value


def rho_norm_const(rf: RadialFunction, m0: float) -> float:
    """Normalization constant for unit norm in the physical coordinate rho.

    Since ``dx = sqrt(m0 omega_bar) drho`` the rho-space constant is
    ``C_x * (m0 omega_bar)**(1/4)``.
    """
    if rf.state is None:
        raise InvalidParameters("rho-space normalization needs the originating BoundState")
    return rf.norm_const * (m0 * rf.state.omega_bar) ** 0.25


def count_nodes(rf: RadialFunction, x_max: float | None = None) -> int:
    """Number of sign changes of the polynomial factor on (0, x_max)."""
    poly = np.asarray(rf.poly, dtype=float)
    if x_max is None:
        x_max = cauchy_bound(poly) + 1.0
    return sum(1 for r in real_roots(poly, 0.0, x_max) if 0 < r < x_max and _changes_sign(poly, r))


def _changes_sign(poly, r):
    p = np.polynomial.Polynomial(poly)
    eps = 1e-9 * max(1.0, abs(r))
    return np.sign(p(r - eps)) != np.sign(p(r + eps))


def second_derivative(func, x, h: float):
    """Fourth-order centred stencil for func''(x)."""
    return (
        -func(x + 2 * h) + 16 * func(x + h) - 30 * func(x) + 16 * func(x - h) - func(x - 2 * h)
    ) / (12 * h * h)


def ode_residual(rf: RadialFunction, x, h: float = 5e-4):
    """|phi'' - [gamma(gamma-s)/x^2 + x^2 - A/x - E_bar] phi| at ``x``.

    ``phi''`` comes from the fourth-order finite-difference stencil, so this is
    an independent check of the closed form against the radial equation. The
    default step balances the h**4 truncation error near x = 0.1 (where
    ``x**p`` with p < 1 is steep) against round-off of order eps/h**2.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x - 2 * h <= 0):
        raise InvalidParameters("need x - 2h > 0")
    phi = lambda t: radial_value(rf, t)  # noqa: E731
    g, s = rf.gamma, rf.s
    potential = g * (g - s) / x**2 + x**2 - rf.a_bar / x - rf.eps_bar
    res = np.abs(second_derivative(phi, x, h) - potential * np.asarray(phi(x)))
    return float(res) if res.ndim == 0 else res


def heun_form_residual(rf: RadialFunction, x):
    """Residual of the radial equation obtained through the Heun operator.

    Equals ``C x**p exp(-x**2/2)`` times the biconfluent Heun residual of the
    polynomial factor, which is exact (no finite differences).
    """
    x = np.asarray(x, dtype=float)
    prefactor = rf.norm_const * np.power(x, rf.exponent) * np.exp(-0.5 * x * x)
    return prefactor * bhe_residual(rf.heun_params(), rf.poly, x)


def peak_abs(rf: RadialFunction, points: int = 4001) -> float:
    """max |phi| estimated on a dense grid over [0, tail cutoff]."""
    x = np.linspace(0.0, _tail_cutoff(rf), points)
    return float(np.max(np.abs(radial_value(rf, x))))


def sample(rf: RadialFunction, xs) -> np.ndarray:
    """Rows ``(x, phi, phi**2)``."""
    xs = np.asarray(xs, dtype=float)
    phi = radial_value(rf, xs)
    return np.column_stack([xs, phi, phi * phi])


def export_csv(rf: RadialFunction, xs, stream: IO[str]) -> None:
    """Write ``x,phi,phi_squared`` rows with 17 significant digits."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["x", "phi", "phi_squared"])
    for row in sample(rf, xs):
        writer.writerow([format(v, ".17g") for v in row])
