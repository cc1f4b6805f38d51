"""Frobenius expansion of the biconfluent Heun equation at the origin.

The polynomial factor ``f`` of the radial function satisfies::

    f'' + (delta/x - 2x) f' + (eps + A/x) f = 0

with the power series ``f = sum_k a_k x**k``, ``a_0 = 1`` and::

    a_1     = -A / delta
    a_{k+2} = [-A a_{k+1} + (2k - eps) a_k] / ((k + 2)(k + 1 + delta))

The series terminates at degree n exactly when ``eps = 2n`` and ``a_{n+1} = 0``.
In Ronveaux's notation this is H_B(delta - 1, 0, delta + 1 + eps, 2A, -x); the
notation is only a label here, the series above is the definition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InvalidParameters, SeriesNotConverged


@dataclass(frozen=True)
class HeunParams:
    a_bar: float
    delta: float
    eps: float

    def __post_init__(self):
        if not self.delta > 0:
            raise InvalidParameters(f"delta must be > 0, got {self.delta}")


@dataclass(frozen=True)
class CoefficientSeq:
    coeffs: tuple[float, ...]
    params: HeunParams

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=float)


def _recurrence(a_bar, delta, eps, count, one):
    a = [one]
    if count >= 1:
        a.append(-a_bar / delta)
    if count >= 2:
        # same value as the k = 0 step, but one rounding less when a_bar**2 ~ delta*eps
        a.append((a_bar * a_bar - delta * eps) / (2 * delta * (1 + delta)))
    for k in range(1, count - 1):
        a.append((-a_bar * a[k + 1] + (2 * k - eps) * a[k]) / ((k + 2) * (k + 1 + delta)))
    return a


def coefficients(params: HeunParams, count: int, exact: bool = False) -> CoefficientSeq:
    """Return a_0..a_count of the Frobenius series.

    Parameters
    ----------
    params : HeunParams
    count : int
        Highest index to compute.
    exact : bool
        Run the recurrence in rational arithmetic on the exact binary values of
        the inputs and round once at the end. Useful for long sequences, where
        the mixed-sign two-term recurrence loses digits to cancellation.
    """
    if count < 0:
        raise InvalidParameters("count must be >= 0")
    if exact:
        raw = _recurrence(
            Fraction(params.a_bar), Fraction(params.delta), Fraction(params.eps), count, Fraction(1)
        )
        coeffs = tuple(float(c) for c in raw)
    else:
        coeffs = tuple(
            _recurrence(float(params.a_bar), float(params.delta), float(params.eps), count, 1.0)
        )
    return CoefficientSeq(coeffs, params)


def truncation_residual(n: int, a_bar: float, delta: float) -> float:
    """a_{n+1} evaluated at eps = 2n; zero iff a degree-n polynomial solution exists."""
    if n < 1:
        raise InvalidParameters("n must be >= 1")
    return coefficients(HeunParams(a_bar, delta, 2 * n), n + 1)[n + 1]


def truncation_polynomial(n: int, delta: float) -> np.ndarray:
    """Coefficients (ascending powers of A) of a_{n+1}(A) at eps = 2n.

    The recurrence is run with A kept symbolic: each a_k is a polynomial of
    degree k in A with the parity of k. Arithmetic is rational on the exact
    value of ``delta``, so the only rounding is the final conversion.
    """
    if n < 1:
        raise InvalidParameters("n must be >= 1")
    d = Fraction(delta)
    eps = 2 * n
    polys: list[list[Fraction]] = [[Fraction(1)], [Fraction(0), -1 / d]]
    for k in range(n):
        p1, p0 = polys[k + 1], polys[k]
        nxt = [Fraction(0)] * (len(p1) + 1)
        for i, c in enumerate(p1):
            nxt[i + 1] -= c
        for i, c in enumerate(p0):
            nxt[i] += (2 * k - eps) * c
        denom = (k + 2) * (k + 1 + d)
        polys.append([c / denom for c in nxt])
    return np.array([float(c) for c in polys[n + 1]])


def _polynomial_degree(params: HeunParams, poly_tol: float) -> int | None:
    n = params.eps / 2
    if n < 1 or n != int(n):
        return None
    n = int(n)
    a = coefficients(params, n + 1).coeffs
    scale = max(abs(c) for c in a[: n + 1])
    if abs(a[n + 1]) <= poly_tol * scale:
        return n
    return None


def evaluate_series(
    params: HeunParams,
    x: float,
    tol: float = 1e-15,
    max_terms: int = 2000,
    poly_tol: float = 1e-12,
) -> float:
    """Sum the Frobenius series at ``x``.

    If ``eps = 2n`` and ``|a_{n+1}|`` is below ``poly_tol`` relative to the
    lower coefficients, the exact degree-n polynomial is returned. Otherwise
    terms are added until three consecutive relative increments fall below
    ``tol`` (a single small term can be an accidental parity zero).

    Raises
    ------
    SeriesNotConverged
        If ``max_terms`` terms do not meet ``tol``.
    """
    if x < 0:
        raise InvalidParameters("x must be >= 0")
    if tol <= 0:
        raise InvalidParameters("tol must be > 0")
    if x == 0:
        return 1.0

    degree = _polynomial_degree(params, poly_tol)
    if degree is not None:
        a = coefficients(params, degree).coeffs
        return float(np.polynomial.polynomial.polyval(x, a))

    a_bar, delta, eps = params.a_bar, params.delta, params.eps
    a_prev, a_cur = 1.0, -a_bar / delta
    total = 1.0
    xk = x
    quiet = 0
    for k in range(1, max_terms):
        term = a_cur * xk
        total += term
        if not math.isfinite(total):
            break
        if abs(term) <= tol * abs(total):
            quiet += 1
            if quiet >= 3:
                return total
        else:
            quiet = 0
        # a_{k+1} from a_k, a_{k-1}
        j = k - 1
        a_prev, a_cur = a_cur, (-a_bar * a_cur + (2 * j - eps) * a_prev) / ((j + 2) * (j + 1 + delta))
        xk *= x
    raise SeriesNotConverged(f"series at x={x} did not converge within {max_terms} terms")


def bhe_residual(params: HeunParams, coeffs, x):
    """Pointwise residual f'' + (delta/x - 2x) f' + (eps + A/x) f of a polynomial ``f``.

    ``coeffs`` are ascending polynomial coefficients; derivatives are exact.
    """
    P = np.polynomial.Polynomial(np.asarray(coeffs, dtype=float))
    x = np.asarray(x, dtype=float)
    d1, d2 = P.deriv(1), P.deriv(2)
    return (
        d2(x)
        + (params.delta / x - 2 * x) * d1(x)
        + (params.eps + params.a_bar / x) * P(x)
    )
