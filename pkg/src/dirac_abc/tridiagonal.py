"""Lowest eigenpairs of a real symmetric tridiagonal matrix.

Eigenvalues are bracketed by bisection on the Sturm count (the number of
negative pivots of the LDL^T factorization of ``T - sigma I`` equals the number
of eigenvalues below ``sigma``). Each bracket is then polished by inverse
iteration with a fixed shift inside the bracket, and the Rayleigh quotient of
the converged vector gives the eigenvalue to working precision.
"""

from __future__ import annotations

import numpy as np
from scipy.linalg import solve_banded

_TINY = 1e-300


def sturm_count(diag, off_sq, sigma: float) -> int:
    """Number of eigenvalues strictly below ``sigma``.

    ``diag`` has length N, ``off_sq`` holds the N-1 squared off-diagonals.
    Both are plain sequences; the loop is sequential by nature.
    """
    count = 0
    q = diag[0] - sigma
    if q == 0:
        q = -_TINY
    if q < 0:
        count += 1
    for d, b2 in zip(diag[1:], off_sq):
        q = d - sigma - b2 / q
        if q == 0:
            q = -_TINY
        if q < 0:
            count += 1
    return count


def gershgorin_interval(diag, off):
    diag = np.asarray(diag, dtype=float)
    radius = np.zeros_like(diag)
    a = np.abs(np.asarray(off, dtype=float))
    radius[:-1] += a
    radius[1:] += a
    return float(np.min(diag - radius)), float(np.max(diag + radius))


def bisect_lowest(diag, off, k: int, rtol: float = 1e-6) -> list[tuple[float, float]]:
    """Brackets ``[lo, hi]`` around each of the ``k`` lowest eigenvalues.

    Every bracket contains exactly one eigenvalue (counting multiplicity) and
    has width below ``rtol * max(1, |lambda|)``.
    """
    n = len(diag)
    if not 1 <= k <= n:
        raise ValueError(f"k must be in [1, {n}]")
    d = [float(v) for v in diag]
    b2 = [float(v) ** 2 for v in off]
    lo, hi = gershgorin_interval(diag, off)
    # tighten the upper end: find sigma with at least k eigenvalues below
    upper = min(hi, max(lo, 0.0) + 1.0)
    while sturm_count(d, b2, upper) < k and upper < hi:
        upper = min(hi, lo + 2 * (upper - lo))
    hi = np.nextafter(upper, np.inf)

    brackets: list[tuple[float, float] | None] = [None] * k
    # stack of (lo, hi, count_lo, count_hi)
    stack = [(lo, hi, sturm_count(d, b2, lo), sturm_count(d, b2, hi))]
    while stack:
        a, b, ca, cb = stack.pop()
        if ca >= k or cb == ca:
            continue
        width_ok = (b - a) <= rtol * max(1.0, abs(a), abs(b))
        if cb - ca == 1 and width_ok:
            brackets[ca] = (a, b)
            continue
        mid = 0.5 * (a + b)
        if mid == a or mid == b:
            for idx in range(ca, min(cb, k)):
                brackets[idx] = (a, b)
            continue
        cm = sturm_count(d, b2, mid)
        stack.append((mid, b, cm, cb))
        stack.append((a, mid, ca, cm))
    return brackets  # type: ignore[return-value]


def _banded(diag, off, shift):
    ab = np.zeros((3, len(diag)))
    ab[0, 1:] = off
    ab[1] = np.asarray(diag) - shift
    ab[2, :-1] = off
    return ab


def inverse_iteration(diag, off, shift: float, iters: int = 4, seed: int = 0):
    """Eigenvector nearest ``shift`` and its Rayleigh quotient."""
    diag = np.asarray(diag, dtype=float)
    off = np.asarray(off, dtype=float)
    ab = _banded(diag, off, shift)
    v = np.random.default_rng(seed).standard_normal(len(diag))
    v /= np.linalg.norm(v)
    for _ in range(iters):
        w = solve_banded((1, 1), ab, v, check_finite=False)
        v = w / np.linalg.norm(w)
    tv = diag * v
    tv[:-1] += off * v[1:]
    tv[1:] += off * v[:-1]
    return float(v @ tv), v


def lowest_eigenpairs(diag, off, k: int, vectors=None):
    """The ``k`` lowest eigenvalues, ascending, and optionally eigenvectors.

    ``vectors`` is an iterable of indices whose eigenvectors are wanted;
    the result then is ``(values, {index: vector})``.
    """
    brackets = bisect_lowest(diag, off, k)
    wanted = set(vectors or ())
    values = []
    vecs = {}
    for i, (a, b) in enumerate(brackets):
        lam, v = inverse_iteration(diag, off, 0.5 * (a + b))
        # a fixed shift inside an isolating bracket cannot drift to a neighbour,
        # but guard against a degenerate bracket anyway
        if not (a - (b - a) <= lam <= b + (b - a)):
            lam = 0.5 * (a + b)
        values.append(lam)
        if i in wanted:
            vecs[i] = v
    values = np.asarray(values)
    if vectors is None:
        return values
    return values, vecs
