"""Real roots of real polynomials without a companion matrix.

Roots of ``p`` are isolated by the real roots of ``p'``: between consecutive
critical points ``p`` is monotone, so each such interval holds at most one
root, located by bisection when the endpoint signs differ. The critical points
come from the same procedure applied to ``p'``, down to degree one.
"""

from __future__ import annotations

import numpy as np


def horner(coeffs, x: float) -> float:
    """Evaluate ascending ``coeffs`` at ``x``."""
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def cauchy_bound(coeffs) -> float:
    """All complex roots satisfy |z| < 1 + max|c_i / c_d|."""
    c = np.trim_zeros(np.asarray(coeffs, dtype=float), "b")
    if len(c) < 2:
        return 0.0
    return 1.0 + float(np.max(np.abs(c[:-1] / c[-1])))


def bisect_root(coeffs, lo: float, hi: float, max_iter: int = 2000) -> float:
    """Bisection to full float resolution on a bracket with a sign change."""
    flo = horner(coeffs, lo)
    if flo == 0:
        return lo
    if horner(coeffs, hi) == 0:
        return hi
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fm = horner(coeffs, mid)
        if fm == 0:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _derivative(coeffs):
    return [k * c for k, c in enumerate(coeffs)][1:]


def real_roots(coeffs, lo: float | None = None, hi: float | None = None) -> list[float]:
    """Sorted real roots of odd multiplicity in ``[lo, hi]``, plus exact zeros.

    ``coeffs`` are ascending. The interval defaults to the Cauchy bound.
    Roots of even multiplicity are reported only if the polynomial evaluates to
    exactly zero at a critical point.
    """
    c = [float(v) for v in np.trim_zeros(np.asarray(coeffs, dtype=float), "b")]
    if len(c) < 2:
        return []
    if lo is None or hi is None:
        bound = cauchy_bound(c)
        lo = -bound if lo is None else lo
        hi = bound if hi is None else hi
    if len(c) == 2:
        r = -c[0] / c[1]
        return [r] if lo <= r <= hi else []

    crit = [r for r in real_roots(_derivative(c), lo, hi) if lo < r < hi]
    points = [lo, *crit, hi]
    found: list[float] = []
    for a, b in zip(points[:-1], points[1:]):
        fa, fb = horner(c, a), horner(c, b)
        if fa == 0:
            found.append(a)
        elif fb != 0 and (fa < 0) != (fb < 0):
            found.append(bisect_root(c, a, b))
    if horner(c, hi) == 0:
        found.append(hi)
    out: list[float] = []
    for r in sorted(found):
        if not out or r != out[-1]:
            out.append(r)
    return out
