"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`DiracABCError`,
so callers (and the command-line front end) can catch them in one place.
"""

from __future__ import annotations


class DiracABCError(Exception):
    """Base class for all package errors."""


class InvalidParameters(DiracABCError, ValueError):
    """A parameter violates its documented domain (m0 <= 0, B < 0, ...)."""


class NegativeEffectiveFrequency(InvalidParameters):
    """omega - omega_c/2 < 0 for a supplied oscillator frequency."""


class SupercriticalCoupling(InvalidParameters):
    """(m_l + |e| Phi_AB)^2 < Z^2 |e|^4, so gamma would be imaginary."""


class ImaginaryEnergy(DiracABCError):
    """m0^2 + 2 m0 omega_bar kappa < 0: no real energy on this branch."""


class NoBoundState(DiracABCError):
    """No normalizable polynomial solution exists for the requested labels."""


class CriticalExponent(NoBoundState):
    """gamma = 0 with s = +1: the radial function cannot vanish at the origin."""


class DegenerateCondition(DiracABCError):
    """Z = 0, so the truncation condition a_{n+1} = 0 no longer fixes omega."""


class SeriesNotConverged(DiracABCError):
    """The Frobenius series did not reach the requested tolerance."""


class QuadratureFailure(DiracABCError):
    """Adaptive quadrature could not meet the requested accuracy."""


class GridTooCoarse(DiracABCError):
    """The finite-difference grid does not resolve the state."""
