"""Bound states of the (2+1)-dimensional Dirac oscillator in an Aharonov-Bohm-Coulomb
field with a homogeneous magnetic field.

The radial problem reduces to a biconfluent Heun equation whose Frobenius series
must terminate; the two truncation conditions quantize both the energy and the
oscillator frequency. ``quantization`` solves them, ``wavefunction`` builds the
radial profiles and ``oracle`` checks the results against a finite-difference
discretization of the same radial operator.
"""

from .errors import (
    CriticalExponent,
    DegenerateCondition,
    DiracABCError,
    GridTooCoarse,
    ImaginaryEnergy,
    InvalidParameters,
    NegativeEffectiveFrequency,
    NoBoundState,
    QuadratureFailure,
    SeriesNotConverged,
    SupercriticalCoupling,
)
from .heun import (
    CoefficientSeq,
    HeunParams,
    coefficients,
    evaluate_series,
    truncation_polynomial,
    truncation_residual,
)
from .model import (
    BoundState,
    DerivedQuantities,
    QuantumNumbers,
    SystemParams,
    compute_gamma,
    cyclotron_frequency,
    derived_quantities,
    effective_frequency,
    kappa,
)
from .oracle import GridSpec, OracleReport, discretized_eigenvalues, refine_and_extrapolate
from .quantization import (
    SolutionSet,
    SpectrumRequest,
    energy_from_frequency,
    solve,
    solve_first_excited,
    solve_general,
    solve_ground_state,
)
from .wavefunction import (
    RadialFunction,
    count_nodes,
    normalize,
    ode_residual,
    radial_function,
    radial_value,
)

__all__ = [
    "BoundState",
    "CoefficientSeq",
    "CriticalExponent",
    "DegenerateCondition",
    "DerivedQuantities",
    "DiracABCError",
    "GridSpec",
    "GridTooCoarse",
    "HeunParams",
    "ImaginaryEnergy",
    "InvalidParameters",
    "NegativeEffectiveFrequency",
    "NoBoundState",
    "OracleReport",
    "QuadratureFailure",
    "QuantumNumbers",
    "RadialFunction",
    "SeriesNotConverged",
    "SolutionSet",
    "SpectrumRequest",
    "SupercriticalCoupling",
    "SystemParams",
    "coefficients",
    "compute_gamma",
    "count_nodes",
    "cyclotron_frequency",
    "derived_quantities",
    "discretized_eigenvalues",
    "effective_frequency",
    "energy_from_frequency",
    "evaluate_series",
    "kappa",
    "normalize",
    "ode_residual",
    "radial_function",
    "radial_value",
    "refine_and_extrapolate",
    "solve",
    "solve_first_excited",
    "solve_general",
    "solve_ground_state",
    "truncation_polynomial",
    "truncation_residual",
]

__version__ = "0.1.0"
