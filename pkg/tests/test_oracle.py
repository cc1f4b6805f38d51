import json
import math

import numpy as np
import pytest

from dirac_abc import (
    GridSpec,
    GridTooCoarse,
    HeunParams,
    InvalidParameters,
    QuantumNumbers,
    RadialFunction,
    coefficients,
    count_nodes,
    discretized_eigenvalues,
    radial_function,
    refine_and_extrapolate,
    solve_first_excited,
    solve_general,
    solve_ground_state,
)
from dirac_abc.oracle import boundary_bias, richardson


def _free_oscillator(n=2):
    # gamma = 1/2, s = -1, A = 0: gamma(gamma - s) = 3/4 = l(l+1) with l = 1/2
    poly = coefficients(HeunParams(0.0, 3.0, 2 * n), n).coeffs
    return RadialFunction(0.5, -1, n, 0.0, poly)


def test_free_oscillator_ladder():
    report = discretized_eigenvalues(_free_oscillator(), GridSpec(points=4000), k=3)
    assert report.eigenvalues == pytest.approx([4.0, 8.0, 12.0], abs=1e-4)
    assert report.matched_index == 1 and report.verified
    assert report.overlap > 1 - 1e-6


def test_second_order_convergence():
    rf = _free_oscillator()
    errors = [discretized_eigenvalues(rf, GridSpec(points=p)).eigenvalue_error for p in (2000, 3999)]
    assert 3.5 < errors[0] / errors[1] < 4.5


@pytest.mark.parametrize("n", [1, 2])
def test_matched_index_equals_node_count(running_params, n):
    solver = solve_ground_state if n == 1 else solve_first_excited
    for state in solver(running_params, 0.5, -1):
        rf = radial_function(state)
        report = discretized_eigenvalues(rf, GridSpec(points=4000))
        assert report.verified
        assert report.matched_index == count_nodes(rf)
        assert report.eigenvalue_error < 1e-3


def test_refined_value_converges(running_params):
    state = solve_general(running_params, QuantumNumbers(3, 0.5, -1))[0]
    coarse = discretized_eigenvalues(state, GridSpec(points=8000)).eigenvalue_error
    extrapolated = refine_and_extrapolate(state)
    assert abs(extrapolated - radial_function(state).eps_bar) < coarse / 10


def test_small_exponent_is_flagged(running_params):
    # s = +1, gamma < 1/2: Dirichlet data selects the other Frobenius branch
    state = solve_ground_state(running_params, 0.5, 1, branch=1)[0]
    rf = radial_function(state)
    assert boundary_bias(rf, 1e-4) == math.inf
    report = discretized_eigenvalues(state, GridSpec(points=2000))
    assert not report.verified
    assert json.loads(report.to_json())["boundary_bias"] is None


def test_coarse_grid_rejected():
    with pytest.raises(GridTooCoarse):
        discretized_eigenvalues(_free_oscillator(), GridSpec(points=200))
    with pytest.raises(InvalidParameters):
        GridSpec(points=50)


def test_richardson_fixed_point_and_exactness():
    assert richardson(2.5, 2.5) == 2.5
    # errors c h^2 and c h^2 / 4 around 7
    assert richardson(7.0 + 0.4, 7.0 + 0.1) == pytest.approx(7.0, abs=1e-15)


def test_report_json_keys():
    report = discretized_eigenvalues(_free_oscillator(), GridSpec(points=1000))
    data = json.loads(report.to_json())
    assert set(data) == {
        "eigenvalues", "matched_index", "eigenvalue_error", "overlap", "residual_max",
        "grid", "target", "boundary_bias", "status",
    }
    assert data["grid"] == {"x_min": 1e-4, "x_max": 12.0, "points": 1000}
    assert np.isfinite(data["boundary_bias"])


def test_free_oscillator_extrapolation():
    assert refine_and_extrapolate(_free_oscillator()) == pytest.approx(8.0, abs=1e-6)


def test_richardson_gain_on_second_level(running_params):
    state = solve_first_excited(running_params, 0.5, -1, branch=1)[0]
    fine = discretized_eigenvalues(state, GridSpec(points=8000).refined()).eigenvalue_error
    extrapolated = refine_and_extrapolate(state)
    assert abs(extrapolated - radial_function(state).eps_bar) * 3 <= fine
