"""Tests for the improved Grunwald-Letnikov algorithm."""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np
import pytest

from algorithms.gl import gl_coeffs, gl_point
from algorithms.gli import gli_array, gli_evaluate, gli_interpolation_coeffs
from algorithms.grid import function_check
from services.expr import compile_expression

HALF_DERIVATIVE_OF_SQRT_AT_ONE = math.sqrt(math.pi) / 2.0
HALF_DERIVATIVE_OF_EXP_AT_ONE = math.e * math.erf(1.0) + 1.0 / math.sqrt(math.pi)


def _six_step_value(alpha: float, extended: Sequence[float], j: int, h: float) -> float:
    """Literal GLI value at grid index j.

    `extended` holds f_0 .. f_{j+1}; f_{-1} is zero. Each history point j - k
    is interpolated from its three neighbours, weighted by b_k and summed.
    """
    weights = gli_interpolation_coeffs(alpha)
    b = gl_coeffs(alpha, j + 1).coefficients
    padded = [0.0, *extended]  # padded[i + 1] == f_i

    total = 0.0
    for k in range(j + 1):
        centre = j - k
        total += b[k] * (
            weights.prv * padded[centre]
            + weights.crr * padded[centre + 1]
            + weights.nxt * padded[centre + 2]
        )
    return h**-alpha * total


def test_interpolation_coefficient_examples() -> None:
    zero = gli_interpolation_coeffs(0.0)
    assert (zero.prv, zero.crr, zero.nxt) == (0.0, 1.0, 0.0)

    full_step = gli_interpolation_coeffs(2.0)
    assert (full_step.prv, full_step.crr, full_step.nxt) == (0.0, 0.0, 1.0)

    half = gli_interpolation_coeffs(0.5)
    assert (half.prv, half.crr, half.nxt) == (-0.09375, 0.9375, 0.15625)


def test_interpolation_weights_sum_to_one(rng: np.random.Generator) -> None:
    for alpha in rng.uniform(-1.0, 2.0, size=1000):
        weights = gli_interpolation_coeffs(alpha)
        assert abs(weights.prv + weights.crr + weights.nxt - 1.0) <= 1e-14


def test_interpolation_is_exact_on_linear_data(rng: np.random.Generator) -> None:
    h = 0.01
    for alpha in rng.uniform(-1.0, 2.0, size=200):
        weights = gli_interpolation_coeffs(alpha)
        x = 0.37
        shifted = weights.interpolate(x - h, x, x + h)
        assert shifted == pytest.approx(x + alpha / 2.0 * h, abs=1e-14)


def test_zero_order_reproduces_sequence_input(rng: np.random.Generator) -> None:
    for _ in range(100):
        values = rng.standard_normal(50)

        result = gli_evaluate(0.0, values, 0.0, 1.0, 50)

        np.testing.assert_allclose(result.values, values, atol=1e-12)
        assert result.endpoint_estimated is False


def test_half_derivative_of_sqrt() -> None:
    result = gli_evaluate(0.5, math.sqrt, 0.0, 1.0, 120)

    assert result.endpoint_estimated is False
    assert result.values[-1] == pytest.approx(HALF_DERIVATIVE_OF_SQRT_AT_ONE, abs=5e-4)


def test_half_derivative_of_exp() -> None:
    value = gli_array(0.5, math.exp, 0.0, 1.0, 120)[-1]

    assert value == pytest.approx(HALF_DERIVATIVE_OF_EXP_AT_ONE, abs=5e-2)


def test_callable_endpoint_matches_six_step_transcription() -> None:
    n = 120
    h = 1.0 / (n - 1)
    extended = [math.sqrt(i * h) for i in range(n + 1)]

    result = gli_array(0.5, math.sqrt, 0.0, 1.0, n)

    assert result[-1] == pytest.approx(_six_step_value(0.5, extended, n - 1, h), rel=1e-12)


@pytest.mark.parametrize("alpha", [-0.7, 0.3, 1.4])
def test_sequence_interior_matches_six_step_transcription(
    rng: np.random.Generator, alpha: float
) -> None:
    n = 40
    h = 2.0 / (n - 1)
    values = rng.standard_normal(n)

    result = gli_array(alpha, values, 0.0, 2.0, n)

    for j in (0, 1, n // 2, n - 2):
        expected = _six_step_value(alpha, values[: j + 2], j, h)
        assert result[j] == pytest.approx(expected, rel=1e-10, abs=1e-12)


def test_sequence_input_estimates_the_right_endpoint() -> None:
    values = [math.exp(x) for x in np.linspace(0.0, 1.0, 120)]

    result = gli_evaluate(0.5, values, 0.0, 1.0, 120)

    assert result.endpoint_estimated is True
    assert result.values[-1] == result.values[-2]


def test_callable_undefined_past_b_falls_back_to_estimate() -> None:
    func = compile_expression("sqrt(1 - x)")
    sampled = gli_evaluate(0.5, function_check(func, 0.0, 1.0, 50).values, 0.0, 1.0, 50)

    result = gli_evaluate(0.5, func, 0.0, 1.0, 50)

    assert result.endpoint_estimated is True
    assert np.all(np.isfinite(result.values))
    assert result.values[-1] == result.values[-2]
    np.testing.assert_array_equal(result.values, sampled.values)


def test_callable_raising_past_b_falls_back_to_estimate() -> None:
    result = gli_evaluate(0.5, lambda x: math.sqrt(1.01 - x), 0.0, 1.0, 20)

    assert result.endpoint_estimated is True
    assert result.values[-1] == result.values[-2]


def test_callable_valid_past_b_is_not_estimated() -> None:
    assert gli_evaluate(0.5, math.exp, 0.0, 1.0, 50).endpoint_estimated is False


def test_sequence_input_needs_no_estimate_when_next_weight_vanishes() -> None:
    values = np.linspace(1.0, 2.0, 16)

    result = gli_evaluate(-2.0, values, 0.0, 1.0, 16)

    assert result.endpoint_estimated is False
    assert result.values[-1] != result.values[-2]


def test_gli_beats_gl_for_sqrt() -> None:
    gli_error = abs(gli_array(0.5, math.sqrt, 0.0, 1.0, 120)[-1] - HALF_DERIVATIVE_OF_SQRT_AT_ONE)
    gl_error = abs(gl_point(0.5, math.sqrt, 0.0, 1.0, 120) - HALF_DERIVATIVE_OF_SQRT_AT_ONE)

    assert gli_error <= gl_error
