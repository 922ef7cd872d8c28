"""Improved Grunwald-Letnikov differintegration.

The GL sum is evaluated at the half-shifted points x_j + alpha*h/2 - k*h, with
each shifted value approximated by 3-point Lagrange interpolation over
f_{j-1}, f_j, f_{j+1}. By linearity this is three GL convolution sums sharing
one filter, taken over the previous, current and next sample streams.

Boundaries: f_{-1} is taken as zero. f_n, one point past b, is evaluated
directly when the input is callable. Pre-sampled input has no f_n, and neither
does a callable that fails there (sqrt(1 - x) on [0, 1]); the last entry is
then estimated from the one before it. GLIResult.endpoint_estimated records
when that happened.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, overload

import numpy as np
import numpy.typing as npt

from algorithms.gl import gl_coeffs
from algorithms.grid import FunctionInput, SampleError, function_check, sample_callable
from algorithms.special import check_values, step_scale


@dataclass(frozen=True)
class InterpolationCoefficients:
    """Weights of f_{j-1}, f_j, f_{j+1} for the value at j + alpha/2."""

    prv: float
    crr: float
    nxt: float

    @overload
    def interpolate(self, previous: float, current: float, following: float) -> float: ...

    @overload
    def interpolate(
        self,
        previous: npt.NDArray[np.float64],
        current: npt.NDArray[np.float64],
        following: npt.NDArray[np.float64],
    ) -> npt.NDArray[np.float64]: ...

    def interpolate(self, previous: Any, current: Any, following: Any) -> Any:
        return self.prv * previous + self.crr * current + self.nxt * following


@dataclass(frozen=True)
class GLIResult:
    values: npt.NDArray[np.float64]
    endpoint_estimated: bool


def gli_interpolation_coeffs(alpha: float) -> InterpolationCoefficients:
    alpha = float(alpha)
    return InterpolationCoefficients(
        prv=alpha**2 / 8.0 - alpha / 4.0,
        crr=1.0 - alpha**2 / 4.0,
        nxt=alpha / 4.0 + alpha**2 / 8.0,
    )


def _sample_past_b(input_: FunctionInput, x: float) -> float | None:
    if not callable(input_):
        return None
    try:
        return sample_callable(input_, x)
    except SampleError:
        return None


def gli_evaluate(alpha: float, input_: FunctionInput, a: float, b: float, n: int) -> GLIResult:
    """GLI differintegral at every grid point, with the endpoint policy flag."""
    checked = check_values(alpha, a, b, n)
    samples = function_check(input_, checked.a, checked.b, checked.n)
    values = samples.values
    size = checked.n
    weights = gli_interpolation_coeffs(checked.alpha)
    coefficients = gl_coeffs(checked.alpha, size).coefficients

    # The next stream needs f_n only when its weight is non-zero.
    beyond: float | None = 0.0
    if weights.nxt != 0.0:
        beyond = _sample_past_b(input_, samples.grid.point(size))
    estimated = beyond is None

    previous = np.concatenate(([0.0], values[:-1]))
    following = np.concatenate((values[1:], [beyond or 0.0]))

    def history_sum(stream: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
        return np.convolve(stream, coefficients)[:size]

    totals = weights.interpolate(
        history_sum(previous), history_sum(values), history_sum(following)
    )
    result = step_scale(samples.h, checked.alpha) * totals
    if estimated:
        # check_values guarantees n >= 2, so entry n - 2 always exists.
        result[-1] = result[-2]
    return GLIResult(values=result, endpoint_estimated=estimated)


def gli_array(
    alpha: float, input_: FunctionInput, a: float, b: float, n: int
) -> npt.NDArray[np.float64]:
    return gli_evaluate(alpha, input_, a, b, n).values
