"""Grunwald-Letnikov differintegration.

The coefficient filter b_k = (-alpha)_k / k! drives every evaluation path:
a single point at the right endpoint, the lower-triangular Toeplitz matrix,
the direct discrete convolution, and the transform-based fast convolution.
All paths share the h**(-alpha) scaling and sum k = 0..j at grid index j.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from algorithms import fastconv
from algorithms.grid import FunctionInput, SampleArray, function_check
from algorithms.special import check_values, step_scale
from algorithms.triangular import WeightMatrix, apply_lower_triangular

DENSE_MATRIX_LIMIT = 1024


@dataclass(frozen=True)
class CoefficientFilter:
    """GL binomial coefficients b_0..b_{m-1} for one order."""

    alpha: float
    coefficients: npt.NDArray[np.float64]

    def __len__(self) -> int:
        return int(self.coefficients.size)


def gl_coeffs(alpha: float, m: int) -> CoefficientFilter:
    """Build b_0..b_{m-1} with b_k = b_{k-1} * (k - 1 - alpha) / k."""
    if m < 1:
        raise ValueError(f"filter length must be at least 1, got {m}")
    k = np.arange(1, m, dtype=np.float64)
    coefficients = np.empty(m, dtype=np.float64)
    coefficients[0] = 1.0
    coefficients[1:] = np.cumprod((k - 1.0 - alpha) / k)
    coefficients.setflags(write=False)
    return CoefficientFilter(alpha=float(alpha), coefficients=coefficients)


def gl_matrix(alpha: float, n: int) -> WeightMatrix:
    """Dense Toeplitz matrix T[j][k] = b_{j-k} for k <= j, zero above the diagonal."""
    coefficients = gl_coeffs(alpha, n).coefficients
    rows = np.arange(n)[:, None]
    cols = np.arange(n)[None, :]
    lag = rows - cols
    entries = np.where(lag >= 0, coefficients[np.clip(lag, 0, n - 1)], 0.0)
    entries.setflags(write=False)
    return WeightMatrix(kind="gl", alpha=float(alpha), n=n, entries=entries)


def _reversed_coefficients(alpha: float, n: int) -> npt.NDArray[np.float64]:
    return np.ascontiguousarray(gl_coeffs(alpha, n).coefficients[::-1])


def gl_point(alpha: float, input_: FunctionInput, a: float, b: float, n: int) -> float:
    """GL differintegral at the right endpoint b."""
    checked = check_values(alpha, a, b, n)
    samples = function_check(input_, checked.a, checked.b, checked.n)
    reversed_coefficients = _reversed_coefficients(checked.alpha, checked.n)
    total = np.dot(reversed_coefficients, samples.values)
    return step_scale(samples.h, checked.alpha) * float(total)


def gl_matrix_apply(
    alpha: float,
    samples: SampleArray,
    *,
    dense_limit: int = DENSE_MATRIX_LIMIT,
) -> npt.NDArray[np.float64]:
    """Apply the GL Toeplitz matrix to a sample array.

    Up to dense_limit points the matrix is materialized; above it the rows are
    read straight from the reversed filter, which is the same arithmetic in
    O(n) memory.
    """
    check_values(alpha, samples.grid.a, samples.grid.b, samples.grid.n)
    n = samples.grid.n
    if n <= dense_limit:
        entries = gl_matrix(alpha, n).entries

        def row(j: int) -> npt.NDArray[np.float64]:
            return entries[j, : j + 1]

    else:
        reversed_coefficients = _reversed_coefficients(alpha, n)

        def row(j: int) -> npt.NDArray[np.float64]:
            return reversed_coefficients[n - 1 - j :]

    totals = apply_lower_triangular(row, samples.values)
    return step_scale(samples.h, alpha) * totals


def gl_array_matrix(
    alpha: float,
    input_: FunctionInput,
    a: float,
    b: float,
    n: int,
    *,
    dense_limit: int = DENSE_MATRIX_LIMIT,
) -> npt.NDArray[np.float64]:
    checked = check_values(alpha, a, b, n)
    samples = function_check(input_, checked.a, checked.b, checked.n)
    return gl_matrix_apply(checked.alpha, samples, dense_limit=dense_limit)


def gl_array_direct(
    alpha: float, input_: FunctionInput, a: float, b: float, n: int
) -> npt.NDArray[np.float64]:
    """GL array via the O(n^2) discrete convolution h**(-alpha) (f * D)."""
    checked = check_values(alpha, a, b, n)
    samples = function_check(input_, checked.a, checked.b, checked.n)
    coefficients = gl_coeffs(checked.alpha, checked.n).coefficients
    totals = np.convolve(samples.values, coefficients)[: checked.n]
    return step_scale(samples.h, checked.alpha) * totals


def gl_array_fast(
    alpha: float, input_: FunctionInput, a: float, b: float, n: int
) -> npt.NDArray[np.float64]:
    """GL array via the power-of-two transform convolution, O(n log n)."""
    checked = check_values(alpha, a, b, n)
    samples = function_check(input_, checked.a, checked.b, checked.n)
    coefficients = gl_coeffs(checked.alpha, checked.n).coefficients
    totals = fastconv.convolve(samples.values, coefficients)
    return step_scale(samples.h, checked.alpha) * totals
