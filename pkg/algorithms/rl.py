"""Riemann-Liouville differintegration by piecewise-linear product quadrature.

Row j of the weight matrix holds, for 0 <= k <= j and with e = 1 - alpha,

    k = j            1
    1 <= k <= j-1    (j-k+1)**e + (j-k-1)**e - 2*(j-k)**e
    k = 0            (j-1)**e - (j+alpha-1) * j**(-alpha)

all divided by Gamma(2 - alpha). Row 0 is the diagonal entry alone. The
weights are only defined for alpha < 1, where e > 0 and 0**e = 0.
"""

from __future__ import annotations

import numpy as np
import numpy.typing as npt

from algorithms.grid import FunctionInput, function_check
from algorithms.special import check_rl_order, check_values, gamma, step_scale
from algorithms.triangular import WeightMatrix, apply_lower_triangular


def rl_coeff(alpha: float, k: int, j: int) -> float:
    """Single weight A_{k,j}, already divided by Gamma(2 - alpha)."""
    alpha = check_rl_order(alpha)
    if not 0 <= k <= j:
        raise ValueError(f"weight index requires 0 <= k <= j, got k={k}, j={j}")
    exponent = 1.0 - alpha
    if k == j:
        raw = 1.0
    elif k == 0:
        raw = float(j - 1) ** exponent - (j + alpha - 1.0) * float(j) ** -alpha
    else:
        distance = float(j - k)
        raw = (
            (distance + 1.0) ** exponent + (distance - 1.0) ** exponent - 2.0 * distance**exponent
        )
    return raw / gamma(2.0 - alpha)


def _rl_row(alpha: float, j: int, gamma_value: float) -> npt.NDArray[np.float64]:
    row = np.empty(j + 1, dtype=np.float64)
    row[j] = 1.0
    if j > 0:
        exponent = 1.0 - alpha
        distance = j - np.arange(1, j, dtype=np.float64)
        row[1:j] = (
            (distance + 1.0) ** exponent + (distance - 1.0) ** exponent - 2.0 * distance**exponent
        )
        row[0] = float(j - 1) ** exponent - (j + alpha - 1.0) * float(j) ** -alpha
    return row / gamma_value


def rl_matrix(alpha: float, n: int) -> WeightMatrix:
    """The n x n lower-triangular weight matrix R."""
    alpha = check_rl_order(alpha)
    if n < 1:
        raise ValueError(f"matrix order must be at least 1, got {n}")
    gamma_value = gamma(2.0 - alpha)
    entries = np.zeros((n, n), dtype=np.float64)
    for j in range(n):
        entries[j, : j + 1] = _rl_row(alpha, j, gamma_value)
    entries.setflags(write=False)
    return WeightMatrix(kind="rl", alpha=alpha, n=n, entries=entries)


def rl_array(
    alpha: float, input_: FunctionInput, a: float, b: float, n: int
) -> npt.NDArray[np.float64]:
    """h**(-alpha) * R @ F over every grid point."""
    checked = check_values(alpha, a, b, n)
    check_rl_order(checked.alpha)
    samples = function_check(input_, checked.a, checked.b, checked.n)
    gamma_value = gamma(2.0 - checked.alpha)

    def row(j: int) -> npt.NDArray[np.float64]:
        return _rl_row(checked.alpha, j, gamma_value)

    totals = apply_lower_triangular(row, samples.values)
    return step_scale(samples.h, checked.alpha) * totals


def rl_point(alpha: float, input_: FunctionInput, a: float, b: float, n: int) -> float:
    """RL differintegral at b from the last weight row only, in O(n)."""
    checked = check_values(alpha, a, b, n)
    check_rl_order(checked.alpha)
    samples = function_check(input_, checked.a, checked.b, checked.n)
    last_row = _rl_row(checked.alpha, checked.n - 1, gamma(2.0 - checked.alpha))
    total = np.dot(last_row, samples.values)
    return step_scale(samples.h, checked.alpha) * float(total)
