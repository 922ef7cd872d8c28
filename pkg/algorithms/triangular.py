"""Lower-triangular weight matrices and their row-wise application."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

RowProvider = Callable[[int], npt.NDArray[np.float64]]


@dataclass(frozen=True)
class WeightMatrix:
    """Dense lower-triangular weight matrix, unscaled by the step size."""

    kind: str
    alpha: float
    n: int
    entries: npt.NDArray[np.float64]


def apply_lower_triangular(
    row: RowProvider, values: npt.NDArray[np.float64]
) -> npt.NDArray[np.float64]:
    """Return out[j] = dot(row(j), values[:j+1]) for every j.

    row(j) must be a contiguous array of length j + 1 holding the non-zero part
    of matrix row j. Point evaluations call np.dot on the same row and the same
    samples, so they reproduce the last entry bit for bit.
    """
    out = np.empty(values.size, dtype=np.float64)
    for j in range(values.size):
        out[j] = np.dot(row(j), values[: j + 1])
    return out
