"""Uniform grids and normalization of function inputs to sampled arrays."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from algorithms.special import check_values

FunctionInput = Callable[[float], float] | Sequence[float] | npt.NDArray[np.float64]


class SampleError(ValueError):
    """Raised when a function input cannot be turned into finite grid samples."""


@dataclass(frozen=True)
class Grid:
    """Uniform partition of [a, b] into n points, endpoints included."""

    a: float
    b: float
    n: int

    def __post_init__(self) -> None:
        check_values(0.0, self.a, self.b, self.n)

    @property
    def h(self) -> float:
        return (self.b - self.a) / (self.n - 1)

    def point(self, index: int) -> float:
        """Grid coordinate a + index*h; index may run past n - 1."""
        return self.a + index * self.h

    def points(self) -> npt.NDArray[np.float64]:
        return self.a + np.arange(self.n, dtype=np.float64) * self.h


@dataclass(frozen=True)
class SampleArray:
    """Function values on a grid; the array is read-only."""

    values: npt.NDArray[np.float64]
    grid: Grid = field(repr=False)

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=np.float64)
        if values.ndim != 1 or values.size != self.grid.n:
            raise SampleError(
                f"expected {self.grid.n} samples, got shape {values.shape}"
            )
        if not np.all(np.isfinite(values)):
            bad = int(np.flatnonzero(~np.isfinite(values))[0])
            raise SampleError(f"sample {bad} is not finite: {values[bad]!r}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def h(self) -> float:
        return self.grid.h


def sample_callable(func: Callable[[float], float], x: float) -> float:
    """Evaluate func at x and insist on a finite real result.

    Arithmetic, value and type errors raised by func become SampleError naming x.
    """
    try:
        value = float(func(x))
    except SampleError:
        raise
    except (ArithmeticError, ValueError, TypeError) as exc:
        raise SampleError(f"function failed at x={x!r}: {exc}") from exc
    if not np.isfinite(value):
        raise SampleError(f"function value at x={x!r} is not finite: {value!r}")
    return value


def function_check(input_: FunctionInput | SampleArray, a: float, b: float, n: int) -> SampleArray:
    """Turn a callable or a sequence into a SampleArray on Grid(a, b, n).

    Callables are evaluated one grid point at a time; sequences are adopted
    as-is and must hold exactly n finite values.
    """
    checked = check_values(0.0, a, b, n)
    grid = Grid(checked.a, checked.b, checked.n)

    if isinstance(input_, SampleArray):
        return SampleArray(values=input_.values, grid=grid)

    if callable(input_):
        values = np.array(
            [sample_callable(input_, float(x)) for x in grid.points()],
            dtype=np.float64,
        )
        return SampleArray(values=values, grid=grid)

    try:
        values = np.asarray(input_, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise SampleError(f"cannot interpret input as real samples: {exc}") from exc
    if values.ndim != 1:
        raise SampleError(f"sample sequence must be one-dimensional, got shape {values.shape}")
    if values.size != grid.n:
        raise SampleError(
            f"sample sequence has length {values.size} but the grid has {grid.n} points"
        )
    return SampleArray(values=values, grid=grid)
