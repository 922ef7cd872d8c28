"""Core typed models shared by the runner, the formatters and the CLI."""

from __future__ import annotations

import math
from dataclasses import dataclass
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):  # type: ignore[no-redef]
        __str__ = str.__str__
        __format__ = str.__format__
from pathlib import Path

import numpy as np
import numpy.typing as npt


class Algorithm(StrEnum):
    """Differintegration algorithms selectable from the command line."""

    GL_POINT = "gl-point"
    GL = "gl"
    GL_MATRIX = "gl-matrix"
    GL_DIRECT = "gl-direct"
    GLI = "gli"
    RL_POINT = "rl-point"
    RL = "rl"

    @property
    def is_point(self) -> bool:
        return self in {Algorithm.GL_POINT, Algorithm.RL_POINT}


class OutputFormat(StrEnum):
    """Result encodings written to stdout."""

    CSV = "csv"
    JSON = "json"
    PLAIN = "plain"


@dataclass(frozen=True)
class RunConfig:
    """One differintegration request. Exactly one of expr and data_file is set."""

    algorithm: Algorithm
    alpha: float
    domain: tuple[float, float]
    points: int
    expr: str | None = None
    data_file: Path | None = None
    output_format: OutputFormat = OutputFormat.PLAIN

    @property
    def a(self) -> float:
        return self.domain[0]

    @property
    def b(self) -> float:
        return self.domain[1]


@dataclass(frozen=True)
class RunResult:
    """Computed values with the metadata every output format carries.

    Point algorithms hold a single x (the right endpoint) and a single value.
    """

    algorithm: Algorithm
    alpha: float
    points: int
    a: float
    b: float
    h: float
    x: npt.NDArray[np.float64]
    values: npt.NDArray[np.float64]
    endpoint_estimated: bool = False

    @property
    def kind(self) -> str:
        return "point" if self.algorithm.is_point else "array"


@dataclass(frozen=True)
class TableRow:
    """One (function, algorithm) cell of the half-derivative validation table."""

    function: str
    algorithm: str
    computed: float
    exact: float

    @property
    def absolute_error(self) -> float:
        return abs(self.computed - self.exact)

    @property
    def relative_error(self) -> float:
        if self.exact == 0.0:
            return math.inf
        return self.absolute_error / abs(self.exact)


@dataclass(frozen=True)
class BenchmarkReport:
    """Median wall time in seconds of each GL evaluation path."""

    points: int
    repeats: int
    fast_seconds: float
    matrix_seconds: float
    direct_seconds: float

    @property
    def speedup(self) -> float:
        return self.matrix_seconds / self.fast_seconds if self.fast_seconds > 0 else float("inf")
