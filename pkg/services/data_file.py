"""Reader for pre-sampled function values stored one per line."""

from __future__ import annotations

import math
from pathlib import Path


class DataFileError(ValueError):
    """Raised when a data file cannot be read as grid samples."""

    def __init__(self, message: str, *, path: Path, line: int | None = None) -> None:
        self.path = path
        self.line = line
        location = f"{path}:{line}" if line is not None else str(path)
        super().__init__(f"{location}: {message}")


def read_samples(path: Path, expected: int) -> list[float]:
    """Read one decimal sample per line; blank lines and '#' comments are skipped.

    The file must hold exactly `expected` samples, one for each grid point.
    """
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise DataFileError(f"cannot read data file ({exc})", path=path) from exc

    samples: list[float] = []
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        content = raw_line.split("#", 1)[0].strip()
        if not content:
            continue
        try:
            value = float(content)
        except ValueError as exc:
            raise DataFileError(
                f"cannot parse {content!r} as a number", path=path, line=line_number
            ) from exc
        if not math.isfinite(value):
            raise DataFileError(f"sample {content!r} is not finite", path=path, line=line_number)
        if len(samples) == expected:
            raise DataFileError(
                f"more than {expected} samples for the grid", path=path, line=line_number
            )
        samples.append(value)

    if len(samples) < expected:
        raise DataFileError(
            f"expected {expected} samples for the grid but found {len(samples)}", path=path
        )
    return samples
