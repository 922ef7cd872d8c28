"""Deterministic rendering of the validation table through a Jinja template."""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from models import TableRow

TEMPLATES_DIR = Path(__file__).resolve().parent.parent / "templates"
DEFAULT_TEMPLATE_PATH = TEMPLATES_DIR / "validation_table.txt.j2"


class TableRenderer:
    """Render TableRow sequences as a fixed-width text table."""

    def __init__(self, template_path: Path = DEFAULT_TEMPLATE_PATH) -> None:
        self._template_path = template_path
        self._environment = Environment(
            loader=FileSystemLoader(str(template_path.parent)),
            autoescape=False,
            undefined=StrictUndefined,
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )

    def render(
        self, rows: Sequence[TableRow], *, alpha: float, points: int, digits: int = 12
    ) -> str:
        template = self._environment.get_template(self._template_path.name)
        return template.render(
            rows=[_row_cells(row, digits) for row in rows],
            alpha=f"{alpha:g}",
            points=points,
        )


def _row_cells(row: TableRow, digits: int) -> dict[str, str]:
    return {
        "function": row.function,
        "algorithm": row.algorithm,
        "computed": f"{row.computed:.{digits}g}",
        "exact": f"{row.exact:.{digits}g}",
        "absolute_error": f"{row.absolute_error:.6e}",
        "relative_error": f"{row.relative_error:.6e}",
    }


def render_table(
    rows: Sequence[TableRow], digits: int = 12, *, alpha: float = 0.5, points: int = 120
) -> str:
    """Render rows with the bundled template."""
    return TableRenderer().render(rows, alpha=alpha, points=points, digits=digits)
