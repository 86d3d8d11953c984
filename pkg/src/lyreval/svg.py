"""Dependency-free SVG heatmaps for matrices and cross-scape grids.

The color scale is a fixed linear map over [0, vmax] (vmax = 2.0 for
dissimilarity matrices, 1.0 for similarity matrices and grids), so plots
of different songs and languages are directly comparable. Every cell
carries its exact value in a ``data-value`` attribute.
"""

from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape

CELL = 40
PAD = 4

# Linear ramp: 0 -> near-white, vmax -> dark blue.
_LOW = (247, 251, 255)
_HIGH = (8, 48, 107)


def _color(value: float, vmax: float) -> str:
    t = 0.0 if vmax <= 0 else min(max(value / vmax, 0.0), 1.0)
    r, g, b = (round(lo + (hi - lo) * t) for lo, hi in zip(_LOW, _HIGH))
    return f"rgb({r},{g},{b})"


def _svg(width: int, height: int, body: list[str], title: str | None) -> str:
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    if title:
        parts.append(f"<title>{escape(title)}</title>")
    parts.extend(body)
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def matrix_svg(
    entries: Sequence[Sequence[float]],
    *,
    vmax: float,
    title: str | None = None,
) -> str:
    rows = len(entries)
    cols = len(entries[0]) if rows else 0
    body = []
    for i, row in enumerate(entries):
        for j, value in enumerate(row):
            x = PAD + j * CELL
            y = PAD + i * CELL
            body.append(
                f'<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" '
                f'fill="{_color(value, vmax)}" stroke="white" stroke-width="1" '
                f'data-row="{i}" data-col="{j}" data-value="{value!r}"/>'
            )
    return _svg(PAD * 2 + cols * CELL, PAD * 2 + rows * CELL, body, title)


def cross_scape_svg(levels: Sequence[Sequence[float]], *, title: str | None = None) -> str:
    """Triangular grid: level 1 (single lines) at the bottom, apex at the top."""
    n = len(levels)
    body = []
    for k, row in enumerate(levels, start=1):
        y = PAD + (n - k) * CELL
        offset = (k - 1) * CELL / 2
        for i, value in enumerate(row):
            x = PAD + offset + i * CELL
            body.append(
                f'<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" '
                f'fill="{_color(value, 1.0)}" stroke="white" stroke-width="1" '
                f'data-level="{k}" data-start="{i}" data-value="{value!r}"/>'
            )
    return _svg(PAD * 2 + n * CELL, PAD * 2 + n * CELL, body, title)
