"""Minimal static SVG line plots (axes plus polylines, nothing interactive).

A convenience for eyeballing signals and L-curves without a plotting stack;
the CSV tables remain the canonical output.
"""

from __future__ import annotations

import numpy as np

__all__ = ["write_svg_polyline"]

_WIDTH = 720
_HEIGHT = 420
_MARGIN = 50


def _scale(values: np.ndarray, log: bool):
    if log:
        if np.any(values <= 0):
            raise ValueError("log axis requires strictly positive values")
        values = np.log10(values)
    lo = float(values.min())
    hi = float(values.max())
    if hi == lo:
        hi = lo + 1.0
    return values, lo, hi


def write_svg_polyline(path, x, y, *, log_x=False, log_y=False, title="") -> None:
    """Render y against x as one polyline with boxed axes and range labels."""
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    if x.size != y.size or x.size < 2:
        raise ValueError("need two equally long coordinate vectors with >= 2 points")
    xs, x_lo, x_hi = _scale(x, log_x)
    ys, y_lo, y_hi = _scale(y, log_y)
    inner_w = _WIDTH - 2 * _MARGIN
    inner_h = _HEIGHT - 2 * _MARGIN
    px = _MARGIN + (xs - x_lo) / (x_hi - x_lo) * inner_w
    py = _HEIGHT - _MARGIN - (ys - y_lo) / (y_hi - y_lo) * inner_h
    points = " ".join(f"{a:.2f},{b:.2f}" for a, b in zip(px, py))

    def label(v, log):
        return f"1e{v:.3g}" if log else f"{v:.4g}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}">',
        f'<rect x="{_MARGIN}" y="{_MARGIN}" width="{inner_w}" height="{inner_h}" '
        'fill="white" stroke="black"/>',
        f'<polyline points="{points}" fill="none" stroke="#1f6fb2" stroke-width="1.5"/>',
        f'<text x="{_MARGIN}" y="{_HEIGHT - _MARGIN + 18}" font-size="12">{label(x_lo, log_x)}</text>',
        f'<text x="{_WIDTH - _MARGIN}" y="{_HEIGHT - _MARGIN + 18}" font-size="12" '
        f'text-anchor="end">{label(x_hi, log_x)}</text>',
        f'<text x="{_MARGIN - 6}" y="{_HEIGHT - _MARGIN}" font-size="12" '
        f'text-anchor="end">{label(y_lo, log_y)}</text>',
        f'<text x="{_MARGIN - 6}" y="{_MARGIN + 12}" font-size="12" '
        f'text-anchor="end">{label(y_hi, log_y)}</text>',
    ]
    if title:
        parts.append(
            f'<text x="{_WIDTH / 2}" y="{_MARGIN - 12}" font-size="14" '
            f'text-anchor="middle">{title}</text>'
        )
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts) + "\n")
