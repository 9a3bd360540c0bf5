"""Static SVG picture of the normalized flag configuration.

Points are drawn in the affine chart X+Y+Z = 1, i.e. [X:Y:Z] is placed at
(X/(X+Y+Z), Y/(X+Y+Z)).  On the valid domain every drawn point has a
positive coordinate sum (the dictionary forces b1, c2, a2, b3 > 1 and
a3, c1, x > 0), so the chart never clips; a guard raises ChartFailure if a
coordinate sum is numerically zero anyway.
"""

from __future__ import annotations

import numpy as np

from .errors import ChartFailure
from .flags import PantsFlagConfig

CHART_TOL = 1e-9

_FILLS = ("#d7e5f4", "#fbe3c9", "#d9efd7", "#f3d9e8")
_EDGE = "#444444"
_LINE_COLOR = "#8a1f1f"


def chart_point(v) -> tuple[float, float]:
    """Affine coordinates of [X:Y:Z] in the chart X+Y+Z = 1."""
    arr = np.asarray(v, dtype=float)
    total = float(arr.sum())
    if abs(total) < CHART_TOL:
        raise ChartFailure(f"point {arr.tolist()!r} has coordinate sum {total!r}")
    return (float(arr[0]) / total, float(arr[1]) / total)


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def _label(v) -> str:
    return "[" + ", ".join(_fmt(float(c)) for c in np.asarray(v, dtype=float)) + "]"


def render_config_svg(config: PantsFlagConfig, *, width: int = 640) -> str:
    """SVG document showing the four triangles and the three flag lines."""
    p = [pt for pt in config.inner_points]
    q = [op.coords for op in config.outer_points]
    meets = config.intersection_points

    charted = {}
    for name, vec in (
        ("p1", p[0]), ("p2", p[1]), ("p3", p[2]),
        ("q1", q[0]), ("q2", q[1]), ("q3", q[2]),
        ("m13", meets[0]), ("m12", meets[1]), ("m23", meets[2]),
    ):
        charted[name] = chart_point(vec)

    triangles = [
        ("p1", "p2", "p3"),          # upper triangle
        ("p2", "p3", "q1"),          # lower triangle across B_1
        ("p3", "p1", "q2"),          # across B_2
        ("p1", "p2", "q3"),          # across B_3
    ]
    # each flag line through inner vertex i also passes through two meets
    flag_lines = [("p1", "m13", "m12"), ("p2", "m12", "m23"), ("p3", "m13", "m23")]

    xs = [pt[0] for pt in charted.values()]
    ys = [pt[1] for pt in charted.values()]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-6)
    margin = 0.18 * span
    lo_x, hi_x = min(xs) - margin, max(xs) + margin
    lo_y, hi_y = min(ys) - margin, max(ys) + margin
    scale = width / (hi_x - lo_x)
    height = int(round((hi_y - lo_y) * scale))

    def to_px(pt):
        # svg y grows downwards
        return ((pt[0] - lo_x) * scale, (hi_y - pt[1]) * scale)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" style="background:#ffffff">',
    ]
    for fill, names in zip(_FILLS, triangles):
        pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in (to_px(charted[n]) for n in names))
        parts.append(
            f'<polygon points="{pts}" fill="{fill}" fill-opacity="0.85" '
            f'stroke="{_EDGE}" stroke-width="1"/>'
        )
    for names in flag_lines:
        pts = np.array([charted[n] for n in names])
        center = pts.mean(axis=0)
        direction = pts[-1] - pts[0]
        norm = float(np.hypot(*direction))
        if norm < 1e-12:
            direction = np.array([1.0, 0.0])
            norm = 1.0
        direction = direction / norm
        reach = 0.75 * span
        a = to_px(center - reach * direction)
        b = to_px(center + reach * direction)
        parts.append(
            f'<line x1="{a[0]:.2f}" y1="{a[1]:.2f}" x2="{b[0]:.2f}" y2="{b[1]:.2f}" '
            f'stroke="{_LINE_COLOR}" stroke-width="1.2" stroke-dasharray="6 3"/>'
        )
    labelled = [
        ("p1", p[0]), ("p2", p[1]), ("p3", p[2]),
        ("q1", q[0]), ("q2", q[1]), ("q3", q[2]),
    ]
    for name, vec in labelled:
        x, y = to_px(charted[name])
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="#111111"/>')
        parts.append(
            f'<text x="{x + 6:.2f}" y="{y - 6:.2f}" font-family="monospace" '
            f'font-size="12" fill="#111111">{_label(vec)}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
