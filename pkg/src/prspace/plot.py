"""Deterministic SVG rendering of PR curves.

Every plot carries the minimum PR curve, with the unachievable region beneath
it shaded, for each distinct skew drawn. There is deliberately no option to
turn that overlay off.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence
from xml.sax.saxutils import escape

import numpy as np

from .bounds import RecallRange, aucpr_min_range, min_precision, recall_grid
from .core import as_skew
from .curves import PRCurve, aucpr
from .errors import DomainError

__all__ = ["PlotSpec", "render_svg", "distinct_skews"]

_CURVE_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")
_REGION_COLORS = ("#7f7f7f", "#bcbd22", "#17becf", "#e377c2", "#8c564b", "#ff7f0e")


@dataclass
class PlotSpec:
    curves: Sequence[tuple[str, PRCurve]] = ()
    skews: Sequence[float] | None = None
    recall_range: RecallRange = field(default_factory=RecallRange)
    width: int = 800
    height: int = 600
    title: str | None = None


def distinct_skews(values, digits: int = 12) -> list[float]:
    """Unique skews in first-seen order, merged when equal to ``digits`` places."""
    seen: dict[float, float] = {}
    for v in values:
        seen.setdefault(round(as_skew(v), digits), as_skew(v))
    return list(seen.values())


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _label(x: float) -> str:
    return f"{x:.6g}"


def render_svg(spec: PlotSpec) -> str:
    """Render ``spec`` as an SVG 1.1 document string."""
    rr = RecallRange.coerce(spec.recall_range)
    skews = distinct_skews(spec.skews if spec.skews else [c.skew for _, c in spec.curves])
    if not skews:
        raise DomainError("nothing to plot: give at least one curve or skew")
    w, h = spec.width, spec.height
    left, right, top, bottom = 70.0, 20.0, 40.0, 60.0
    pw, ph = w - left - right, h - top - bottom

    def sx(r):
        return left + (np.asarray(r) - rr.lo) / rr.width * pw

    def sy(p):
        return top + (1.0 - np.asarray(p)) * ph

    def path(rs, ps):
        xs, ys = sx(rs), sy(ps)
        return " ".join(f"{'M' if i == 0 else 'L'}{_fmt(x)},{_fmt(y)}" for i, (x, y) in enumerate(zip(xs, ys)))

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>',
    ]
    if spec.title:
        out.append(f'<text x="{_fmt(w / 2)}" y="24" text-anchor="middle" font-size="15">{escape(spec.title)}</text>')

    grid = recall_grid(min(0.005, rr.width / 50), rr.lo, rr.hi)
    legend = []
    for i, pi in enumerate(skews):
        color = _REGION_COLORS[i % len(_REGION_COLORS)]
        mp = min_precision(grid, pi)
        area = aucpr_min_range(pi, rr)
        region = path(np.concatenate(([rr.lo], grid, [rr.hi])), np.concatenate(([0.0], mp, [0.0]))) + " Z"
        out.append(f'<g class="min-curve" data-skew="{_label(pi)}">')
        out.append(f'<path class="unachievable" d="{region}" fill="{color}" fill-opacity="0.25" stroke="none"/>')
        out.append(f'<path d="{path(grid, mp)}" fill="none" stroke="{color}" stroke-width="2" stroke-dasharray="6,4"/>')
        out.append("</g>")
        legend.append((color, True, f"minimum PR curve, π = {_label(pi)}, AUCPR_MIN[{_label(rr.lo)},{_label(rr.hi)}] = {_label(area)}"))

    for i, (name, curve) in enumerate(spec.curves):
        color = _CURVE_COLORS[i % len(_CURVE_COLORS)]
        rs, ps = curve.interpolated()
        inside = (rs > rr.lo) & (rs < rr.hi)
        rs = np.concatenate(([rr.lo], rs[inside], [rr.hi]))
        ps = np.concatenate(([curve.precision_at(rr.lo)], ps[inside], [curve.precision_at(rr.hi)]))
        area = aucpr(curve, rr).value
        out.append(
            f'<path class="pr-curve" data-name="{escape(name)}" d="{path(rs, ps)}" fill="none" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        legend.append((color, False, f"{name} (π = {_label(curve.skew)}, AUCPR = {_label(area)})"))

    # axes and ticks
    out.append(f'<rect x="{_fmt(left)}" y="{_fmt(top)}" width="{_fmt(pw)}" height="{_fmt(ph)}" fill="none" stroke="#000000"/>')
    for t in np.linspace(rr.lo, rr.hi, 6):
        x = float(sx(t))
        out.append(f'<line x1="{_fmt(x)}" y1="{_fmt(top + ph)}" x2="{_fmt(x)}" y2="{_fmt(top + ph + 5)}" stroke="#000000"/>')
        out.append(f'<text x="{_fmt(x)}" y="{_fmt(top + ph + 20)}" text-anchor="middle">{t:.2f}</text>')
    for t in np.linspace(0.0, 1.0, 6):
        y = float(sy(t))
        out.append(f'<line x1="{_fmt(left - 5)}" y1="{_fmt(y)}" x2="{_fmt(left)}" y2="{_fmt(y)}" stroke="#000000"/>')
        out.append(f'<text x="{_fmt(left - 8)}" y="{_fmt(y + 4)}" text-anchor="end">{t:.1f}</text>')
    out.append(f'<text x="{_fmt(left + pw / 2)}" y="{_fmt(h - 15)}" text-anchor="middle">Recall</text>')
    out.append(
        f'<text x="18" y="{_fmt(top + ph / 2)}" text-anchor="middle" '
        f'transform="rotate(-90 18 {_fmt(top + ph / 2)})">Precision</text>'
    )

    out.append('<g class="legend">')
    box_w = 56 + 6.6 * max(len(t) for _, _, t in legend)
    box_top = top + ph - 12 - 18 * (len(legend) - 1) - 16
    out.append(
        f'<rect x="{_fmt(left + 6)}" y="{_fmt(box_top)}" width="{_fmt(box_w)}" height="{_fmt(18 * len(legend) + 8)}" '
        f'fill="#ffffff" fill-opacity="0.8" stroke="#cccccc"/>'
    )
    for i, (color, dashed, text) in enumerate(legend):
        y = top + ph - 12 - 18 * (len(legend) - 1 - i)
        dash = ' stroke-dasharray="6,4"' if dashed else ""
        out.append(
            f'<line x1="{_fmt(left + 12)}" y1="{_fmt(y - 4)}" x2="{_fmt(left + 40)}" y2="{_fmt(y - 4)}" '
            f'stroke="{color}" stroke-width="2"{dash}/>'
        )
        out.append(f'<text x="{_fmt(left + 46)}" y="{_fmt(y)}">{escape(text)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
