"""Minimal native SVG rendering for ROC curves.

Produces self-contained, deterministic SVG text with unit-square axes,
polyline curves, optional vertical threshold markers, reference line
segments (constant PPV/NPV) and cross-shaped operating points.  No
plotting framework involved, so outputs are diffable.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

__all__ = ["render_roc_svg", "PALETTE"]

PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#17becf",
    "#7f7f7f",
)

_W = 560.0
_H = 560.0
_ML, _MR, _MT, _MB = 64.0, 18.0, 42.0, 54.0
_PW = _W - _ML - _MR
_PH = _H - _MT - _MB


def _x(fpf: float) -> float:
    return _ML + float(fpf) * _PW


def _y(tpf: float) -> float:
    return _MT + (1.0 - float(tpf)) * _PH


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _polyline(fpf, tpf, color: str, width: float, dash: str | None) -> str:
    pts = " ".join(f"{_fmt(_x(f))},{_fmt(_y(t))}" for f, t in zip(fpf, tpf))
    dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
    return (
        f'<polyline fill="none" stroke="{color}" stroke-width="{width:g}"'
        f'{dash_attr} points="{pts}"/>'
    )


def _thin(fpf, tpf, limit: int = 400):
    """Cap polyline length; keeps endpoints and an even subsample."""
    fpf = np.asarray(fpf, dtype=float)
    tpf = np.asarray(tpf, dtype=float)
    if fpf.size <= limit:
        return fpf, tpf
    idx = np.unique(np.round(np.linspace(0, fpf.size - 1, limit)).astype(int))
    return fpf[idx], tpf[idx]


def render_roc_svg(
    series: Iterable[dict],
    vlines: Iterable[dict] = (),
    points: Iterable[dict] = (),
    segments: Iterable[dict] = (),
    title: str = "",
    diagonal: bool = True,
) -> str:
    """Assemble an ROC plot as an SVG string.

    series: dicts with fpf, tpf arrays and optional label, color, dash,
    width.  vlines mark FPF thresholds; segments are straight reference
    lines in data coordinates; points are drawn as crosses.
    """
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W:g}" height="{_H:g}" '
        f'viewBox="0 0 {_W:g} {_H:g}">',
        f'<rect width="{_W:g}" height="{_H:g}" fill="white"/>',
    ]
    # frame and grid
    for i in range(6):
        v = i / 5.0
        gx = _fmt(_x(v))
        gy = _fmt(_y(v))
        parts.append(
            f'<line x1="{gx}" y1="{_fmt(_y(0))}" x2="{gx}" y2="{_fmt(_y(1))}" '
            f'stroke="#dddddd" stroke-width="0.7"/>'
        )
        parts.append(
            f'<line x1="{_fmt(_x(0))}" y1="{gy}" x2="{_fmt(_x(1))}" y2="{gy}" '
            f'stroke="#dddddd" stroke-width="0.7"/>'
        )
        parts.append(
            f'<text x="{gx}" y="{_fmt(_y(0) + 18)}" font-size="12" '
            f'text-anchor="middle" font-family="sans-serif">{v:.1f}</text>'
        )
        parts.append(
            f'<text x="{_fmt(_x(0) - 8)}" y="{_fmt(_y(v) + 4)}" font-size="12" '
            f'text-anchor="end" font-family="sans-serif">{v:.1f}</text>'
        )
    parts.append(
        f'<rect x="{_fmt(_x(0))}" y="{_fmt(_y(1))}" width="{_fmt(_PW)}" '
        f'height="{_fmt(_PH)}" fill="none" stroke="#333333" stroke-width="1"/>'
    )
    if diagonal:
        parts.append(
            f'<line x1="{_fmt(_x(0))}" y1="{_fmt(_y(0))}" x2="{_fmt(_x(1))}" '
            f'y2="{_fmt(_y(1))}" stroke="#bbbbbb" stroke-width="0.8" '
            f'stroke-dasharray="2,4"/>'
        )
    if title:
        parts.append(
            f'<text x="{_fmt(_W / 2)}" y="24" font-size="15" text-anchor="middle" '
            f'font-family="sans-serif">{title}</text>'
        )
    parts.append(
        f'<text x="{_fmt(_ML + _PW / 2)}" y="{_fmt(_H - 14)}" font-size="13" '
        f'text-anchor="middle" font-family="sans-serif">false positive fraction</text>'
    )
    parts.append(
        f'<text x="18" y="{_fmt(_MT + _PH / 2)}" font-size="13" text-anchor="middle" '
        f'font-family="sans-serif" transform="rotate(-90 18 {_fmt(_MT + _PH / 2)})">'
        f"true positive fraction</text>"
    )

    for seg in segments:
        dash_attr = f' stroke-dasharray="{seg["dash"]}"' if seg.get("dash") else ""
        parts.append(
            f'<line x1="{_fmt(_x(seg["x1"]))}" y1="{_fmt(_y(seg["y1"]))}" '
            f'x2="{_fmt(_x(seg["x2"]))}" y2="{_fmt(_y(seg["y2"]))}" '
            f'stroke="{seg.get("color", "#999999")}" stroke-width="1"{dash_attr}/>'
        )

    for vl in vlines:
        gx = _fmt(_x(vl["x"]))
        parts.append(
            f'<line x1="{gx}" y1="{_fmt(_y(0))}" x2="{gx}" y2="{_fmt(_y(1))}" '
            f'stroke="{vl.get("color", "#888888")}" stroke-width="1" stroke-dasharray="5,4"/>'
        )
        if vl.get("label"):
            parts.append(
                f'<text x="{gx}" y="{_fmt(_y(1) - 6)}" font-size="11" '
                f'text-anchor="middle" font-family="sans-serif" '
                f'fill="{vl.get("color", "#888888")}">{vl["label"]}</text>'
            )

    legend = []
    for i, s in enumerate(series):
        color = s.get("color", PALETTE[i % len(PALETTE)])
        fpf, tpf = _thin(s["fpf"], s["tpf"])
        parts.append(_polyline(fpf, tpf, color, float(s.get("width", 1.6)), s.get("dash")))
        if s.get("label"):
            legend.append((s["label"], color, s.get("dash")))

    for pt in points:
        cx = _x(pt["fpf"])
        cy = _y(pt["tpf"])
        color = pt.get("color", "#000000")
        r = 5.0
        parts.append(
            f'<line x1="{_fmt(cx - r)}" y1="{_fmt(cy)}" x2="{_fmt(cx + r)}" y2="{_fmt(cy)}" '
            f'stroke="{color}" stroke-width="1.8"/>'
        )
        parts.append(
            f'<line x1="{_fmt(cx)}" y1="{_fmt(cy - r)}" x2="{_fmt(cx)}" y2="{_fmt(cy + r)}" '
            f'stroke="{color}" stroke-width="1.8"/>'
        )
        if pt.get("label"):
            parts.append(
                f'<text x="{_fmt(cx + 8)}" y="{_fmt(cy - 6)}" font-size="11" '
                f'font-family="sans-serif" fill="{color}">{pt["label"]}</text>'
            )

    if legend:
        ly = _y(0) - 16.0 - 16.0 * len(legend)
        lx = _x(1) - 190.0
        for i, (label, color, dash) in enumerate(legend):
            yy = ly + 16.0 * i
            dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
            parts.append(
                f'<line x1="{_fmt(lx)}" y1="{_fmt(yy)}" x2="{_fmt(lx + 26)}" y2="{_fmt(yy)}" '
                f'stroke="{color}" stroke-width="2"{dash_attr}/>'
            )
            parts.append(
                f'<text x="{_fmt(lx + 32)}" y="{_fmt(yy + 4)}" font-size="12" '
                f'font-family="sans-serif">{label}</text>'
            )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
