"""Tiny dependency-free SVG line charts."""
from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e")


@dataclass
class ChartStyle:
    width: int = 640
    height: int = 400
    margin: int = 50
    ticks: int = 5


def _fmt(v: float) -> str:
    return f"{v:.4g}"


def line_chart(series: dict[str, list[tuple[float, float]]], title: str = "", xlabel: str = "x",
               ylabel: str = "y", style: ChartStyle | None = None, markers: bool = True) -> str:
    """One polyline per named series, with axes and tick labels."""
    st = style or ChartStyle()
    pts = [p for s in series.values() for p in s]
    if not pts:
        raise ValueError("nothing to plot")
    x0, x1 = min(p[0] for p in pts), max(p[0] for p in pts)
    y0, y1 = min(p[1] for p in pts), max(p[1] for p in pts)
    if x1 == x0:
        x1 = x0 + 1
    if y1 == y0:
        y1 = y0 + 1
    m, w, h = st.margin, st.width, st.height

    def sx(x):
        return m + (x - x0) / (x1 - x0) * (w - 2 * m)

    def sy(y):
        return h - m - (y - y0) / (y1 - y0) * (h - 2 * m)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<rect width="{w}" height="{h}" fill="white"/>',
        f'<text x="{w / 2:.1f}" y="{m / 2:.1f}" text-anchor="middle" font-size="14">{escape(title)}</text>',
        f'<line x1="{m}" y1="{h - m}" x2="{w - m}" y2="{h - m}" stroke="black"/>',
        f'<line x1="{m}" y1="{m}" x2="{m}" y2="{h - m}" stroke="black"/>',
    ]
    for i in range(st.ticks + 1):
        xv = x0 + (x1 - x0) * i / st.ticks
        yv = y0 + (y1 - y0) * i / st.ticks
        out.append(f'<text x="{sx(xv):.1f}" y="{h - m + 16}" text-anchor="middle" font-size="10">{_fmt(xv)}</text>')
        out.append(f'<text x="{m - 6}" y="{sy(yv) + 3:.1f}" text-anchor="end" font-size="10">{_fmt(yv)}</text>')
    out.append(f'<text x="{w / 2:.1f}" y="{h - 10}" text-anchor="middle" font-size="12">{escape(xlabel)}</text>')
    out.append(f'<text x="14" y="{h / 2:.1f}" transform="rotate(-90 14 {h / 2:.1f})" text-anchor="middle" '
               f'font-size="12">{escape(ylabel)}</text>')
    for k, (name, s) in enumerate(series.items()):
        colour = PALETTE[k % len(PALETTE)]
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in s)
        out.append(f'<polyline fill="none" stroke="{colour}" stroke-width="1.5" points="{coords}"/>')
        if markers:
            out.extend(f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="2" fill="{colour}"/>' for x, y in s)
        out.append(f'<text x="{w - m + 4}" y="{m + 14 * k}" font-size="11" fill="{colour}">{escape(name)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
