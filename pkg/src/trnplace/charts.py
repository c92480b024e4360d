"""Static SVG line charts for CPC curves."""

from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 640, 420
PAD_L, PAD_R, PAD_T, PAD_B = 70, 30, 40, 60
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e")


def line_chart(
    series: Sequence[tuple[str, Sequence[tuple[float, float]]]],
    title: str,
    xlabel: str,
    ylabel: str,
    y_range: tuple[float, float] = (0.0, 100.0),
) -> str:
    """Render named (x, y) series as a standalone SVG document string."""
    xs = [x for _, pts in series for x, _ in pts]
    x0, x1 = (min(xs), max(xs)) if xs else (0.0, 1.0)
    if x1 == x0:
        x1 = x0 + 1
    y0, y1 = y_range
    plot_w = WIDTH - PAD_L - PAD_R
    plot_h = HEIGHT - PAD_T - PAD_B

    def sx(x):
        return PAD_L + (x - x0) / (x1 - x0) * plot_w

    def sy(y):
        return PAD_T + plot_h - (y - y0) / (y1 - y0) * plot_h

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.1f}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>',
    ]
    # grid + y ticks
    for i in range(6):
        y = y0 + (y1 - y0) * i / 5
        py = sy(y)
        out.append(f'<line x1="{PAD_L}" y1="{py:.1f}" x2="{WIDTH - PAD_R}" y2="{py:.1f}" stroke="#e0e0e0"/>')
        out.append(f'<text x="{PAD_L - 8}" y="{py + 4:.1f}" text-anchor="end">{y:g}</text>')
    xticks = sorted(set(xs))
    step = max(1, len(xticks) // 14)
    for x in xticks[::step]:
        px = sx(x)
        out.append(f'<line x1="{px:.1f}" y1="{PAD_T + plot_h}" x2="{px:.1f}" y2="{PAD_T + plot_h + 5}" stroke="black"/>')
        out.append(f'<text x="{px:.1f}" y="{PAD_T + plot_h + 18}" text-anchor="middle">{x:g}</text>')
    out.append(
        f'<rect x="{PAD_L}" y="{PAD_T}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>'
    )
    out.append(
        f'<text x="{PAD_L + plot_w / 2:.1f}" y="{HEIGHT - 15}" text-anchor="middle">{escape(xlabel)}</text>'
    )
    out.append(
        f'<text x="18" y="{PAD_T + plot_h / 2:.1f}" text-anchor="middle" '
        f'transform="rotate(-90 18 {PAD_T + plot_h / 2:.1f})">{escape(ylabel)}</text>'
    )

    for i, (name, pts) in enumerate(series):
        color = COLORS[i % len(COLORS)]
        coords = " ".join(f"{sx(x):.1f},{sy(y):.1f}" for x, y in pts)
        out.append(f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="2"/>')
        for x, y in pts:
            out.append(f'<circle cx="{sx(x):.1f}" cy="{sy(y):.1f}" r="3" fill="{color}"/>')
        ly = PAD_T + 15 + 18 * i
        lx = PAD_L + 12
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 24}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 30}" y="{ly + 4}">{escape(name)}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"
