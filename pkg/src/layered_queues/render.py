"""Deterministic SVG arc diagrams of queue layouts."""

from __future__ import annotations

from .layout.queues import QueueLayout

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)
STEP = 24
MARGIN = 20


def queue_colour(q: int) -> str:
    if q < len(PALETTE):
        return PALETTE[q]
    hue = (q * 137) % 360  # golden-angle walk, still deterministic
    return f"hsl({hue},65%,45%)"


def render_svg(layout: QueueLayout, labels: bool = True) -> str:
    """Vertices on a horizontal line; every edge an upper semicircle coloured by its queue."""
    n = len(layout.ordering)
    pos = layout.position
    longest = max((abs(pos[u] - pos[v]) for u, v in layout.queue_of), default=0)
    height = MARGIN * 2 + longest * STEP // 2 + 16
    width = MARGIN * 2 + max(n - 1, 0) * STEP
    base = height - MARGIN
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g fill="none" stroke-width="1.5">',
    ]
    for (u, v), q in sorted(layout.queue_of.items(), key=lambda t: (t[1], t[0])):
        a, b = sorted((pos[u], pos[v]))
        x1, x2 = MARGIN + a * STEP, MARGIN + b * STEP
        r = (x2 - x1) / 2
        lines.append(
            f'<path d="M {x1} {base} A {r:g} {r:g} 0 0 1 {x2} {base}" '
            f'stroke="{queue_colour(q)}" data-queue="{q}" data-edge="{u}-{v}"/>'
        )
    lines.append("</g>")
    lines.append('<g fill="black" font-family="monospace" font-size="9" text-anchor="middle">')
    for i, v in enumerate(layout.ordering):
        x = MARGIN + i * STEP
        lines.append(f'<circle cx="{x}" cy="{base}" r="3" data-vertex="{v}"/>')
        if labels:
            lines.append(f'<text x="{x}" y="{base + 13}">{v}</text>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
