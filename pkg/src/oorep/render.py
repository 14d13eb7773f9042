"""SVG drawings and benchmark figures.

Coordinates stay exact everywhere else; they are rounded to floats only here.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .drawing import Drawing
from .obstacle import SimplePolygon

SIZE = 640.0
MARGIN = 24.0


def _frame(pts: Sequence[tuple[float, float]]):
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    k = (SIZE - 2 * MARGIN) / span

    def to_svg(p):
        # flip y so the picture has the usual orientation
        return MARGIN + (p[0] - x0) * k, MARGIN + (y1 - p[1]) * k

    return to_svg, (x1 - x0) * k + 2 * MARGIN, (y1 - y0) * k + 2 * MARGIN


def render_svg(d: Drawing, obstacle: SimplePolygon | None = None, labels: bool = True) -> str:
    """Standalone SVG document: obstacle underneath, then edges, then vertices."""
    pts = [(float(x), float(y)) for x, y in d.points]
    poly = [(float(x), float(y)) for x, y in obstacle.vertices] if obstacle is not None else []
    to_svg, w, h = _frame(pts + poly if poly else pts)
    P = [to_svg(p) for p in pts]
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.2f}" height="{h:.2f}" '
           f'viewBox="0 0 {w:.2f} {h:.2f}">']
    if poly:
        coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in map(to_svg, poly))
        out.append(f'<polygon class="obstacle" points="{coords}" fill="#c8c8c8" stroke="#808080" '
                   f'stroke-width="0.5" fill-rule="evenodd"/>')
    out.append('<g class="edges" stroke="#1f3b73" stroke-width="1.5">')
    for u, v in d.graph.sorted_edges():
        (x1, y1), (x2, y2) = P[u], P[v]
        out.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}"/>')
    out.append("</g>")
    out.append('<g class="vertices" fill="#d9480f">')
    for x, y in P:
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="3.5"/>')
    out.append("</g>")
    if labels:
        out.append('<g class="labels" font-family="sans-serif" font-size="10" fill="#333">')
        for v, (x, y) in enumerate(P):
            out.append(f'<text x="{x + 5:.3f}" y="{y - 5:.3f}">{v}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def plot_bench(records: Iterable, path: str) -> None:
    """Log-log wall time per stage against n, written to ``path``."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    records = sorted(records, key=lambda r: r.n)
    stages = []
    for r in records:
        for s in r.times:
            if s not in stages:
                stages.append(s)
    fig, ax = plt.subplots(figsize=(5.0, 3.6))
    for s in stages:
        xs = [r.n for r in records if s in r.times and r.times[s] > 0]
        ys = [r.times[s] for r in records if s in r.times and r.times[s] > 0]
        if xs:
            ax.loglog(xs, ys, marker="o", lw=1.2, label=s)
    if records:
        # a linear reference through the first decision time
        r0 = next((r for r in records if r.decision_time > 0), None)
        if r0 is not None:
            xs = [r.n for r in records]
            ax.loglog(xs, [r0.decision_time * x / r0.n for x in xs], ls=":", color="gray", label="linear")
    ax.set_xlabel("n")
    ax.set_ylabel("seconds")
    ax.legend(frameon=False, fontsize=8)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
