"""Matplotlib figures of diagrams.

Figures are built with the object API on an Agg canvas, so nothing touches
pyplot's global state and concurrent calls are safe.
"""

from __future__ import annotations

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .geometry import EdgeClass, edge_classes

EDGE_STYLE = {
    EdgeClass.NORMAL_UP: dict(color="0.15", lw=1.2),
    EdgeClass.NORMAL_DOWN: dict(color="0.15", lw=1.2),
    EdgeClass.STEEP: dict(color="#c0392b", lw=2.6),
    EdgeClass.INVALID: dict(color="#8e44ad", lw=1.2, ls="--"),
}

# no timestamps or version strings, so PNGs are byte-stable
PNG_METADATA = {"Software": None}


def draw_diagram(ax, D, labels=False, highlight=()):
    """Draw ``D`` on ``ax``; edges in ``highlight`` get an orange halo."""
    classes = edge_classes(D)
    hl = set(highlight)
    for (p, q), cls in sorted(classes.items()):
        a, b = D.pos[p], D.pos[q]
        xs, ys = (float(a.x), float(b.x)), (float(a.y), float(b.y))
        if (p, q) in hl:
            ax.plot(xs, ys, color="orange", lw=7, alpha=0.6, solid_capstyle="round", zorder=1)
        ax.plot(xs, ys, zorder=2, **EDGE_STYLE[cls])
    xs = [float(c.x) for c in D.pos]
    ys = [float(c.y) for c in D.pos]
    ax.scatter(xs, ys, s=28, facecolor="white", edgecolor="black", linewidth=1.1, zorder=3)
    if labels:
        for e, (x, y) in enumerate(zip(xs, ys)):
            ax.annotate(str(e), (x, y), xytext=(4, 2), textcoords="offset points", fontsize=7)
    ax.set_aspect("equal")
    ax.axis("off")
    return ax


def diagram_figure(D, labels=False, highlight=(), title=None, size=4.0):
    fig = Figure(figsize=(size, size))
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(111)
    draw_diagram(ax, D, labels=labels, highlight=highlight)
    if title:
        ax.set_title(title, fontsize=9)
    fig.tight_layout()
    return fig


def save_diagram_png(D, path, labels=False, highlight=(), title=None, dpi=150):
    fig = diagram_figure(D, labels=labels, highlight=highlight, title=title)
    fig.savefig(path, format="png", dpi=dpi, metadata=PNG_METADATA)
    return path


def summary_figure(rows):
    """Scatter of element count against steep-edge count for a batch.

    ``rows`` holds ``(seed, report)`` pairs; failing runs are drawn as
    crosses.
    """
    fig = Figure(figsize=(5, 3.5))
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(111)
    for ok, marker, color, label in ((True, "o", "0.2", "pass"), (False, "x", "#c0392b", "fail")):
        pts = [(r.signature.elements, r.signature.steep) for _, r in rows if r.passed() == ok]
        if pts:
            ax.scatter([p[0] for p in pts], [p[1] for p in pts], marker=marker,
                       color=color, s=22, label=f"{label} ({len(pts)})")
    ax.set_xlabel("elements")
    ax.set_ylabel("steep edges")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    return fig
