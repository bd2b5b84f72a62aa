"""SVG and TikZ output.

Coordinates are exact until this point; here they become decimals rounded
to six places, so the output is byte-identical for identical input.
"""

from __future__ import annotations

from fractions import Fraction

from .geometry import edge_classes

RADIUS = Fraction(1, 10)
MARGIN = Fraction(1, 2)


def decimal(q, places=6):
    """Exact rounding of a rational to ``places`` decimals, trailing zeros
    dropped: ``decimal(Fraction(1, 3)) == '0.333333'``."""
    scaled = round(Fraction(q) * 10**places)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**places)
    if frac == 0:
        return f"{sign}{whole}"
    digits = f"{frac:0{places}d}".rstrip("0")
    return f"{sign}{whole}.{digits}"


def _bounds(D):
    xs = [c.x for c in D.pos]
    ys = [-c.y for c in D.pos]
    return min(xs), max(xs), min(ys), max(ys)


def render_svg(D, scale=40, labels=False):
    scale = Fraction(scale)
    x0, x1, y0, y1 = _bounds(D)
    pad = MARGIN + (RADIUS * 3 if labels else 0)
    vx, vy = (x0 - pad) * scale, (y0 - pad) * scale
    w, h = (x1 - x0 + 2 * pad) * scale, (y1 - y0 + 2 * pad) * scale
    classes = edge_classes(D)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{decimal(vx)} {decimal(vy)} {decimal(w)} {decimal(h)}" '
        f'width="{decimal(w)}" height="{decimal(h)}">',
        "<style>",
        "line { stroke: black; stroke-width: 1.5; }",
        "line.steep { stroke: #c0392b; stroke-width: 3; }",
        "line.invalid { stroke: #8e44ad; stroke-dasharray: 4 2; }",
        "circle { fill: white; stroke: black; stroke-width: 1.5; }",
        "text { font-family: sans-serif; font-size: 10px; }",
        "</style>",
        '<g id="edges">',
    ]
    for (p, q), cls in sorted(classes.items()):
        a, b = D.pos[p], D.pos[q]
        out.append(
            f'<line class="{cls.value}" data-edge="{p} {q}" '
            f'x1="{decimal(a.x * scale)}" y1="{decimal(-a.y * scale)}" '
            f'x2="{decimal(b.x * scale)}" y2="{decimal(-b.y * scale)}"/>')
    out.append("</g>")
    out.append('<g id="elements">')
    r = RADIUS * scale
    for e, c in enumerate(D.pos):
        out.append(f'<circle id="e{e}" cx="{decimal(c.x * scale)}" '
                   f'cy="{decimal(-c.y * scale)}" r="{decimal(r)}"/>')
    out.append("</g>")
    if labels:
        out.append('<g id="labels">')
        for e, c in enumerate(D.pos):
            out.append(f'<text x="{decimal(c.x * scale + Fraction(3, 2) * r)}" '
                       f'y="{decimal(-c.y * scale + r)}">{e}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_tikz(D, scale=1, labels=False):
    """A ``tikzpicture``; one ``\\draw`` per edge, elements as ``\\fill``."""
    classes = edge_classes(D)
    out = [
        f"\\begin{{tikzpicture}}[scale={decimal(Fraction(scale))},",
        "  normal/.style={thin},",
        "  steep/.style={very thick, red!70!black},",
        "  invalid/.style={dashed, violet}]",
    ]
    for e, c in enumerate(D.pos):
        out.append(f"\\coordinate (n{e}) at ({decimal(c.x)},{decimal(c.y)});")
    for (p, q), cls in sorted(classes.items()):
        style = "normal" if cls.is_normal else cls.value
        out.append(f"\\draw[{style}] (n{p}) -- (n{q});")
    for e in range(D.n):
        out.append(f"\\fill (n{e}) circle (1.5pt);")
        if labels:
            out.append(f"\\node[right=2pt, font=\\scriptsize] at (n{e}) {{{e}}};")
    out.append("\\end{tikzpicture}")
    return "\n".join(out) + "\n"

