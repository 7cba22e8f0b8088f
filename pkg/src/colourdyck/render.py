"""ASCII and SVG drawings of paths and circle structures, plus count plots.

SVG documents are self-contained with a fixed ``0 0 1000 1000`` viewBox.
Floating-point coordinates appear only here.
"""

from __future__ import annotations

import math
from typing import Sequence

from .colours import ColouredDyckPath
from .paths import _Path, ascents
from .structures import Dissection, NCTree, NonCrossingPartition

VIEW = 1000
_MARGIN = 60


# -- ASCII --------------------------------------------------------------------

def ascii_path(path: _Path) -> str:
    """Height profile; U and D take one column, L and G two, H one column of two rows."""
    if not path.steps:
        return ""
    cells: dict = {}
    x = y = 0
    for c in path.steps:
        if c == "U":
            cells[y, x] = "/"
            y += 1
            x += 1
        elif c == "D":
            y -= 1
            cells[y, x] = "\\"
            x += 1
        elif c == "L":
            cells[y, x] = cells[y, x + 1] = "_"
            x += 2
        elif c == "H":
            cells[y, x] = cells[y + 1, x] = "|"
            y += 2
            x += 1
        elif c == "G":
            cells[y, x] = "_"
            cells[y, x + 1] = "/"
            y += 1
            x += 2
    top = max(r for r, _ in cells)
    rows = []
    for r in range(top, -1, -1):
        rows.append("".join(cells.get((r, col), " ") for col in range(x)).rstrip())
    return "\n".join(rows)


def ascii_structure(obj) -> str:
    if isinstance(obj, ColouredDyckPath):
        lines = [ascii_path(obj.base)]
        for a, c in zip(ascents(obj.base), obj.colours):
            lines.append(f"ascent at {a.start} (length {a.length}) coloured {c}:")
            lines.append(ascii_path(c))
        return "\n".join(lines)
    if isinstance(obj, _Path):
        return ascii_path(obj)
    if isinstance(obj, NCTree):
        return "\n".join(f"{a} -- {b}" for a, b in obj.edges) or f"single vertex {obj.n}"
    if isinstance(obj, NonCrossingPartition):
        return "\n".join("{" + ", ".join(map(str, b)) + "}" for b in obj.blocks)
    if isinstance(obj, Dissection):
        lines = [f"{obj.k + 2}-gon, vertices a,0..{obj.k}"]
        for cell in obj.cells():
            lines.append("cell " + " ".join(_poly_label(v) for v in cell))
        return "\n".join(lines)
    raise TypeError(f"cannot render {type(obj).__name__}")


def _poly_label(v: int) -> str:
    return "a" if v == 0 else str(v - 1)


# -- SVG ----------------------------------------------------------------------

def _svg(body: Sequence[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {VIEW} {VIEW}" '
            f'width="{VIEW}" height="{VIEW}">')
    return "\n".join([head, f'<rect width="{VIEW}" height="{VIEW}" style="fill:white"/>',
                      *body, "</svg>"]) + "\n"


def _polyline(points, style) -> str:
    pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in points)
    return f'<polyline points="{pts}" style="{style}"/>'


def _lattice_transform(points):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    w = max(max(xs) - min(xs), 1)
    h = max(max(ys) - min(ys), 1)
    scale = (VIEW - 2 * _MARGIN) / max(w, h)
    base = VIEW - _MARGIN

    def tr(p):
        return _MARGIN + (p[0] - min(xs)) * scale, base - (p[1] - min(ys)) * scale

    return tr


def svg_path(path) -> str:
    if isinstance(path, ColouredDyckPath):
        return svg_coloured(path)
    pts = path.points()
    tr = _lattice_transform(pts)
    body = [_polyline([tr(p) for p in pts], "fill:none;stroke:black;stroke-width:4")]
    return _svg(body)


def rotate_colour(colour, origin) -> list[tuple[float, float]]:
    """Colour path turned 45 degrees and scaled by 1/sqrt(2), starting at ``origin``.

    A point ``(u, v)`` of the colour lands at ``origin + ((u - v)/2, (u + v)/2)``,
    so the colour spans exactly the ascent it decorates.
    """
    ox, oy = origin
    return [(ox + (u - v) / 2, oy + (u + v) / 2) for u, v in colour.points()]


def svg_coloured(path: ColouredDyckPath) -> str:
    pts = path.base.points()
    tr = _lattice_transform(pts)
    body = [_polyline([tr(p) for p in pts], "fill:none;stroke:black;stroke-width:4")]
    palette = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e"]
    for i, (a, c) in enumerate(zip(ascents(path.base), path.colours)):
        rotated = rotate_colour(c, pts[a.start])
        body.append(_polyline([tr(p) for p in rotated],
                              f"fill:none;stroke:{palette[i % len(palette)]};stroke-width:3"))
    return _svg(body)


def _circle_points(count: int) -> list[tuple[float, float]]:
    r = VIEW / 2 - _MARGIN
    c = VIEW / 2
    out = []
    for i in range(count):
        t = 2 * math.pi * i / max(count, 1)
        out.append((c + r * math.sin(t), c - r * math.cos(t)))
    return out


def _dots(points, labels) -> list[str]:
    out = []
    for (x, y), lab in zip(points, labels):
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="8" style="fill:black"/>')
        dx, dy = x - VIEW / 2, y - VIEW / 2
        norm = math.hypot(dx, dy) or 1
        lx, ly = x + 30 * dx / norm, y + 30 * dy / norm
        out.append(f'<text x="{lx:.2f}" y="{ly:.2f}" style="font-size:24px;'
                   f'text-anchor:middle;dominant-baseline:middle">{lab}</text>')
    return out


def svg_circle(obj) -> str:
    if isinstance(obj, NCTree):
        pts = _circle_points(obj.n)
        body = [f'<line x1="{pts[a - 1][0]:.2f}" y1="{pts[a - 1][1]:.2f}" '
                f'x2="{pts[b - 1][0]:.2f}" y2="{pts[b - 1][1]:.2f}" '
                f'style="stroke:black;stroke-width:4"/>' for a, b in obj.edges]
        return _svg(body + _dots(pts, range(1, obj.n + 1)))
    if isinstance(obj, NonCrossingPartition):
        pts = _circle_points(obj.n)
        body = []
        for b in obj.blocks:
            if len(b) == 1:
                continue
            poly = [pts[p - 1] for p in b] + [pts[b[0] - 1]]
            fill = "#9ecae1" if len(b) > 2 else "none"
            body.append(_polyline(poly, f"fill:{fill};stroke:black;stroke-width:4"))
        return _svg(body + _dots(pts, range(1, obj.n + 1)))
    if isinstance(obj, Dissection):
        pts = _circle_points(obj.k + 2)
        ring = pts + [pts[0]]
        body = [_polyline(ring, "fill:none;stroke:black;stroke-width:4")]
        body += [f'<line x1="{pts[x][0]:.2f}" y1="{pts[x][1]:.2f}" '
                 f'x2="{pts[y][0]:.2f}" y2="{pts[y][1]:.2f}" '
                 f'style="stroke:#d62728;stroke-width:3"/>' for x, y in obj.diagonals]
        return _svg(body + _dots(pts, [_poly_label(v) for v in range(obj.k + 2)]))
    raise TypeError(f"cannot render {type(obj).__name__}")


def to_svg(obj) -> str:
    if isinstance(obj, (ColouredDyckPath, _Path)):
        return svg_path(obj)
    return svg_circle(obj)


def to_ascii(obj) -> str:
    return ascii_structure(obj)


# -- figures ------------------------------------------------------------------

def plot_counts(rows: Sequence[dict], filename: str, title: str = "") -> None:
    """Log-scale plot of the count columns of a ``count`` table."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    ns = [r["n"] for r in rows]
    styles = {"brute_force": "o", "series": "s", "closed_form": "^"}
    for col, marker in styles.items():
        pts = [(r["n"], r[col]) for r in rows if r.get(col) not in (None, 0)]
        if pts:
            ax.plot(*zip(*pts), marker=marker, linestyle="-", label=col.replace("_", " "),
                    markerfacecolor="none" if col != "series" else None)
    ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("count")
    ax.set_xticks(ns)
    if title:
        ax.set_title(title)
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(filename)
    plt.close(fig)
