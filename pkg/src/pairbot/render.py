"""Static pictures of a configuration: ASCII for terminals, SVG for files.

Point ``(x, y)`` is drawn at ``(x + y/2, y * sqrt(3)/2)`` so all six
neighbours sit at the same distance.
"""
from __future__ import annotations

from typing import Iterable, Optional

from .geometry import screen_xy
from .model import Configuration

_ANSI = {"obj": "\x1b[90m", "robot": "\x1b[36m", "double": "\x1b[1;33m", "coat": "\x1b[35m", "off": "\x1b[0m"}


def _bounds(c: Configuration, extra: Iterable = (), pad: int = 1):
    pts = list(c.positions) + list(c.obj) + list(extra)
    if not pts:
        return 0, 0, 0, 0
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return min(xs) - pad, max(xs) + pad, min(ys) - pad, max(ys) + pad


def _long_links(c: Configuration):
    for k in range(c.n_pairs):
        a, b = c.pair_points(k)
        if a != b:
            yield a, b


def render_ascii(c: Configuration, coating: Optional[frozenset] = None, color: bool = False,
                 title: str = "") -> str:
    """One text row per grid row, two text lines apart so diagonal links fit.

    ``#`` object, ``o`` one robot, ``8`` two robots, ``+`` empty coating
    point, ``.`` empty point; ``- / \\`` join the robots of a long pair.
    """
    coating = coating or frozenset()
    xmin, xmax, ymin, ymax = _bounds(c, coating)

    def col(x, y):
        return 4 * (x - xmin) + 2 * (y - ymin)

    def line(y):
        return 2 * (ymax - y)

    width = col(xmax, ymax) + 1
    height = line(ymin) + 1
    grid = [[" "] * width for _ in range(height)]
    paint = [[None] * width for _ in range(height)]
    counts = c.counts
    for y in range(ymin, ymax + 1):
        for x in range(xmin, xmax + 1):
            p = (x, y)
            n = counts.get(p, 0)
            if p in c.obj:
                ch, tone = "#", "obj"
            elif n >= 2:
                ch, tone = "8", "double"
            elif n == 1:
                ch, tone = "o", "robot"
            elif p in coating:
                ch, tone = "+", "coat"
            else:
                ch, tone = ".", None
            grid[line(y)][col(x, y)] = ch
            paint[line(y)][col(x, y)] = tone
    for a, b in _long_links(c):
        (ca, la), (cb, lb) = (col(*a), line(a[1])), (col(*b), line(b[1]))
        mc, ml = (ca + cb) // 2, (la + lb) // 2
        if la == lb:
            ch = "-"
        elif (cb - ca) * (lb - la) < 0:
            ch = "/"
        else:
            ch = "\\"
        grid[ml][mc] = ch
        paint[ml][mc] = "robot"
    rows = []
    for r in range(height):
        cells = []
        for k in range(width):
            ch = grid[r][k]
            tone = paint[r][k]
            if color and tone:
                cells.append(f"{_ANSI[tone]}{ch}{_ANSI['off']}")
            else:
                cells.append(ch)
        rows.append("".join(cells).rstrip())
    out = "\n".join(rows) + "\n"
    if title:
        out = title + "\n" + out
    return out


def render_svg(c: Configuration, coating: Optional[frozenset] = None, title: str = "",
               scale: float = 28.0) -> str:
    coating = coating or frozenset()
    xmin, xmax, ymin, ymax = _bounds(c, coating)
    pts = [(x, y) for y in range(ymin, ymax + 1) for x in range(xmin, xmax + 1)]
    sx = [screen_xy(p)[0] for p in pts]
    sy = [screen_xy(p)[1] for p in pts]
    left, right, top, bottom = min(sx), max(sx), max(sy), min(sy)
    margin = 1.0

    def xy(p):
        u, v = screen_xy(p)
        return (u - left + margin) * scale, (top - v + margin) * scale

    w = (right - left + 2 * margin) * scale
    h = (top - bottom + 2 * margin) * scale + (scale if title else 0)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1f}" height="{h:.1f}" '
           f'viewBox="0 0 {w:.1f} {h:.1f}">',
           f'<rect width="{w:.1f}" height="{h:.1f}" fill="white"/>']
    if title:
        out.append(f'<text x="{scale * 0.3:.1f}" y="{h - scale * 0.3:.1f}" font-family="monospace" '
                   f'font-size="{scale * 0.5:.1f}">{_escape(title)}</text>')
    r_grid = scale * 0.06
    r_obj = scale * 0.42
    r_bot = scale * 0.16
    for p in pts:
        u, v = xy(p)
        if p in c.obj:
            out.append(f'<circle cx="{u:.1f}" cy="{v:.1f}" r="{r_obj:.1f}" fill="#555"/>')
        else:
            out.append(f'<circle cx="{u:.1f}" cy="{v:.1f}" r="{r_grid:.1f}" fill="#bbb"/>')
        if p in coating:
            out.append(f'<circle cx="{u:.1f}" cy="{v:.1f}" r="{r_obj:.1f}" fill="none" '
                       f'stroke="#b0b" stroke-width="1.5"/>')
    for a, b in _long_links(c):
        (ua, va), (ub, vb) = xy(a), xy(b)
        out.append(f'<line x1="{ua:.1f}" y1="{va:.1f}" x2="{ub:.1f}" y2="{vb:.1f}" '
                   f'stroke="#08c" stroke-width="{scale * 0.12:.1f}"/>')
    for p, n in sorted(c.counts.items()):
        u, v = xy(p)
        offs = [0.0] if n == 1 else [-r_bot * 1.1, r_bot * 1.1] + [0.0] * (n - 2)
        for d in offs:
            out.append(f'<circle cx="{u + d:.1f}" cy="{v:.1f}" r="{r_bot:.1f}" fill="#08c"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
