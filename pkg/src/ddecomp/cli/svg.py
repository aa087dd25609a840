"""SVG plot: marching-squares contour of h plus the classified sample cloud.

Display only; the contour is traced in double precision.
"""

from fractions import Fraction

import numpy as np

from ..errors import DomainError
from ..mpoly import MPoly

WIDTH = 640
HEIGHT = 640
MARGIN = 40
PALETTE = ["#d62728", "#ff7f0e", "#bcbd22", "#2ca02c", "#17becf", "#1f77b4",
           "#9467bd", "#e377c2", "#8c564b", "#7f7f7f"]


def _grid_values(h, xs, ys):
    """h on the mesh, coefficients scaled to avoid float overflow."""
    X, Y = np.meshgrid(xs, ys)  # Y rows, X columns
    Z = np.zeros_like(X)
    if not isinstance(h, MPoly) or h.is_constant():
        c = h.constant_value() if isinstance(h, MPoly) else h
        return Z + float(Fraction(c) if c else 0)
    big = max(abs(Fraction(c)) for c in h.terms.values())
    ri, pi = h.vars.index("r") if "r" in h.vars else 0, h.vars.index("p") if "p" in h.vars else 1
    for e, c in h.terms.items():
        Z += float(Fraction(c) / big) * X ** e[ri] * Y ** e[pi]
    return Z


# segment table: corner bits (bottom-left 1, bottom-right 2, top-right 4,
# top-left 8) -> pairs of edges (0 bottom, 1 right, 2 top, 3 left)
_CASES = {
    1: [(3, 0)], 2: [(0, 1)], 3: [(3, 1)], 4: [(1, 2)], 6: [(0, 2)], 7: [(3, 2)],
    8: [(2, 3)], 9: [(2, 0)], 11: [(2, 1)], 12: [(1, 3)], 13: [(1, 0)], 14: [(0, 3)],
}


def _edge_key(i, j, edge):
    # unique id of a grid edge adjacent to cell (i, j) (row i, column j)
    if edge == 0:
        return ("h", i, j)
    if edge == 2:
        return ("h", i + 1, j)
    if edge == 3:
        return ("v", i, j)
    return ("v", i, j + 1)


def marching_squares(Z, xs, ys):
    """Polylines ``[(closed, [(x, y), ...]), ...]`` of ``Z = 0``."""
    inside = Z > 0
    points = {}
    adj = {}

    def point(key):
        if key not in points:
            kind, i, j = key
            if kind == "h":
                a, b = Z[i, j], Z[i, j + 1]
                t = a / (a - b) if a != b else 0.5
                points[key] = (xs[j] + t * (xs[j + 1] - xs[j]), ys[i])
            else:
                a, b = Z[i, j], Z[i + 1, j]
                t = a / (a - b) if a != b else 0.5
                points[key] = (xs[j], ys[i] + t * (ys[i + 1] - ys[i]))
        return key

    ny, nx = Z.shape
    for i in range(ny - 1):
        for j in range(nx - 1):
            code = (int(inside[i, j]) | int(inside[i, j + 1]) << 1
                    | int(inside[i + 1, j + 1]) << 2 | int(inside[i + 1, j]) << 3)
            if code in (0, 15):
                continue
            if code in (5, 10):
                centre = (Z[i, j] + Z[i, j + 1] + Z[i + 1, j] + Z[i + 1, j + 1]) > 0
                # a positive centre joins the two positive corners
                cut_bl_tr = [(3, 0), (1, 2)]
                cut_br_tl = [(0, 1), (2, 3)]
                if code == 5:
                    pairs = cut_br_tl if centre else cut_bl_tr
                else:
                    pairs = cut_bl_tr if centre else cut_br_tl
            else:
                pairs = _CASES[code]
            for a, b in pairs:
                ka, kb = point(_edge_key(i, j, a)), point(_edge_key(i, j, b))
                adj.setdefault(ka, []).append(kb)
                adj.setdefault(kb, []).append(ka)

    lines = []
    used = set()

    def walk(start):
        chain = [start]
        prev, cur = None, start
        while True:
            nxt = [k for k in adj[cur] if k != prev and (min(cur, k), max(cur, k)) not in used]
            if not nxt:
                return chain, False
            k = nxt[0]
            used.add((min(cur, k), max(cur, k)))
            if k == start:
                return chain + [k], True
            chain.append(k)
            prev, cur = cur, k

    # open chains start at degree-1 ends; the rest are loops
    for key in sorted(adj):
        if len(adj[key]) == 1 and any((min(key, k), max(key, k)) not in used for k in adj[key]):
            chain, closed = walk(key)
            lines.append((closed, [points[k] for k in chain]))
    for key in sorted(adj):
        if any((min(key, k), max(key, k)) not in used for k in adj[key]):
            chain, closed = walk(key)
            lines.append((closed, [points[k] for k in chain]))
    return lines


def _fmt(v):
    return f"{v:.2f}"


def emit_svg(h, cloud, box, grid_n=256, stable=None):
    """Deterministic SVG 1.1 text.

    ``cloud`` holds points with ``r`` and ``p`` (or pairs); ``stable`` gives
    the stable-root count per point for colouring.
    """
    xmin, xmax, ymin, ymax = (float(v) for v in box)
    if not (np.isfinite([xmin, xmax, ymin, ymax]).all() and xmin < xmax and ymin < ymax):
        raise DomainError(f"degenerate plot box {box}")
    if grid_n < 16:
        raise DomainError("grid resolution must be at least 16")
    xs = np.linspace(xmin, xmax, grid_n)
    ys = np.linspace(ymin, ymax, grid_n)
    Z = _grid_values(h, xs, ys)
    w = WIDTH - 2 * MARGIN
    hgt = HEIGHT - 2 * MARGIN

    def tx(x):
        return MARGIN + (x - xmin) / (xmax - xmin) * w

    def ty(y):
        return MARGIN + (ymax - y) / (ymax - ymin) * hgt

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" '
        f'height="{HEIGHT + 40}" viewBox="0 0 {WIDTH} {HEIGHT + 40}">',
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{w}" height="{hgt}" fill="white" '
        'stroke="#999999"/>',
        f'<text x="{MARGIN}" y="{MARGIN - 10}" font-size="12" font-family="sans-serif">'
        f'r in [{xmin:g}, {xmax:g}], p in [{ymin:g}, {ymax:g}]</text>',
        '<g class="contour" fill="none" stroke="black" stroke-width="1.2">',
    ]
    if isinstance(h, MPoly) and not h.is_constant():
        for closed, pts in marching_squares(Z, xs, ys):
            coords = " ".join(f"{_fmt(tx(x))},{_fmt(ty(y))}" for x, y in pts)
            cls = "closed" if closed else "open"
            out.append(f'<polyline class="{cls}" points="{coords}"/>')
    out.append("</g>")

    out.append('<g class="points" stroke="black" stroke-width="0.5">')
    counts = sorted(set(stable)) if stable is not None else []
    for k, pt in enumerate(cloud):
        r, p = (pt.r, pt.p) if hasattr(pt, "r") else pt
        x, y = float(r), float(p)
        if not (xmin <= x <= xmax and ymin <= y <= ymax):
            continue
        colour = PALETTE[stable[k] % len(PALETTE)] if stable is not None else "#555555"
        out.append(f'<circle cx="{_fmt(tx(x))}" cy="{_fmt(ty(y))}" r="4" fill="{colour}"/>')
    out.append("</g>")

    out.append('<g class="legend" font-size="12" font-family="sans-serif">')
    for k, c in enumerate(counts):
        x = MARGIN + 110 * k
        y = HEIGHT + 10
        out.append(f'<circle cx="{x + 6}" cy="{y}" r="5" fill="{PALETTE[c % len(PALETTE)]}" '
                   'stroke="black" stroke-width="0.5"/>')
        out.append(f'<text x="{x + 16}" y="{y + 4}">{c} stable</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
