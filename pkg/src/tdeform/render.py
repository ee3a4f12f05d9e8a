"""Deterministic SVG drawing of a tailed lattice polyhedron and its normal fan."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .lattice import Vec2
from .polyhedra import LatticePolyhedron

Box = tuple[int, int, int, int]  # xmin, ymin, xmax, ymax
Pt = tuple[Fraction, Fraction]

UNIT = 40
MARGIN = 20
FAN_PANEL = 200


def default_box(p: LatticePolyhedron) -> Box:
    """Vertex bounding box grown by two unit steps along each tail ray."""
    pts = list(p.vertices)
    for v in p.vertices:
        for r in p.tail.rays:
            pts.append((v[0] + 2 * r[0], v[1] + 2 * r[1]))
    xs, ys = [q[0] for q in pts], [q[1] for q in pts]
    return (min(xs), min(ys), max(xs), max(ys))


def centered_box(p: LatticePolyhedron, width: int, height: int) -> Box:
    xs = [v[0] for v in p.vertices]
    ys = [v[1] for v in p.vertices]
    cx = (min(xs) + max(xs)) // 2
    cy = (min(ys) + max(ys)) // 2
    x0, y0 = cx - width // 2, cy - height // 2
    return (x0, y0, x0 + width, y0 + height)


def _clip_halfplane(poly: list[Pt], n: Vec2, c: int) -> list[Pt]:
    """Keep the part of a convex polygon where ``n . x >= c``."""
    out: list[Pt] = []
    k = len(poly)
    for i in range(k):
        a, b = poly[i], poly[(i + 1) % k]
        fa = n[0] * a[0] + n[1] * a[1] - c
        fb = n[0] * b[0] + n[1] * b[1] - c
        if fa >= 0:
            out.append(a)
        if (fa > 0 > fb) or (fa < 0 < fb):
            s = fa / (fa - fb)
            out.append((a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])))
    return out


def clipped_region(p: LatticePolyhedron, box: Box) -> list[Pt]:
    x0, y0, x1, y1 = (Fraction(v) for v in box)
    poly: list[Pt] = [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]
    for n in p.fan.rays:
        poly = _clip_halfplane(poly, n, p.eval(n))
        if not poly:
            break
    return poly


def _ray_exit(v: Vec2, r: Vec2, box: Box) -> Optional[Fraction]:
    """Largest ``s >= 0`` with ``v + s r`` in the box, or None if ``v`` is outside."""
    x0, y0, x1, y1 = box
    if not (x0 <= v[0] <= x1 and y0 <= v[1] <= y1):
        return None
    s = None
    for vi, ri, lo, hi in ((v[0], r[0], x0, x1), (v[1], r[1], y0, y1)):
        if ri > 0:
            t = Fraction(hi - vi, ri)
        elif ri < 0:
            t = Fraction(lo - vi, ri)
        else:
            continue
        s = t if s is None else min(s, t)
    return s


def _num(x: Fraction) -> str:
    """Fixed three-decimal rendering of an exact coordinate."""
    q = round(Fraction(x) * 1000)
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, frac = divmod(q, 1000)
    return f"{sign}{whole}" if frac == 0 else f"{sign}{whole}.{frac:03d}".rstrip("0")


def render_svg(p: LatticePolyhedron, box: Optional[Box] = None, title: str = "") -> str:
    box = box or default_box(p)
    x0, y0, x1, y1 = box
    w = (x1 - x0) * UNIT + 2 * MARGIN
    h = (y1 - y0) * UNIT + 2 * MARGIN
    total_w = w + FAN_PANEL + MARGIN

    def sx(x) -> str:
        return _num(MARGIN + (Fraction(x) - x0) * UNIT)

    def sy(y) -> str:
        return _num(MARGIN + (y1 - Fraction(y)) * UNIT)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{total_w}" height="{max(h, FAN_PANEL + 2 * MARGIN)}" '
        f'viewBox="0 0 {total_w} {max(h, FAN_PANEL + 2 * MARGIN)}">',
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
        "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>",
    ]
    if title:
        out.append(f"<title>{title}</title>")
    out.append(f'<rect class="frame" x="{MARGIN}" y="{MARGIN}" width="{w - 2 * MARGIN}" '
               f'height="{h - 2 * MARGIN}" fill="none" stroke="#ccc"/>')
    region = clipped_region(p, box)
    if region:
        pts = " ".join(f"{sx(a)},{sy(b)}" for a, b in region)
        out.append(f'<polygon class="region" points="{pts}" fill="#dde8f6" stroke="none"/>')
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            if p.contains((x, y)):
                out.append(f'<circle class="lattice-point" cx="{sx(x)}" cy="{sy(y)}" r="2" fill="#555"/>')
    for a, b in p.edges:
        out.append(f'<line class="edge-finite" x1="{sx(a[0])}" y1="{sy(a[1])}" '
                   f'x2="{sx(b[0])}" y2="{sy(b[1])}" stroke="#1a4f9c" stroke-width="2"/>')
    # infinite edges: along ray1 from the first vertex, along ray0 from the last
    for v, r in ((p.vertices[0], p.tail.ray1), (p.vertices[-1], p.tail.ray0)):
        s = _ray_exit(v, r, box)
        if s is None or s == 0:
            continue
        out.append(f'<line class="edge-infinite" x1="{sx(v[0])}" y1="{sy(v[1])}" '
                   f'x2="{sx(v[0] + s * r[0])}" y2="{sy(v[1] + s * r[1])}" '
                   f'stroke="#1a4f9c" stroke-width="2" stroke-dasharray="6,3"/>')
    for v in p.vertices:
        out.append(f'<circle class="vertex" cx="{sx(v[0])}" cy="{sy(v[1])}" r="4" fill="#c0392b"/>')
    # dual panel: normal fan rays scaled to a common length
    cx, cy = w + FAN_PANEL // 2, MARGIN + FAN_PANEL // 2
    out.append(f'<g class="fan" transform="translate({cx},{cy})">')
    rays = p.fan.rays
    m = max(max(abs(c) for c in r) for r in rays)
    for r in rays:
        ex = Fraction(r[0] * (FAN_PANEL // 2 - 10), m)
        ey = Fraction(-r[1] * (FAN_PANEL // 2 - 10), m)
        out.append(f'<line class="fan-ray" x1="0" y1="0" x2="{_num(ex)}" y2="{_num(ey)}" '
                   f'stroke="#333" marker-end="url(#arrow)"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def count_lattice_points(p: LatticePolyhedron, box: Box) -> int:
    x0, y0, x1, y1 = box
    return sum(1 for x in range(x0, x1 + 1) for y in range(y0, y1 + 1) if p.contains((x, y)))

