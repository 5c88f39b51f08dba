"""Static SVG picture of the face decomposition of a hyperplane in R^2_max.

The real window [-5, 5]^2 is drawn as a square.  Points with a coordinate
at -inf cannot be placed in the plane, so they go in gutter strips: a
vertical strip on the left for x1 = -inf, a horizontal strip at the
bottom for x2 = -inf, and a corner cell for (-inf, -inf).
"""
from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .faces import TYPE_I, TYPE_II, Hyperplane, KFace, face_catalog
from .hemispace import Hemispace

WINDOW = 5
SCALE = 40          # pixels per unit
GUTTER = 50         # gutter strip width in pixels
MARGIN = 20

PALETTE = ["#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
           "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"]
SIDE_COLORS = {True: "#4e79a7", False: "#e15759"}

# region -> which coordinates are -inf
REGIONS = {"plane": (), "left": (1,), "bottom": (2,), "corner": (1, 2)}


def _constraints(H: Hyperplane, f, neg: tuple):
    """Linear constraints on the finite coordinates for face ``f`` in a region.

    Returns ``(eqs, lts)`` where each item is a coefficient triple
    ``(a1, a2, c)`` meaning ``a1*x1 + a2*x2 + c (= or <) 0``, or None when
    the face misses the region entirely.
    """
    def term(i):
        if i == H.n + 1:
            return (0, 0, 0)
        if i in neg:
            return None
        return (1, 0, 0) if i == 1 else (0, 1, 0)

    def diff(a, b):
        return tuple(u - v for u, v in zip(a, b))

    finite_l = [l for l in H.L if l not in neg]
    if f is TYPE_II:
        return ([], []) if finite_l else None
    if finite_l:
        return None
    if f is TYPE_I:
        return ([], []) if all(i in neg for i in H.I | H.J) else None
    K = sorted(f.indices)
    ties = [term(i) for i in K]
    if any(t is None for t in ties):
        return None
    eqs = [diff(ties[0], t) for t in ties[1:]]
    lts = []
    for k in sorted(H.active - f.indices):
        tk = term(k)
        if tk is not None:
            lts.append(diff(tk, ties[0]))
    return eqs, lts


def _clip(poly, a1, a2, c):
    # Sutherland-Hodgman against a1*x + a2*y + c <= 0
    def val(p):
        return a1 * p[0] + a2 * p[1] + c

    out = []
    for k, cur in enumerate(poly):
        prev = poly[k - 1]
        vc, vp = val(cur), val(prev)
        if vc <= 0:
            if vp > 0:
                t = Fraction(vp, vp - vc)
                out.append((prev[0] + t * (cur[0] - prev[0]), prev[1] + t * (cur[1] - prev[1])))
            out.append(cur)
        elif vp <= 0:
            t = Fraction(vp, vp - vc)
            out.append((prev[0] + t * (cur[0] - prev[0]), prev[1] + t * (cur[1] - prev[1])))
    dedup = []
    for p in out:
        if not dedup or dedup[-1] != p:
            dedup.append(p)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


def _dim(points) -> int:
    pts = list(dict.fromkeys(points))
    if len(pts) <= 1:
        return len(pts) - 1
    (x0, y0) = pts[0]
    for (x1, y1) in pts[1:]:
        for (x2, y2) in pts[1:]:
            if (x1 - x0) * (y2 - y0) - (y1 - y0) * (x2 - x0) != 0:
                return 2
    return 1


def face_geometry(H: Hyperplane, f, region: str):
    """Clipped closure of ``f`` in ``region`` as (dimension, points), or None."""
    neg = REGIONS[region]
    cons = _constraints(H, f, neg)
    if cons is None:
        return None
    eqs, lts = cons
    free = [i for i in (1, 2) if i not in neg]
    W = WINDOW
    if len(free) == 2:
        poly = [(-W, -W), (W, -W), (W, W), (-W, W)]
    elif free == [1]:
        poly = [(-W, 0), (W, 0)]
    elif free == [2]:
        poly = [(0, -W), (0, W)]
    else:
        poly = [(0, 0)]
    for a1, a2, c in eqs:
        poly = _clip(poly, a1, a2, c)
        poly = _clip(poly, -a1, -a2, -c)
    for a1, a2, c in lts:
        poly = _clip(poly, a1, a2, c)
    if not poly:
        return None
    expected = len(free) - _rank([(a1, a2) for a1, a2, _ in eqs])
    d = _dim(poly)
    if d < expected:
        return None
    if d == 1:
        pts = sorted(set(poly))
        poly = [pts[0], pts[-1]]
    return d, poly


def _rank(rows) -> int:
    rows = [r for r in rows if r != (0, 0)]
    if not rows:
        return 0
    a = rows[0]
    return 2 if any(a[0] * b[1] - a[1] * b[0] != 0 for b in rows[1:]) else 1


def _to_px(region, p):
    gx = MARGIN + GUTTER
    size = 2 * WINDOW * SCALE
    x = gx + (p[0] + WINDOW) * SCALE if region in ("plane", "bottom") else MARGIN + GUTTER / 2
    y = MARGIN + size - (p[1] + WINDOW) * SCALE if region in ("plane", "left") else MARGIN + size + GUTTER / 2
    return float(x), float(y)


def face_label(H: Hyperplane, f) -> str:
    if f is TYPE_I:
        return "I"
    if f is TYPE_II:
        return "II"
    return "{" + ",".join("0" if i == H.n + 1 else str(i) for i in sorted(f.indices)) + "}"


def render_svg(H: Hyperplane, hm: Hemispace = None) -> str:
    """SVG text for the decomposition of ``H``; colors by side when ``hm`` is given."""
    if H.n != 2:
        raise ValueError("rendering is only available for n = 2")
    if hm is not None and hm.hyperplane != H:
        raise ValueError("hemispace is supported by a different hyperplane")
    size = 2 * WINDOW * SCALE
    width = height = 2 * MARGIN + GUTTER + size
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">',
           f'<rect x="{MARGIN + GUTTER}" y="{MARGIN}" width="{size}" height="{size}" fill="#ffffff" stroke="#333"/>',
           f'<rect x="{MARGIN}" y="{MARGIN}" width="{GUTTER}" height="{size}" fill="#eeeeee" stroke="#999"/>',
           f'<rect x="{MARGIN + GUTTER}" y="{MARGIN + size}" width="{size}" height="{GUTTER}" fill="#eeeeee" stroke="#999"/>',
           f'<rect x="{MARGIN}" y="{MARGIN + size}" width="{GUTTER}" height="{GUTTER}" fill="#dddddd" stroke="#999"/>',
           f'<text x="{MARGIN + 2}" y="{MARGIN - 6}">x1=-inf</text>',
           f'<text x="{MARGIN + GUTTER + size - 60}" y="{height - 4}">x2=-inf</text>',
           f'<title>{escape(str(H))}</title>']
    faces = face_catalog(H)
    shapes = []
    for idx, f in enumerate(faces):
        if hm is None:
            color = PALETTE[idx % len(PALETTE)]
        elif f is TYPE_II:
            color = SIDE_COLORS[bool(hm.type_ii)]
        elif f is TYPE_I:
            color = SIDE_COLORS[hm.type_i is True] if not isinstance(hm.type_i, Hemispace) else "#999999"
        else:
            color = SIDE_COLORS[f.indices in hm.owns]
        for region in REGIONS:
            geo = face_geometry(H, f, region)
            if geo is not None:
                shapes.append((geo[0], region, geo[1], color, face_label(H, f)))
    # higher-dimensional pieces first so lines and points stay visible
    for d, region, pts, color, label in sorted(shapes, key=lambda s: -s[0]):
        px = [_to_px(region, p) for p in pts]
        if d == 2:
            coords = " ".join(f"{x:.1f},{y:.1f}" for x, y in px)
            out.append(f'<polygon points="{coords}" fill="{color}" fill-opacity="0.45" stroke="none">'
                       f'<title>{label}</title></polygon>')
        elif d == 1:
            (x1, y1), (x2, y2) = px
            out.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" stroke="{color}" '
                       f'stroke-width="4"><title>{label}</title></line>')
        else:
            x, y = px[0]
            out.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="5" fill="{color}" stroke="#000">'
                       f'<title>{label}</title></circle>')
        cx = sum(x for x, _ in px) / len(px)
        cy = sum(y for _, y in px) / len(px)
        out.append(f'<text x="{cx + 4:.1f}" y="{cy - 4:.1f}">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
