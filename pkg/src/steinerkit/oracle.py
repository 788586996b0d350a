"""Boundary measure of a vertically convex set, computed from its explicit
polyhedral boundary.

This module deliberately shares nothing with the formula engine: it walks
the boundary pieces (graph polygons of the two bounding functions and the
vertical walls above facets) and measures each one directly.
"""

from __future__ import annotations

from .complex import EXTERIOR
from .geometry import convex_intersection, segment_length, signed_area
from .polyset import PolyVerticalSet


def _interval_symdiff(a, b):
    la = a[1] - a[0] if a else 0
    lb = b[1] - b[0] if b else 0
    if a and b:
        common = max(0, min(a[1], b[1]) - max(a[0], b[0]))
    else:
        common = 0
    return la + lb - 2 * common


def _lifted_area(pts, piece, ar):
    """Area of the planar polygon over ``pts`` lying on the graph of ``piece``
    (Newell's formula on the lifted 3D vertices)."""
    lifted = [(x, y, piece((x, y))) for x, y in pts]
    nx = ny = nz = 0
    n = len(lifted)
    for i in range(n):
        x0, y0, z0 = lifted[i]
        x1, y1, z1 = lifted[(i + 1) % n]
        nx += (y0 - y1) * (z0 + z1)
        ny += (z0 - z1) * (x0 + x1)
        nz += (x0 - x1) * (y0 + y1)
    return ar.sqrt(nx * nx + ny * ny + nz * nz) / 2


def _trapezoid(lo, hi):
    """Region {(s, t) : lo(s) < t < hi(s), 0 <= s <= 1} as a ccw polygon."""
    pts = [(0, lo[0]), (1, lo[1]), (1, hi[1]), (0, hi[0])]
    out = []
    for p in pts:
        if not out or out[-1] != p:
            out.append(p)
    if out[0] == out[-1]:
        out.pop()
    return out if len(out) >= 3 and signed_area(out) != 0 else []


def oracle_perimeter(E: PolyVerticalSet):
    """Total boundary measure of ``E`` (length for planar sets, area in space)."""
    cx = E.complex
    ar = cx.arith
    lo, hi = E.lower, E.upper
    supp = E.support
    total = ar.num(0)

    for c in sorted(supp):
        verts = cx.cells[c].vertices
        if cx.dim == 1:
            (a,), (b,) = verts
            for g in (lo, hi):
                total += segment_length((a, g.value(c, (a,))), (b, g.value(c, (b,))))
        else:
            total += _lifted_area(verts, lo.piece(c), ar)
            total += _lifted_area(verts, hi.piece(c), ar)

    for f in cx.facets:
        sides = []
        for c in f.cells:
            if c == EXTERIOR or c not in supp:
                sides.append(None)
                continue
            ends = f.endpoints if len(f.endpoints) == 2 else f.endpoints * 2
            sides.append((tuple(lo.value(c, p) for p in ends), tuple(hi.value(c, p) for p in ends)))
        if sides[0] is None and sides[1] is None:
            continue
        if cx.dim == 1:
            ivs = [(s[0][0], s[1][0]) if s else None for s in sides]
            ivs = [iv if iv and iv[1] > iv[0] else None for iv in ivs]
            total += _interval_symdiff(ivs[0], ivs[1]) * f.measure
        else:
            polys = [_trapezoid(*s) if s else [] for s in sides]
            areas = [abs(signed_area(p)) if p else 0 for p in polys]
            common = 0
            if polys[0] and polys[1]:
                inter = convex_intersection(polys[0], polys[1])
                common = abs(signed_area(inter)) if inter else 0
            # the (s, t) chart stretches s by the facet length
            total += (areas[0] + areas[1] - 2 * common) * f.measure
    return total
