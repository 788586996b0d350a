"""Random scenes for property checks.  All coordinates and coefficients are
small rationals so rational mode stays exact wherever the geometry allows."""

from __future__ import annotations

import random
from fractions import Fraction as Q

from .complex import build_complex, interval_complex, polygon_complex
from .field import PwAffineField
from .geometry import clip, dot, region_measure

PARAMS = (Q(1, 4), Q(1, 3), Q(1, 2), Q(2, 3), Q(3, 4))
UNIT_SQUARE = [(Q(0), Q(0)), (Q(1), Q(0)), (Q(1), Q(1)), (Q(0), Q(1))]


def _small(rng: random.Random, lo=-2, hi=2, den=(1, 2, 4)):
    return Q(rng.randint(lo * 4, hi * 4), 4) if den is None else Q(rng.randint(lo, hi), rng.choice(den))


# --- complexes --------------------------------------------------------------

def random_interval_complex(rng: random.Random, max_cells: int = 6, gaps: bool = True):
    n = rng.randint(1, max_cells)
    pts = sorted(rng.sample(range(1, 4 * n + 4), n + 1))
    if not gaps or rng.random() < 0.6:
        return interval_complex([Q(p, 4) for p in pts])
    cells = []
    for a, b in zip(pts, pts[1:]):
        if rng.random() < 0.25 and b - a > 1:
            a += 1          # leave a hole on the left of this cell
        cells.append((Q(a, 4), Q(b, 4)))
    return interval_complex(cells)


def _split(poly, rng):
    n = len(poly)
    i, j = rng.sample(range(n), 2)
    p = _on_edge(poly, i, rng.choice(PARAMS))
    r = _on_edge(poly, j, rng.choice(PARAMS))
    d = (r[0] - p[0], r[1] - p[1])
    normal = (-d[1], d[0])
    off = -dot(normal, p)
    a = clip(poly, normal, off)
    b = clip(poly, (-normal[0], -normal[1]), -off)
    if len(a) < 3 or len(b) < 3 or region_measure(a) == 0 or region_measure(b) == 0:
        return None
    return a, b


def _on_edge(poly, i, s):
    p, q = poly[i], poly[(i + 1) % len(poly)]
    return (p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1]))


def random_polygon_complex(rng: random.Random, max_cells: int = 8):
    """Unit square cut by random chords into at most ``max_cells`` convex cells."""
    polys = [UNIT_SQUARE]
    target = rng.randint(1, max_cells)
    tries = 0
    while len(polys) < target and tries < 50:
        tries += 1
        k = rng.randrange(len(polys))
        res = _split(polys[k], rng)
        if res is not None:
            polys[k:k + 1] = list(res)
    return polygon_complex(polys)


def random_rectangle_complex(rng: random.Random, max_cells: int = 8):
    """Guillotine cuts of the unit square: every facet length is rational."""
    rects = [(Q(0), Q(0), Q(1), Q(1))]
    target = rng.randint(1, max_cells)
    while len(rects) < target:
        k = rng.randrange(len(rects))
        x0, y0, x1, y1 = rects[k]
        s = rng.choice(PARAMS)
        if rng.random() < 0.5:
            m = x0 + s * (x1 - x0)
            new = [(x0, y0, m, y1), (m, y0, x1, y1)]
        else:
            m = y0 + s * (y1 - y0)
            new = [(x0, y0, x1, m), (x0, m, x1, y1)]
        rects[k:k + 1] = new
    return polygon_complex([[(a, b), (c, b), (c, d), (a, d)] for a, b, c, d in rects])


def random_complex(rng: random.Random, dim: int, max_cells: int = 8):
    return random_interval_complex(rng, min(max_cells, 6)) if dim == 1 else random_polygon_complex(rng, max_cells)


# --- fields -----------------------------------------------------------------

def random_slice_field(rng: random.Random, cx, allow_holes: bool = True) -> PwAffineField:
    """Non-negative affine pieces; some touch zero on the cell boundary and,
    optionally, some cells are left outside the support."""
    spec = {}
    cells = list(range(len(cx.cells)))
    off_support = set()
    if allow_holes and len(cells) > 1 and rng.random() < 0.2:
        off_support.add(rng.choice(cells))
    for c in cells:
        if c in off_support:
            continue
        g = tuple(_small(rng) for _ in range(cx.dim))
        vals = [dot(g, p) for p in cx.cells[c].vertices]
        lift = rng.choice((0, Q(1, 4), Q(1, 2), Q(1), Q(2)))
        if lift == 0 and all(x == 0 for x in g):
            lift = Q(1)
        spec[c] = (g, lift - min(vals))
    return PwAffineField.build(cx, spec, "v")


def random_step_field(rng: random.Random, cx, levels=(Q(1, 2), Q(1), Q(3, 2), Q(2))) -> PwAffineField:
    return PwAffineField.build(cx, {c: rng.choice(levels) for c in range(len(cx.cells))}, "v")


def random_barycenter(rng: random.Random, v: PwAffineField, kind: str | None = None) -> PwAffineField:
    """``kind``: ``affine`` (random pieces), ``steps`` (random constants),
    ``translate`` (one global constant) or ``zero``."""
    cx = v.complex
    kind = kind or rng.choice(("affine", "affine", "steps", "translate", "zero"))
    spec = {}
    shift = _small(rng)
    for c in sorted(v.support):
        if kind == "affine":
            spec[c] = (tuple(_small(rng) for _ in range(cx.dim)), _small(rng))
        elif kind == "steps":
            spec[c] = Q(rng.randint(-4, 4), 8)
        elif kind == "translate":
            spec[c] = shift
        else:
            spec[c] = 0
    return PwAffineField.build(cx, spec, "b")


def random_scene(rng: random.Random, dim: int, max_cells: int = 8, kind: str | None = None):
    cx = random_complex(rng, dim, max_cells)
    v = random_slice_field(rng, cx)
    return v, random_barycenter(rng, v, kind)


def random_dim1_profile(rng: random.Random, max_cells: int = 6) -> PwAffineField:
    """A slice length on the line mixing continuous joins, jumps and zeros."""
    cx = random_interval_complex(rng, max_cells)
    spec = {}
    prev_right = None
    prev_end = None
    for c, cell in enumerate(cx.cells):
        (a,), (b,) = cell.vertices
        touching = prev_end == a
        choices = (0, 0, Q(1, 2), Q(1), Q(2))
        left = prev_right if touching and prev_right is not None and rng.random() < 0.5 else rng.choice(choices)
        right = rng.choice(choices)
        if left == 0 and right == 0:
            right = Q(1)
        slope = (right - left) / (b - a)
        spec[c] = ((slope,), left - slope * a)
        prev_right, prev_end = right, b
    return PwAffineField.build(cx, spec, "v")


def random_continuous_field(rng: random.Random, grid: int = 2) -> PwAffineField:
    """Continuous piecewise-affine field on a triangulated grid from random
    vertex values; triangles with three zero corners leave the support."""
    n = grid
    h = Q(1, n)
    val = {(i, j): rng.choice((0, 0, 1, 2, 3)) for i in range(n + 1) for j in range(n + 1)}
    tris = []
    for i in range(n):
        for j in range(n):
            a, b, c, d = (i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)
            if rng.random() < 0.5:
                tris += [(a, b, c), (a, c, d)]
            else:
                tris += [(a, b, d), (b, c, d)]
    polys = [[(p[0] * h, p[1] * h) for p in t] for t in tris]
    cx = polygon_complex(polys)
    spec = {}
    for k, t in enumerate(tris):
        z = [val[p] for p in t]
        if all(x == 0 for x in z):
            continue
        spec[k] = _plane_through(polys[k], z)
    if not spec:
        return random_continuous_field(rng, grid)
    return PwAffineField.build(cx, spec, "v")


def _plane_through(pts, z):
    (x0, y0), (x1, y1), (x2, y2) = pts
    det = (x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0)
    gx = ((z[1] - z[0]) * (y2 - y0) - (z[2] - z[0]) * (y1 - y0)) / det
    gy = ((x1 - x0) * (z[2] - z[0]) - (x2 - x0) * (z[1] - z[0])) / det
    return ((gx, gy), z[0] - gx * x0 - gy * y0)


# --- facet portions ---------------------------------------------------------

def random_portions(rng: random.Random, cx, density: float = 0.5) -> dict:
    out = {}
    for f in cx.facets:
        if rng.random() > density:
            continue
        if cx.dim == 1:
            out[f.index] = [(Q(0), Q(1))]
        else:
            a, b = sorted(rng.sample([Q(0), Q(1, 4), Q(1, 3), Q(1, 2), Q(3, 4), Q(1)], 2))
            out[f.index] = [(a, b)] if rng.random() < 0.6 else [(Q(0), Q(1))]
    return out


def null_portions(rng: random.Random, cx) -> dict:
    """Measure-zero additions: isolated points on segment facets."""
    if cx.dim == 1:
        return {}
    out = {}
    for f in cx.facets:
        if rng.random() < 0.5:
            s = rng.choice(PARAMS)
            out[f.index] = [(s, s)]
    return out
