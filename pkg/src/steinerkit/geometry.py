"""Exact convex-region primitives shared by the complex, the formula engine
and the oracle.

Points are tuples (``(z,)`` on the line, ``(x, y)`` in the plane).  A convex
region is a list of vertices: two points for an interval, a counterclockwise
polygon in the plane.  All routines are generic over Fraction/float.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .arith import exact_sqrt


def dot(g: Sequence, p: Sequence):
    return sum(gi * pi for gi, pi in zip(g, p))


def cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def signed_area(pts: Sequence) -> object:
    n = len(pts)
    s = 0
    for i in range(n):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return s / 2


def region_measure(region: Sequence):
    """Length of an interval or area of a convex polygon."""
    if len(region[0]) == 1:
        return region[1][0] - region[0][0]
    if len(region) < 3:
        return 0
    return abs(signed_area(region))


def region_centroid(region: Sequence):
    if len(region[0]) == 1:
        return ((region[0][0] + region[1][0]) / 2,)
    a = signed_area(region)
    n = len(region)
    cx = cy = 0
    for i in range(n):
        x0, y0 = region[i]
        x1, y1 = region[(i + 1) % n]
        w = x0 * y1 - x1 * y0
        cx += (x0 + x1) * w
        cy += (y0 + y1) * w
    return (cx / (6 * a), cy / (6 * a))


def integrate_affine(region: Sequence, grad: Sequence, off):
    """Exact integral of ``z -> grad.z + off`` over a convex region."""
    m = region_measure(region)
    if m == 0:
        return 0 * m
    return m * (dot(grad, region_centroid(region)) + off)


def clip(region: Sequence, grad: Sequence, off) -> list:
    """Part of a convex region where ``grad.z + off >= 0`` (may be empty)."""
    if not region:
        return []
    if len(region[0]) == 1:
        (a,), (b,) = region
        fa = grad[0] * a + off
        fb = grad[0] * b + off
        if fa >= 0 and fb >= 0:
            return [(a,), (b,)]
        if fa < 0 and fb < 0:
            return []
        z = a + (b - a) * fa / (fa - fb)
        lo, hi = ((a, z) if fa >= 0 else (z, b))
        return [(lo,), (hi,)] if hi > lo else []
    out = []
    n = len(region)
    vals = [dot(grad, p) + off for p in region]
    for i in range(n):
        p, q = region[i], region[(i + 1) % n]
        fp, fq = vals[i], vals[(i + 1) % n]
        if fp >= 0:
            out.append(p)
        if (fp >= 0) != (fq >= 0):
            t = fp / (fp - fq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return _dedupe(out)


def _dedupe(pts: list) -> list:
    res = []
    for p in pts:
        if not res or res[-1] != p:
            res.append(p)
    if len(res) > 1 and res[0] == res[-1]:
        res.pop()
    return res if len(res) >= 3 else []


def segment_length(p, q):
    return exact_sqrt(sum((a - b) ** 2 for a, b in zip(p, q)))


def polygon_perimeter(pts: Sequence):
    n = len(pts)
    return sum(segment_length(pts[i], pts[(i + 1) % n]) for i in range(n))


def convex_intersection(a: Sequence, b: Sequence) -> list:
    """Intersection of two counterclockwise convex polygons (Sutherland-Hodgman)."""
    out = list(a)
    n = len(b)
    for i in range(n):
        if not out:
            return []
        p, q = b[i], b[(i + 1) % n]
        if p == q:
            continue
        # inside = left of p->q
        g = (-(q[1] - p[1]), q[0] - p[0])
        out = clip(out, g, -dot(g, p))
    return out


# --- piecewise-affine functions on the unit parameter interval -------------

def affine_at(f: tuple, s):
    """Value at ``s`` of the affine function with endpoint values ``f``."""
    return f[0] + (f[1] - f[0]) * s


def crossings(atoms: Sequence[tuple]) -> list:
    """Sorted parameters in [0, 1] where two of the affine atoms meet."""
    pts = {0, 1}
    m = len(atoms)
    for i in range(m):
        for j in range(i + 1, m):
            d0 = atoms[i][0] - atoms[j][0]
            d1 = atoms[i][1] - atoms[j][1]
            if d0 == d1:
                continue
            s = d0 / (d0 - d1)
            if 0 < s < 1:
                pts.add(s)
    return sorted(pts)


def integrate_unit(fn: Callable, atoms: Sequence[tuple]):
    """Integral over [0, 1] of a continuous function that is affine between
    the crossing parameters of ``atoms`` (trapezoid rule is then exact)."""
    bps = crossings(list(atoms) + [(0, 0)])
    vals = [fn(s) for s in bps]
    total = 0
    for i in range(len(bps) - 1):
        total += (bps[i + 1] - bps[i]) * (vals[i] + vals[i + 1]) / 2
    return total


def affine_zero_set(f: tuple, is_zero: Callable) -> list:
    """Zero set in [0, 1] of an affine function that is >= 0 there."""
    z0, z1 = is_zero(f[0]), is_zero(f[1])
    if z0 and z1:
        return [(0, 1)]
    if z0:
        return [(0, 0)]
    if z1:
        return [(1, 1)]
    return []


def merge_intervals(intervals) -> list:
    items = sorted((min(a, b), max(a, b)) for a, b in intervals)
    out: list = []
    for a, b in items:
        if out and a <= out[-1][1]:
            if b > out[-1][1]:
                out[-1] = (out[-1][0], b)
        else:
            out.append((a, b))
    return out


def covered_length(intervals) -> object:
    return sum((b - a for a, b in merge_intervals(intervals)), 0)


def superlevel_intervals(f: tuple, level) -> list:
    """Closure of {s in [0, 1] : f(s) > level} for affine ``f``."""
    f0, f1 = f[0] - level, f[1] - level
    if f0 > 0 and f1 > 0:
        return [(0, 1)]
    if f0 <= 0 and f1 <= 0:
        return []
    s = f0 / (f0 - f1)
    return [(0, s)] if f0 > 0 else [(s, 1)]
