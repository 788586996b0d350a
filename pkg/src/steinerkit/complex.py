"""Base cell complexes: intervals on the line or convex polygons in the plane,
with facets discovered from exact boundary adjacency."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .arith import Arithmetic, arithmetic
from .geometry import cross, region_centroid, region_measure, segment_length, signed_area

EXTERIOR = -1


class ComplexError(ValueError):
    """Invalid cell geometry (overlap, non-convexity, degeneracy)."""


@dataclass(frozen=True)
class Cell:
    index: int
    label: str
    vertices: tuple  # ((a,), (b,)) or counterclockwise polygon
    measure: object
    centroid: tuple


@dataclass(frozen=True)
class Facet:
    """A boundary piece shared by ``cells[0]`` and ``cells[1]``.

    In the plane the segment runs ``endpoints[0] -> endpoints[1]`` along the
    counterclockwise boundary of ``cells[0]``.  On the line ``cells`` is
    ``(cell to the left, cell to the right)`` and the facet is a single point.
    Either side may be :data:`EXTERIOR`.
    """

    index: int
    cells: tuple
    endpoints: tuple
    measure: object

    @property
    def interior(self) -> bool:
        return EXTERIOR not in self.cells

    def point(self, s):
        p = self.endpoints[0]
        if len(self.endpoints) == 1:
            return p
        q = self.endpoints[1]
        return tuple(a + (b - a) * s for a, b in zip(p, q))

    def other(self, cell: int) -> int:
        a, b = self.cells
        return b if a == cell else a


@dataclass(frozen=True, eq=False)
class BaseCellComplex:
    dim: int
    cells: tuple
    facets: tuple
    arith: Arithmetic
    _labels: Mapping = field(repr=False, default_factory=dict)
    _cell_facets: Mapping = field(repr=False, default_factory=dict)

    @property
    def mode(self) -> str:
        return self.arith.mode

    def cell_index(self, key) -> int:
        if isinstance(key, int) and not isinstance(key, bool):
            if 0 <= key < len(self.cells):
                return key
            raise KeyError(f"no cell with index {key}")
        try:
            return self._labels[str(key)]
        except KeyError:
            raise KeyError(f"no cell labelled {key!r}") from None

    def facet(self, fid: int) -> Facet:
        if not isinstance(fid, int) or not 0 <= fid < len(self.facets):
            raise KeyError(f"unknown facet id {fid!r}")
        return self.facets[fid]

    def facets_of(self, cell: int) -> tuple:
        return self._cell_facets.get(cell, ())

    def interior_facets(self) -> list:
        return [f for f in self.facets if f.interior]

    def boundary_measure(self, cells: Iterable[int]):
        """Measure of the boundary of a union of cells (shared facets cancel)."""
        chosen = set(cells)
        total = 0
        for f in self.facets:
            a, b = f.cells
            if (a in chosen) != (b in chosen):
                total += f.measure
        return total


def build_complex(spec: Mapping) -> BaseCellComplex:
    """Build a complex from a scene-style mapping.

    ``spec`` has ``dim`` (1 or 2, optional), ``cells`` (entries with ``id``
    and either ``interval: [a, b]`` or ``vertices: [[x, y], ...]``) and
    ``arithmetic`` (``"rational"`` by default).
    """
    ar = arithmetic(spec.get("arithmetic", "rational"))
    raw = list(spec["cells"])
    if not raw:
        raise ComplexError("a complex needs at least one cell")
    dim = spec.get("dim")
    if dim is None:
        dim = 1 if "interval" in raw[0] else 2
    if dim not in (1, 2):
        raise ComplexError(f"base dimension must be 1 or 2, got {dim!r}")
    labels = []
    geoms = []
    for k, c in enumerate(raw):
        label = str(c.get("id", k))
        if label in labels:
            raise ComplexError(f"duplicate cell id {label!r}")
        labels.append(label)
        if dim == 1:
            if "interval" not in c:
                raise ComplexError(f"cell {label!r}: expected an interval")
            a, b = (ar.num(x) for x in c["interval"])
            geoms.append((a, b))
        else:
            if "vertices" not in c:
                raise ComplexError(f"cell {label!r}: expected vertices")
            geoms.append([tuple(ar.num(x) for x in p) for p in c["vertices"]])
    if dim == 1:
        return _build_1d(labels, geoms, ar)
    return _build_2d(labels, geoms, ar)


def interval_complex(intervals: Sequence, labels: Sequence | None = None,
                     arithmetic: str = "rational") -> BaseCellComplex:
    """Complex from a list of intervals ``[(a, b), ...]``, or from a sorted
    breakpoint list ``[z0, z1, ..., zk]`` giving contiguous cells."""
    items = list(intervals)
    if items and not isinstance(items[0], (tuple, list)):
        items = list(zip(items[:-1], items[1:]))
    labels = labels or [f"c{i}" for i in range(len(items))]
    return build_complex({"dim": 1, "arithmetic": arithmetic,
                          "cells": [{"id": l, "interval": list(iv)} for l, iv in zip(labels, items)]})


def polygon_complex(polygons: Sequence, labels: Sequence | None = None,
                    arithmetic: str = "rational") -> BaseCellComplex:
    labels = labels or [f"c{i}" for i in range(len(polygons))]
    return build_complex({"dim": 2, "arithmetic": arithmetic,
                          "cells": [{"id": l, "vertices": [list(p) for p in poly]}
                                    for l, poly in zip(labels, polygons)]})


def _finish(dim, labels, cells, raw_facets, ar) -> BaseCellComplex:
    def key(f):
        pts = f[1]
        mid = tuple(sum(c) / len(pts) for c in zip(*pts))
        return (mid, f[0])

    facets = []
    cell_facets: dict = {}
    for idx, (cpair, pts, meas) in enumerate(sorted(raw_facets, key=key)):
        facets.append(Facet(idx, cpair, pts, meas))
        for c in cpair:
            if c != EXTERIOR:
                cell_facets.setdefault(c, []).append(idx)
    return BaseCellComplex(dim, tuple(cells), tuple(facets), ar,
                           {l: i for i, l in enumerate(labels)},
                           {k: tuple(v) for k, v in cell_facets.items()})


def _build_1d(labels, geoms, ar) -> BaseCellComplex:
    cells = []
    for i, (a, b) in enumerate(geoms):
        if not b > a:
            raise ComplexError(f"cell {labels[i]!r}: degenerate interval [{a}, {b}]")
        region = ((a,), (b,))
        cells.append(Cell(i, labels[i], region, b - a, region_centroid(region)))
    order = sorted(range(len(geoms)), key=lambda i: geoms[i])
    for i, j in zip(order, order[1:]):
        if geoms[j][0] < geoms[i][1]:
            raise ComplexError(f"cells {labels[i]!r} and {labels[j]!r} overlap")
    left_of: dict = {}
    right_of: dict = {}
    for i, (a, b) in enumerate(geoms):
        right_of[a] = i
        left_of[b] = i
    raw = []
    one = ar.num(1)
    for z in sorted(set(left_of) | set(right_of)):
        pair = (left_of.get(z, EXTERIOR), right_of.get(z, EXTERIOR))
        raw.append((pair, ((z,),), one))
    return _finish(1, labels, cells, raw, ar)


def _check_convex(label, pts) -> list:
    if len(pts) < 3:
        raise ComplexError(f"cell {label!r}: a polygon needs at least 3 vertices")
    n = len(pts)
    for i in range(n):
        if pts[i] == pts[(i + 1) % n]:
            raise ComplexError(f"cell {label!r}: repeated vertex {pts[i]}")
    area = signed_area(pts)
    if area == 0:
        raise ComplexError(f"cell {label!r}: zero-area polygon")
    if area < 0:
        pts = pts[::-1]
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        for r in pts:
            if cross(p, q, r) < 0:
                raise ComplexError(f"cell {label!r}: polygon is not convex")
    return pts


def _separated(a, b, tol=0) -> bool:
    """True if the convex polygons ``a`` and ``b`` have disjoint interiors."""
    for poly, other in ((a, b), (b, a)):
        n = len(poly)
        for i in range(n):
            p, q = poly[i], poly[(i + 1) % n]
            if all(cross(p, q, r) <= tol for r in other):
                return True
    return False


def _param(p, d, x):
    return ((x[0] - p[0]) * d[0] + (x[1] - p[1]) * d[1]) / (d[0] * d[0] + d[1] * d[1])


def _build_2d(labels, geoms, ar) -> BaseCellComplex:
    polys = [_check_convex(labels[i], g) for i, g in enumerate(geoms)]
    cells = []
    for i, pts in enumerate(polys):
        region = tuple(pts)
        cells.append(Cell(i, labels[i], region, region_measure(region), region_centroid(region)))
    bbox = [(min(p[0] for p in P), min(p[1] for p in P), max(p[0] for p in P), max(p[1] for p in P))
            for P in polys]
    near: dict = {i: [] for i in range(len(polys))}
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            bi, bj = bbox[i], bbox[j]
            if bi[0] > bj[2] or bj[0] > bi[2] or bi[1] > bj[3] or bj[1] > bi[3]:
                continue
            if not _separated(polys[i], polys[j], 0 if ar.exact else 1e-12):
                raise ComplexError(f"cells {labels[i]!r} and {labels[j]!r} overlap")
            near[i].append(j)
            near[j].append(i)
    raw = []
    for i, P in enumerate(polys):
        n = len(P)
        for k in range(n):
            p, q = P[k], P[(k + 1) % n]
            d = (q[0] - p[0], q[1] - p[1])
            pieces = []
            for j in near[i]:
                Q = polys[j]
                m = len(Q)
                for l in range(m):
                    a, b = Q[l], Q[(l + 1) % m]
                    if not ar.is_zero(cross(p, q, a)) or not ar.is_zero(cross(p, q, b)):
                        continue
                    sa, sb = _param(p, d, a), _param(p, d, b)
                    lo, hi = max(0, min(sa, sb)), min(1, max(sa, sb))
                    if hi > lo:
                        pieces.append((lo, hi, j))
            pieces.sort()
            for (l0, h0, j0), (l1, h1, j1) in zip(pieces, pieces[1:]):
                if l1 < h0:
                    raise ComplexError(f"cells {labels[j0]!r} and {labels[j1]!r} overlap")
            cursor = 0
            for lo, hi, j in pieces + [(1, 1, None)]:
                if lo > cursor:
                    a = _lerp(p, d, cursor)
                    b = _lerp(p, d, lo)
                    raw.append(((i, EXTERIOR), (a, b), segment_length(a, b)))
                if j is not None and i < j:
                    a, b = _lerp(p, d, lo), _lerp(p, d, hi)
                    raw.append(((i, j), (a, b), segment_length(a, b)))
                cursor = max(cursor, hi)
    return _finish(2, labels, cells, raw, ar)


def _lerp(p, d, s):
    return (p[0] + d[0] * s, p[1] + d[1] * s)
