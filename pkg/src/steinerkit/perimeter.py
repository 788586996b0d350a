"""Perimeter of vertically convex sets from slice data.

Three formula modes share one engine:

``F``  symmetral of ``v``: graph area ``2*sqrt(1 + |grad v / 2|^2)`` plus the
       jump ``[v]`` along facets.
``W``  sections of length ``v`` centred at ``b``: graph areas of ``b +- v/2``
       plus ``min(v_sup + v_inf, max([v], 2[b]))`` along facets.
``U``  region between ``u1 <= u2``: graph areas of ``u1``, ``u2`` plus
       ``min(2(u2~ - u1~), [u1] + [u2])`` along facets, where ``u~`` is the
       mean of the one-sided traces.

Cantor parts vanish identically for piecewise-affine fields, so no such
term appears.  Facets where the lower limit of ``v`` vanishes on the whole
facet are booked as ``boundary_zero_part``; there every mode's integrand
reduces to the upper limit of ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .complex import EXTERIOR
from .field import FieldError, PwAffineField, classify_facet, facet_traces, validate_slice_length
from .geometry import (affine_at, clip, convex_intersection, crossings, integrate_unit,
                       polygon_perimeter, region_measure, segment_length)
from .polyset import PolyVerticalSet

MODES = ("F", "W", "U")


@dataclass(frozen=True)
class Region:
    """A filter on cells (area terms) and facets (jump terms); ``None`` = all."""

    cells: frozenset | None = None
    facets: frozenset | None = None

    def has_cell(self, c: int) -> bool:
        return self.cells is None or c in self.cells

    def has_facet(self, f: int) -> bool:
        return self.facets is None or f in self.facets


@dataclass
class PerimeterBreakdown:
    mode: str
    ac_part: object
    jump_part: object
    boundary_zero_part: object
    region: Region | None = None
    cell_terms: dict = field(default_factory=dict)    # cell -> area term
    facet_terms: dict = field(default_factory=dict)   # facet -> (jump term, boundary term)

    @property
    def total(self):
        return self.ac_part + self.jump_part + self.boundary_zero_part


def _norm_sqrt(ar, grad):
    return ar.sqrt(1 + sum(g * g for g in grad))


def perimeter_formula(mode: str, *fields: PwAffineField, region: Region | None = None) -> PerimeterBreakdown:
    """Perimeter breakdown of ``F[v]`` (mode F, fields ``v``), ``W[v, b]``
    (mode W, fields ``v, b``) or the set between ``u1 <= u2`` (mode U)."""
    if mode not in MODES:
        raise ValueError(f"unknown perimeter mode {mode!r}")
    need = {"F": 1, "W": 2, "U": 2}[mode]
    if len(fields) != need:
        raise ValueError(f"mode {mode} takes {need} field(s), got {len(fields)}")
    cx = fields[0].complex
    if any(f.complex is not cx for f in fields):
        raise FieldError("fields live on different complexes")
    ar = cx.arith
    half = ar.num("1/2")
    if mode == "U":
        u1, u2 = fields
        v = (u2 - u1).renamed("v")
        for c in sorted(v.support):
            if any(ar.sign(x) < 0 for x in v.vertex_values(c)):
                raise FieldError("mode U needs u1 <= u2")
    else:
        v = fields[0]
        validate_slice_length(v)
        b = fields[1] if mode == "W" else None
        if b is not None:
            b = b.restrict(v.support, "b")

    region = region or Region()
    zero = ar.num(0)
    out = PerimeterBreakdown(mode, zero, zero, zero, region)

    for c in sorted(v.support):
        if not region.has_cell(c):
            continue
        if all(ar.is_zero(x) for x in v.vertex_values(c)):
            continue  # u1 == u2 on the whole cell
        area = cx.cells[c].measure
        gv = v.gradient(c)
        if mode == "F":
            term = 2 * _norm_sqrt(ar, [g * half for g in gv]) * area
        elif mode == "W":
            gb = b.gradient(c)
            term = (_norm_sqrt(ar, [x + y * half for x, y in zip(gb, gv)])
                    + _norm_sqrt(ar, [x - y * half for x, y in zip(gb, gv)])) * area
        else:
            term = (_norm_sqrt(ar, u1.gradient(c)) + _norm_sqrt(ar, u2.gradient(c))) * area
        out.cell_terms[c] = term
        out.ac_part += term

    for f in cx.facets:
        if not region.has_facet(f.index):
            continue
        tv = facet_traces(v, f)
        if mode == "F":
            d = tv.difference
            atoms = [d, tuple(-x for x in d)]
            integrand = lambda s, tv=tv: tv.jump_at(s)
        elif mode == "W":
            tb = facet_traces(b, f)
            S, D = tv.mean_sum, tv.difference
            B2 = tuple(2 * x for x in tb.difference)
            atoms = [S, D, tuple(-x for x in D), B2, tuple(-x for x in B2)]

            def integrand(s, tv=tv, tb=tb):
                vl, vr = tv.at(s)
                bl, br = tb.at(s)
                return min(vl + vr, max(abs(vl - vr), 2 * abs(bl - br)))
        else:
            t1, t2 = facet_traces(u1, f), facet_traces(u2, f)
            A = tuple(b2 - b1 for b1, b2 in zip(t1.mean_sum, t2.mean_sum))
            d1, d2 = t1.difference, t2.difference
            atoms = [A, d1, d2] + [tuple(p * x + q * y for x, y in zip(d1, d2))
                                   for p in (1, -1) for q in (1, -1)]

            def integrand(s, t1=t1, t2=t2):
                a1, b1 = t1.at(s)
                a2, b2 = t2.at(s)
                return min((a2 + b2) - (a1 + b1), abs(a1 - b1) + abs(a2 - b2))
        val = integrate_unit(integrand, atoms) * f.measure
        if val == 0:
            continue
        if classify_facet(v, f).fully_zero:
            out.facet_terms[f.index] = (zero, val)
            out.boundary_zero_part += val
        else:
            out.facet_terms[f.index] = (val, zero)
            out.jump_part += val
    return out


# --- coarea identity for piecewise-constant barycenters ---------------------

def coarea_check(b: PwAffineField, region: Iterable[int] | None = None) -> tuple:
    """Compare the integral over t of the measure of the essential boundary
    of ``{b > t}`` inside ``region`` (facet ids) with the jump integral of
    ``b`` over the same facets.  Returns ``(lhs, rhs, equal)``."""
    if not b.is_piecewise_constant():
        raise FieldError("coarea_check needs a piecewise-constant field")
    cx = b.complex
    ar = cx.arith
    facets = [cx.facets[i] for i in sorted(set(region))] if region is not None else list(cx.facets)
    level = {c: b.piece(c).offset for c in b.support}
    value = lambda c: level.get(c, ar.num(0)) if c != EXTERIOR else ar.num(0)
    levels = sorted(set(level.values()) | {ar.num(0)})
    lhs = ar.num(0)
    for lo, hi in zip(levels, levels[1:]):
        t = (lo + hi) / 2
        cut = sum((f.measure for f in facets
                   if (value(f.cells[0]) > t) != (value(f.cells[1]) > t)), ar.num(0))
        lhs += (hi - lo) * cut
    rhs = ar.num(0)
    for f in facets:
        rhs += abs(value(f.cells[0]) - value(f.cells[1])) * f.measure
    equal = (lhs == rhs) if ar.exact else abs(lhs - rhs) <= 1e-9 * max(1, abs(rhs))
    return lhs, rhs, equal


# --- horizontal slices --------------------------------------------------------

def _slice_perimeter(E: PolyVerticalSet, t):
    """Perimeter (in the base) of ``{z : u1(z) < t < u2(z)}``."""
    cx = E.complex
    lo, hi = E.lower, E.upper
    total = 0
    for c in sorted(E.support):
        region = list(cx.cells[c].vertices)
        p1, p2 = lo.piece(c), hi.piece(c)
        r = clip(region, tuple(-g for g in p1.grad), t - p1.offset)   # u1 <= t
        if r:
            r = clip(r, p2.grad, p2.offset - t)                        # u2 >= t
        if not r or region_measure(r) == 0:
            continue
        total += 2 if cx.dim == 1 else polygon_perimeter(r)
    for f in cx.interior_facets():
        a, b = f.cells
        if a not in E.support or b not in E.support:
            continue
        shared = _inside_portion(E, f, a, t)
        other = _inside_portion(E, f, b, t)
        if shared and other:
            s0, s1 = max(shared[0], other[0]), min(shared[1], other[1])
            if s1 > s0 or (cx.dim == 1 and s1 >= s0):
                total -= 2 * (f.measure if cx.dim == 1 else f.measure * (s1 - s0))
    return total


def _inside_portion(E, f, cell, t):
    """Parameter interval of the facet where the open slice at level ``t``
    touches it from ``cell``."""
    ends = f.endpoints if len(f.endpoints) == 2 else f.endpoints * 2
    l = tuple(E.lower.value(cell, p) for p in ends)
    u = tuple(E.upper.value(cell, p) for p in ends)
    lo, hi = 0, 1
    for g, sign in ((l, -1), (u, 1)):
        # need sign*(g(s) - t) > 0
        g0, g1 = sign * (g[0] - t), sign * (g[1] - t)
        if g0 <= 0 and g1 <= 0:
            return None
        if g0 > 0 and g1 > 0:
            continue
        s = g0 / (g0 - g1)
        if g0 > 0:
            hi = min(hi, s)
        else:
            lo = max(lo, s)
    return (lo, hi) if hi >= lo else None


def _slice_levels(E: PolyVerticalSet) -> list:
    cx = E.complex
    levels = set()
    for c in E.support:
        for p in cx.cells[c].vertices:
            levels.add(E.lower.value(c, p))
            levels.add(E.upper.value(c, p))
    for f in cx.facets:
        ends = f.endpoints if len(f.endpoints) == 2 else f.endpoints * 2
        fns = []
        for c in f.cells:
            if c in E.support:
                fns.append(tuple(E.lower.value(c, p) for p in ends))
                fns.append(tuple(E.upper.value(c, p) for p in ends))
        for s in crossings(fns):
            levels.update(affine_at(g, s) for g in fns)
    return sorted(levels)


def slice_integral(E: PolyVerticalSet):
    """Integral over t of the base perimeter of the horizontal slice at t.

    The integrand is affine in t between consecutive critical levels, so the
    midpoint rule is exact there."""
    levels = _slice_levels(E)
    total = E.complex.arith.num(0)
    for a, b in zip(levels, levels[1:]):
        if b > a:
            total += (b - a) * _slice_perimeter(E, (a + b) / 2)
    return total


def slice_inequality_check(E: PolyVerticalSet, tol: float = 1e-9) -> tuple:
    """``(lhs, rhs, holds)`` with lhs the slice-perimeter integral and rhs the
    oracle perimeter of ``E``."""
    from .oracle import oracle_perimeter

    lhs = slice_integral(E)
    rhs = oracle_perimeter(E)
    return lhs, rhs, lhs <= rhs + tol * max(1, abs(rhs))
