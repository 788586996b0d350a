"""Sets lying between two piecewise-affine graphs over a cell complex."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .field import FieldError, PwAffineField, facet_traces, positive_support, validate_slice_length
from .geometry import clip, integrate_affine, region_measure


class PolysetError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class PolyVerticalSet:
    """``{(z, t) : lower(z) < t < upper(z)}`` over the support cells.

    Every vertical section is a segment, so the slice length is
    ``upper - lower`` and the barycenter is the midpoint.
    """

    lower: PwAffineField
    upper: PwAffineField

    def __post_init__(self):
        if self.lower.complex is not self.upper.complex:
            raise PolysetError("lower and upper graphs live on different complexes")
        ar = self.complex.arith
        for c in sorted(self.lower.support | self.upper.support):
            lo = self.lower.vertex_values(c)
            hi = self.upper.vertex_values(c)
            if any(ar.sign(h - l) < 0 for l, h in zip(lo, hi)):
                raise PolysetError(f"lower graph exceeds upper graph on cell "
                                   f"{self.complex.cells[c].label!r}")

    @property
    def complex(self):
        return self.lower.complex

    @cached_property
    def slice_length(self) -> PwAffineField:
        return (self.upper - self.lower).restrict(self.support, "v")

    @cached_property
    def barycenter(self) -> PwAffineField:
        return (self.upper + self.lower).scale("1/2").restrict(self.support, "b")

    @cached_property
    def support(self) -> frozenset:
        return positive_support(self.upper - self.lower)


def _as_set(lower: PwAffineField, upper: PwAffineField, support) -> PolyVerticalSet:
    return PolyVerticalSet(lower.restrict(support, "u1"), upper.restrict(support, "u2"))


def steiner_symmetral(v: PwAffineField) -> PolyVerticalSet:
    """The set whose section over ``z`` is the segment of length ``v(z)``
    centred at height 0."""
    validate_slice_length(v)
    half = v.scale("1/2")
    return _as_set(half.scale(-1), half, v.support)


def build_W(v: PwAffineField, b: PwAffineField) -> PolyVerticalSet:
    """Sections of length ``v`` centred at ``b``."""
    if v.complex is not b.complex:
        raise PolysetError("v and b live on different complexes")
    validate_slice_length(v)
    half = v.scale("1/2")
    return _as_set(b - half, b + half, v.support)


def slice_and_barycenter(E: PolyVerticalSet) -> tuple:
    return E.slice_length, E.barycenter


def volume(E: PolyVerticalSet):
    return E.slice_length.integral()


def translate_over_partition(v: PwAffineField, parts: Mapping, offsets: Mapping) -> PolyVerticalSet:
    """Lift the part of the symmetral over each group of cells by its offset.

    ``parts`` maps cells (index or label) to a part id, ``offsets`` maps part
    ids to vertical offsets.
    """
    cx = v.complex
    assign = {cx.cell_index(k): p for k, p in parts.items()}
    missing = [cx.cells[c].label for c in sorted(v.support) if c not in assign]
    if missing:
        raise PolysetError(f"support cells without a part: {missing}")
    spec = {}
    for c in sorted(v.support):
        off = offsets[assign[c]]
        if isinstance(off, float) and not math.isfinite(off):
            raise PolysetError("offsets must be finite")
        spec[c] = off
    b = PwAffineField.build(cx, spec, "b")
    return build_W(v, b)


def _is_continuous(f: PwAffineField) -> bool:
    ar = f.complex.arith
    for facet in f.complex.facets:
        tr = facet_traces(f, facet)
        if any(not ar.is_zero(d) for d in tr.difference):
            return False
    return True


def prop14_construct(v1: PwAffineField, v2: PwAffineField, lam) -> PolyVerticalSet:
    """Equality case built from a jump-free part ``v1`` and a piecewise
    constant part ``v2``: sections ``[-lam*v2 - v1/2, v1/2 + (1-lam)*v2]``."""
    cx = v1.complex
    if v2.complex is not cx:
        raise PolysetError("v1 and v2 live on different complexes")
    ar = cx.arith
    lam = ar.num(lam)
    if not 0 <= lam <= 1:
        raise PolysetError("lambda must lie in [0, 1]")
    if lam * 2 == 1:
        raise PolysetError("lambda = 1/2 gives back the symmetral itself")
    if not _is_continuous(v1):
        raise PolysetError("v1 must have no jumps (including at the support boundary)")
    if not v2.is_piecewise_constant():
        raise PolysetError("v2 must be piecewise constant")
    for f in (v1, v2):
        for c in f.support:
            if any(ar.sign(x) < 0 for x in f.vertex_values(c)):
                raise PolysetError(f"{f.name} must be non-negative")
    v = (v1 + v2).renamed("v")
    supp = positive_support(v)
    v = v.restrict(supp)
    validate_slice_length(v)
    levels = {v2.piece(c).offset for c in supp}
    if len(levels) < 2:
        raise PolysetError("v2 is constant on the support of v")
    half1 = v1.scale("1/2")
    lower = v2.scale(-lam) - half1
    upper = half1 + v2.scale(1 - lam)
    return _as_set(lower, upper, supp)


# --- distance to vertical translates ---------------------------------------

def _symdiff_on_cell(region, w, v):
    """Integral over ``region`` of 2*min(|w|, v) for affine ``w``, ``v``
    given as (grad, off) pairs."""
    (gw, cw), (gv, cv) = w, v
    neg = lambda g, c: (tuple(-x for x in g), -c)
    diff = (tuple(a - b for a, b in zip(gw, gv)), cw - cv)       # w - v
    summ = (tuple(a + b for a, b in zip(gw, gv)), cw + cv)       # w + v
    total = 0
    # w >= 0 and w <= v: integrand w ; w >= v: integrand v
    pos = clip(region, gw, cw)
    if pos:
        r = clip(pos, *neg(*diff))
        if r:
            total += integrate_affine(r, gw, cw)
        r = clip(pos, *diff)
        if r:
            total += integrate_affine(r, gv, cv)
    # w <= 0 and -w <= v: integrand -w ; -w >= v: integrand v
    nw = neg(gw, cw)
    negpart = clip(region, *nw)
    if negpart:
        r = clip(negpart, *summ)
        if r:
            total += integrate_affine(r, *nw)
        r = clip(negpart, *neg(*summ))
        if r:
            total += integrate_affine(r, gv, cv)
    return 2 * total


def symdiff_to_translate(E: PolyVerticalSet, t):
    """Volume of ``E`` symmetric-difference the symmetral lifted by ``t``."""
    v, b = E.slice_length, E.barycenter
    cx = E.complex
    total = cx.arith.num(0)
    for c in sorted(E.support):
        pv, pb = v.piece(c), b.piece(c)
        region = list(cx.cells[c].vertices)
        if region_measure(region) == 0:
            continue
        total += _symdiff_on_cell(region, (pb.grad, pb.offset - t), (pv.grad, pv.offset))
    return total


def min_translate_symdiff(E: PolyVerticalSet, v: PwAffineField) -> tuple:
    """Minimise over ``t`` the volume of ``E`` symmetric-difference ``t e_n + F[v]``.

    Returns ``(t_star, value)``.  For piecewise-constant barycenters the
    objective is concave between consecutive barycenter levels, so the
    minimum sits at one of them and is found exactly.  Otherwise the exact
    breakpoint candidates are refined by a bounded scalar search.
    """
    if not E.slice_length.same_as(v.restrict(v.support)) or E.support != positive_support(v):
        raise PolysetError("E is not distributed according to v")
    cx = E.complex
    b = E.barycenter
    cands = set()
    for c in sorted(E.support):
        for p in cx.cells[c].vertices:
            bv, vv = b.value(c, p), v.value(c, p)
            cands.update((bv, bv - vv, bv + vv))
    cands = sorted(cands)
    best = min(((symdiff_to_translate(E, t), t) for t in cands), key=lambda x: (x[0], x[1]))
    if not b.is_piecewise_constant():
        from scipy.optimize import minimize_scalar

        f = lambda t: float(symdiff_to_translate(E, float(t)))
        for lo, hi in zip(cands, cands[1:]):
            if hi <= lo:
                continue
            r = minimize_scalar(f, bounds=(float(lo), float(hi)), method="bounded",
                                options={"xatol": 1e-12})
            if r.fun < best[0]:
                best = (r.fun, float(r.x))
    value, t = best
    return t, value
