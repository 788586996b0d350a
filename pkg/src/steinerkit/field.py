"""Piecewise-affine fields on a cell complex and their facet traces."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .complex import EXTERIOR, BaseCellComplex, Facet
from .geometry import affine_zero_set, covered_length, dot, integrate_affine, merge_intervals


class FieldError(ValueError):
    pass


@dataclass(frozen=True)
class AffinePiece:
    grad: tuple
    offset: object

    def __call__(self, point):
        return dot(self.grad, point) + self.offset

    @property
    def is_constant(self) -> bool:
        return all(g == 0 for g in self.grad)


@dataclass(frozen=True, eq=False)
class PwAffineField:
    """``z -> grad.z + offset`` on each support cell, zero elsewhere."""

    complex: BaseCellComplex
    pieces: Mapping  # cell index -> AffinePiece
    name: str = "v"

    @classmethod
    def build(cls, cx: BaseCellComplex, spec: Mapping, name: str = "v") -> "PwAffineField":
        """``spec`` maps cell (index or label) to a constant, a ``(grad, offset)``
        pair, or a mapping with ``grad``/``off`` keys."""
        ar = cx.arith
        pieces = {}
        for key, val in spec.items():
            idx = cx.cell_index(key)
            if isinstance(val, Mapping):
                grad, off = val.get("grad", [0] * cx.dim), val.get("off", 0)
            elif isinstance(val, (tuple, list)):
                grad, off = val
            else:
                grad, off = [0] * cx.dim, val
            grad = tuple(ar.num(g) for g in grad)
            if len(grad) != cx.dim:
                raise FieldError(f"field {name!r}, cell {key!r}: gradient must have {cx.dim} entries")
            pieces[idx] = AffinePiece(grad, ar.num(off))
        return cls(cx, pieces, name)

    @classmethod
    def zero(cls, cx: BaseCellComplex, name: str = "0") -> "PwAffineField":
        return cls(cx, {}, name)

    @property
    def support(self) -> frozenset:
        return frozenset(self.pieces)

    def piece(self, cell: int) -> AffinePiece:
        p = self.pieces.get(cell)
        if p is None:
            zero = self.complex.arith.num(0)
            return AffinePiece((zero,) * self.complex.dim, zero)
        return p

    def value(self, cell: int, point):
        if cell == EXTERIOR or cell not in self.pieces:
            return self.complex.arith.num(0)
        return self.pieces[cell](point)

    def vertex_values(self, cell: int) -> list:
        return [self.value(cell, p) for p in self.complex.cells[cell].vertices]

    def gradient(self, cell: int) -> tuple:
        return self.piece(cell).grad

    def integral(self, cells=None):
        cx = self.complex
        total = cx.arith.num(0)
        for c, p in sorted(self.pieces.items()):
            if cells is None or c in cells:
                total += integrate_affine(cx.cells[c].vertices, p.grad, p.offset)
        return total

    def is_piecewise_constant(self) -> bool:
        return all(p.is_constant for p in self.pieces.values())

    # --- arithmetic ---------------------------------------------------
    def _combine(self, other: "PwAffineField", a, b, name) -> "PwAffineField":
        if other.complex is not self.complex:
            raise FieldError("fields live on different complexes")
        pieces = {}
        for c in sorted(self.support | other.support):
            p, q = self.piece(c), other.piece(c)
            pieces[c] = AffinePiece(tuple(a * x + b * y for x, y in zip(p.grad, q.grad)),
                                    a * p.offset + b * q.offset)
        return PwAffineField(self.complex, pieces, name)

    def __add__(self, other):
        return self._combine(other, 1, 1, f"({self.name}+{other.name})")

    def __sub__(self, other):
        return self._combine(other, 1, -1, f"({self.name}-{other.name})")

    def scale(self, k, name=None) -> "PwAffineField":
        k = self.complex.arith.num(k)
        return PwAffineField(self.complex,
                             {c: AffinePiece(tuple(k * g for g in p.grad), k * p.offset)
                              for c, p in self.pieces.items()},
                             name or f"{k}*{self.name}")

    def restrict(self, cells, name=None) -> "PwAffineField":
        """Same pieces on ``cells`` (zero pieces are added where missing)."""
        return PwAffineField(self.complex, {c: self.piece(c) for c in sorted(cells)},
                             name or self.name)

    def renamed(self, name: str) -> "PwAffineField":
        return PwAffineField(self.complex, self.pieces, name)

    def same_as(self, other: "PwAffineField", cells=None) -> bool:
        """Pieces agree (exactly, or within tolerance in double mode) on ``cells``."""
        ar = self.complex.arith
        cells = sorted(self.support | other.support) if cells is None else cells
        for c in cells:
            p, q = self.piece(c), other.piece(c)
            if not ar.is_zero(p.offset - q.offset, p.offset):
                return False
            if any(not ar.is_zero(x - y, x) for x, y in zip(p.grad, q.grad)):
                return False
        return True


def validate_slice_length(v: PwAffineField) -> None:
    """A slice-length field is >= 0 on each closed support cell and does not
    vanish on an open subset of a support cell."""
    ar = v.complex.arith
    for c in sorted(v.support):
        vals = v.vertex_values(c)
        if any(ar.sign(x) < 0 for x in vals):
            raise FieldError(f"field {v.name!r} is negative on cell {v.complex.cells[c].label!r}")
        if all(ar.is_zero(x) for x in vals):
            raise FieldError(f"field {v.name!r} vanishes identically on cell {v.complex.cells[c].label!r}")


def positive_support(v: PwAffineField) -> frozenset:
    """Cells where ``v`` is not identically zero."""
    ar = v.complex.arith
    return frozenset(c for c in v.support if not all(ar.is_zero(x) for x in v.vertex_values(c)))


@dataclass(frozen=True)
class FacetTrace:
    """One-sided traces along a facet, stored by endpoint values.

    Along the facet each trace is affine in the parameter ``s`` in [0, 1];
    on the line both endpoint values coincide.
    """

    facet: Facet
    left: tuple
    right: tuple

    def at(self, s):
        l = self.left[0] + (self.left[1] - self.left[0]) * s
        r = self.right[0] + (self.right[1] - self.right[0]) * s
        return l, r

    def upper_at(self, s):
        return max(self.at(s))

    def lower_at(self, s):
        return min(self.at(s))

    def jump_at(self, s):
        l, r = self.at(s)
        return abs(l - r)

    @property
    def upper(self) -> tuple:
        return tuple(max(l, r) for l, r in zip(self.left, self.right))

    @property
    def lower(self) -> tuple:
        return tuple(min(l, r) for l, r in zip(self.left, self.right))

    @property
    def jump(self) -> tuple:
        return tuple(abs(l - r) for l, r in zip(self.left, self.right))

    @property
    def difference(self) -> tuple:
        return tuple(l - r for l, r in zip(self.left, self.right))

    @property
    def mean_sum(self) -> tuple:
        return tuple(l + r for l, r in zip(self.left, self.right))


def facet_traces(field: PwAffineField, facet) -> FacetTrace:
    f = facet if isinstance(facet, Facet) else field.complex.facet(facet)
    ends = f.endpoints if len(f.endpoints) == 2 else f.endpoints * 2
    sides = []
    for c in f.cells:
        sides.append(tuple(field.value(c, p) for p in ends))
    return FacetTrace(f, sides[0], sides[1])


@dataclass(frozen=True)
class FacetClass:
    """Per-facet labels of a slice-length field.

    Portions are closed parameter intervals in [0, 1]; on the line a portion
    is either ``[(0, 1)]`` (the point) or empty.
    """

    facet: int
    zero_portion: tuple        # where the lower limit vanishes
    jump_portion: tuple        # where the jump is positive (up to a point)
    zero_measure: object
    jump_measure: object
    positive_measure: object   # measure of the part where the lower limit is > 0
    jump_essinf: object        # ess-inf of the jump where the lower limit is > 0

    @property
    def fully_zero(self) -> bool:
        return self.positive_measure == 0


def classify_facet(v: PwAffineField, facet) -> FacetClass:
    tr = facet_traces(v, facet)
    f = tr.facet
    ar = v.complex.arith
    zeros = merge_intervals(affine_zero_set(tr.left, ar.is_zero) + affine_zero_set(tr.right, ar.is_zero))
    zlen = covered_length(zeros)
    d = tr.difference
    jumping = not (ar.is_zero(d[0]) and ar.is_zero(d[1]))
    jump_portion = [(0, 1)] if jumping else []
    if zlen == 1 or (zeros and zeros[0] == (0, 1)):
        essinf = math.inf
        pos = 0 * f.measure
    else:
        pos = f.measure * (1 - zlen)
        if d[0] * d[1] <= 0 or not jumping:
            essinf = 0 * f.measure
        else:
            essinf = min(abs(d[0]), abs(d[1]))
        if ar.is_zero(essinf):
            essinf = 0 * f.measure
    return FacetClass(f.index, tuple(zeros), tuple(jump_portion), f.measure * zlen,
                      f.measure * (1 if jumping else 0), pos, essinf)


def classify_facets(v: PwAffineField) -> dict:
    return {f.index: classify_facet(v, f) for f in v.complex.facets}
