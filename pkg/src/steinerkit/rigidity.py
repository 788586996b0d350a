"""Equality cases of Steiner's perimeter inequality for piecewise-affine
slice lengths: checking them, deciding whether they are all vertical
translates of the symmetral, and building counterexamples when not."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .complex import EXTERIOR
from .connectivity import (essentially_disconnects, is_indecomposable_F, jump_set_portions,
                           union_portions, zero_set_portions)
from .field import FieldError, PwAffineField, classify_facets, facet_traces, positive_support, validate_slice_length
from .geometry import affine_at, crossings
from .polyset import PolysetError, PolyVerticalSet, min_translate_symdiff, translate_over_partition

RIGID = "rigid"
NON_RIGID = "non_rigid"
OUT_OF_CLASS = "out_of_class"

HINTS = ("auto", "planar", "no_vertical", "polyhedral", "stairway")


class RigidityError(ValueError):
    pass


@dataclass
class Witness:
    plus: frozenset          # cells lifted by ``t``
    minus: frozenset         # cells left in place
    epsilon: object          # lower bound of the jump on the cut (inf if none is needed)
    t: object
    set: PolyVerticalSet

    @property
    def offsets(self) -> dict:
        return {"plus": self.t, "minus": 0}


@dataclass
class RigidityVerdict:
    status: str
    theorem_path: str
    witness: Witness | None = None
    notes: list = field(default_factory=list)

    @property
    def rigid(self) -> bool:
        return self.status == RIGID


@dataclass
class EqualityReport:
    gradient_violations: list = field(default_factory=list)   # cells where b is not constant
    jump_violations: list = field(default_factory=list)       # facets where 2[b] > [v]

    @property
    def ok(self) -> bool:
        return not self.gradient_violations and not self.jump_violations


# --- equality cases --------------------------------------------------------

def check_equality_case(E: PolyVerticalSet, v: PwAffineField) -> tuple:
    """Is ``E`` an equality case for the symmetral of ``v``?

    Conditions: the barycenter has zero gradient on every support cell, and
    ``2[b] <= [v]`` a.e. where the lower limit of ``v`` is positive.
    """
    validate_slice_length(v)
    supp = positive_support(v)
    if E.support != supp or not E.slice_length.same_as(v.restrict(supp)):
        raise PolysetError("E is not distributed according to v")
    cx = v.complex
    ar = cx.arith
    b = E.barycenter
    report = EqualityReport()
    for c in sorted(supp):
        if any(not ar.is_zero(g) for g in b.gradient(c)):
            report.gradient_violations.append(c)
    classes = classify_facets(v)
    for f in cx.facets:
        if classes[f.index].fully_zero:
            continue
        D = facet_traces(v, f).difference
        B = facet_traces(b, f).difference
        B2 = tuple(2 * x for x in B)
        atoms = [D, tuple(-x for x in D), B2, tuple(-x for x in B2)]
        for s in crossings(atoms + [(0, 0)]):
            gap = abs(affine_at(D, s)) - abs(affine_at(B2, s))
            if ar.sign(gap, max(abs(affine_at(D, s)), 1)) < 0:
                report.jump_violations.append(f.index)
                break
    return report.ok, report


# --- crossable facets and cuts --------------------------------------------

def crossable_facets(v: PwAffineField) -> dict:
    """Interior facets between support cells -> whether a vertical offset of
    one side can keep the perimeter: the lower limit vanishes on the whole
    facet, or the jump is bounded below by a positive constant there."""
    supp = positive_support(v)
    classes = classify_facets(v)
    out = {}
    for f in v.complex.interior_facets():
        a, b = f.cells
        if a in supp and b in supp:
            fc = classes[f.index]
            out[f.index] = fc.fully_zero or fc.jump_essinf > 0
    return out


def cut_facets(v: PwAffineField, plus) -> list:
    supp = positive_support(v)
    out = []
    for f in v.complex.interior_facets():
        a, b = f.cells
        if a in supp and b in supp and ((a in plus) != (b in plus)):
            out.append(f.index)
    return out


def cut_epsilon(v: PwAffineField, plus):
    """Smallest jump lower bound over the cut facets whose lower limit is
    positive somewhere; ``inf`` when there are none; ``None`` if some cut
    facet is not crossable."""
    classes = classify_facets(v)
    crossable = crossable_facets(v)
    eps = math.inf
    for fid in cut_facets(v, plus):
        if not crossable[fid]:
            return None
        fc = classes[fid]
        if not fc.fully_zero:
            eps = min(eps, fc.jump_essinf)
    return eps


def super_nodes(v: PwAffineField) -> list:
    """Groups of support cells glued by non-crossable facets."""
    import networkx as nx

    supp = positive_support(v)
    g = nx.Graph()
    g.add_nodes_from(sorted(supp))
    for fid, ok in crossable_facets(v).items():
        if not ok:
            g.add_edge(*v.complex.facets[fid].cells)
    return sorted(tuple(sorted(c)) for c in nx.connected_components(g))


def construct_witness(v: PwAffineField, cut, t=None) -> Witness:
    """Lift the symmetral above the cells ``cut`` by ``t``.

    ``t`` defaults to half the jump lower bound on the cut (or 1 when the cut
    runs only where the lower limit vanishes) and must satisfy
    ``0 < t <= eps / 2``.
    """
    validate_slice_length(v)
    cx = v.complex
    supp = positive_support(v)
    plus = frozenset(cx.cell_index(c) for c in cut)
    if not plus or not plus <= supp or plus == supp:
        raise RigidityError("the cut must be a non-empty proper subset of the support")
    eps = cut_epsilon(v, plus)
    if eps is None:
        raise RigidityError("the cut crosses a facet that is not crossable")
    if t is None:
        t = cx.arith.num(1) if math.isinf(eps) else eps / 2
    elif not isinstance(t, float):
        t = cx.arith.num(t)
    if not t > 0:
        raise RigidityError("the offset must be positive")
    if not math.isinf(eps) and t > eps / 2:
        raise RigidityError(f"offset {t} exceeds half the jump lower bound {eps}")
    parts = {c: ("plus" if c in plus else "minus") for c in supp}
    E = translate_over_partition(v.restrict(supp), parts, {"plus": t, "minus": cx.arith.num(0)})
    return Witness(plus, supp - plus, eps, t, E)


def _polyhedral_cut(v: PwAffineField):
    nodes = super_nodes(v)
    if len(nodes) < 2:
        return None
    return frozenset(nodes[0])


# --- deciders --------------------------------------------------------------

def _no_vertical_applies(v: PwAffineField) -> bool:
    classes = classify_facets(v)
    for f in v.complex.interior_facets():
        fc = classes[f.index]
        if not fc.fully_zero and fc.jump_measure > 0:
            return False
    return True


def _planar_rigid(v: PwAffineField) -> bool:
    """Support is one interval, no jumps inside it, lower limit positive inside."""
    cx = v.complex
    supp = sorted(positive_support(v), key=lambda c: cx.cells[c].vertices[0])
    ar = cx.arith
    for a, b in zip(supp, supp[1:]):
        if cx.cells[a].vertices[1] != cx.cells[b].vertices[0]:
            return False
        z = cx.cells[a].vertices[1]
        left, right = v.value(a, z), v.value(b, z)
        if not ar.is_zero(left - right) or ar.is_zero(min(left, right)):
            return False
    return True


def _sufficient_rigid(v: PwAffineField) -> bool:
    K = union_portions(zero_set_portions(v), jump_set_portions(v))
    return not essentially_disconnects(v.complex, K, positive_support(v))[0]


def decide_rigidity(v: PwAffineField, hint: str = "auto") -> RigidityVerdict:
    """Decide whether every equality case for ``v`` is a vertical translate
    of its symmetral."""
    if hint not in HINTS:
        raise RigidityError(f"unknown class hint {hint!r}")
    try:
        validate_slice_length(v)
    except FieldError as exc:
        return RigidityVerdict(OUT_OF_CLASS, "none", notes=[str(exc)])
    if not positive_support(v):
        return RigidityVerdict(OUT_OF_CLASS, "none", notes=["empty support"])
    cx = v.complex
    if hint == "planar" and cx.dim != 1:
        raise RigidityError("the planar characterization needs a one-dimensional base")
    if hint == "no_vertical" and not _no_vertical_applies(v):
        raise RigidityError("v jumps where its lower limit is positive")

    notes = []
    if hint == "planar":
        rigid = _planar_rigid(v)
        path = "planar"
    elif hint == "no_vertical":
        rigid = is_indecomposable_F(v)
        path = "no_vertical"
    elif hint == "stairway":
        rigid = mismatched_stairway_check(v)[0]
        path = "stairway"
    elif hint == "auto" and _sufficient_rigid(v):
        rigid = True
        path = "sufficient"
        notes.append("zero set and jump set do not disconnect the support")
    else:
        rigid = _polyhedral_cut(v) is None
        path = "polyhedral"

    if rigid:
        return RigidityVerdict(RIGID, path, notes=notes)
    plus = _polyhedral_cut(v)
    if plus is None:
        raise RigidityError(f"the {path} test found no rigidity but no crossable cut exists")
    w = construct_witness(v, plus)
    notes.append(f"{len(super_nodes(v))} groups of cells glued by non-crossable facets")
    return RigidityVerdict(NON_RIGID, path, w, notes)


@dataclass
class Stairway:
    parts: tuple      # tuple of frozensets of cells
    offsets: tuple    # one constant per part


def mismatched_stairway_check(v: PwAffineField, max_enumerate: int = 14) -> tuple:
    """``(holds, stairway)``: holds when every two-level stairway over a
    cell-aligned partition has a step larger than half the jump somewhere on
    a set of positive measure.  When it fails, a matched stairway is returned.

    Small supports are checked by enumerating every cut; larger ones use the
    contraction of non-crossable facets.
    """
    validate_slice_length(v)
    supp = sorted(positive_support(v))
    if len(supp) <= max_enumerate:
        first, rest = supp[0], supp[1:]
        for r in range(0, len(rest)):
            for combo in itertools.combinations(rest, r):
                plus = frozenset((first,) + combo)
                eps = cut_epsilon(v, plus)
                if eps is None:
                    continue
                step = v.complex.arith.num(1) if math.isinf(eps) else eps / 2
                minus = frozenset(supp) - plus
                return False, Stairway((plus, minus), (step, v.complex.arith.num(0)))
        return True, None
    plus = _polyhedral_cut(v)
    if plus is None:
        return True, None
    eps = cut_epsilon(v, plus)
    step = v.complex.arith.num(1) if math.isinf(eps) else eps / 2
    return False, Stairway((plus, frozenset(supp) - plus), (step, v.complex.arith.num(0)))


# --- brute-force search ----------------------------------------------------

def offset_grid_step(v: PwAffineField):
    """Grid spacing: an eighth of the smallest positive jump of ``v`` at a
    facet endpoint, or 1/8 when ``v`` has no jumps."""
    ar = v.complex.arith
    jumps = []
    for f in v.complex.facets:
        for x in facet_traces(v, f).jump:
            if not ar.is_zero(x):
                jumps.append(x)
    base = min(jumps) if jumps else ar.num(1)
    return base / 8


def search_equality_cases(v: PwAffineField, radius: int = 32, limit: int | None = None) -> list:
    """All ``(cut, offset)`` with ``offset = k * step``, ``0 < |k| <= radius``,
    over two-part cell cuts, for which the lifted set is an equality case
    that is not a global translate."""
    validate_slice_length(v)
    supp = sorted(positive_support(v))
    step = offset_grid_step(v)
    found = []
    first, rest = supp[0], supp[1:]
    zero = v.complex.arith.num(0)
    for r in range(0, len(rest)):
        for combo in itertools.combinations(rest, r):
            plus = frozenset((first,) + combo)
            for k in range(-radius, radius + 1):
                if k == 0:
                    continue
                t = step * k
                parts = {c: ("plus" if c in plus else "minus") for c in supp}
                E = translate_over_partition(v.restrict(supp), parts, {"plus": t, "minus": zero})
                ok, _ = check_equality_case(E, v)
                if ok and min_translate_symdiff(E, v)[1] > 0:
                    found.append((plus, t))
                    if limit and len(found) >= limit:
                        return found
    return found
