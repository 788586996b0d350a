"""Named scenes with known outcomes.

Each entry carries the slice length ``v``, optionally a barycenter ``b``
describing a set ``{|y - b| < v/2}``, the rigidity verdict expected for
``v``, and whether ``(v, b)`` is expected to be an equality case.  The
infinite constructions are truncated at a finite ``depth``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Callable

from .complex import build_complex, interval_complex
from .field import PwAffineField
from .polyset import prop14_construct
from .scene import Scene

HALF = Q(1, 2)


class GalleryError(KeyError):
    pass


@dataclass
class GalleryEntry:
    name: str
    scene: Scene
    expected: str                 # verdict for v
    equality: bool | None = None  # expected outcome of the equality check for (v, b)
    epsilon: object = None        # expected jump threshold, when known
    summary: str = ""

    @property
    def v(self) -> PwAffineField:
        return self.scene.fields["v"]

    @property
    def b(self) -> PwAffineField | None:
        return self.scene.fields.get("b")


def _scene(name, cx, v_spec, b_spec=None) -> Scene:
    fields = {"v": PwAffineField.build(cx, v_spec, "v")}
    if b_spec is not None:
        fields["b"] = PwAffineField.build(cx, b_spec, "b")
    return Scene(cx, fields, name)


def _with_set(name, v, E) -> Scene:
    return Scene(v.complex, {"v": v.renamed("v"), "b": E.barycenter.renamed("b")}, name)


def square(depth=None) -> GalleryEntry:
    cx = interval_complex([0, 1], ["I"])
    return GalleryEntry("square", _scene("square", cx, {"I": 1}), "rigid", None, None,
                        "v = 1 on (0,1): the symmetral is the unit square")


def shifted_barycenter(depth=None) -> GalleryEntry:
    cx = interval_complex([0, HALF, 1], ["L", "R"])
    return GalleryEntry("shifted_barycenter", _scene("shifted_barycenter", cx, {"L": 1, "R": 1}, {"L": 0, "R": Q(1, 4)}),
                        "rigid", False, None,
                        "unit square whose right half is lifted by 1/4; perimeter 9/2")


def lifted_step(depth=None) -> GalleryEntry:
    cx = interval_complex([0, HALF, 1], ["L", "R"])
    return GalleryEntry("lifted_step", _scene("lifted_step", cx, {"L": 1, "R": 2}, {"L": 0, "R": 1}),
                        "non_rigid", False, Q(1),
                        "step 1|2 with the right rectangle lifted by 1: too far, perimeter 7")


def fig1a(depth=None) -> GalleryEntry:
    cx = interval_complex([0, HALF, 1], ["L", "R"])
    return GalleryEntry("fig1a", _scene("fig1a", cx, {"L": 1, "R": 2}, {"L": HALF, "R": 0}),
                        "non_rigid", True, Q(1),
                        "step 1|2: lifting one rectangle by at most 1/2 keeps the perimeter")


def fig1b(depth=None) -> GalleryEntry:
    cx = interval_complex([0, HALF, 1], ["L", "R"])
    return GalleryEntry("fig1b", _scene("fig1b", cx, {"L": ([-2], 1), "R": ([2], -1)}, {"L": 0, "R": 3}),
                        "non_rigid", True, None,
                        "v = 2|z - 1/2| vanishes at 1/2: the halves move independently")


def casetta(depth=None) -> GalleryEntry:
    cx = build_complex({"dim": 2, "cells": [
        {"id": "L", "vertices": [[0, 0], ["1/2", 0], ["1/2", 1], [0, 1]]},
        {"id": "R", "vertices": [["1/2", 0], [1, 0], [1, 1], ["1/2", 1]]}]})
    return GalleryEntry("casetta", _scene("casetta", cx, {"L": 1, "R": ([0, 1], 0)}), "rigid", None, None,
                        "v = 1 | z2 across z1 = 1/2: a vertical wall whose jump tapers to zero")


def salsicciotto(depth=None) -> GalleryEntry:
    h = "1/2"
    cx = build_complex({"dim": 2, "cells": [
        {"id": "BL", "vertices": [[0, 0], [h, 0], [h, h], [0, h]]},
        {"id": "BR", "vertices": [[h, 0], [1, 0], [1, h], [h, h]]},
        {"id": "TL", "vertices": [[0, h], [h, h], [h, 1], [0, 1]]},
        {"id": "TR", "vertices": [[h, h], [1, h], [1, 1], [h, 1]]}]})
    v = {"BL": ([-1, 0], HALF), "BR": ([1, 0], -HALF), "TL": ([-1, 1], 0), "TR": ([1, 1], -1)}
    return GalleryEntry("salsicciotto", _scene("salsicciotto", cx, v), "rigid", None, None,
                        "continuous v vanishing along the slit {1/2} x [0,1/2]; the top keeps it connected")


def _diamond_cells(depth):
    """Cells and values of the depth-``depth`` refinement of the diamond
    |x| + |y| < 1, built in the coordinates a = x + y, c = x - y where every
    diamond is an axis-parallel square."""
    rects = []

    def square(a0, c0, side, val, level):
        if level == depth:
            rects.append((a0, c0, a0 + side, c0 + side, val))
            return
        q = side / 4
        rects.append((a0 + q, c0, a0 + side, c0 + q, val))
        rects.append((a0, c0 + side - q, a0 + side - q, c0 + side, val))
        rects.append((a0, c0 + q, a0 + side, c0 + side - q, val))
        step = Q(1, 2 ** (level + 1))
        square(a0, c0, q, val - step, level + 1)
        square(a0 + side - q, c0 + side - q, q, val + step, level + 1)

    square(Q(-1), Q(-1), Q(2), Q(1), 0)
    cells = []
    values = {}
    for k, (a0, c0, a1, c1, val) in enumerate(rects):
        corners = [(a0, c0), (a1, c0), (a1, c1), (a0, c1)]
        pts = [[(a + c) / 2, (a - c) / 2] for a, c in corners]
        label = f"q{k}"
        cells.append({"id": label, "vertices": [[str(x) for x in p] for p in pts]})
        values[label] = val
    return cells, values


def example11(depth=1) -> GalleryEntry:
    """Diamond refined ``depth`` times: the truncation adds jumps 1/2, 1/4, ...
    on nested corner diamonds.  The equality set takes sections [0, v]."""
    depth = _depth(depth)
    cells, values = _diamond_cells(depth)
    cx = build_complex({"dim": 2, "cells": cells})
    v = PwAffineField.build(cx, values, "v")
    E = prop14_construct(PwAffineField.zero(cx, "v1"), v, 0)
    return GalleryEntry("example11", _with_set(f"example11-{depth}", v, E), "non_rigid", True, None,
                        f"diamond with {depth} level(s) of corner refinements; sections [0, v]")


def _cantor_gaps(depth):
    gaps = []
    intervals = [(Q(0), Q(1))]
    for _ in range(depth):
        nxt = []
        for a, b in intervals:
            third = (b - a) / 3
            gaps.append((a + third, b - third))
            nxt += [(a, a + third), (b - third, b)]
        intervals = nxt
    return sorted(gaps)


def cantor(depth=1) -> GalleryEntry:
    """Distance to the level-``depth`` Cantor set, translated by the Cantor
    staircase on each removed interval."""
    depth = _depth(depth)
    gaps = _cantor_gaps(depth)
    cells, v, b = [], {}, {}
    n = len(gaps) + 1
    for i, (a, c) in enumerate(gaps, start=1):
        m = (a + c) / 2
        for side, iv, piece in (("l", (a, m), ([1], -a)), ("r", (m, c), ([-1], c))):
            label = f"g{i}{side}"
            cells.append({"id": label, "interval": [str(iv[0]), str(iv[1])]})
            v[label] = piece
            b[label] = Q(i, n)
    cx = build_complex({"dim": 1, "cells": cells})
    # one removed interval carries a single tent, which is rigid
    expected = "rigid" if depth == 1 else "non_rigid"
    return GalleryEntry("cantor", _scene(f"cantor-{depth}", cx, v, b), expected, True, None,
                        f"tent functions on the {len(gaps)} removed intervals, barycenter = staircase")


def rational_sequence(n):
    """The first ``n`` rationals of [0, 1) by increasing denominator."""
    out = [Q(0)]
    d = 2
    while len(out) < n:
        for p in range(1, d):
            q = Q(p, d)
            if q.denominator == d:
                out.append(q)
        d += 1
    return out[:n]


def rationals(depth=5) -> GalleryEntry:
    """``v = sum_h 2^-h 1_(q_h, 1]`` over the first ``depth`` rationals;
    the equality set has sections [0, v]."""
    n = _depth(depth)
    qs = rational_sequence(n)
    pts = sorted(qs) + [Q(1)]
    labels = [f"r{i}" for i in range(len(pts) - 1)]
    cx = interval_complex(pts, labels)
    spec = {}
    for lab, left in zip(labels, pts):
        spec[lab] = sum((Q(1, 2 ** (h + 1)) for h, q in enumerate(qs) if q <= left), Q(0))
    v = PwAffineField.build(cx, spec, "v")
    E = prop14_construct(PwAffineField.zero(cx, "v1"), v, 0)
    return GalleryEntry("rationals", _with_set(f"rationals-{n}", v, E), "non_rigid", True, None,
                        f"jumps 2^-h at the first {n} rationals; sections [0, v]")


def prop14(depth=None) -> GalleryEntry:
    """Tent plus step, split with lambda = 1/4."""
    cx = interval_complex([0, HALF, 1], ["L", "R"])
    v1 = PwAffineField.build(cx, {"L": ([1], 0), "R": ([-1], 1)}, "v1")
    v2 = PwAffineField.build(cx, {"L": 1, "R": 2}, "v2")
    E = prop14_construct(v1, v2, Q(1, 4))
    return GalleryEntry("prop14", _with_set("prop14", (v1 + v2).renamed("v"), E), "non_rigid", True, None,
                        "tent + step 1|2 with sections [-v2/4 - v1/2, v1/2 + 3 v2/4]")


def _depth(depth):
    d = 1 if depth is None else int(depth)
    if d < 1:
        raise ValueError("depth must be at least 1")
    return d


ENTRIES: dict = {
    "square": square,
    "shifted_barycenter": shifted_barycenter,
    "lifted_step": lifted_step,
    "fig1a": fig1a,
    "fig1b": fig1b,
    "casetta": casetta,
    "salsicciotto": salsicciotto,
    "example11": example11,
    "cantor": cantor,
    "rationals": rationals,
    "prop14": prop14,
}

DEPTH_NAMES = ("example11", "cantor", "rationals")


def gallery(name: str, depth=None) -> GalleryEntry:
    try:
        make: Callable = ENTRIES[name]
    except KeyError:
        raise GalleryError(f"unknown gallery entry {name!r}; known: {', '.join(ENTRIES)}") from None
    if depth is None and name in DEPTH_NAMES:
        return make()
    return make(depth)
