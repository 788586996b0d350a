"""The acceptance suite: ten property checks run on seeded random scenes,
the named values and the gallery.  Used by ``steinerkit selftest`` and by
the test suite."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import close, fmt
from .complex import interval_complex, polygon_complex
from .connectivity import essentially_disconnects, is_indecomposable_F, union_portions
from .field import PwAffineField
from .gallery import gallery
from .oracle import oracle_perimeter
from .perimeter import coarea_check, perimeter_formula, slice_inequality_check
from .polyset import build_W, min_translate_symdiff, steiner_symmetral
from .rigidity import NON_RIGID, RIGID, check_equality_case, decide_rigidity, search_equality_cases
from .sampling import (random_continuous_field, random_dim1_profile, random_portions, random_rectangle_complex,
                       null_portions, random_complex, random_scene, random_slice_field, random_step_field)

TOL = 1e-9
SEED = 20240611


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d}. {self.title}: {self.detail}"


@lru_cache(maxsize=None)
def random_scenes(seed: int = SEED) -> tuple:
    """200 scenes on the line and 50 in the plane (at most 8 cells each)."""
    rng = random.Random(seed)
    return tuple(random_scene(rng, dim) for dim, n in ((1, 200), (2, 50)) for _ in range(n))


@lru_cache(maxsize=None)
def profile_scenes(seed: int = SEED) -> tuple:
    rng = random.Random(seed + 1)
    return tuple(random_dim1_profile(rng) for _ in range(100))


@lru_cache(maxsize=None)
def continuous_scenes(seed: int = SEED) -> tuple:
    rng = random.Random(seed + 2)
    return tuple(random_continuous_field(rng) for _ in range(50))


def _rel_close(a, b) -> bool:
    return abs(a - b) <= TOL * max(1, abs(a), abs(b))


# --- the criteria -----------------------------------------------------------

def formula_vs_oracle() -> tuple:
    t0 = time.perf_counter()
    bad = []
    for k, (v, b) in enumerate(random_scenes()):
        pf = perimeter_formula("W", v, b).total
        po = oracle_perimeter(build_W(v, b))
        if not _rel_close(pf, po):
            bad.append((k, pf, po))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 30
    return ok, f"{250 - len(bad)}/250 scenes agree, {dt:.1f}s (limit 30s)" + (f"; first miss {bad[0]}" if bad else "")


def named_values() -> tuple:
    half = Fraction(1, 2)
    cx = interval_complex([0, half, 1])
    one = PwAffineField.build(cx, {0: 1, 1: 1})
    step = PwAffineField.build(cx, {0: 1, 1: 2})
    zero = PwAffineField.build(cx, {0: 0, 1: 0}, "b")
    shifted = PwAffineField.build(cx, {0: 0, 1: Fraction(1, 4)}, "b")
    lifted = PwAffineField.build(cx, {0: 0, 1: 1}, "b")
    cases = [("unit square", one, zero, 4), ("step", step, zero, 6),
             ("shifted barycenter", one, shifted, Fraction(9, 2)), ("lifted step", step, lifted, 7)]
    bad = []
    for name, v, b, want in cases:
        got = (perimeter_formula("W", v, b).total, oracle_perimeter(build_W(v, b)))
        if b is zero:
            got += (perimeter_formula("F", v).total, oracle_perimeter(steiner_symmetral(v)))
        if not all(isinstance(x, Fraction) and x == want for x in got):
            bad.append(f"{name}: {[fmt(x) for x in got]} != {fmt(want)}")
    return not bad, "4, 6, 9/2, 7 exact by formula and oracle" if not bad else "; ".join(bad)


def steiner_inequality() -> tuple:
    bad = []
    equal = 0
    for k, (v, b) in enumerate(random_scenes()):
        pe = oracle_perimeter(build_W(v, b))
        pf = oracle_perimeter(steiner_symmetral(v))
        eq_perimeter = _rel_close(pe, pf)
        eq_case = check_equality_case(build_W(v, b), v)[0]
        equal += eq_case
        if pe < pf - TOL or eq_perimeter != eq_case:
            bad.append(k)
    return not bad, f"{250 - len(bad)}/250 hold; {equal} equality cases" + (f"; failing {bad[:5]}" if bad else "")


def _all_fields():
    for v, _ in random_scenes():
        yield v
    yield from profile_scenes()
    yield from continuous_scenes()
    for name, depth in (("fig1a", None), ("fig1b", None), ("casetta", None), ("salsicciotto", None),
                        ("example11", 2), ("cantor", 3), ("rationals", 5), ("prop14", None)):
        yield gallery(name, depth).v


def witness_soundness() -> tuple:
    bad = []
    n = 0
    for k, v in enumerate(_all_fields()):
        r = decide_rigidity(v)
        if r.status != NON_RIGID:
            continue
        n += 1
        E = r.witness.set
        pe, pf = oracle_perimeter(E), oracle_perimeter(steiner_symmetral(v))
        gap = min_translate_symdiff(E, v)[1]
        if not _rel_close(pe, pf) or gap < TOL:
            bad.append(k)
    return not bad, f"{n - len(bad)}/{n} witnesses keep the perimeter and are not translates" + (
        f"; failing {bad[:5]}" if bad else "")


def rigid_completeness() -> tuple:
    n = 0
    worst = 0.0
    bad = []
    fields = list(_all_fields())
    for k, v in enumerate(fields):
        if len(v.complex.cells) > 6 or decide_rigidity(v).status != RIGID:
            continue
        n += 1
        t0 = time.perf_counter()
        found = search_equality_cases(v, limit=1)
        dt = time.perf_counter() - t0
        worst = max(worst, dt)
        if found or dt >= 60:
            bad.append(k)
    return not bad and n > 0, f"{n} rigid scenes searched, no equality case found in {n - len(bad)}; slowest {worst:.2f}s"


def decider_agreement() -> tuple:
    bad = []
    for k, v in enumerate(profile_scenes()):
        if decide_rigidity(v, "planar").status != decide_rigidity(v, "polyhedral").status:
            bad.append(("planar", k))
    rigid = 0
    for k, v in enumerate(continuous_scenes()):
        a = decide_rigidity(v, "no_vertical").status
        b = decide_rigidity(v, "polyhedral").status
        rigid += a == RIGID
        if a != b or (a == RIGID) != is_indecomposable_F(v) or (a == RIGID) != _indecomposable_by_additivity(v):
            bad.append(("no_vertical", k))
    return not bad, f"100 line scenes, 50 jump-free scenes ({rigid} rigid) agree" if not bad else f"disagreements {bad[:5]}"


def _indecomposable_by_additivity(v) -> bool:
    """Independent check: the symmetral splits with additive perimeter over
    some two-part cell cut iff it is decomposable."""
    import itertools

    F = steiner_symmetral(v)
    total = oracle_perimeter(F)
    supp = sorted(v.support)
    first, rest = supp[0], supp[1:]
    for r in range(len(rest)):
        for combo in itertools.combinations(rest, r):
            plus = set((first,) + combo)
            minus = set(supp) - plus
            pa = oracle_perimeter(steiner_symmetral(v.restrict(plus)))
            pb = oracle_perimeter(steiner_symmetral(v.restrict(minus)))
            if _rel_close(pa + pb, total):
                return False
    return True


def coarea_identity() -> tuple:
    rng = random.Random(SEED + 3)
    bad = []
    for k in range(50):
        cx = random_rectangle_complex(rng)
        b = random_step_field(rng, cx)
        lhs, rhs, equal = coarea_check(b)
        if not (equal and isinstance(lhs, Fraction) and lhs == rhs):
            bad.append(k)
    return not bad, f"{50 - len(bad)}/50 exact equalities"


def slice_inequality() -> tuple:
    bad = []
    for k, (v, b) in enumerate(random_scenes()):
        lhs, rhs, holds = slice_inequality_check(build_W(v, b), TOL)
        if not holds:
            bad.append(k)
    return not bad, f"{250 - len(bad)}/250 hold" + (f"; failing {bad[:5]}" if bad else "")


def connectivity_properties() -> tuple:
    rng = random.Random(SEED + 4)
    bad = []
    for k in range(100):
        cx = random_complex(rng, 1 if k % 2 else 2, 8)
        cells = list(range(len(cx.cells)))
        G = set(rng.sample(cells, rng.randint(1, len(cells))))
        K = random_portions(rng, cx)
        bigger = union_portions(K, random_portions(rng, cx))
        d0 = essentially_disconnects(cx, K, G)[0]
        d1 = essentially_disconnects(cx, bigger, G)[0]
        dn = essentially_disconnects(cx, union_portions(K, null_portions(rng, cx)), G)[0]
        if (d0 and not d1) or d0 != dn:
            bad.append(k)
    half = Fraction(1, 2)
    sq = polygon_complex([[(0, 0), (half, 0), (half, 1), (0, 1)], [(half, 0), (1, 0), (1, 1), (half, 1)]])
    fid = sq.interior_facets()[0].index
    fig4 = essentially_disconnects(sq, {fid: [(0, half)]}, [0, 1])[0]
    ok = not bad and fig4 is False
    return ok, f"{100 - len(bad)}/100 instances monotone and null-stable; half-facet case disconnects={fig4}"


def gallery_regression() -> tuple:
    bad = []
    checks = [("fig1a", None), ("fig1b", None), ("casetta", None), ("salsicciotto", None)]
    checks += [("example11", d) for d in (1, 2, 3)] + [("cantor", d) for d in (1, 2, 3, 4)] + [("rationals", 5)]
    for name, depth in checks:
        e = gallery(name, depth)
        r = decide_rigidity(e.v)
        label = f"{name}{'' if depth is None else depth}"
        if r.status != e.expected:
            bad.append(f"{label}: {r.status} != {e.expected}")
        if e.epsilon is not None and (r.witness is None or r.witness.epsilon != e.epsilon):
            bad.append(f"{label}: epsilon")
        if e.b is not None:
            E = build_W(e.v, e.b)
            ok = check_equality_case(E, e.v)[0]
            pe, pf = oracle_perimeter(E), oracle_perimeter(steiner_symmetral(e.v))
            if ok != e.equality or _rel_close(pe, pf) != e.equality:
                bad.append(f"{label}: equality")
    return not bad, f"{len(checks)} gallery cases match" if not bad else "; ".join(bad)


CRITERIA = (
    (1, "formula/oracle equivalence", formula_vs_oracle),
    (2, "named perimeter values", named_values),
    (3, "Steiner inequality and equality cases", steiner_inequality),
    (4, "witness soundness", witness_soundness),
    (5, "rigid completeness at desk scale", rigid_completeness),
    (6, "decider agreement", decider_agreement),
    (7, "gallery regression", gallery_regression),
    (8, "coarea identity", coarea_identity),
    (9, "slice inequality", slice_inequality),
    (10, "connectivity properties", connectivity_properties),
)


def run_criterion(number: int) -> CriterionResult:
    num, title, fn = CRITERIA[number - 1]
    t0 = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as exc:  # a crash is a failure with its reason on the line
        passed, detail = False, f"error: {type(exc).__name__}: {exc}"
    return CriterionResult(num, title, passed, detail, time.perf_counter() - t0)


def run_all(out=None) -> list:
    results = []
    for num, _, _ in CRITERIA:
        r = run_criterion(num)
        results.append(r)
        if out is not None:
            print(r.line(), file=out, flush=True)
    return results
