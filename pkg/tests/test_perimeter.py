import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from steinerkit import (PwAffineField, Region, build_W, coarea_check, oracle_perimeter, perimeter_formula,
                        slice_inequality_check, steiner_symmetral, translate_over_partition)
from steinerkit.arith import close
from steinerkit.sampling import random_rectangle_complex, random_scene, random_step_field


def test_unit_square(unit):
    br = perimeter_formula("F", unit)
    assert (br.ac_part, br.jump_part, br.boundary_zero_part, br.total) == (2, 0, 2, 4)
    assert oracle_perimeter(steiner_symmetral(unit)) == 4


def test_step(step):
    br = perimeter_formula("F", step)
    assert (br.ac_part, br.jump_part, br.boundary_zero_part, br.total) == (2, 1, 3, 6)
    assert oracle_perimeter(steiner_symmetral(step)) == 6


def test_shifted_barycenter(unit):
    b = PwAffineField.build(unit.complex, {"L": 0, "R": Q(1, 4)})
    br = perimeter_formula("W", unit, b)
    assert br.facet_terms[1] == (Q(1, 2), 0)
    assert br.total == Q(9, 2) == oracle_perimeter(build_W(unit, b))


def test_lifted_step(step):
    E = translate_over_partition(step, {"L": 0, "R": 1}, {0: 0, 1: 1})
    assert oracle_perimeter(E) == 7 == perimeter_formula("W", step, E.barycenter).total


def test_tapered_wall(tapered):
    br = perimeter_formula("F", tapered)
    assert close(br.total, oracle_perimeter(steiner_symmetral(tapered)))
    # the wall between the halves has height |1 - z2|, area 1/2
    assert br.jump_part == Q(1, 2)


def test_bad_mode(step):
    with pytest.raises(ValueError):
        perimeter_formula("X", step)
    with pytest.raises(ValueError):
        perimeter_formula("W", step)


def test_region_additivity(step):
    whole = perimeter_formula("F", step)
    cx = step.complex
    a = perimeter_formula("F", step, region=Region(frozenset({0}), frozenset({0, 1})))
    b = perimeter_formula("F", step, region=Region(frozenset({1}), frozenset({2})))
    assert a.total + b.total == whole.total


def test_slice_examples(unit, step):
    assert slice_inequality_check(steiner_symmetral(unit)) == (2, 4, True)
    assert slice_inequality_check(steiner_symmetral(step)) == (4, 6, True)
    strip = build_W(unit, PwAffineField.build(unit.complex, {"L": Q(1, 2), "R": Q(1, 2)}))
    assert slice_inequality_check(strip) == (2, 4, True)


def test_coarea_examples(halves, split_square):
    assert coarea_check(PwAffineField.zero(halves)) == (0, 0, True)
    b = PwAffineField.build(halves, {"L": 0, "R": Q(1, 4)})
    assert coarea_check(b, [1]) == (Q(1, 4), Q(1, 4), True)
    b2 = PwAffineField.build(split_square, {"L": 0, "R": 1})
    fid = split_square.interior_facets()[0].index
    assert coarea_check(b2, [fid]) == (1, 1, True)
    with pytest.raises(ValueError):
        coarea_check(PwAffineField.build(halves, {"L": ([1], 0)}))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([1, 2]))
def test_modes_agree_with_each_other_and_the_oracle(seed, dim):
    v, b = random_scene(random.Random(seed), dim)
    E = build_W(v, b)
    w = perimeter_formula("W", v, b)
    u = perimeter_formula("U", E.lower, E.upper)
    assert close(w.total, u.total)
    assert close(w.total, oracle_perimeter(E))
    assert w.ac_part >= 0 and w.jump_part >= 0 and w.boundary_zero_part >= 0


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_region_additivity_random(seed):
    rng = random.Random(seed)
    v, b = random_scene(rng, 2, 6)
    cx = v.complex
    cells = set(range(len(cx.cells)))
    facets = set(range(len(cx.facets)))
    ca = {c for c in cells if rng.random() < 0.5}
    fa = {f for f in facets if rng.random() < 0.5}
    a = perimeter_formula("W", v, b, region=Region(frozenset(ca), frozenset(fa)))
    c = perimeter_formula("W", v, b, region=Region(frozenset(cells - ca), frozenset(facets - fa)))
    assert close(a.total + c.total, perimeter_formula("W", v, b).total)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_coarea_exact(seed):
    rng = random.Random(seed)
    b = random_step_field(rng, random_rectangle_complex(rng))
    lhs, rhs, equal = coarea_check(b)
    assert equal and lhs == rhs


def test_double_mode_matches_rational():
    rng = random.Random(5)
    from steinerkit import build_complex
    for _ in range(10):
        v, b = random_scene(rng, 2, 5)
        cx = v.complex
        doc = {"dim": 2, "arithmetic": "double",
               "cells": [{"id": c.label, "vertices": [[float(x) for x in p] for p in c.vertices]} for c in cx.cells]}
        cxd = build_complex(doc)
        conv = lambda f: PwAffineField.build(cxd, {cx.cells[c].label: ([float(g) for g in p.grad], float(p.offset))
                                                   for c, p in f.pieces.items()})
        exact = oracle_perimeter(build_W(v, b))
        approx = oracle_perimeter(build_W(conv(v), conv(b)))
        assert close(float(exact), approx)
