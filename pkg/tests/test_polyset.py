import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from steinerkit import (PolyVerticalSet, PwAffineField, build_W, min_translate_symdiff, prop14_construct,
                        slice_and_barycenter, steiner_symmetral, translate_over_partition, volume)
from steinerkit.polyset import PolysetError, symdiff_to_translate
from steinerkit.sampling import random_scene


def test_symmetral_of_unit(halves, unit):
    E = steiner_symmetral(unit)
    assert E.lower.value(0, (Q(1, 4),)) == Q(-1, 2) and E.upper.value(1, (Q(3, 4),)) == Q(1, 2)
    assert volume(E) == 1


def test_symmetral_rejects_negative(halves):
    with pytest.raises(Exception):
        steiner_symmetral(PwAffineField.build(halves, {"L": -1, "R": 1}))


def test_build_W_strip(unit):
    b = PwAffineField.build(unit.complex, {"L": Q(1, 2), "R": Q(1, 2)})
    E = build_W(unit, b)
    assert E.lower.value(0, (0,)) == 0 and E.upper.value(1, (1,)) == 1


def test_build_W_zero_b_is_symmetral(step):
    E = build_W(step, PwAffineField.zero(step.complex))
    F = steiner_symmetral(step)
    assert E.lower.same_as(F.lower) and E.upper.same_as(F.upper)


def test_volume_of_step(step):
    assert volume(steiner_symmetral(step)) == Q(3, 2)


def test_translate_over_partition(step):
    E = translate_over_partition(step, {"L": 0, "R": 1}, {0: 0, 1: Q(1, 2)})
    v, b = slice_and_barycenter(E)
    assert v.same_as(step) and b.value(1, (Q(3, 4),)) == Q(1, 2)
    with pytest.raises(PolysetError):
        translate_over_partition(step, {"L": 0}, {0: 0})


def test_single_part_is_a_translate(step):
    E = translate_over_partition(step, {"L": 0, "R": 0}, {0: 3})
    assert min_translate_symdiff(E, step) == (3, 0)


def test_min_translate_of_symmetral(step):
    assert min_translate_symdiff(steiner_symmetral(step), step) == (0, 0)


def test_min_translate_half_lift(step):
    E = translate_over_partition(step, {"L": 0, "R": 1}, {0: 0, 1: Q(1, 2)})
    t, value = min_translate_symdiff(E, step)
    assert value == Q(1, 2) and 0 <= t <= Q(1, 2)
    # the objective is flat on [0, 1/2]
    assert symdiff_to_translate(E, Q(1, 4)) == Q(1, 2)


def test_min_translate_rejects_foreign_v(step, unit):
    with pytest.raises(PolysetError):
        min_translate_symdiff(steiner_symmetral(step), unit)


def test_prop14_step(halves, step):
    E = prop14_construct(PwAffineField.zero(halves), step, 0)
    assert E.lower.value(0, (Q(1, 4),)) == 0 and E.upper.value(1, (Q(3, 4),)) == 2
    assert min_translate_symdiff(E, step)[1] > 0


def test_prop14_errors(halves, step, unit):
    zero = PwAffineField.zero(halves)
    with pytest.raises(PolysetError):
        prop14_construct(zero, step, Q(1, 2))
    with pytest.raises(PolysetError):
        prop14_construct(zero, unit, 0)
    with pytest.raises(PolysetError):
        prop14_construct(step, unit, 0)
    tent = PwAffineField.build(halves, {"L": ([1], 0), "R": ([-1], 1)})
    with pytest.raises(PolysetError):
        prop14_construct(zero, tent, 0)


def test_lower_above_upper_rejected(halves, unit):
    with pytest.raises(PolysetError):
        PolyVerticalSet(unit, PwAffineField.zero(halves))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([1, 2]))
def test_roundtrip_and_volume(seed, dim):
    v, b = random_scene(random.Random(seed), dim, 6)
    E = build_W(v, b)
    v2, b2 = slice_and_barycenter(E)
    assert v2.same_as(v, v.support) and b2.same_as(b, v.support)
    assert volume(E) == volume(steiner_symmetral(v)) == v.integral()
    F = steiner_symmetral(slice_and_barycenter(steiner_symmetral(v))[0])
    assert F.lower.same_as(steiner_symmetral(v).lower)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([1, 2]))
def test_min_translate_is_a_minimum(seed, dim):
    rng = random.Random(seed)
    v, b = random_scene(rng, dim, 5)
    E = build_W(v, b)
    t, value = min_translate_symdiff(E, v)
    assert value >= 0
    for probe in [t - Q(1, 7), t + Q(1, 9), Q(0), Q(rng.randint(-8, 8), 4)]:
        assert symdiff_to_translate(E, probe) >= value - 1e-9
