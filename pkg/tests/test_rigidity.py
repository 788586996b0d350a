import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from steinerkit import (PwAffineField, build_W, check_equality_case, construct_witness, decide_rigidity,
                        interval_complex, mismatched_stairway_check, oracle_perimeter, perimeter_formula,
                        prop14_construct, steiner_symmetral, translate_over_partition)
from steinerkit.arith import close
from steinerkit.connectivity import essentially_disconnects, jump_set_portions, union_portions, zero_set_portions
from steinerkit.polyset import PolysetError, min_translate_symdiff
from steinerkit.rigidity import RigidityError, search_equality_cases
from steinerkit.sampling import (random_complex, random_continuous_field, random_dim1_profile, random_scene,
                                 random_slice_field)


@pytest.fixture
def fig1b(halves):
    return PwAffineField.build(halves, {"L": ([-2], 1), "R": ([2], -1)})


def test_equality_case_examples(halves, step):
    assert check_equality_case(steiner_symmetral(step), step)[0]
    E = prop14_construct(PwAffineField.zero(halves), step, 0)
    assert check_equality_case(E, step)[0]
    assert oracle_perimeter(E) == oracle_perimeter(steiner_symmetral(step)) == 6
    lifted = translate_over_partition(step, {"L": 0, "R": 1}, {0: 0, 1: 1})
    ok, report = check_equality_case(lifted, step)
    assert not ok and report.jump_violations == [1]
    assert oracle_perimeter(lifted) == 7


def test_equality_case_needs_v_distribution(step, unit):
    with pytest.raises(PolysetError):
        check_equality_case(steiner_symmetral(step), unit)


def test_fig1a(step):
    r = decide_rigidity(step)
    assert r.status == "non_rigid" and r.witness.epsilon == 1 and r.witness.t == Q(1, 2)


def test_fig1b(fig1b):
    r = decide_rigidity(fig1b)
    assert r.status == "non_rigid"
    assert r.witness.epsilon == float("inf")


def test_unit_is_rigid(unit):
    for hint in ("auto", "planar", "polyhedral", "no_vertical", "stairway"):
        assert decide_rigidity(unit, hint).status == "rigid"
    assert search_equality_cases(unit) == []


def test_tapered_is_rigid(tapered):
    assert decide_rigidity(tapered, "polyhedral").status == "rigid"
    assert search_equality_cases(tapered) == []


def test_inapplicable_hints(tapered, step):
    with pytest.raises(RigidityError):
        decide_rigidity(tapered, "planar")
    with pytest.raises(RigidityError):
        decide_rigidity(step, "no_vertical")
    with pytest.raises(RigidityError):
        decide_rigidity(step, "nonsense")


def test_out_of_class(halves):
    bad = PwAffineField.build(halves, {"L": -1, "R": 1})
    assert decide_rigidity(bad).status == "out_of_class"


def test_stairway(step, unit, tapered):
    holds, stair = mismatched_stairway_check(step)
    assert not holds and set(stair.offsets) == {0, Q(1, 2)}
    assert mismatched_stairway_check(unit) == (True, None)
    assert mismatched_stairway_check(tapered) == (True, None)


def test_construct_witness(step, fig1b):
    w = construct_witness(step, ["R"], Q(1, 2))
    assert oracle_perimeter(w.set) == 6 and min_translate_symdiff(w.set, step)[1] == Q(1, 2)
    far = construct_witness(fig1b, ["R"], 10)
    assert check_equality_case(far.set, fig1b)[0]
    assert close(oracle_perimeter(far.set), oracle_perimeter(steiner_symmetral(fig1b)))
    with pytest.raises(RigidityError):
        construct_witness(step, ["R"], 1)
    one = PwAffineField.build(interval_complex([0, 1]), {0: 1})
    with pytest.raises(RigidityError):
        construct_witness(one, [0])


def test_witness_rejects_non_crossable(unit):
    with pytest.raises(RigidityError):
        construct_witness(unit, ["L"])


def test_search_finds_witnesses_when_non_rigid(step):
    assert search_equality_cases(step, limit=1)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([1, 2]))
def test_equality_iff_perimeter_equality(seed, dim):
    v, b = random_scene(random.Random(seed), dim)
    E = build_W(v, b)
    same = close(perimeter_formula("W", v, b).total, perimeter_formula("F", v).total)
    assert check_equality_case(E, v)[0] == same


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([1, 2]))
def test_witnesses_are_sound(seed, dim):
    rng = random.Random(seed)
    v = random_slice_field(rng, random_complex(rng, dim, 6))
    r = decide_rigidity(v)
    if r.status == "non_rigid":
        E = r.witness.set
        assert check_equality_case(E, v)[0]
        assert close(oracle_perimeter(E), oracle_perimeter(steiner_symmetral(v)))
        assert min_translate_symdiff(E, v)[1] > 0


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_planar_matches_polyhedral(seed):
    v = random_dim1_profile(random.Random(seed))
    assert decide_rigidity(v, "planar").status == decide_rigidity(v, "polyhedral").status
    assert decide_rigidity(v, "stairway").status == decide_rigidity(v, "polyhedral").status


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_no_vertical_matches_polyhedral(seed):
    from steinerkit import is_indecomposable_F

    v = random_continuous_field(random.Random(seed))
    a = decide_rigidity(v, "no_vertical").status
    assert a == decide_rigidity(v, "polyhedral").status
    assert (a == "rigid") == is_indecomposable_F(v)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([1, 2]))
def test_stairway_property_blocks_every_threshold(seed, dim):
    from steinerkit.field import classify_facets, positive_support

    rng = random.Random(seed)
    v = random_slice_field(rng, random_complex(rng, dim, 6))
    holds, _ = mismatched_stairway_check(v)
    if not holds:
        return
    thresholds = {fc.jump_essinf for fc in classify_facets(v).values()} | {Q(1, 1000)}
    for eps in thresholds:
        if eps == float("inf") or eps <= 0:
            continue
        K = union_portions(zero_set_portions(v), jump_set_portions(v, eps / 2))
        assert not essentially_disconnects(v.complex, K, positive_support(v))[0]
