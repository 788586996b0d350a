from fractions import Fraction as Q

import pytest

from steinerkit import build_W, check_equality_case, decide_rigidity, gallery, oracle_perimeter, steiner_symmetral
from steinerkit.arith import close
from steinerkit.gallery import ENTRIES, GalleryError, rational_sequence
from steinerkit.polyset import min_translate_symdiff


@pytest.mark.parametrize("name", sorted(ENTRIES))
def test_entries_match_their_expected_verdict(name):
    e = gallery(name)
    assert decide_rigidity(e.v).status == e.expected
    if e.b is not None:
        E = build_W(e.v, e.b)
        assert check_equality_case(E, e.v)[0] == e.equality
        assert close(oracle_perimeter(E), oracle_perimeter(steiner_symmetral(e.v))) == e.equality


def test_unknown_name():
    with pytest.raises(GalleryError):
        gallery("nope")


def test_bad_depth():
    with pytest.raises(ValueError):
        gallery("cantor", 0)


@pytest.mark.parametrize("depth", [1, 2, 3])
def test_example11_depths(depth):
    e = gallery("example11", depth)
    values = {p.offset for p in e.v.pieces.values()}
    assert min(values) > 0 and max(values) < 2
    # the smallest step added at this depth
    assert Q(1, 2 ** depth) in {abs(a - b) for a in values for b in values}
    r = decide_rigidity(e.v)
    assert r.status == "non_rigid" and r.witness.epsilon == Q(1, 2 ** depth)
    assert close(e.v.integral(), 2 * 1)  # refinements keep the mean of v


def test_example11_first_refinement_matches_construction():
    e = gallery("example11", 1)
    v = e.v
    cx = v.complex
    # centers of the two corner diamonds carry 1 -/+ 1/2
    probe = {(Q(-3, 4), Q(0)): Q(1, 2), (Q(3, 4), Q(0)): Q(3, 2), (Q(0), Q(0)): Q(1)}
    from steinerkit.geometry import cross
    for p, want in probe.items():
        hits = [c.index for c in cx.cells if all(cross(c.vertices[i], c.vertices[(i + 1) % len(c.vertices)], p) > 0
                                                 for i in range(len(c.vertices)))]
        assert hits and v.value(hits[0], p) == want


@pytest.mark.parametrize("depth", [1, 2, 3, 4])
def test_cantor_staircase(depth):
    e = gallery("cantor", depth)
    levels = sorted({p.offset for p in e.b.pieces.values()})
    assert levels == [Q(i, 2 ** depth) for i in range(1, 2 ** depth)]
    E = build_W(e.v, e.b)
    assert check_equality_case(E, e.v)[0]
    assert (min_translate_symdiff(E, e.v)[1] > 0) == (depth > 1)


def test_rationals_sequence():
    assert rational_sequence(6) == [0, Q(1, 2), Q(1, 3), Q(2, 3), Q(1, 4), Q(3, 4)]
    e = gallery("rationals", 5)
    assert len(e.v.complex.cells) == 5
    assert e.v.pieces[e.v.complex.cell_index("r4")].offset == sum(Q(1, 2 ** h) for h in range(1, 6))
