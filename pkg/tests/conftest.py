from fractions import Fraction

import pytest

from steinerkit import PwAffineField, interval_complex, polygon_complex

HALF = Fraction(1, 2)


@pytest.fixture
def halves():
    return interval_complex([0, HALF, 1], ["L", "R"])


@pytest.fixture
def step(halves):
    return PwAffineField.build(halves, {"L": 1, "R": 2})


@pytest.fixture
def unit(halves):
    return PwAffineField.build(halves, {"L": 1, "R": 1})


@pytest.fixture
def split_square():
    return polygon_complex([[(0, 0), (HALF, 0), (HALF, 1), (0, 1)],
                            [(HALF, 0), (1, 0), (1, 1), (HALF, 1)]], ["L", "R"])


@pytest.fixture
def tapered(split_square):
    return PwAffineField.build(split_square, {"L": 1, "R": ((0, 1), 0)})
