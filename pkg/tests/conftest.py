import random
from fractions import Fraction

import pytest
from hypothesis import assume, strategies as st

from tdeform.corpus import random_divisor, random_two_point_divisor
from tdeform.divisor import INF, ZERO, P1Point, PolyhedralDivisor
from tdeform.lattice import Cone2

QUADRANT = Cone2((1, 0), (0, 1))


def e1() -> PolyhedralDivisor:
    return PolyhedralDivisor.build(QUADRANT, [(ZERO, [(0, 0), (2, -2)]), (INF, [(0, 3)])])


def four_point() -> PolyhedralDivisor:
    return PolyhedralDivisor.build(
        QUADRANT,
        [(P1Point(Fraction(i)), [(0, 0), (1, -1)]) for i in range(4)] + [(INF, [(0, 5)])])


@pytest.fixture
def E1() -> PolyhedralDivisor:
    return e1()


@pytest.fixture
def quadrant() -> Cone2:
    return QUADRANT


seeds = st.integers(min_value=0, max_value=2**32 - 1)
divisors = seeds.map(lambda s: random_divisor(random.Random(s)))
two_point_divisors = seeds.map(lambda s: random_two_point_divisor(random.Random(s)))


@st.composite
def cones(draw, max_coord=10):
    coord = st.integers(-max_coord, max_coord)
    a = (draw(coord), draw(coord))
    b = (draw(coord), draw(coord))
    assume(a[0] * b[1] - a[1] * b[0] != 0)
    return Cone2.from_rays(a, b)
