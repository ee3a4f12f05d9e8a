import random

import pytest
from hypothesis import given, settings

from tdeform.cone3 import Cone3
from tdeform.corpus import random_two_point_divisor
from tdeform.divisor import INF, ZERO, NotProper, PolyhedralDivisor
from tdeform.downgrade import (
    STANDARD_BASIS,
    ChiInDualCone,
    DowngradeError,
    DowngradeInput,
    EdgeSign,
    LatticeConditionViolated,
    TooManyPoints,
    altmann_t1,
    crosscheck,
    downgrade,
    toric_t1_line_dims,
    upgrade,
    validate,
)
from tdeform.linalg import det3
from tdeform.polyhedra import LatticePolyhedron
from tdeform.t1 import t1_dim

from .conftest import QUADRANT, e1, seeds, two_point_divisors

OCTANT = Cone3(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
OCT_INPUT = DowngradeInput(OCTANT, (1, -1, 0))


def test_validate_octant():
    cls = validate(OCT_INPUT)
    assert cls.edges(EdgeSign.POSITIVE) == [(1, 0, 0)]
    assert cls.edges(EdgeSign.NEGATIVE) == [(0, 1, 0)]
    assert cls.edges(EdgeSign.ORTHOGONAL) == [(0, 0, 1)]
    assert cls.n_positive == cls.n_negative == 1


def test_validate_errors():
    with pytest.raises(ChiInDualCone):
        validate(DowngradeInput(OCTANT, (0, 0, 1)))
    with pytest.raises(ChiInDualCone):
        validate(DowngradeInput(OCTANT, (0, 0, -1)))
    with pytest.raises(LatticeConditionViolated):
        validate(DowngradeInput(OCTANT, (2, -1, 0)))
    with pytest.raises(DowngradeError):
        validate(DowngradeInput(OCTANT, (2, -2, 0)))


def test_validate_accepts_values_within_one():
    c = Cone3.from_generators([(1, 0, 0), (0, 1, 0), (1, 1, 2)])
    cls = validate(DowngradeInput(c, (1, -1, 0)))
    assert (cls.n_positive, cls.n_negative) == (1, 1)


def test_downgrade_octant_with_hand_basis():
    res = downgrade(OCT_INPUT, [(1, 1, 0), (0, 0, 1), (1, 0, 0)])
    assert res.sigma == QUADRANT
    assert res.delta0 == LatticePolyhedron.cone(QUADRANT)
    assert res.delta_inf == LatticePolyhedron.cone(QUADRANT, (1, 0))


def test_downgrade_rejects_bad_basis():
    with pytest.raises(DowngradeError):
        downgrade(OCT_INPUT, [(1, 1, 0), (0, 0, 1), (0, 1, 0)])


def test_upgrade_e1():
    inp = upgrade(e1())
    assert inp.chi0 == (0, 0, 1)
    assert set(inp.tau.rays) == {(0, 0, 1), (2, -2, 1), (0, 3, -1), (1, 0, 0)}


def test_upgrade_errors():
    allsig = PolyhedralDivisor.build(QUADRANT, [(ZERO, [(0, 0)]), (INF, [(0, 0)])])
    with pytest.raises(NotProper):
        upgrade(allsig)
    three = e1().with_entry(ZERO.__class__(ZERO.t + 1), LatticePolyhedron.cone(QUADRANT))
    with pytest.raises(TooManyPoints):
        upgrade(three)


def test_round_trip_e1():
    res = downgrade(upgrade(e1()), STANDARD_BASIS)
    assert res.divisor.sorted() == e1().sorted()


@given(two_point_divisors)
@settings(max_examples=60, deadline=None)
def test_round_trip_random(D):
    res = downgrade(upgrade(D), STANDARD_BASIS)
    assert res.sigma == D.sigma
    for p in (ZERO, INF):
        assert res.divisor.coefficient(p) == (D.coefficient(p) or LatticePolyhedron.cone(D.sigma))


@given(two_point_divisors)
@settings(max_examples=60, deadline=None)
def test_vertex_counts_match_edge_signs(D):
    res = downgrade(upgrade(D), STANDARD_BASIS)
    assert res.delta0.n_vertices == res.classification.n_positive
    assert res.delta_inf.n_vertices == res.classification.n_negative


def _other_bases(chi0, rng, n=3):
    """Unimodular bases adapted to chi0 = (0, 0, 1), by shearing the standard one."""
    out = []
    while len(out) < n:
        a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
        if a * d - b * c not in (1, -1):
            continue
        x, y = rng.randint(-3, 3), rng.randint(-3, 3)
        basis = [(a, b, 0), (c, d, 0), (x, y, 1)]
        assert abs(det3(*basis)) == 1
        out.append(basis)
    return out


@given(two_point_divisors, seeds)
@settings(max_examples=40, deadline=None)
def test_line_dims_independent_of_complement(D, seed):
    inp = upgrade(D)
    ref = toric_t1_line_dims(inp, STANDARD_BASIS)
    for basis in _other_bases(inp.chi0, random.Random(seed)):
        assert toric_t1_line_dims(inp, basis) == ref


def test_toric_line_octant_is_zero():
    assert toric_t1_line_dims(OCT_INPUT).dims == {}
    for a in (-3, -2, -1, 1, 2, 3):
        assert altmann_t1(OCTANT, (a, -a, 0)) == 0


def test_toric_line_e1():
    line = toric_t1_line_dims(upgrade(e1()))
    assert line.dims == {2: 1} and line.total == 1
    assert line[1] == 0 and line[3] == 0 and line[-1] == 0


def test_first_degree_vanishes_with_one_positive_edge():
    D = PolyhedralDivisor.build(QUADRANT, [(ZERO, [(0, 4)]), (INF, [(0, 0), (3, -3)])])
    line = toric_t1_line_dims(upgrade(D))
    assert line[1] == 0
    # two negative edges: the mirrored first clause also gives 0
    assert line[-1] == 0 and line[-2] == line[-3] == 1


def test_altmann_examples():
    tau = upgrade(e1()).tau
    assert altmann_t1(tau, (0, 0, 2)) == 1
    assert altmann_t1(tau, (0, 0, 0)) == 0
    assert altmann_t1(OCTANT, (0, 0, 0)) == 0


def test_crosscheck_e1():
    rep = crosscheck(e1())
    assert (rep.divisor_formula, rep.toric_corollaries, rep.altmann_oracle) == (1, 1, 1)
    assert rep.agree


def test_crosscheck_smooth():
    D = downgrade(OCT_INPUT, [(1, 1, 0), (0, 0, 1), (1, 0, 0)]).divisor
    rep = crosscheck(D)
    assert (rep.divisor_formula, rep.toric_corollaries, rep.altmann_oracle) == (0, 0, 0)


@given(two_point_divisors)
@settings(max_examples=50, deadline=None)
def test_crosscheck_random(D):
    rep = crosscheck(D)
    assert rep.agree, rep
    assert rep.divisor_formula == t1_dim(D).total


def test_corpus_parameters_respected():
    rng = random.Random(11)
    for _ in range(50):
        D = random_two_point_divisor(rng)
        for p in D.polyhedra():
            assert p.n_vertices <= 3
            assert all(ell <= 4 for ell in p.edge_lengths)
