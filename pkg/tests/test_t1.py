import random
from math import gcd

from hypothesis import given, settings

from tdeform.divisor import INF, ZERO, PolyhedralDivisor
from tdeform.polyhedra import LatticePolyhedron
from tdeform.t1 import t1_dim

from .conftest import QUADRANT, divisors, e1, four_point, seeds
from .transforms import add_trivial_point, principal_shift, relabel


def test_e1():
    rep = t1_dim(e1())
    assert rep.r_prime == 1 and rep.global_term == 0
    assert [(str(c.point), c.edge_lengths) for c in rep.per_point] == [("0", (2,))]
    assert rep.total == 1


def test_all_removable_is_zero():
    D = PolyhedralDivisor.build(QUADRANT, [(ZERO, [(0, 0)]), ("inf", [(2, 1)]), ("5", [(0, 1)])])
    rep = t1_dim(D)
    assert rep.r_prime == 0 and rep.total == 0


def test_four_essential_points():
    rep = t1_dim(four_point())
    assert rep.r_prime == 4 and rep.global_term == 1
    assert all(c.contribution == 0 for c in rep.per_point)
    assert rep.total == 1


def _recount(D):
    """The formula again, from raw vertex lists and gcds only."""
    essential = [p.vertices for p in D.polyhedra() if len(p.vertices) >= 2]
    total = max(0, len(essential) - 3)
    for vs in essential:
        total += -1 + sum(gcd(b[0] - a[0], b[1] - a[1]) for a, b in zip(vs, vs[1:]))
    return total


@given(divisors)
@settings(max_examples=100, deadline=None)
def test_independent_recount_matches(D):
    assert t1_dim(D).total == _recount(D)


@given(divisors, seeds)
@settings(max_examples=100, deadline=None)
def test_invariant_under_trivial_point(D, seed):
    assert t1_dim(add_trivial_point(D, random.Random(seed))).total == t1_dim(D).total


@given(divisors, seeds)
@settings(max_examples=100, deadline=None)
def test_invariant_under_principal_shift(D, seed):
    assert t1_dim(principal_shift(D, random.Random(seed))).total == t1_dim(D).total


@given(divisors, seeds)
@settings(max_examples=100, deadline=None)
def test_invariant_under_moebius(D, seed):
    assert t1_dim(relabel(D, random.Random(seed))).total == t1_dim(D).total


def test_two_unit_edges_contribute_one():
    p = LatticePolyhedron.from_vertices(QUADRANT, [(0, 0), (1, -1), (3, -2)])
    D = PolyhedralDivisor(QUADRANT, ((ZERO, p), (INF, LatticePolyhedron.cone(QUADRANT, (0, 5)))))
    assert t1_dim(D).total == 1
