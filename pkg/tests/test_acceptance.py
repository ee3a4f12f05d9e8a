"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run standalone with ``python3 -m tests.test_acceptance`` or under pytest.
"""

import random
import subprocess
import sys
import tempfile
import time
from fractions import Fraction
from pathlib import Path

import pytest

from tdeform.cone3 import Cone3
from tdeform.corpus import corpus
from tdeform.downgrade import DowngradeInput, altmann_t1, crosscheck, downgrade, toric_t1_line_dims, upgrade
from tdeform.lattice import Cone2, hilbert_basis_2d
from tdeform.polyhedra import LatticePolyhedron
from tdeform.t1 import t1_dim
from tdeform.versal import build_family, specialize_fiber

from .conftest import QUADRANT, e1
from .oracles import hilbert_basis_2d_brute
from .test_cone3 import check_hilbert_basis, random_simplicial_cone
from .test_polyhedra import check_evaluation_laws
from .test_versal import check_round_trip
from .transforms import add_trivial_point, principal_shift, relabel

DATA = Path(__file__).resolve().parent.parent / "data"


def _report(number: int, title: str, check, limit: float = None, out=print) -> None:
    start = time.perf_counter()
    err = None
    try:
        detail = check()
    except AssertionError as e:
        err, detail = e, str(e) or "assertion failed"
    elapsed = time.perf_counter() - start
    timing = f"{elapsed:.2f}s" + (f", limit {limit:g}s" if limit else "")
    if err is None and limit is not None and elapsed >= limit:
        err = AssertionError(f"took {elapsed:.2f}s, limit {limit}s")
    status = "PASS" if err is None else "FAIL"
    out(f"[{status}] criterion {number}: {title} -- {detail} ({timing})")
    if err is not None:
        raise err


@pytest.fixture
def say(capsys):
    def emit(line: str) -> None:
        with capsys.disabled():
            print(line)
    return emit


def criterion_1():
    rep_t1 = t1_dim(e1())
    assert rep_t1.total == 1, f"t1 = {rep_t1.total}"
    rep = crosscheck(e1())
    triple = (rep.divisor_formula, rep.toric_corollaries, rep.altmann_oracle)
    assert triple == (1, 1, 1) and rep.agree, f"triple {triple}"
    return "t1 = 1, cross-check 1 = 1 = 1"


def criterion_2():
    octant = DowngradeInput(Cone3(((1, 0, 0), (0, 1, 0), (0, 0, 1))), (1, -1, 0))
    res = downgrade(octant, [(1, 1, 0), (0, 0, 1), (1, 0, 0)])
    assert res.sigma == QUADRANT
    assert res.delta0 == LatticePolyhedron.cone(QUADRANT)
    assert res.delta_inf == LatticePolyhedron.cone(QUADRANT, (1, 0))
    assert toric_t1_line_dims(octant).dims == {}
    oracle = [altmann_t1(octant.tau, (a, -a, 0)) for a in range(-5, 6) if a]
    assert not any(oracle), oracle
    assert t1_dim(res.divisor).total == 0
    return "downgrade is (quadrant, sigma, (1,0)+sigma), every graded dimension 0, formula 0"


def criterion_3():
    divisors = corpus(seed=2024, n=60, two_point=True)
    bad = []
    for i, D in enumerate(divisors):
        for p in D.polyhedra():
            assert p.n_vertices <= 3 and all(ell <= 4 for ell in p.edge_lengths)
        rep = crosscheck(D)
        if not rep.agree:
            bad.append((i, rep))
    assert not bad, f"mismatches: {bad[:3]}"
    return f"{len(divisors)} two-point divisors, all three computations equal"


def criterion_4():
    rng = random.Random(77)
    divisors = corpus(seed=4, n=120)
    for D in divisors:
        ref = t1_dim(D).total
        assert t1_dim(add_trivial_point(D, rng)).total == ref
        assert t1_dim(principal_shift(D, rng)).total == ref
        assert t1_dim(relabel(D, rng)).total == ref
    return f"{len(divisors)} divisors unchanged under trivial point, principal shift, Moebius"


def criterion_5():
    divisors = corpus(seed=5, n=120)
    for D in divisors:
        check_round_trip(D)
    F = build_family(e1())
    assert F.dim_V == 2 and t1_dim(e1()).total == 1
    assert t1_dim(specialize_fiber(F, [Fraction(0), Fraction(-1)])).total == 0
    return f"{len(divisors)} base-point fibers exact, dim V >= t1; E1: dim V 2, t1 1, fiber t1 0"


def criterion_6():
    rng = random.Random(6)
    n2 = 0
    while n2 < 30:
        a = (rng.randint(-10, 10), rng.randint(-10, 10))
        b = (rng.randint(-10, 10), rng.randint(-10, 10))
        if a[0] * b[1] - a[1] * b[0] == 0:
            continue
        c = Cone2.from_rays(a, b)
        assert set(hilbert_basis_2d(c)) == hilbert_basis_2d_brute(c), c
        n2 += 1
    cones = [Cone3(((1, 0, 0), (0, 1, 0), (0, 0, 1))), upgrade(e1()).tau]
    cones += [random_simplicial_cone(rng) for _ in range(10)]
    for c in cones:
        check_hilbert_basis(c)
    return f"{n2} planar cones match brute force; {len(cones)} spatial cones generate and are irreducible"


def criterion_7():
    rng = random.Random(7)
    for _ in range(1000):
        check_evaluation_laws(rng)
    return "1000 triples: additivity, superadditivity, equality on shared subcones"


def criterion_8():
    def tdeform(*args):
        r = subprocess.run([sys.executable, "-m", "tdeform", *map(str, args)],
                           capture_output=True, check=False)
        return r.returncode, r.stdout

    divisor_docs = ["E1.json", "four_point.json", "three_points.json", "essential_infinity.json",
                    "improper_sum.json", "malformed.json"]
    runs = []
    for name in divisor_docs:
        for cmd in ("validate", "t1", "versal"):
            runs.append((cmd, DATA / name))
    runs += [("crosscheck", DATA / "E1.json"), ("upgrade", DATA / "E1.json"),
             ("fiber", DATA / "E1.json", "--at", "0,-1"), ("fiber", DATA / "E1.json", "--at", "1,0"),
             ("crosscheck", "--corpus", "5", "--seed", "1")]
    for name in ("octant.cone.json", "e1_upgrade.cone.json"):
        for cmd in ("downgrade", "toric-t1", "hilbert"):
            runs.append((cmd, DATA / name))
    codes = {}
    for args in runs:
        first, second = tdeform(*args), tdeform(*args)
        assert first == second, f"output differs for {args}"
        codes[(args[0], Path(str(args[1])).name, *map(str, args[2:]))] = first[0]
    expected = {("validate", "E1.json"): 0, ("validate", "improper_sum.json"): 1,
                ("validate", "malformed.json"): 2, ("t1", "improper_sum.json"): 1,
                ("fiber", "E1.json", "--at", "0,-1"): 0, ("fiber", "E1.json", "--at", "1,0"): 1,
                ("crosscheck", "E1.json"): 0, ("t1", "E1.json"): 0, ("downgrade", "octant.cone.json"): 0}
    for k, v in expected.items():
        assert codes[k] == v, f"{k}: exit {codes[k]}, expected {v}"
    svgs = []
    with tempfile.TemporaryDirectory() as tmp:
        for name, extra in (("E1.json", ["--point", "0"]), ("quadrant.polyhedron.json", []),
                            ("three_points.json", ["--clip", "8", "6"])):
            outs = []
            for k in range(2):
                path = Path(tmp) / f"{k}.svg"
                code, _ = tdeform("render", DATA / name, path, *extra)
                assert code == 0
                outs.append(path.read_bytes())
            assert outs[0] == outs[1], f"SVG differs for {name}"
            svgs.append(name)
    return f"{len(runs)} JSON runs and {len(svgs)} SVG renders byte-identical; exit codes 0/1/2 as documented"


CRITERIA = [
    (1, "worked example E1", criterion_1, 1.0),
    (2, "smooth octant", criterion_2, 1.0),
    (3, "randomized two-point cross-check", criterion_3, 60.0),
    (4, "invariance suite", criterion_4, None),
    (5, "versal round trip", criterion_5, None),
    (6, "Hilbert basis oracles", criterion_6, 30.0),
    (7, "evaluation laws", criterion_7, None),
    (8, "CLI determinism and exit codes", criterion_8, None),
]


@pytest.mark.parametrize("number, title, check, limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(say, number, title, check, limit):
    _report(number, title, check, limit, out=say)


if __name__ == "__main__":
    failed = 0
    for number, title, check, limit in CRITERIA:
        try:
            _report(number, title, check, limit)
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
