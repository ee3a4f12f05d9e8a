"""Seeded random generation of cones, polyhedra and proper divisors."""

from __future__ import annotations

import random
from fractions import Fraction
from math import floor
from typing import Optional

from .divisor import INF, ZERO, P1Point, PolyhedralDivisor, is_proper, total_polytope
from .lattice import Cone2, Vec2, add, cross, dot, primitive, scale, sort_ccw
from .polyhedra import LatticePolyhedron


def random_cone(rng: random.Random, max_coord: int = 3) -> Cone2:
    while True:
        a = (rng.randint(-max_coord, max_coord), rng.randint(-max_coord, max_coord))
        b = (rng.randint(-max_coord, max_coord), rng.randint(-max_coord, max_coord))
        if a == (0, 0) or b == (0, 0) or cross(a, b) == 0:
            continue
        return Cone2.from_rays(a, b)


def random_dual_degree(rng: random.Random, sigma: Cone2, interior: bool = False,
                       max_coeff: int = 4) -> Vec2:
    d = sigma.dual()
    lo = 1 if interior else 0
    while True:
        a, b = rng.randint(lo, max_coeff), rng.randint(lo, max_coeff)
        if a or b:
            return add(scale(a, d.ray0), scale(b, d.ray1))


def random_polyhedron(rng: random.Random, sigma: Cone2, max_vertices: int = 3,
                      max_length: int = 4, max_shift: int = 2) -> LatticePolyhedron:
    """Random lattice polyhedron built edge by edge with strictly rotating normals."""
    d = sigma.dual()
    nv = rng.randint(1, max_vertices)
    normals: set[Vec2] = set()
    tries = 0
    while len(normals) < nv - 1 and tries < 200:
        tries += 1
        a, b = rng.randint(1, 3), rng.randint(1, 3)
        normals.add(primitive(add(scale(a, d.ray0), scale(b, d.ray1)))[0])  # type: ignore[arg-type]
    v: Vec2 = (rng.randint(-max_shift, max_shift), rng.randint(-max_shift, max_shift))
    verts = [v]
    for n in sort_ccw(normals, d.ray0):
        u = (-n[1], n[0])
        if dot(d.ray0, u) < 0:
            u = (n[1], -n[0])
        v = add(v, scale(rng.randint(1, max_length), u))
        verts.append(v)
    return LatticePolyhedron.from_vertices(sigma, verts)


def make_proper(D: PolyhedralDivisor, at: P1Point = INF) -> PolyhedralDivisor:
    """Translate the coefficient at ``at`` by a small lattice vector making ``D`` proper."""
    d = D.sigma.dual()
    base = D.coefficient(at) or LatticePolyhedron.cone(D.sigma)
    D = D.with_entry(at, base)
    total = total_polytope(D)
    # need d.ray0(w) >= -eval(d.ray0) and d.ray1(w) >= -eval(d.ray1)
    need = (-total.eval(d.ray0), -total.eval(d.ray1))
    det = cross(d.ray0, d.ray1)
    # rational solution of the two equalities, by Cramer's rule
    wx = Fraction(need[0] * d.ray1[1] - need[1] * d.ray0[1], det)
    wy = Fraction(d.ray0[0] * need[1] - d.ray1[0] * need[0], det)
    cx, cy = floor(wx), floor(wy)
    span = max(abs(c) for c in (*d.ray0, *d.ray1)) + 1
    cands = [(x, y) for x in range(cx - span, cx + span + 2)
             for y in range(cy - span, cy + span + 2)
             if dot(d.ray0, (x, y)) >= need[0] and dot(d.ray1, (x, y)) >= need[1]]
    cands.sort(key=lambda w: (dot(d.ray0, w) + dot(d.ray1, w), w))
    for w in cands:
        cand = D.with_entry(at, base.translate(w))
        if is_proper(cand):
            return cand
    inner = add(D.sigma.ray0, D.sigma.ray1)
    k = 1
    while True:
        cand = D.with_entry(at, base.translate(scale(k, inner)))
        if is_proper(cand):
            return cand
        k += 1


def random_two_point_divisor(rng: random.Random, max_coord: int = 2, max_vertices: int = 3,
                             max_length: int = 4) -> PolyhedralDivisor:
    sigma = random_cone(rng, max_coord)
    d0 = random_polyhedron(rng, sigma, max_vertices, max_length)
    dinf = random_polyhedron(rng, sigma, max_vertices, max_length)
    D = PolyhedralDivisor(sigma, ((ZERO, d0), (INF, dinf)))
    return make_proper(D, INF)


def random_divisor(rng: random.Random, max_points: int = 5, max_coord: int = 3,
                   max_vertices: int = 3, max_length: int = 4,
                   sigma: Optional[Cone2] = None) -> PolyhedralDivisor:
    sigma = sigma or random_cone(rng, max_coord)
    n = rng.randint(1, max_points)
    ts: set[Fraction] = set()
    while len(ts) < n:
        ts.add(Fraction(rng.randint(-6, 6), rng.randint(1, 3)))
    pts = [P1Point(t) for t in sorted(ts)]
    if rng.random() < 0.5:
        pts[-1] = INF
    entries = []
    for p in pts:
        r = rng.random()
        if r < 0.15:
            poly = LatticePolyhedron.cone(sigma)
        else:
            poly = random_polyhedron(rng, sigma, max_vertices, max_length)
        entries.append((p, poly))
    D = PolyhedralDivisor(sigma, tuple(entries))
    return make_proper(D, rng.choice(pts))


def corpus(seed: int, n: int, two_point: bool = False) -> list[PolyhedralDivisor]:
    rng = random.Random(seed)
    gen = random_two_point_divisor if two_point else random_divisor
    return [gen(rng) for _ in range(n)]
