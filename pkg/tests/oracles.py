"""Brute-force reference implementations used only by the tests."""

from functools import lru_cache

import numpy as np

from tdeform.lattice import Cone2


def hilbert_basis_2d_brute(c: Cone2) -> set:
    """Irreducible lattice points of the cone, by exhaustive search in a box.

    Irreducible points have coefficients at most 1 on each ray, and so does
    anything that splits off from them, so the box below holds every candidate.
    """
    b = 2 * max(abs(x) for r in c.rays for x in r)
    xs, ys = np.meshgrid(np.arange(-b, b + 1), np.arange(-b, b + 1))
    pts = np.stack([xs.ravel(), ys.ravel()], axis=1).astype(np.int64)
    d0, d1 = c.dual().rays
    v0, v1 = pts @ np.array(d0), pts @ np.array(d1)
    keep = (v0 >= 0) & (v1 >= 0) & np.any(pts != 0, axis=1)
    pts, v0, v1 = pts[keep], v0[keep], v1[keep]
    out = set()
    for i, p in enumerate(pts):
        # q splits off p iff p - q lies in the cone, i.e. both dual values drop
        below = (v0 <= v0[i]) & (v1 <= v1[i])
        below[i] = False
        if not below.any():
            out.add((int(p[0]), int(p[1])))
    return out


def cone_contains_brute(c: Cone2, v, box: int = 30) -> bool:
    """Membership in the dual cone, decided on every lattice point of a box of the cone."""
    pts = [(x, y) for x in range(-box, box + 1) for y in range(-box, box + 1) if c.contains((x, y))]
    return all(v[0] * p[0] + v[1] * p[1] >= 0 for p in pts)


def generated_by(basis, contains, points) -> list:
    """Points of ``points`` that are not nonnegative integer combinations of ``basis``."""
    basis = [tuple(h) for h in basis]

    @lru_cache(maxsize=None)
    def ok(x):
        if not any(x):
            return True
        for h in basis:
            y = tuple(a - b for a, b in zip(x, h))
            if contains(y) and ok(y):
                return True
        return False

    return [p for p in points if not ok(tuple(p))]


def reducible(basis, contains) -> list:
    """Basis elements that split off another basis element inside the cone."""
    return [h for h in basis
            if any(g != h and contains(tuple(a - b for a, b in zip(h, g))) for g in basis)]
