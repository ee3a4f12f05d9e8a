"""Pointed full-dimensional cones in a rank-3 lattice and their Hilbert bases."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .lattice import LatticeError, parallelepiped_points, primitive
from .linalg import cross3, det3

Vec3 = tuple[int, int, int]


class ConeError(LatticeError):
    pass


class NotPointed(ConeError):
    pass


class HilbertBoundExceeded(ConeError):
    pass


def dot3(a: Sequence[int], b: Sequence[int]) -> int:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _prim(v: Sequence[int]) -> Vec3:
    return primitive(v)[0]  # type: ignore[return-value]


@dataclass(frozen=True)
class Cone3:
    """Cone spanned by cyclically ordered extreme rays; facets join consecutive rays."""

    rays: tuple[Vec3, ...]

    def __post_init__(self) -> None:
        k = len(self.rays)
        if k < 3:
            raise NotPointed("a full-dimensional cone needs at least three rays")
        for r in self.rays:
            if primitive(r)[1] != 1:
                raise ConeError(f"ray {r!r} is not primitive")
        sign = 0
        for i in range(k):
            n = cross3(self.rays[i], self.rays[(i + 1) % k])
            vals = [dot3(n, r) for j, r in enumerate(self.rays) if j not in (i, (i + 1) % k)]
            if any(v == 0 for v in vals) or n == (0, 0, 0):
                raise NotPointed(f"rays {self.rays!r} are not extreme in cyclic order")
            s = 1 if vals[0] > 0 else -1
            if any((v > 0) != (s > 0) for v in vals) or (sign and s != sign):
                raise NotPointed(f"rays {self.rays!r} do not bound a pointed convex cone in this order")
            sign = s

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]]) -> Cone3:
        """Extreme rays of the cone generated by ``gens``, cyclically ordered."""
        pts = sorted({_prim(g) for g in gens if any(g)})
        facets: dict[Vec3, list[Vec3]] = {}
        for i, a in enumerate(pts):
            for b in pts[i + 1:]:
                n = cross3(a, b)
                if n == (0, 0, 0):
                    # opposite rays: the cone contains a line
                    raise NotPointed(f"generators {a!r} and {b!r} are opposite")
                vals = [dot3(n, g) for g in pts]
                if all(v >= 0 for v in vals):
                    facets.setdefault(_prim(n), [])
                elif all(v <= 0 for v in vals):
                    facets.setdefault(_prim([-x for x in n]), [])
        if len(facets) < 3:
            raise NotPointed("generators do not span a pointed three-dimensional cone")
        succ: dict[Vec3, Vec3] = {}
        for n in facets:
            on = [g for g in pts if dot3(n, g) == 0]
            # the two outermost generators in the facet plane, oriented by n
            first = next(a for a in on if all(dot3(cross3(a, g), n) >= 0 for g in on))
            last = next(b for b in on if all(dot3(cross3(g, b), n) >= 0 for g in on))
            succ[first] = last
        start = min(succ)
        order = [start]
        while succ[order[-1]] != start:
            order.append(succ[order[-1]])
            if len(order) > len(succ):
                raise NotPointed("facet structure is not a cycle")
        return cls(tuple(order))

    @cached_property
    def facet_normals(self) -> tuple[Vec3, ...]:
        """Primitive inward normal of the facet spanned by rays ``i`` and ``i+1``."""
        k = len(self.rays)
        out = []
        for i in range(k):
            n = cross3(self.rays[i], self.rays[(i + 1) % k])
            if dot3(n, self.rays[(i + 2) % k]) < 0:
                n = (-n[0], -n[1], -n[2])
            out.append(_prim(n))
        return tuple(out)

    def contains(self, v: Sequence[int]) -> bool:
        return all(dot3(n, v) >= 0 for n in self.facet_normals)

    def dual(self) -> Cone3:
        """Dual cone; its ray ``i`` is the normal of facet ``i``."""
        return Cone3(self.facet_normals)

    def simplicial_pieces(self) -> list[tuple[Vec3, Vec3, Vec3]]:
        r = self.rays
        return [(r[0], r[i], r[i + 1]) for i in range(1, len(r) - 1)]

    def hilbert_basis(self, bound: int = 10_000) -> list[Vec3]:
        return hilbert_basis_3d(self, bound)


def hilbert_basis_3d(c: Cone3, bound: int = 10_000) -> list[Vec3]:
    """Hilbert basis via a fan triangulation and fundamental parallelepipeds.

    ``bound`` caps the parallelepiped volume per simplicial piece.
    """
    cands: set[Vec3] = set(c.rays)
    for g in c.simplicial_pieces():
        vol = abs(det3(*g))
        if vol > bound:
            raise HilbertBoundExceeded(f"simplicial cone {g!r} has volume {vol} > {bound}")
        cands.update(p for p in parallelepiped_points(g) if any(p))  # type: ignore[misc]
    # grade by a strictly positive functional: only lower-degree elements can split off
    grade = [sum(col) for col in zip(*c.facet_normals)]
    ordered = sorted(cands, key=lambda x: (dot3(grade, x), x))
    basis = []
    for i, x in enumerate(ordered):
        gx = dot3(grade, x)
        if not any(dot3(grade, y) < gx and c.contains(tuple(a - b for a, b in zip(x, y)))
                   for y in ordered[:i]):
            basis.append(x)
    return sorted(basis)
