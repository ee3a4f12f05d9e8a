"""Lattice polyhedra with a fixed pointed tail cone in a rank-2 lattice.

Vertex order convention: the infinite edge at the first vertex is parallel to
``sigma.ray1`` and the one at the last vertex to ``sigma.ray0``.  Dually, the
normal fan runs counterclockwise from ``dual(sigma).ray0`` (the normal of
``sigma.ray1``) to ``dual(sigma).ray1``.  Every module relies on this pin.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .lattice import (
    Cone2,
    LatticeError,
    Vec2,
    add,
    cross,
    dot,
    lattice_length,
    primitive,
    sub,
)


class PolyhedronError(LatticeError):
    pass


class EmptyInput(PolyhedronError):
    pass


class TailMismatch(PolyhedronError):
    pass


class DegreeOutsideDualCone(PolyhedronError):
    pass


class NotNormalized(PolyhedronError):
    pass


def _order_key(sigma: Cone2):
    d = sigma.dual()
    return lambda v: (dot(d.ray0, v), -dot(d.ray1, v))


def _lower_chain(sigma: Cone2, points: Iterable[Vec2]) -> list[Vec2]:
    d = sigma.dual()
    pts = sorted(set(points), key=_order_key(sigma))
    # drop points dominated by another point plus the tail cone
    kept: list[Vec2] = []
    for p in pts:
        if any(sigma.contains(sub(p, q)) for q in kept):
            continue
        kept = [q for q in kept if not sigma.contains(sub(q, p))]
        kept.append(p)
    kept.sort(key=_order_key(sigma))
    # in coordinates (d.ray0(v), d.ray1(v)) the survivors form a strictly
    # decreasing staircase; keep the strictly convex corners
    coords = [(dot(d.ray0, p), dot(d.ray1, p)) for p in kept]
    hull: list[int] = []
    for i, c in enumerate(coords):
        while len(hull) >= 2:
            a, b = coords[hull[-2]], coords[hull[-1]]
            if cross(sub(b, a), sub(c, a)) > 0:
                break
            hull.pop()
        hull.append(i)
    return [kept[i] for i in hull]


@dataclass(frozen=True)
class LatticePolyhedron:
    """``conv(vertices) + tail`` with ordered lattice vertices."""

    tail: Cone2
    vertices: tuple[Vec2, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise EmptyInput("a polyhedron needs at least one vertex")
        if list(self.vertices) != _lower_chain(self.tail, self.vertices):
            raise PolyhedronError(
                f"vertices {list(self.vertices)!r} are not the ordered irredundant "
                "vertex list for this tail cone; use from_vertices")

    @classmethod
    def from_vertices(cls, tail: Cone2, points: Iterable[Sequence[int]]) -> LatticePolyhedron:
        pts = [(int(p[0]), int(p[1])) for p in points]
        if not pts:
            raise EmptyInput("no points given")
        return cls(tail, tuple(_lower_chain(tail, pts)))

    @classmethod
    def cone(cls, tail: Cone2, shift: Vec2 = (0, 0)) -> LatticePolyhedron:
        return cls(tail, (shift,))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def edges(self) -> list[tuple[Vec2, Vec2]]:
        """Finite edges as consecutive vertex pairs."""
        return list(zip(self.vertices, self.vertices[1:]))

    @property
    def edge_lengths(self) -> list[int]:
        return [lattice_length(a, b) for a, b in self.edges]

    def translate(self, v: Vec2) -> LatticePolyhedron:
        return LatticePolyhedron(self.tail, tuple(add(p, v) for p in self.vertices))

    def __add__(self, other: LatticePolyhedron) -> LatticePolyhedron:
        return minkowski_sum(self, other)

    def eval(self, chi: Vec2) -> int:
        return evaluate(self, chi)

    def contains(self, p: Vec2) -> bool:
        return all(dot(r, p) >= self.eval(r) for r in normal_fan(self).rays)

    @cached_property
    def fan(self) -> NormalFan:
        return normal_fan(self)


def minkowski_sum(a: LatticePolyhedron, b: LatticePolyhedron) -> LatticePolyhedron:
    if a.tail != b.tail:
        raise TailMismatch(f"tail cones differ: {a.tail} vs {b.tail}")
    return LatticePolyhedron.from_vertices(
        a.tail, [add(p, q) for p in a.vertices for q in b.vertices])


def minkowski_sum_all(tail: Cone2, polys: Iterable[LatticePolyhedron]) -> LatticePolyhedron:
    total = LatticePolyhedron.cone(tail)
    for p in polys:
        total = minkowski_sum(total, p)
    return total


def evaluate(p: LatticePolyhedron, chi: Vec2) -> int:
    """Minimum of ``chi`` over the polyhedron; ``chi`` must lie in the dual tail cone."""
    if not p.tail.dual().contains(chi):
        raise DegreeOutsideDualCone(f"{chi!r} is outside the dual of {p.tail}")
    return min(dot(chi, v) for v in p.vertices)


@dataclass(frozen=True)
class NormalFan:
    """Counterclockwise rays subdividing the dual tail cone.

    ``cone(rays[j], rays[j+1])`` is the normal cone of vertex ``j``.
    """

    rays: tuple[Vec2, ...]

    @property
    def interior_rays(self) -> tuple[Vec2, ...]:
        return self.rays[1:-1]

    @property
    def subcones(self) -> list[Cone2]:
        return [Cone2(a, b) for a, b in zip(self.rays, self.rays[1:])]

    def subcone_index(self, chi: Vec2) -> int:
        """Index of the first subcone containing ``chi``."""
        for j, c in enumerate(self.subcones):
            if c.contains(chi):
                return j
        raise DegreeOutsideDualCone(f"{chi!r} is not in the fan support")


def edge_normal(tail: Cone2, a: Vec2, b: Vec2) -> Vec2:
    """Primitive covector vanishing on ``b - a`` and nonnegative on the tail cone."""
    d = sub(b, a)
    n = primitive((-d[1], d[0]))[0]
    if dot(n, tail.ray0) < 0 or dot(n, tail.ray1) < 0:
        n = (-n[0], -n[1])
    return n  # type: ignore[return-value]


def normal_fan(p: LatticePolyhedron) -> NormalFan:
    d = p.tail.dual()
    inner = [edge_normal(p.tail, a, b) for a, b in p.edges]
    return NormalFan((d.ray0, *inner, d.ray1))


@dataclass(frozen=True)
class PrimitivePolyhedron:
    """``conv(0, edge) + tail`` for a primitive ``edge`` with origin as first vertex."""

    edge: Vec2
    tail: Cone2

    def __post_init__(self) -> None:
        if primitive(self.edge)[1] != 1:
            raise PolyhedronError(f"{self.edge!r} is not primitive")
        d = self.tail.dual()
        if not (dot(d.ray0, self.edge) > 0 and dot(d.ray1, self.edge) < 0):
            raise PolyhedronError(
                f"conv(0, {self.edge!r}) + tail is not a primitive polyhedron")

    @property
    def polyhedron(self) -> LatticePolyhedron:
        return LatticePolyhedron(self.tail, ((0, 0), self.edge))

    def eval(self, chi: Vec2) -> int:
        return evaluate(self.polyhedron, chi)


def decompose_primitive(p: LatticePolyhedron) -> list[PrimitivePolyhedron]:
    """Primitive summands (with repetition) of a polyhedron whose first vertex is 0."""
    if p.vertices[0] != (0, 0):
        raise NotNormalized(f"first vertex is {p.vertices[0]!r}, not the origin")
    out = []
    for a, b in p.edges:
        u, ell = primitive(sub(b, a))
        out.extend([PrimitivePolyhedron(u, p.tail)] * ell)  # type: ignore[arg-type]
    return out


def is_shift_of_cone(p: LatticePolyhedron) -> Optional[Vec2]:
    return p.vertices[0] if p.n_vertices == 1 else None
