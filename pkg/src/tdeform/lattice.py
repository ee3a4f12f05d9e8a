"""Exact 2D lattice arithmetic: vectors, pointed cones, duality, Hilbert bases.

Vectors of N and covectors of M are both plain ``(int, int)`` tuples; the
pairing is the dot product.  Scalars that are not integers are
:class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vec2 = tuple[int, int]

#: Exact rational scalar (always reduced, positive denominator).
Rat = Fraction


class LatticeError(ValueError):
    """Base class for invalid lattice input."""


class ZeroVector(LatticeError):
    pass


class DegenerateSegment(LatticeError):
    pass


class NotPrimitive(LatticeError):
    pass


class InvalidCone(LatticeError):
    pass


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def cross(a: Vec2, b: Vec2) -> int:
    return a[0] * b[1] - a[1] * b[0]


def add(a: Vec2, b: Vec2) -> Vec2:
    return (a[0] + b[0], a[1] + b[1])


def sub(a: Vec2, b: Vec2) -> Vec2:
    return (a[0] - b[0], a[1] - b[1])


def scale(k: int, a: Vec2) -> Vec2:
    return (k * a[0], k * a[1])


def primitive(v: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Split ``v`` as ``g * u`` with ``u`` primitive and ``g`` the content."""
    g = 0
    for c in v:
        g = gcd(g, c)
    if g == 0:
        raise ZeroVector(f"zero vector {tuple(v)!r} has no primitive direction")
    return tuple(c // g for c in v), g


def lattice_length(a: Vec2, b: Vec2) -> int:
    """Number of lattice points on ``[a, b]`` counting exactly one endpoint."""
    if a == b:
        raise DegenerateSegment(f"segment {a!r}-{b!r} is a point")
    return gcd(b[0] - a[0], b[1] - a[1])


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def complete_to_basis(chi: Vec2) -> Vec2:
    """Return ``chi2`` with ``det(chi, chi2) == 1``."""
    g, x, y = xgcd(chi[0], chi[1])
    if g != 1:
        raise NotPrimitive(f"{chi!r} is not primitive")
    # a*x + b*y = 1 and det((a, b), (-y, x)) = a*x + b*y
    return (-y, x)


class Position(Enum):
    INTERIOR = "interior"
    BOUNDARY_RAY0 = "boundary_ray0"
    BOUNDARY_RAY1 = "boundary_ray1"
    APEX = "apex"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Cone2:
    """A pointed full-dimensional cone ``cone(ray0, ray1)``.

    Rays are primitive and counterclockwise: ``cross(ray0, ray1) > 0``.
    The same type serves for cones in N and in M.
    """

    ray0: Vec2
    ray1: Vec2

    def __post_init__(self) -> None:
        for r in (self.ray0, self.ray1):
            if r == (0, 0):
                raise InvalidCone("cone ray is zero")
            if gcd(*r) != 1:
                raise InvalidCone(f"cone ray {r!r} is not primitive")
        if cross(self.ray0, self.ray1) <= 0:
            raise InvalidCone(
                f"rays {self.ray0!r}, {self.ray1!r} are not linearly independent "
                "in counterclockwise order")

    @classmethod
    def from_rays(cls, a: Sequence[int], b: Sequence[int]) -> Cone2:
        """Build from two independent rays in either order (normalizing to primitive)."""
        pa = primitive(a)[0]
        pb = primitive(b)[0]
        c = cross(pa, pb)
        if c == 0:
            raise InvalidCone(f"rays {tuple(a)!r}, {tuple(b)!r} are collinear")
        return cls(pa, pb) if c > 0 else cls(pb, pa)

    @property
    def rays(self) -> tuple[Vec2, Vec2]:
        return (self.ray0, self.ray1)

    def classify(self, v: Vec2) -> Position:
        if v == (0, 0):
            return Position.APEX
        s0 = cross(self.ray0, v)
        s1 = cross(v, self.ray1)
        if s0 < 0 or s1 < 0:
            return Position.OUTSIDE
        if s0 == 0:
            # collinear with ray0: on the ray or on its negative
            return Position.BOUNDARY_RAY0 if dot(v, self.ray0) > 0 else Position.OUTSIDE
        if s1 == 0:
            return Position.BOUNDARY_RAY1 if dot(v, self.ray1) > 0 else Position.OUTSIDE
        return Position.INTERIOR

    def contains(self, v: Vec2) -> bool:
        return self.classify(v) is not Position.OUTSIDE

    def contains_strictly(self, v: Vec2) -> bool:
        return self.classify(v) is Position.INTERIOR

    def dual(self) -> Cone2:
        return dualize(self)

    def hilbert_basis(self) -> list[Vec2]:
        return hilbert_basis_2d(self)


def classify(c: Cone2, v: Vec2) -> Position:
    return c.classify(v)


def _normal(r: Vec2, other: Vec2) -> Vec2:
    """Primitive covector vanishing on ``r`` and positive on ``other``."""
    n = (-r[1], r[0])
    if dot(n, other) < 0:
        n = (r[1], -r[0])
    return n


def dualize(c: Cone2) -> Cone2:
    """Dual cone ``{w : w(v) >= 0 for v in c}``.

    ``ray0`` of the result is the normal of ``c.ray1`` and ``ray1`` the normal
    of ``c.ray0``; this keeps counterclockwise order and makes dualization an
    involution on ordered cones.
    """
    return Cone2(_normal(c.ray1, c.ray0), _normal(c.ray0, c.ray1))


def _hnf_coset_reps(cols: Sequence[Sequence[int]]) -> Iterable[tuple[int, ...]]:
    """Coset representatives of Z^n modulo the lattice spanned by ``cols``."""
    n = len(cols)
    # column-style lower triangular Hermite form via integer column operations
    m = [list(map(int, c)) for c in cols]  # m[j] is column j
    for i in range(n):
        for j in range(i + 1, n):
            while m[j][i] != 0:
                q = m[i][i] // m[j][i]
                m[i] = [a - q * b for a, b in zip(m[i], m[j])]
                m[i], m[j] = m[j], m[i]
        if m[i][i] < 0:
            m[i] = [-a for a in m[i]]
        if m[i][i] == 0:
            raise LatticeError("generators are linearly dependent")
    diag = [m[i][i] for i in range(n)]

    def rec(prefix: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
        k = len(prefix)
        if k == n:
            yield prefix
            return
        for y in range(diag[k]):
            yield from rec(prefix + (y,))

    yield from rec(())


def _solve_int_matrix(cols: Sequence[Sequence[int]], y: Sequence[int]) -> list[Fraction]:
    """Coordinates of ``y`` in the basis ``cols`` (exact, Cramer's rule)."""
    n = len(cols)
    det = _det([list(c) for c in cols])
    out = []
    for j in range(n):
        mod = [list(c) for c in cols]
        mod[j] = list(y)
        out.append(Fraction(_det(mod), det))
    return out


def _det(cols: list[list[int]]) -> int:
    n = len(cols)
    if n == 1:
        return cols[0][0]
    if n == 2:
        return cols[0][0] * cols[1][1] - cols[0][1] * cols[1][0]
    if n == 3:
        a, b, c = cols
        return (a[0] * (b[1] * c[2] - b[2] * c[1])
                - b[0] * (a[1] * c[2] - a[2] * c[1])
                + c[0] * (a[1] * b[2] - a[2] * b[1]))
    raise NotImplementedError("only dimensions 1-3 are supported")


def parallelepiped_points(gens: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Lattice points of the half-open parallelepiped ``{sum t_i g_i : 0 <= t_i < 1}``.

    Exactly ``|det(gens)|`` points, the origin included.
    """
    points = []
    for y in _hnf_coset_reps(gens):
        coeffs = _solve_int_matrix(gens, y)
        frac = [c - (c.numerator // c.denominator) for c in coeffs]
        p = [sum(f * g[i] for f, g in zip(frac, gens)) for i in range(len(y))]
        assert all(v.denominator == 1 for v in p)
        points.append(tuple(int(v) for v in p))
    return points


def _angle_key(v: Vec2, start: Vec2) -> tuple[int, Fraction]:
    # counterclockwise sort for vectors inside a pointed cone starting at `start`
    c = cross(start, v)
    d = dot(start, v)
    return (0, Fraction(0)) if c == 0 else (1, Fraction(-d, c))


def sort_ccw(vs: Iterable[Vec2], start: Vec2) -> list[Vec2]:
    """Sort vectors of a pointed 2D cone counterclockwise from ``start``."""
    return sorted(vs, key=lambda v: (_angle_key(v, start), dot(v, v)))


def hilbert_basis_2d(c: Cone2) -> list[Vec2]:
    """Minimal generating set of ``c`` intersected with the lattice, counterclockwise."""
    cands = {p for p in parallelepiped_points([c.ray0, c.ray1]) if p != (0, 0)}
    cands |= {c.ray0, c.ray1}
    basis = [x for x in cands
             if not any(y != x and c.contains(sub(x, y)) for y in cands)]
    return sort_ccw(basis, c.ray0)
